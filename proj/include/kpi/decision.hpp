// Satisfiability and entailment for K.
#pragma once

#include <stdexcept>

#include "kpi/formula.hpp"
#include "kpi/grammar.hpp"

namespace kpi {

/// Streams the surface branches of nnf(f); a branch whose literals are
/// consistent is satisfiable iff every <>psi on it is satisfiable together
/// with all the box bodies on it.
bool sat(const Formula& f);

/// f |= g, as !sat(f & nnf(!g)).
bool entails(const Formula& f, const Formula& g);
bool equivalent(const Formula& f, const Formula& g);
bool tautology(const Formula& f);

/// True iff the clause has a complementary propositional pair, or
/// psi_1 | ... | psi_m | chi_i is valid for some i.
bool clause_tautology(const ClauseView4& c);

class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// l |= r decided disjunct-wise: gamma |= gamma', the diamond bodies of l
/// entail those of r, and every box body of l is covered by the diamond
/// bodies of r plus one of its box bodies. Throws PreconditionError when r
/// is valid.
bool clause_entails_fast(const ClauseView4& l, const ClauseView4& r);

}  // namespace kpi
