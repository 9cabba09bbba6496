// Literal/clause/term grammars D1-D5 and the structured D4 views.
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "kpi/formula.hpp"

namespace kpi {

enum class DefId { kD1, kD2, kD3a, kD3b, kD4, kD5 };
enum class SyntacticKind { kLiteral, kClause, kTerm };

/// Purely syntactic; And/Or chains are read n-ary.
bool is_member(const Formula& f, DefId d, SyntacticKind k);

/// gamma_1 | ... | <>psi_1 | ... | []chi_1 | ...
struct ClauseView4 {
  std::vector<Formula> gammas;
  std::vector<Formula> diamonds;  // bodies psi_i
  std::vector<Formula> boxes;     // bodies chi_i

  std::size_t size() const { return gammas.size() + diamonds.size() + boxes.size(); }
  friend bool operator==(const ClauseView4&, const ClauseView4&) = default;
};

/// L_T & <>zeta_1 & ... & []b_1 & ...
struct TermView4 {
  std::vector<Formula> lits;
  std::vector<Formula> diamonds;  // D_T
  std::vector<Formula> boxes;     // B_T

  std::size_t size() const { return lits.size() + diamonds.size() + boxes.size(); }
  friend bool operator==(const TermView4&, const TermView4&) = default;
};

class NotD4Error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Flattens and buckets the disjuncts, keeping source order and dropping
/// structural repeats. Throws NotD4Error unless f is a D4 clause.
ClauseView4 clause_view(const Formula& f);
/// As clause_view, for D4 terms.
TermView4 term_view(const Formula& f);

/// Disjunction in bucket order; the empty clause is bottom().
Formula assemble(const ClauseView4& c);
/// Conjunction in bucket order; the empty term is top().
Formula assemble(const TermView4& t);

/// beta_T: right-folded conjunction of B_T, top() when empty.
Formula beta(const TermView4& t);

/// Top-level disjuncts / conjuncts in source order (no dedup).
std::vector<Formula> disjuncts(const Formula& f);
std::vector<Formula> conjuncts(const Formula& f);

std::string to_string(DefId d);
std::string to_string(SyntacticKind k);

}  // namespace kpi
