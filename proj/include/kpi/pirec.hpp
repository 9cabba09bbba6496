// Prime implicate and prime implicant recognition.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kpi/formula.hpp"
#include "kpi/grammar.hpp"

namespace kpi {

/// Boxes absorb every diamond body, then disjuncts d with l == l \ {d} are
/// deleted by a left-to-right scan that restarts after each deletion. A
/// deletion pass runs both before and after absorption. The last remaining
/// disjunct is never deleted.
ClauseView4 normalize_clause(const ClauseView4& l);

/// No iff phi entails l without one of its propositional literals.
bool test_prop_pi(const ClauseView4& l, const Formula& phi);

/// Yes iff some term T of dnf4(phi_prime) has chi & !psi_1 & ... |= beta_T.
/// A term without boxes passes; an empty decomposition fails.
bool test_box_pi(const Formula& chi, const std::vector<Formula>& psis, const Formula& phi_prime);

struct DiaPiResult {
  bool prime = false;
  /// Subset of the witness universe that refutes primality.
  std::optional<std::vector<Formula>> witness;
};

/// Bodies of the boxes and diamonds at the propositional top level of
/// nnf(phi), distinct, in encounter order.
std::vector<Formula> witness_universe(const Formula& phi);

/// Whether S refutes primality of <>psi under phi: psi does not entail the
/// disjunction of S, and every term of dnf4(phi) has a diamond body eta with
/// eta & beta_T |= psi where eta or some box body of T is in S.
bool refutes_dia_prime(const std::vector<Formula>& s, const Formula& psi, const Formula& phi);

/// Primality of <>psi as an implicate of phi. Subsets are tried by size,
/// then lexicographically; the first refuting subset is returned.
DiaPiResult test_dia_pi(const Formula& psi, const Formula& phi);

struct PiReport {
  bool prime = false;
  /// Step that decided a negative verdict (1, 2, 4, 5 or 6); 0 for yes.
  int step = 0;
  std::string reason;
  std::optional<std::vector<Formula>> witness;
};

/// Throws NotD4Error unless l is a D4 clause.
PiReport test_pi_report(const Formula& l, const Formula& phi);
inline bool test_pi(const Formula& l, const Formula& phi) { return test_pi_report(l, phi).prime; }

/// test_pi(dual_negate(t), nnf(!phi)). Throws NotD4Error unless t is a D4 term.
PiReport test_implicant_report(const Formula& t, const Formula& phi);
inline bool test_implicant(const Formula& t, const Formula& phi) {
  return test_implicant_report(t, phi).prime;
}

}  // namespace kpi
