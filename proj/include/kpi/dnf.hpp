// Decomposition into satisfiable D4 terms, the dual clausal form, and the
// candidate literals Delta(T) of a term.
#pragma once

#include <optional>
#include <set>
#include <vector>

#include "kpi/formula.hpp"
#include "kpi/grammar.hpp"

namespace kpi {

/// Single-consumer stream of the satisfiable terms of nnf(f), in left-to-right
/// distribution order. Terms with the same set of conjuncts are emitted once.
class Dnf4Stream {
 public:
  explicit Dnf4Stream(const Formula& f);

  std::optional<TermView4> next();

 private:
  struct Frame {
    std::vector<Formula> todo;
    std::vector<Formula> acc;
  };

  std::vector<Frame> stack_;
  std::set<std::vector<Formula>> seen_;
};

std::vector<TermView4> dnf4(const Formula& f);

/// {dual_negate(T) : T in dnf4(nnf(!f))}; empty iff f is valid.
std::vector<Formula> cnf4(const Formula& f);

/// L_T, then []beta_T when B_T is nonempty, then <>(zeta & beta_T) for each
/// zeta in D_T (just <>zeta when B_T is empty). Throws PreconditionError
/// on an unsatisfiable term.
std::vector<Formula> delta_set(const TermView4& t);

/// Satisfiability of a term via its literal, diamond and box buckets.
bool term_sat(const TermView4& t);

}  // namespace kpi
