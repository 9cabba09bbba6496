// Prime implicate generation and, by duality, prime implicant generation.
#pragma once

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "kpi/formula.hpp"

namespace kpi {

enum class GenMode { kEager, kIterative };

/// Enumerates the candidate clauses tau_1 | ... | tau_n (one Delta entry per
/// term, right-folded) in lexicographic order, first term most significant,
/// and emits candidate i iff no earlier candidate entails it and every later
/// candidate entailing it is equivalent to it.
class PiGenerator {
 public:
  using Tuple = std::vector<std::size_t>;

  explicit PiGenerator(const Formula& f);

  /// Next retained clause, or nullopt when exhausted.
  std::optional<Formula> next();

  /// Empty for unsatisfiable or valid inputs, which have a single fixed output.
  const std::vector<std::vector<Formula>>& deltas() const { return deltas_; }
  Formula candidate(const Tuple& t) const;
  bool retained(const Tuple& t);

 private:
  struct Rhs {
    std::vector<Formula> gammas;
    std::optional<Formula> psi;        // disjunction of diamond bodies
    std::vector<Formula> box_covers;   // psi_1 | ... | psi_m | chi_j, per box
    bool valid = false;
  };

  struct PairHash {
    std::size_t operator()(const std::pair<Formula, Formula>& p) const {
      return p.first.hash() * 31 + p.second.hash();
    }
  };

  Rhs rhs_of(const Tuple& t);
  bool entry_entails(const Formula& e, const Rhs& r);
  bool clause_entails(const Tuple& a, const Tuple& b);
  bool entails_cached(const Formula& f, const Formula& g);
  bool valid_cached(const Formula& f);
  bool advance(Tuple& t) const;

  std::vector<std::vector<Formula>> deltas_;
  std::optional<Formula> fixed_;
  bool done_ = false;
  Tuple cursor_;
  std::unordered_map<std::pair<Formula, Formula>, bool, PairHash> entails_memo_;
  std::unordered_map<Formula, bool, FormulaHash> valid_memo_;
};

/// Both modes emit the same sequence; candidates are built on demand in
/// either mode, so eager is the drained iterative stream.
std::vector<Formula> gen_pi(const Formula& f, GenMode mode = GenMode::kEager);

/// dual_negate of each member of gen_pi(nnf(!f)).
std::vector<Formula> gen_implicants(const Formula& f);

/// Drops repeated disjuncts, keeping first occurrences. Display only.
Formula collapse_duplicate_disjuncts(const Formula& clause);

}  // namespace kpi
