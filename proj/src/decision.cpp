#include "kpi/decision.hpp"

#include <algorithm>
#include <vector>

namespace kpi {

namespace {

bool complementary(const Formula& a, const Formula& b) {
  if (a.op() == Op::kNeg) return b.is_var() && a.child().name() == b.name();
  if (b.op() == Op::kNeg) return a.is_var() && b.child().name() == a.name();
  return false;
}

Formula complement(const Formula& lit) { return lit.is_var() ? Formula::neg(lit) : lit.child(); }

bool is_literal(const Formula& f) { return f.is_var() || f.op() == Op::kNeg; }

void flatten_or(const Formula& f, std::vector<Formula>& out) {
  if (f.op() == Op::kOr) {
    flatten_or(f.left(), out);
    flatten_or(f.right(), out);
  } else {
    out.push_back(f);
  }
}

// One surface branch: NNF formulas still to decompose, postponed
// disjunctions, and the surface literals, box bodies and diamond bodies
// collected so far. Non-branching work always runs before a split.
struct Branch {
  std::vector<Formula> todo;
  std::vector<Formula> pending;
  std::vector<Formula> lits;
  std::vector<Formula> boxes;
  std::vector<Formula> dias;

  bool has(const Formula& d) const {
    if (is_literal(d)) return std::ranges::find(lits, d) != lits.end();
    if (d.op() == Op::kBox) return std::ranges::find(boxes, d.child()) != boxes.end();
    if (d.op() == Op::kDia) return std::ranges::find(dias, d.child()) != dias.end();
    return false;
  }
  bool refutes(const Formula& d) const {
    return is_literal(d) && std::ranges::find(lits, complement(d)) != lits.end();
  }
};

void add_unique(std::vector<Formula>& v, const Formula& f) {
  if (std::ranges::find(v, f) == v.end()) v.push_back(f);
}

bool explore(Branch b);

// Diamond bodies are checked one at a time against all box bodies.
bool modal_step(const Branch& b) {
  for (const Formula& psi : b.dias) {
    Branch sub;
    sub.todo = b.boxes;
    sub.todo.push_back(psi);
    if (!explore(std::move(sub))) return false;
  }
  return true;
}

bool explore(Branch b) {
  while (true) {
    while (!b.todo.empty()) {
      Formula f = std::move(b.todo.back());
      b.todo.pop_back();
      switch (f.op()) {
        case Op::kAnd:
          b.todo.push_back(f.right());
          b.todo.push_back(f.left());
          break;
        case Op::kOr:
          b.pending.push_back(std::move(f));
          break;
        case Op::kVar:
        case Op::kNeg:
          if (b.refutes(f)) return false;
          add_unique(b.lits, f);
          break;
        case Op::kBox:
          add_unique(b.boxes, f.child());
          break;
        case Op::kDia:
          add_unique(b.dias, f.child());
          break;
      }
    }
    // Drop satisfied disjunctions, take forced ones, and find the narrowest
    // remaining split.
    std::vector<Formula> live_best;
    std::size_t best = b.pending.size();
    bool forced = false;
    for (std::size_t i = 0; i < b.pending.size() && !forced; ++i) {
      std::vector<Formula> ds, live;
      flatten_or(b.pending[i], ds);
      bool satisfied = false;
      for (const Formula& d : ds) {
        if (b.has(d)) satisfied = true;
        if (!b.refutes(d)) live.push_back(d);
      }
      if (satisfied || live.size() <= 1) {
        if (!satisfied && live.empty()) return false;
        if (!satisfied) b.todo.push_back(live[0]);
        b.pending.erase(b.pending.begin() + static_cast<std::ptrdiff_t>(i));
        forced = true;
      } else if (best == b.pending.size() || live.size() < live_best.size()) {
        best = i;
        live_best = std::move(live);
      }
    }
    if (forced) continue;
    if (b.pending.empty()) return modal_step(b);

    b.pending.erase(b.pending.begin() + static_cast<std::ptrdiff_t>(best));
    for (std::size_t i = 0; i < live_best.size(); ++i) {
      Branch c = b;
      c.todo.push_back(live_best[i]);
      // Earlier literal alternatives were already explored.
      for (std::size_t j = 0; j < i; ++j)
        if (is_literal(live_best[j])) c.todo.push_back(complement(live_best[j]));
      if (explore(std::move(c))) return true;
    }
    return false;
  }
}

bool run_sat(const Formula& nnf_f) {
  Branch b;
  b.todo.push_back(nnf_f);
  return explore(std::move(b));
}

Formula disjunction_or_bottom(const std::vector<Formula>& fs) {
  return fs.empty() ? bottom() : Formula::disj_of(fs);
}

}  // namespace

bool sat(const Formula& f) { return run_sat(nnf(f)); }

bool entails(const Formula& f, const Formula& g) {
  return !run_sat(Formula::conj(nnf(f), dual_negate(g)));
}

bool equivalent(const Formula& f, const Formula& g) { return entails(f, g) && entails(g, f); }

bool tautology(const Formula& f) { return !sat(dual_negate(f)); }

bool clause_tautology(const ClauseView4& c) {
  for (std::size_t i = 0; i < c.gammas.size(); ++i)
    for (std::size_t j = i + 1; j < c.gammas.size(); ++j)
      if (complementary(c.gammas[i], c.gammas[j])) return true;
  for (const Formula& chi : c.boxes) {
    std::vector<Formula> ds = c.diamonds;
    ds.push_back(chi);
    if (tautology(Formula::disj_of(ds))) return true;
  }
  return false;
}

bool clause_entails_fast(const ClauseView4& l, const ClauseView4& r) {
  if (clause_tautology(r)) throw PreconditionError("right-hand clause is valid");
  // gamma |= gamma' for literal sets: each literal of gamma occurs in gamma',
  // unless gamma itself is contradictory (impossible for a disjunction).
  for (const Formula& g : l.gammas)
    if (std::ranges::find(r.gammas, g) == r.gammas.end()) return false;
  Formula rhs_psi = disjunction_or_bottom(r.diamonds);
  if (!l.diamonds.empty() && !entails(Formula::disj_of(l.diamonds), rhs_psi)) return false;
  for (const Formula& chi : l.boxes) {
    bool covered = std::ranges::any_of(r.boxes, [&](const Formula& chi2) {
      std::vector<Formula> ds = r.diamonds;
      ds.push_back(chi2);
      return entails(chi, Formula::disj_of(ds));
    });
    if (!covered) return false;
  }
  return true;
}

}  // namespace kpi
