#include "kpi/pirec.hpp"

#include <algorithm>

#include "kpi/decision.hpp"
#include "kpi/dnf.hpp"

namespace kpi {

namespace {

enum class Bucket { kGamma, kDia, kBox };

ClauseView4 without(const ClauseView4& l, Bucket b, std::size_t i) {
  ClauseView4 r = l;
  auto& v = b == Bucket::kGamma ? r.gammas : b == Bucket::kDia ? r.diamonds : r.boxes;
  v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
  return r;
}

Formula literal_of(const ClauseView4& l, Bucket b, std::size_t i) {
  if (b == Bucket::kGamma) return l.gammas[i];
  if (b == Bucket::kDia) return Formula::dia(l.diamonds[i]);
  return Formula::box(l.boxes[i]);
}

// One deletion, if any disjunct is implied by the rest.
bool delete_one(ClauseView4& l) {
  if (l.size() <= 1) return false;
  for (Bucket b : {Bucket::kGamma, Bucket::kDia, Bucket::kBox}) {
    std::size_t n = b == Bucket::kGamma ? l.gammas.size()
                    : b == Bucket::kDia ? l.diamonds.size()
                                        : l.boxes.size();
    for (std::size_t i = 0; i < n; ++i) {
      ClauseView4 rest = without(l, b, i);
      if (entails(literal_of(l, b, i), assemble(rest))) {
        l = std::move(rest);
        return true;
      }
    }
  }
  return false;
}

void delete_redundant(ClauseView4& l) {
  while (delete_one(l)) {
  }
}

// phi & nnf(!rest), or phi alone when rest is empty.
Formula strengthen(const Formula& phi, const ClauseView4& rest) {
  if (rest.size() == 0) return phi;
  return Formula::conj(phi, dual_negate(assemble(rest)));
}

void collect_universe(const Formula& f, std::vector<Formula>& out) {
  switch (f.op()) {
    case Op::kAnd:
    case Op::kOr:
      collect_universe(f.left(), out);
      collect_universe(f.right(), out);
      break;
    case Op::kBox:
    case Op::kDia:
      if (std::ranges::find(out, f.child()) == out.end()) out.push_back(f.child());
      break;
    default:
      break;
  }
}

bool contains(const std::vector<Formula>& v, const Formula& f) {
  return std::ranges::find(v, f) != v.end();
}

// Next k-combination of {0..n-1} in lexicographic order.
bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  std::size_t k = c.size();
  for (std::size_t i = k; i-- > 0;) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

ClauseView4 normalize_clause(const ClauseView4& l) {
  ClauseView4 r = l;
  delete_redundant(r);
  if (!r.diamonds.empty()) {
    for (Formula& chi : r.boxes) {
      std::vector<Formula> parts{chi};
      parts.insert(parts.end(), r.diamonds.begin(), r.diamonds.end());
      chi = Formula::disj_of(parts);
    }
  }
  delete_redundant(r);
  return r;
}

bool test_prop_pi(const ClauseView4& l, const Formula& phi) {
  for (std::size_t i = 0; i < l.gammas.size(); ++i)
    if (entails(phi, assemble(without(l, Bucket::kGamma, i)))) return false;
  return true;
}

bool test_box_pi(const Formula& chi, const std::vector<Formula>& psis, const Formula& phi_prime) {
  std::vector<Formula> parts{chi};
  for (const Formula& psi : psis) parts.push_back(dual_negate(psi));
  Formula target = Formula::conj_of(parts);
  Dnf4Stream terms(phi_prime);
  while (auto t = terms.next()) {
    if (t->boxes.empty() || entails(target, beta(*t))) return true;
  }
  return false;
}

std::vector<Formula> witness_universe(const Formula& phi) {
  std::vector<Formula> out;
  collect_universe(nnf(phi), out);
  return out;
}

bool refutes_dia_prime(const std::vector<Formula>& s, const Formula& psi, const Formula& phi) {
  if (s.empty() || entails(psi, Formula::disj_of(s))) return false;
  Dnf4Stream terms(phi);
  while (auto t = terms.next()) {
    bool box_hit = std::ranges::any_of(t->boxes, [&](const Formula& b) { return contains(s, b); });
    bool found = std::ranges::any_of(t->diamonds, [&](const Formula& eta) {
      if (!box_hit && !contains(s, eta)) return false;
      return entails(t->boxes.empty() ? eta : Formula::conj(eta, beta(*t)), psi);
    });
    if (!found) return false;
  }
  return true;
}

DiaPiResult test_dia_pi(const Formula& psi, const Formula& phi) {
  if (!sat(phi)) return {!sat(psi), std::nullopt};
  if (!entails(phi, Formula::dia(psi)))
    throw PreconditionError("formula does not entail the diamond literal");
  std::vector<Formula> x = witness_universe(phi);
  for (std::size_t k = 1; k <= x.size(); ++k) {
    std::vector<std::size_t> c(k);
    for (std::size_t i = 0; i < k; ++i) c[i] = i;
    do {
      std::vector<Formula> s;
      for (std::size_t i : c) s.push_back(x[i]);
      if (refutes_dia_prime(s, psi, phi)) return {false, std::move(s)};
    } while (next_combination(c, x.size()));
  }
  return {true, std::nullopt};
}

PiReport test_pi_report(const Formula& l, const Formula& phi) {
  ClauseView4 view = clause_view(l);
  if (!entails(phi, l)) return {false, 1, "formula does not entail the clause", std::nullopt};

  bool phi_sat = sat(phi);
  bool l_sat = sat(l);
  bool l_valid = tautology(l);
  bool phi_valid = tautology(phi);
  if (!phi_sat && l_sat) return {false, 2, "unsatisfiable formula, satisfiable clause", std::nullopt};
  if (l_valid && !phi_valid) return {false, 2, "valid clause, non-valid formula", std::nullopt};
  if (!phi_sat) return {true, 0, "both unsatisfiable", std::nullopt};
  if (l_valid) return {true, 0, "both valid", std::nullopt};

  view = normalize_clause(view);

  if (!test_prop_pi(view, phi))
    return {false, 4, "a propositional literal can be dropped", std::nullopt};

  for (std::size_t i = 0; i < view.boxes.size(); ++i) {
    Formula phi2 = strengthen(phi, without(view, Bucket::kBox, i));
    if (!test_box_pi(view.boxes[i], view.diamonds, phi2))
      return {false, 5, "box disjunct " + print(Formula::box(view.boxes[i])) + " can be strengthened",
              std::nullopt};
  }

  if (!view.diamonds.empty()) {
    ClauseView4 rest = view;
    rest.diamonds.clear();
    Formula phi2 = strengthen(phi, rest);
    DiaPiResult d = test_dia_pi(Formula::disj_of(view.diamonds), phi2);
    if (!d.prime && !d.witness)
      return {false, 6, "formula without the diamond disjuncts is unsatisfiable", std::nullopt};
    if (!d.prime) return {false, 6, "diamond disjuncts can be strengthened", d.witness};
  }
  return {true, 0, "prime", std::nullopt};
}

PiReport test_implicant_report(const Formula& t, const Formula& phi) {
  if (!is_member(t, DefId::kD4, SyntacticKind::kTerm))
    throw NotD4Error("not a D4 term: " + print(t));
  return test_pi_report(dual_negate(t), dual_negate(phi));
}

}  // namespace kpi
