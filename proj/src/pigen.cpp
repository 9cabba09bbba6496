#include "kpi/pigen.hpp"

#include <algorithm>

#include "kpi/decision.hpp"
#include "kpi/dnf.hpp"
#include "kpi/grammar.hpp"

namespace kpi {

namespace {

// Least user variable, falling back to the reserved one for constant inputs.
Formula least_var(const Formula& f) {
  auto vs = variables(f);
  for (const auto& v : vs)
    if (v != kConstVar) return Formula::var(v);
  return Formula::var(*vs.begin());
}

}  // namespace

PiGenerator::PiGenerator(const Formula& f) {
  if (!sat(f)) {
    Formula v = least_var(f);
    fixed_ = Formula::dia(Formula::conj(v, Formula::neg(v)));
    return;
  }
  if (tautology(f)) {
    Formula v = least_var(f);
    fixed_ = Formula::disj(v, Formula::neg(v));
    return;
  }
  Dnf4Stream s(f);
  while (auto t = s.next()) deltas_.push_back(delta_set(*t));
  cursor_.assign(deltas_.size(), 0);
}

Formula PiGenerator::candidate(const Tuple& t) const {
  std::vector<Formula> parts;
  parts.reserve(t.size());
  for (std::size_t k = 0; k < t.size(); ++k) parts.push_back(deltas_[k][t[k]]);
  return Formula::disj_of(parts);
}

bool PiGenerator::entails_cached(const Formula& f, const Formula& g) {
  auto key = std::make_pair(f, g);
  if (auto it = entails_memo_.find(key); it != entails_memo_.end()) return it->second;
  bool r = entails(f, g);
  entails_memo_.emplace(std::move(key), r);
  return r;
}

bool PiGenerator::valid_cached(const Formula& f) {
  if (auto it = valid_memo_.find(f); it != valid_memo_.end()) return it->second;
  bool r = tautology(f);
  valid_memo_.emplace(f, r);
  return r;
}

PiGenerator::Rhs PiGenerator::rhs_of(const Tuple& t) {
  Rhs r;
  std::vector<Formula> psis, chis;
  for (std::size_t k = 0; k < t.size(); ++k) {
    const Formula& e = deltas_[k][t[k]];
    if (e.op() == Op::kDia) psis.push_back(e.child());
    else if (e.op() == Op::kBox) chis.push_back(e.child());
    else r.gammas.push_back(e);
  }
  if (!psis.empty()) r.psi = Formula::disj_of(psis);
  for (const Formula& chi : chis)
    r.box_covers.push_back(r.psi ? Formula::disj(*r.psi, chi) : chi);
  for (const Formula& g : r.gammas)
    if (std::ranges::find(r.gammas, dual_negate(g)) != r.gammas.end()) r.valid = true;
  for (const Formula& c : r.box_covers)
    if (!r.valid && valid_cached(c)) r.valid = true;
  return r;
}

// A single D4 literal against a non-valid clause.
bool PiGenerator::entry_entails(const Formula& e, const Rhs& r) {
  switch (e.op()) {
    case Op::kDia:
      return entails_cached(e.child(), r.psi ? *r.psi : bottom());
    case Op::kBox:
      return std::ranges::any_of(r.box_covers,
                                 [&](const Formula& c) { return entails_cached(e.child(), c); });
    default:
      return std::ranges::find(r.gammas, e) != r.gammas.end();
  }
}

bool PiGenerator::clause_entails(const Tuple& a, const Tuple& b) {
  Rhs r = rhs_of(b);
  if (r.valid) return true;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (!entry_entails(deltas_[k][a[k]], r)) return false;
  return true;
}

bool PiGenerator::retained(const Tuple& t) {
  Rhs r = rhs_of(t);
  // lambda_j |= lambda_t iff j lies in the product of the sets `hits`.
  std::vector<std::vector<std::size_t>> hits(t.size());
  for (std::size_t k = 0; k < t.size(); ++k) {
    for (std::size_t m = 0; m < deltas_[k].size(); ++m)
      if (r.valid || entry_entails(deltas_[k][m], r)) hits[k].push_back(m);
    if (hits[k].empty() || hits[k].front() != t[k]) return false;
  }
  Tuple pos(t.size(), 0);
  Tuple j(t.size());
  while (true) {
    for (std::size_t k = 0; k < t.size(); ++k) j[k] = hits[k][pos[k]];
    if (j != t && !clause_entails(t, j)) return false;
    std::size_t k = t.size();
    while (k > 0 && ++pos[k - 1] == hits[k - 1].size()) pos[--k] = 0;
    if (k == 0) return true;
  }
}

bool PiGenerator::advance(Tuple& t) const {
  std::size_t k = t.size();
  while (k > 0 && ++t[k - 1] == deltas_[k - 1].size()) t[--k] = 0;
  return k > 0;
}

std::optional<Formula> PiGenerator::next() {
  if (done_) return std::nullopt;
  if (fixed_) {
    done_ = true;
    return fixed_;
  }
  while (true) {
    Tuple t = cursor_;
    if (!advance(cursor_)) done_ = true;
    if (retained(t)) return candidate(t);
    if (done_) return std::nullopt;
  }
}

std::vector<Formula> gen_pi(const Formula& f, GenMode) {
  std::vector<Formula> out;
  PiGenerator g(f);
  while (auto c = g.next()) out.push_back(std::move(*c));
  return out;
}

std::vector<Formula> gen_implicants(const Formula& f) {
  std::vector<Formula> out;
  for (const Formula& c : gen_pi(dual_negate(f))) out.push_back(dual_negate(c));
  return out;
}

Formula collapse_duplicate_disjuncts(const Formula& clause) {
  std::vector<Formula> kept;
  for (const Formula& d : disjuncts(clause))
    if (std::ranges::find(kept, d) == kept.end()) kept.push_back(d);
  return Formula::disj_of(kept);
}

}  // namespace kpi
