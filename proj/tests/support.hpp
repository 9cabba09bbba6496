// Shared fixtures and independent reference implementations for the tests.
#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "kpi/decision.hpp"
#include "kpi/dnf.hpp"
#include "kpi/families.hpp"
#include "kpi/formula.hpp"
#include "kpi/grammar.hpp"

namespace kpi::testing {

inline Formula P(const std::string& s) { return parse(s); }

inline const char* kTwoTermFormula = "a & ((<>(b & c) & <>b) | (<>b & <>(c | d) & []e & []f))";
inline const char* kRecognitionFormula = "a & ([](b & c) | [](e | f)) & <>(a & b)";
inline const char* kStrengthenedFormula = "a & ([](b & c) | [](e | f)) & <>(a & b) & ![](e | f | (a & b & c))";
inline const char* kMixedClause = "!b | <>(a & <>c) | <>(d & []a) | [](c | d)";

/// A D4 clause with 1..max_disjuncts disjuncts: propositional literals or a
/// modal operator over an NNF random formula.
inline Formula random_clause(std::mt19937_64& rng, int vars, int body_len, int max_disjuncts = 3) {
  std::uniform_int_distribution<int> count(1, max_disjuncts);
  std::uniform_int_distribution<int> kind(0, 2);
  std::uniform_int_distribution<int> var(0, vars - 1);
  std::uniform_int_distribution<int> coin(0, 1);
  std::vector<Formula> ds;
  int n = count(rng);
  for (int i = 0; i < n; ++i) {
    int k = kind(rng);
    if (k == 0) {
      Formula v = Formula::var(std::string(1, static_cast<char>('a' + var(rng))));
      ds.push_back(coin(rng) ? v : Formula::neg(v));
    } else {
      Formula body = nnf(random_formula(vars, 1, body_len, rng));
      ds.push_back(k == 1 ? Formula::box(body) : Formula::dia(body));
    }
  }
  return Formula::disj_of(ds);
}

/// The candidate index rule with plain pairwise entailment over a fully
/// materialized candidate list.
inline std::vector<Formula> naive_gen_pi(const Formula& f) {
  if (!sat(f) || tautology(f)) return {};
  std::vector<std::vector<Formula>> deltas;
  for (const auto& t : dnf4(f)) deltas.push_back(delta_set(t));
  std::vector<Formula> cands;
  std::vector<std::size_t> pos(deltas.size(), 0);
  while (true) {
    std::vector<Formula> parts;
    for (std::size_t k = 0; k < pos.size(); ++k) parts.push_back(deltas[k][pos[k]]);
    cands.push_back(Formula::disj_of(parts));
    std::size_t k = pos.size();
    while (k > 0 && ++pos[k - 1] == deltas[k - 1].size()) pos[--k] = 0;
    if (k == 0) break;
  }
  std::vector<Formula> out;
  for (std::size_t i = 0; i < cands.size(); ++i) {
    bool keep = true;
    for (std::size_t j = 0; j < cands.size() && keep; ++j) {
      if (j == i || !entails(cands[j], cands[i])) continue;
      if (j < i || !entails(cands[i], cands[j])) keep = false;
    }
    if (keep) out.push_back(cands[i]);
  }
  return out;
}

inline bool conj_equivalent(const std::vector<Formula>& fs, const Formula& g) {
  if (fs.empty()) return tautology(g);
  return equivalent(Formula::conj_of(fs), g);
}

inline bool equivalent_to_some(const Formula& f, const std::vector<Formula>& set) {
  for (const auto& g : set)
    if (equivalent(f, g)) return true;
  return false;
}

inline bool contains(const std::vector<Formula>& s, const Formula& f) {
  return std::find(s.begin(), s.end(), f) != s.end();
}

// Conditions (a) and (b) of a diamond refutation, checked over every subset
// of each term's box conjuncts.
inline bool independently_refutes(const std::vector<Formula>& s, const Formula& psi, const Formula& phi) {
  if (s.empty() || entails(psi, Formula::disj_of(s))) return false;
  for (const TermView4& t : dnf4(phi)) {
    bool found = false;
    for (const Formula& eta : t.diamonds) {
      for (std::size_t mask = 0; mask < (std::size_t{1} << t.boxes.size()) && !found; ++mask) {
        std::vector<Formula> body{eta};
        bool hit = contains(s, eta);
        for (std::size_t j = 0; j < t.boxes.size(); ++j)
          if ((mask >> j) & 1) {
            body.push_back(t.boxes[j]);
            hit = hit || contains(s, t.boxes[j]);
          }
        found = hit && entails(Formula::conj_of(body), psi);
      }
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace kpi::testing
