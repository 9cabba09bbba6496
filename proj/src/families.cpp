#include "kpi/families.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

namespace kpi {

namespace {

Formula v(const std::string& name) { return Formula::var(name); }

Formula boxes(int k, Formula f) {
  for (int i = 0; i < k; ++i) f = Formula::box(std::move(f));
  return f;
}

Formula dias(int k, Formula f) {
  for (int i = 0; i < k; ++i) f = Formula::dia(std::move(f));
  return f;
}

Formula implies(const Formula& a, const Formula& b) {
  return Formula::disj(Formula::neg(a), b);
}

std::string idx(const std::string& base, int i, int j) {
  return base + "_" + std::to_string(i) + "_" + std::to_string(j);
}

// All f : [n] -> {1,2}, lexicographic with f(1) most significant.
std::vector<std::vector<int>> choice_functions(int n) {
  std::vector<std::vector<int>> out;
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::vector<int> f(n);
    for (int i = 0; i < n; ++i) f[i] = ((mask >> (n - 1 - i)) & 1) + 1;
    out.push_back(std::move(f));
  }
  return out;
}

FamilyInstance box_disjunction(int n, int cap) {
  if (n < 1 || n > cap) throw CapExceeded("box-disjunction family needs 1 <= n <= " + std::to_string(cap));
  std::vector<Formula> parts;
  for (int i = 1; i <= n; ++i)
    parts.push_back(Formula::disj(Formula::box(v(idx("a", i, 1))), Formula::box(v(idx("a", i, 2)))));
  std::vector<Formula> ds;
  for (const auto& f : choice_functions(n)) {
    std::vector<Formula> as;
    for (int i = 1; i <= n; ++i) as.push_back(v(idx("a", i, f[i - 1])));
    ds.push_back(Formula::box(Formula::conj_of(as)));
  }
  return {Formula::conj_of(parts), {Formula::disj_of(ds)}};
}

FamilyInstance diamond_disjunction(int n, int cap) {
  if (n < 1 || n > cap) throw CapExceeded("diamond-disjunction family needs 1 <= n <= " + std::to_string(cap));
  double count = std::pow(static_cast<double>(n), std::pow(2.0, n));
  if (count > 1e6) throw CapExceeded("diamond-disjunction distinguished set exceeds 10^6 clauses");
  std::vector<Formula> parts;
  for (int i = 1; i <= n; ++i) {
    auto side = [&](int j) {
      return Formula::conj(Formula::dia(v(idx("a", i, j))), Formula::box(v(idx("b", i, j))));
    };
    parts.push_back(Formula::disj(side(1), side(2)));
  }
  // d_options[t][i] = <>(a_{i,f(i)} & b_{1,f(1)} & ... & b_{n,f(n)}) for the t-th f.
  std::vector<std::vector<Formula>> d_options;
  for (const auto& f : choice_functions(n)) {
    std::vector<Formula> bs;
    for (int i = 1; i <= n; ++i) bs.push_back(v(idx("b", i, f[i - 1])));
    std::vector<Formula> opts;
    for (int i = 1; i <= n; ++i) {
      std::vector<Formula> body{v(idx("a", i, f[i - 1]))};
      body.insert(body.end(), bs.begin(), bs.end());
      opts.push_back(Formula::dia(Formula::conj_of(body)));
    }
    d_options.push_back(std::move(opts));
  }
  std::vector<Formula> clauses;
  std::vector<std::size_t> pick(d_options.size(), 0);
  while (true) {
    std::vector<Formula> ds;
    for (std::size_t t = 0; t < pick.size(); ++t) ds.push_back(d_options[t][pick[t]]);
    clauses.push_back(Formula::disj_of(ds));
    std::size_t t = pick.size();
    while (t > 0 && ++pick[t - 1] == static_cast<std::size_t>(n)) pick[--t] = 0;
    if (t == 0) break;
  }
  return {Formula::conj_of(parts), std::move(clauses)};
}

FamilyInstance exponential_clause(int n) {
  if (n < 1 || n > 2) throw CapExceeded("exponential-clause family needs 1 <= n <= 2");
  auto b = [](int i) { return v("b" + std::to_string(i)); };
  Formula c = v("c");
  Formula b01 = Formula::conj(b(0), b(1));
  std::vector<Formula> parts{Formula::disj(Formula::box(Formula::dia(b01)), boxes(2, b01))};
  for (int i = 2; i <= n; ++i)
    parts.push_back(Formula::disj(boxes(i, Formula::dia(b(i))), boxes(i + 1, b(i))));
  for (int i = 1; i <= n - 1; ++i)
    parts.push_back(boxes(i + 1, implies(Formula::conj(b(i - 1), b(i)), Formula::box(b(i)))));
  parts.push_back(boxes(n + 1, implies(Formula::conj(b(n - 1), b(n)), c)));
  std::vector<Formula> ds;
  for (int mask = 0; mask < (1 << n); ++mask) {
    // A clear bit is <>; the first operator is the most significant bit.
    Formula f = c;
    for (int p = n - 1; p >= 0; --p) {
      bool is_box = (mask >> (n - 1 - p)) & 1;
      f = is_box ? Formula::box(f) : Formula::dia(f);
    }
    ds.push_back(Formula::box(f));
  }
  return {Formula::conj_of(parts), {Formula::disj_of(ds)}};
}

FamilyInstance non_finiteness(int k) {
  if (k < 1 || k > 6) throw CapExceeded("non-finiteness family needs 1 <= k <= 6");
  Formula a = v("a"), b = v("b");
  Formula lam = Formula::disj(Formula::box(dias(k, a)),
                              Formula::dia(Formula::conj(a, Formula::conj(b, boxes(k, Formula::neg(a))))));
  return {Formula::box(Formula::conj(a, b)), {lam}};
}

std::vector<std::string> letters(int n) {
  if (n < 1 || n > 26) throw std::invalid_argument("variable count must be in 1..26");
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.emplace_back(1, static_cast<char>('a' + i));
  return out;
}

// counts[len][d]: formulas of exactly `len` nodes and depth <= d.
class ShapeCounts {
 public:
  ShapeCounts(int vars, int depth, int length)
      : c_(length + 1, std::vector<long double>(depth + 1, 0)) {
    for (int len = 1; len <= length; ++len)
      for (int d = 0; d <= depth; ++d) {
        if (len == 1) {
          c_[len][d] = vars;
          continue;
        }
        long double n = c_[len - 1][d];
        if (d > 0) n += 2 * c_[len - 1][d - 1];
        for (int a = 1; a <= len - 2; ++a) n += 2 * c_[a][d] * c_[len - 1 - a][d];
        c_[len][d] = n;
      }
  }

  long double at(int len, int d) const { return c_[len][d]; }

 private:
  std::vector<std::vector<long double>> c_;
};

Formula sample(const ShapeCounts& sc, const std::vector<std::string>& names, int len, int d,
               std::mt19937_64& rng) {
  if (len == 1) {
    std::uniform_int_distribution<std::size_t> pick(0, names.size() - 1);
    return Formula::var(names[pick(rng)]);
  }
  std::uniform_real_distribution<long double> u(0, sc.at(len, d));
  long double r = u(rng);
  long double w = sc.at(len - 1, d);
  if (r < w) return Formula::neg(sample(sc, names, len - 1, d, rng));
  r -= w;
  if (d > 0) {
    w = sc.at(len - 1, d - 1);
    if (r < w) return Formula::box(sample(sc, names, len - 1, d - 1, rng));
    r -= w;
    if (r < w) return Formula::dia(sample(sc, names, len - 1, d - 1, rng));
    r -= w;
  }
  for (int a = 1; a <= len - 2; ++a) {
    w = sc.at(a, d) * sc.at(len - 1 - a, d);
    for (bool is_and : {true, false}) {
      if (r < w) {
        Formula l = sample(sc, names, a, d, rng);
        Formula rr = sample(sc, names, len - 1 - a, d, rng);
        return is_and ? Formula::conj(l, rr) : Formula::disj(l, rr);
      }
      r -= w;
    }
  }
  // Rounding slack lands on the last option.
  if (len >= 3) return Formula::disj(sample(sc, names, len - 2, d, rng), sample(sc, names, 1, d, rng));
  return Formula::neg(sample(sc, names, len - 1, d, rng));
}

void enumerate(const std::vector<std::string>& names, int len, int d,
               const std::function<void(const Formula&)>& visit) {
  if (len == 1) {
    for (const auto& n : names) visit(Formula::var(n));
    return;
  }
  enumerate(names, len - 1, d, [&](const Formula& f) { visit(Formula::neg(f)); });
  if (d > 0) {
    enumerate(names, len - 1, d - 1, [&](const Formula& f) { visit(Formula::box(f)); });
    enumerate(names, len - 1, d - 1, [&](const Formula& f) { visit(Formula::dia(f)); });
  }
  for (int a = 1; a <= len - 2; ++a)
    enumerate(names, a, d, [&](const Formula& l) {
      enumerate(names, len - 1 - a, d, [&](const Formula& r) {
        visit(Formula::conj(l, r));
        visit(Formula::disj(l, r));
      });
    });
}

}  // namespace

Formula random_formula(int num_vars, int max_depth, int max_length, std::mt19937_64& rng) {
  if (max_length < 1 || max_depth < 0) throw std::invalid_argument("bad random formula bounds");
  auto names = letters(num_vars);
  ShapeCounts sc(num_vars, max_depth, max_length);
  long double total = 0;
  for (int len = 1; len <= max_length; ++len) total += sc.at(len, max_depth);
  std::uniform_real_distribution<long double> u(0, total);
  long double r = u(rng);
  int len = 1;
  for (; len < max_length; ++len) {
    if (r < sc.at(len, max_depth)) break;
    r -= sc.at(len, max_depth);
  }
  return sample(sc, names, len, max_depth, rng);
}

void for_each_formula(int num_vars, int max_depth, int max_length,
                      const std::function<void(const Formula&)>& visit) {
  auto names = letters(num_vars);
  for (int len = 1; len <= max_length; ++len) enumerate(names, len, max_depth, visit);
}

FamilyInstance generate(const FamilySpec& spec, int cap) {
  return std::visit(
      [&](const auto& s) -> FamilyInstance {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, BoxDisjunctionSpec>) {
          return box_disjunction(s.n, cap);
        } else if constexpr (std::is_same_v<S, DiamondDisjunctionSpec>) {
          return diamond_disjunction(s.n, cap);
        } else if constexpr (std::is_same_v<S, ExponentialClauseSpec>) {
          return exponential_clause(s.n);
        } else if constexpr (std::is_same_v<S, NonFinitenessSpec>) {
          return non_finiteness(s.k);
        } else {
          if (s.vars < 1 || s.depth < 0 || s.length < 1)
            throw std::invalid_argument("random family needs vars >= 1, depth >= 0, length >= 1");
          std::mt19937_64 rng(s.seed);
          return {random_formula(s.vars, s.depth, s.length, rng), {}};
        }
      },
      spec);
}

QbfInstance parse_qbf(std::string_view text) {
  QbfInstance q;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  bool in_matrix = false;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::vector<std::string> toks;
    for (std::string t; ls >> t;) toks.push_back(t);
    if (toks.empty() || toks[0][0] == '#') continue;
    if (!in_matrix && (toks[0] == "a" || toks[0] == "e") && toks.size() >= 2 && toks.back() != "0") {
      for (std::size_t i = 1; i < toks.size(); ++i)
        q.prefix.emplace_back(toks[0] == "a" ? Quant::kForall : Quant::kExists, toks[i]);
      continue;
    }
    in_matrix = true;
    if (toks.back() != "0") throw QbfFormatError(lineno, "clause must end with 0");
    std::vector<QbfLiteral> clause;
    for (std::size_t i = 0; i + 1 < toks.size(); ++i) {
      const std::string& t = toks[i];
      bool neg = t[0] == '-';
      std::string name = neg ? t.substr(1) : t;
      if (name.empty()) throw QbfFormatError(lineno, "empty literal");
      clause.push_back({name, !neg});
    }
    q.matrix.push_back(std::move(clause));
  }
  return q;
}

namespace {

void validate(const QbfInstance& q) {
  std::set<std::string> seen;
  for (const auto& [quant, name] : q.prefix)
    if (!seen.insert(name).second) throw std::invalid_argument("prefix repeats `" + name + "`");
  for (const auto& c : q.matrix)
    for (const auto& l : c)
      if (!seen.contains(l.var))
        throw std::invalid_argument("matrix variable `" + l.var + "` is not quantified");
}

bool eval_qbf(const QbfInstance& q, std::size_t level, std::map<std::string, bool>& env) {
  if (level == q.prefix.size()) {
    return std::ranges::all_of(q.matrix, [&](const auto& c) {
      return std::ranges::any_of(c, [&](const QbfLiteral& l) { return env.at(l.var) == l.positive; });
    });
  }
  const auto& [quant, name] = q.prefix[level];
  bool forall = quant == Quant::kForall;
  for (bool value : {false, true}) {
    env[name] = value;
    bool r = eval_qbf(q, level + 1, env);
    if (forall != r) return r;
  }
  return forall;
}

}  // namespace

Formula qbf_encode(const QbfInstance& q) {
  validate(q);
  if (q.matrix.empty()) throw std::invalid_argument("qbf matrix is empty");
  const int m = static_cast<int>(q.prefix.size());
  for (const auto& [quant, name] : q.prefix)
    for (int i = 0; i <= m; ++i)
      if (name == "q" + std::to_string(i))
        throw std::invalid_argument("prefix variable `" + name + "` collides with a level marker");
  auto qv = [](int i) { return v("q" + std::to_string(i)); };
  auto pv = [&](int i) { return v(q.prefix[i - 1].second); };
  auto nq = [&](int i) { return Formula::neg(qv(i)); };

  std::vector<Formula> parts{qv(0)};
  for (int i = 0; i <= m; ++i)
    for (int j = 0; j <= m; ++j)
      if (j != i)
        for (int k = 0; k <= m; ++k) parts.push_back(boxes(k, Formula::disj(nq(i), nq(j))));
  for (int i = 0; i < m; ++i)
    for (int k = 0; k <= m; ++k)
      parts.push_back(boxes(k, Formula::disj(nq(i), Formula::dia(qv(i + 1)))));
  for (int i = 0; i < m; ++i) {
    if (q.prefix[i].first != Quant::kForall) continue;
    Formula p = pv(i + 1);
    parts.push_back(boxes(i, Formula::disj(nq(i), Formula::dia(Formula::conj(qv(i + 1), p)))));
    parts.push_back(
        boxes(i, Formula::disj(nq(i), Formula::dia(Formula::conj(qv(i + 1), Formula::neg(p))))));
  }
  for (int i = 1; i <= m - 1; ++i)
    for (int j = i; j <= m - 1; ++j) {
      Formula p = pv(i);
      parts.push_back(boxes(j, Formula::disj(Formula::neg(p), Formula::box(p))));
      parts.push_back(boxes(j, Formula::disj(p, Formula::box(Formula::neg(p)))));
    }
  for (const auto& clause : q.matrix) {
    std::vector<Formula> ds{nq(m)};
    for (const auto& l : clause) ds.push_back(l.positive ? v(l.var) : Formula::neg(v(l.var)));
    parts.push_back(boxes(m, Formula::disj_of(ds)));
  }
  return Formula::conj_of(parts);
}

bool qbf_valid_bruteforce(const QbfInstance& q) {
  validate(q);
  if (q.prefix.size() > 20) throw CapExceeded("qbf brute force is capped at 20 variables");
  std::map<std::string, bool> env;
  return eval_qbf(q, 0, env);
}

Formula xc_encode(const XcInstance& x) {
  if (x.universe.empty() || x.subsets.empty())
    throw std::invalid_argument("exact cover needs a nonempty universe and at least one subset");
  std::set<std::string> u(x.universe.begin(), x.universe.end());
  if (u.size() != x.universe.size()) throw std::invalid_argument("universe repeats an element");
  for (const auto& s : x.subsets)
    for (const auto& e : s)
      if (!u.contains(e)) throw std::invalid_argument("subset element `" + e + "` not in universe");
  const int n = static_cast<int>(x.universe.size());
  Formula a = v("a");
  std::vector<Formula> parts;
  for (const auto& s : x.subsets) {
    Formula f = a;
    for (int i = 2 * n; i >= 1; --i) {
      const std::string& ui = x.universe[(i <= n ? i : i - n) - 1];
      bool in = std::ranges::find(s, ui) != s.end();
      f = in ? Formula::dia(f) : Formula::box(f);
    }
    parts.push_back(f);
  }
  parts.push_back(boxes(2 * n, Formula::neg(a)));
  return Formula::conj_of(parts);
}

bool xc_has_exact_cover(const XcInstance& x) {
  const std::size_t m = x.subsets.size();
  if (m > 20) throw CapExceeded("exact cover brute force is capped at 20 subsets");
  std::set<std::string> universe(x.universe.begin(), x.universe.end());
  for (std::uint32_t mask = 0; mask < (1U << m); ++mask) {
    std::multiset<std::string> covered;
    for (std::size_t j = 0; j < m; ++j)
      if ((mask >> j) & 1U) {
        std::set<std::string> s(x.subsets[j].begin(), x.subsets[j].end());
        covered.insert(s.begin(), s.end());
      }
    if (covered.size() == universe.size() &&
        std::set<std::string>(covered.begin(), covered.end()) == universe)
      return true;
  }
  return false;
}

}  // namespace kpi
