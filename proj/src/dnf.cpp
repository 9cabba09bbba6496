#include "kpi/dnf.hpp"

#include <algorithm>

#include "kpi/decision.hpp"

namespace kpi {

Dnf4Stream::Dnf4Stream(const Formula& f) { stack_.push_back({{nnf(f)}, {}}); }

std::optional<TermView4> Dnf4Stream::next() {
  while (!stack_.empty()) {
    Frame fr = std::move(stack_.back());
    stack_.pop_back();
    while (!fr.todo.empty()) {
      Formula f = fr.todo.back();
      fr.todo.pop_back();
      if (f.op() == Op::kAnd) {
        fr.todo.push_back(f.right());
        fr.todo.push_back(f.left());
      } else if (f.op() == Op::kOr) {
        Frame alt{fr.todo, fr.acc};
        alt.todo.push_back(f.right());
        stack_.push_back(std::move(alt));
        fr.todo.push_back(f.left());
      } else if (std::ranges::find(fr.acc, f) == fr.acc.end()) {
        fr.acc.push_back(f);
      }
    }
    std::vector<Formula> key = fr.acc;
    std::ranges::sort(key);
    if (seen_.contains(key)) continue;
    TermView4 t;
    for (const Formula& c : fr.acc) {
      if (c.op() == Op::kDia) t.diamonds.push_back(c.child());
      else if (c.op() == Op::kBox) t.boxes.push_back(c.child());
      else t.lits.push_back(c);
    }
    if (!term_sat(t)) continue;
    seen_.insert(std::move(key));
    return t;
  }
  return std::nullopt;
}

std::vector<TermView4> dnf4(const Formula& f) {
  std::vector<TermView4> out;
  Dnf4Stream s(f);
  while (auto t = s.next()) out.push_back(std::move(*t));
  return out;
}

std::vector<Formula> cnf4(const Formula& f) {
  std::vector<Formula> out;
  Dnf4Stream s(dual_negate(f));
  while (auto t = s.next()) out.push_back(dual_negate(assemble(*t)));
  return out;
}

bool term_sat(const TermView4& t) {
  for (std::size_t i = 0; i < t.lits.size(); ++i)
    for (std::size_t j = i + 1; j < t.lits.size(); ++j)
      if (dual_negate(t.lits[i]) == t.lits[j]) return false;
  for (const Formula& zeta : t.diamonds) {
    std::vector<Formula> parts = t.boxes;
    parts.insert(parts.begin(), zeta);
    if (!sat(Formula::conj_of(parts))) return false;
  }
  return true;
}

std::vector<Formula> delta_set(const TermView4& t) {
  if (!term_sat(t)) throw PreconditionError("delta_set of an unsatisfiable term");
  std::vector<Formula> out = t.lits;
  if (!t.boxes.empty()) out.push_back(Formula::box(beta(t)));
  for (const Formula& zeta : t.diamonds)
    out.push_back(Formula::dia(t.boxes.empty() ? zeta : Formula::conj(zeta, beta(t))));
  return out;
}

}  // namespace kpi
