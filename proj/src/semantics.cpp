#include "kpi/semantics.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_map>

namespace kpi {

void KripkeModel::add_world(const std::string& w) { worlds_.insert(w); }

void KripkeModel::add_arc(const std::string& from, const std::string& to) {
  if (!has_world(from)) throw UnknownWorldError(from);
  if (!has_world(to)) throw UnknownWorldError(to);
  succ_[from].insert(to);
}

void KripkeModel::set_true(const std::string& w, const std::string& var) {
  if (!has_world(w)) throw UnknownWorldError(w);
  val_[w].insert(var);
}

const std::set<std::string>& KripkeModel::successors(const std::string& w) const {
  static const std::set<std::string> kNone;
  auto it = succ_.find(w);
  return it == succ_.end() ? kNone : it->second;
}

bool KripkeModel::holds(const std::string& w, const std::string& var) const {
  auto it = val_.find(w);
  return it != val_.end() && it->second.contains(var);
}

KripkeModel KripkeModel::parse(std::string_view text) {
  KripkeModel m;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  // Arcs and valuations may precede the worlds line; apply them afterwards.
  std::vector<std::pair<std::size_t, std::string>> arcs;
  std::vector<std::pair<std::size_t, std::vector<std::string>>> vals;
  bool saw_worlds = false;
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    auto colon = line.find(':');
    if (colon == std::string::npos) throw ModelFormatError(lineno, "missing `:`");
    std::string key = line.substr(first, colon - first);
    while (!key.empty() && std::isspace(static_cast<unsigned char>(key.back()))) key.pop_back();
    std::istringstream rest(line.substr(colon + 1));
    std::vector<std::string> items;
    for (std::string tok; rest >> tok;) items.push_back(tok);
    if (key == "worlds") {
      for (auto& w : items) m.add_world(w);
      saw_worlds = true;
    } else if (key == "arcs") {
      for (auto& a : items) arcs.emplace_back(lineno, a);
    } else if (key == "val") {
      if (items.empty()) throw ModelFormatError(lineno, "`val:` needs a world");
      vals.emplace_back(lineno, std::move(items));
    } else {
      throw ModelFormatError(lineno, "unknown key `" + key + "`");
    }
  }
  if (!saw_worlds || m.worlds_.empty()) throw ModelFormatError(lineno, "no worlds declared");
  for (auto& [ln, a] : arcs) {
    auto gt = a.find('>');
    if (gt == std::string::npos || gt == 0 || gt + 1 == a.size())
      throw ModelFormatError(ln, "arc `" + a + "` is not of the form from>to");
    std::string from = a.substr(0, gt), to = a.substr(gt + 1);
    if (!m.has_world(from) || !m.has_world(to))
      throw ModelFormatError(ln, "arc `" + a + "` references an unknown world");
    m.add_arc(from, to);
  }
  for (auto& [ln, items] : vals) {
    if (!m.has_world(items[0])) throw ModelFormatError(ln, "unknown world `" + items[0] + "`");
    for (std::size_t i = 1; i < items.size(); ++i) m.set_true(items[0], items[i]);
  }
  return m;
}

std::string KripkeModel::to_text() const {
  std::string out = "worlds:";
  for (auto& w : worlds_) out += " " + w;
  out += "\narcs:";
  for (auto& [w, ss] : succ_)
    for (auto& s : ss) out += " " + w + ">" + s;
  out += "\n";
  for (auto& [w, vs] : val_) {
    if (vs.empty()) continue;
    out += "val: " + w;
    for (auto& v : vs) out += " " + v;
    out += "\n";
  }
  return out;
}

namespace {

bool eval_at(const KripkeModel& m, const std::string& w, const Formula& f) {
  switch (f.op()) {
    case Op::kVar:
      return m.holds(w, f.name());
    case Op::kNeg:
      return !eval_at(m, w, f.child());
    case Op::kAnd:
      return eval_at(m, w, f.left()) && eval_at(m, w, f.right());
    case Op::kOr:
      return eval_at(m, w, f.left()) || eval_at(m, w, f.right());
    case Op::kBox:
      return std::ranges::all_of(m.successors(w),
                                 [&](const std::string& s) { return eval_at(m, s, f.child()); });
    case Op::kDia:
      return std::ranges::any_of(m.successors(w),
                                 [&](const std::string& s) { return eval_at(m, s, f.child()); });
  }
  return false;
}

}  // namespace

bool eval(const KripkeModel& m, const std::string& w, const Formula& f) {
  if (!m.has_world(w)) throw UnknownWorldError(w);
  return eval_at(m, w, f);
}

namespace {

using Bits = std::vector<std::uint8_t>;

struct Sub {
  Formula f;
  std::size_t depth;
  int a = -1;  // operand indices into the subformula table
  int b = -1;
};

struct WitnessNode {
  std::uint64_t valuation;
  std::vector<int> kids;
};

struct Type {
  Bits truth;  // over all subformulas; meaningful for depth <= level
  int witness;
};

class TreeSearch {
 public:
  TreeSearch(const Formula& f, std::uint64_t fuel) : fuel_(fuel) {
    index(f);
    std::set<std::string> vs = variables(f);
    vars_.assign(vs.begin(), vs.end());
    if (vars_.size() > 20) throw FuelExceeded(fuel_);
  }

  BruteforceResult run() {
    std::size_t depth = subs_.back().depth;
    std::vector<Type> types = leaves();
    for (std::size_t level = 1; level <= depth; ++level) types = lift(types, level);
    for (const Type& t : types) {
      if (!t.truth.back()) continue;
      BruteforceResult r{true, build_model(t.witness)};
      return r;
    }
    return {};
  }

 private:
  int index(const Formula& f) {
    if (auto it = ids_.find(f); it != ids_.end()) return it->second;
    Sub s{f, 0};
    switch (f.op()) {
      case Op::kVar:
        break;
      case Op::kNeg:
        s.a = index(f.child());
        s.depth = subs_[s.a].depth;
        break;
      case Op::kBox:
      case Op::kDia:
        s.a = index(f.child());
        s.depth = subs_[s.a].depth + 1;
        break;
      case Op::kAnd:
      case Op::kOr:
        s.a = index(f.left());
        s.b = index(f.right());
        s.depth = std::max(subs_[s.a].depth, subs_[s.b].depth);
        break;
    }
    subs_.push_back(s);
    int id = static_cast<int>(subs_.size() - 1);
    ids_.emplace(f, id);
    return id;
  }

  void spend(std::uint64_t n = 1) {
    steps_ += n;
    if (steps_ > fuel_) throw FuelExceeded(fuel_);
  }

  // Fills truth for every subformula of depth <= level; modal entries come
  // from `profile` (indexed like subs_).
  Bits evaluate(std::uint64_t valuation, const Bits& profile, std::size_t level) const {
    Bits t(subs_.size(), 0);
    for (std::size_t i = 0; i < subs_.size(); ++i) {
      const Sub& s = subs_[i];
      if (s.depth > level) continue;
      switch (s.f.op()) {
        case Op::kVar: {
          auto pos = std::ranges::lower_bound(vars_, s.f.name()) - vars_.begin();
          t[i] = (valuation >> pos) & 1U;
          break;
        }
        case Op::kNeg:
          t[i] = !t[s.a];
          break;
        case Op::kAnd:
          t[i] = t[s.a] && t[s.b];
          break;
        case Op::kOr:
          t[i] = t[s.a] || t[s.b];
          break;
        case Op::kBox:
        case Op::kDia:
          t[i] = profile[i];
          break;
      }
    }
    return t;
  }

  std::vector<Type> leaves() {
    std::vector<Type> out;
    std::map<Bits, int> seen;
    Bits empty(subs_.size(), 0);
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << vars_.size()); ++v) {
      spend();
      Bits t = evaluate(v, empty, 0);
      if (seen.contains(t)) continue;
      witnesses_.push_back({v, {}});
      int w = static_cast<int>(witnesses_.size() - 1);
      seen.emplace(t, w);
      out.push_back({std::move(t), w});
    }
    return out;
  }

  // Types of trees of depth <= level from types of depth <= level - 1.
  std::vector<Type> lift(const std::vector<Type>& below, std::size_t level) {
    std::vector<std::size_t> modal;
    for (std::size_t i = 0; i < subs_.size(); ++i)
      if (subs_[i].f.is_modal() && subs_[i].depth <= level) modal.push_back(i);

    // Profile of the empty successor set: boxes true, diamonds false.
    Bits start(subs_.size(), 0);
    for (std::size_t i : modal) start[i] = subs_[i].f.op() == Op::kBox;

    std::map<Bits, std::vector<int>> profiles{{start, {}}};
    std::deque<Bits> queue{start};
    while (!queue.empty()) {
      Bits p = queue.front();
      queue.pop_front();
      std::vector<int> kids = profiles.at(p);
      for (const Type& t : below) {
        spend();
        Bits q = p;
        for (std::size_t i : modal) {
          bool body = t.truth[subs_[i].a];
          q[i] = subs_[i].f.op() == Op::kBox ? (q[i] && body) : (q[i] || body);
        }
        if (profiles.contains(q)) continue;
        std::vector<int> k2 = kids;
        k2.push_back(t.witness);
        profiles.emplace(q, std::move(k2));
        queue.push_back(std::move(q));
      }
    }

    std::vector<Type> out;
    std::map<Bits, int> seen;
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << vars_.size()); ++v) {
      for (auto& [p, kids] : profiles) {
        spend();
        Bits t = evaluate(v, p, level);
        if (seen.contains(t)) continue;
        witnesses_.push_back({v, kids});
        int w = static_cast<int>(witnesses_.size() - 1);
        seen.emplace(t, w);
        out.push_back({std::move(t), w});
      }
    }
    return out;
  }

  KripkeModel build_model(int root) const {
    KripkeModel m;
    std::map<int, std::string> names;
    std::vector<int> order{root};
    names.emplace(root, "w0");
    for (std::size_t i = 0; i < order.size(); ++i)
      for (int k : witnesses_[order[i]].kids)
        if (!names.contains(k)) {
          names.emplace(k, "w" + std::to_string(names.size()));
          order.push_back(k);
        }
    for (int n : order) m.add_world(names.at(n));
    for (int n : order) {
      const WitnessNode& node = witnesses_[n];
      for (std::size_t b = 0; b < vars_.size(); ++b)
        if ((node.valuation >> b) & 1U) m.set_true(names.at(n), vars_[b]);
      for (int k : node.kids) m.add_arc(names.at(n), names.at(k));
    }
    return m;
  }

  std::uint64_t fuel_;
  std::uint64_t steps_ = 0;
  std::vector<Sub> subs_;
  std::unordered_map<Formula, int, FormulaHash> ids_;
  std::vector<std::string> vars_;
  std::vector<WitnessNode> witnesses_;
};

}  // namespace

BruteforceResult sat_bruteforce_model(const Formula& f, std::uint64_t fuel) {
  BruteforceResult r = TreeSearch(f, fuel).run();
  if (r.satisfiable && !eval(*r.model, "w0", f))
    throw std::logic_error("tree search produced a model that does not satisfy " + print(f));
  return r;
}

}  // namespace kpi
