#include "kpi/formula.hpp"

#include <algorithm>
#include <functional>
#include <ostream>

namespace kpi {

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Formula Formula::var(std::string name) {
  if (name.empty()) throw std::invalid_argument("variable name must be nonempty");
  std::size_t h = mix(static_cast<std::size_t>(Op::kVar), std::hash<std::string>{}(name));
  return Formula(std::make_shared<const Node>(Node{Op::kVar, std::move(name), {}, h, 1}));
}

Formula Formula::neg(Formula f) {
  std::size_t h = mix(static_cast<std::size_t>(Op::kNeg), f.hash());
  std::size_t len = f.length() + 1;
  return Formula(std::make_shared<const Node>(Node{Op::kNeg, {}, {std::move(f)}, h, len}));
}

Formula Formula::box(Formula f) {
  std::size_t h = mix(static_cast<std::size_t>(Op::kBox), f.hash());
  std::size_t len = f.length() + 1;
  return Formula(std::make_shared<const Node>(Node{Op::kBox, {}, {std::move(f)}, h, len}));
}

Formula Formula::dia(Formula f) {
  std::size_t h = mix(static_cast<std::size_t>(Op::kDia), f.hash());
  std::size_t len = f.length() + 1;
  return Formula(std::make_shared<const Node>(Node{Op::kDia, {}, {std::move(f)}, h, len}));
}

Formula Formula::conj(Formula l, Formula r) {
  std::size_t h = mix(mix(static_cast<std::size_t>(Op::kAnd), l.hash()), r.hash());
  std::size_t len = l.length() + r.length() + 1;
  return Formula(
      std::make_shared<const Node>(Node{Op::kAnd, {}, {std::move(l), std::move(r)}, h, len}));
}

Formula Formula::disj(Formula l, Formula r) {
  std::size_t h = mix(mix(static_cast<std::size_t>(Op::kOr), l.hash()), r.hash());
  std::size_t len = l.length() + r.length() + 1;
  return Formula(
      std::make_shared<const Node>(Node{Op::kOr, {}, {std::move(l), std::move(r)}, h, len}));
}

Formula Formula::conj_of(std::span<const Formula> fs) {
  if (fs.empty()) throw std::invalid_argument("empty conjunction");
  Formula acc = fs.back();
  for (std::size_t i = fs.size() - 1; i-- > 0;) acc = conj(fs[i], std::move(acc));
  return acc;
}

Formula Formula::disj_of(std::span<const Formula> fs) {
  if (fs.empty()) throw std::invalid_argument("empty disjunction");
  Formula acc = fs.back();
  for (std::size_t i = fs.size() - 1; i-- > 0;) acc = disj(fs[i], std::move(acc));
  return acc;
}

bool Formula::is_prop_literal() const {
  return op() == Op::kVar || (op() == Op::kNeg && child().op() == Op::kVar);
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.op() != b.op() || a.length() != b.length()) return false;
  switch (a.op()) {
    case Op::kVar:
      return a.name() == b.name();
    case Op::kNeg:
    case Op::kBox:
    case Op::kDia:
      return a.child() == b.child();
    case Op::kAnd:
    case Op::kOr:
      return a.left() == b.left() && a.right() == b.right();
  }
  return false;
}

std::strong_ordering operator<=>(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.op() <=> b.op(); c != 0) return c;
  switch (a.op()) {
    case Op::kVar:
      return a.name().compare(b.name()) <=> 0;
    case Op::kNeg:
    case Op::kBox:
    case Op::kDia:
      return a.child() <=> b.child();
    case Op::kAnd:
    case Op::kOr:
      if (auto c = a.left() <=> b.left(); c != 0) return c;
      return a.right() <=> b.right();
  }
  return std::strong_ordering::equal;
}

std::size_t modal_depth(const Formula& f) {
  switch (f.op()) {
    case Op::kVar:
      return 0;
    case Op::kNeg:
      return modal_depth(f.child());
    case Op::kBox:
    case Op::kDia:
      return modal_depth(f.child()) + 1;
    case Op::kAnd:
    case Op::kOr:
      return std::max(modal_depth(f.left()), modal_depth(f.right()));
  }
  return 0;
}

namespace {

void collect_vars(const Formula& f, std::set<std::string>& out) {
  switch (f.op()) {
    case Op::kVar:
      out.insert(f.name());
      return;
    case Op::kNeg:
    case Op::kBox:
    case Op::kDia:
      collect_vars(f.child(), out);
      return;
    case Op::kAnd:
    case Op::kOr:
      collect_vars(f.left(), out);
      collect_vars(f.right(), out);
      return;
  }
}

}  // namespace

std::set<std::string> variables(const Formula& f) {
  std::set<std::string> out;
  collect_vars(f, out);
  return out;
}

Metrics metrics(const Formula& f) {
  return Metrics{f.length(), modal_depth(f), variables(f)};
}

Formula nnf(const Formula& f) {
  switch (f.op()) {
    case Op::kVar:
      return f;
    case Op::kAnd:
      return Formula::conj(nnf(f.left()), nnf(f.right()));
    case Op::kOr:
      return Formula::disj(nnf(f.left()), nnf(f.right()));
    case Op::kBox:
      return Formula::box(nnf(f.child()));
    case Op::kDia:
      return Formula::dia(nnf(f.child()));
    case Op::kNeg:
      break;
  }
  const Formula& g = f.child();
  switch (g.op()) {
    case Op::kVar:
      return f;
    case Op::kNeg:
      return nnf(g.child());
    case Op::kAnd:
      return Formula::disj(nnf(Formula::neg(g.left())), nnf(Formula::neg(g.right())));
    case Op::kOr:
      return Formula::conj(nnf(Formula::neg(g.left())), nnf(Formula::neg(g.right())));
    case Op::kBox:
      return Formula::dia(nnf(Formula::neg(g.child())));
    case Op::kDia:
      return Formula::box(nnf(Formula::neg(g.child())));
  }
  return f;
}

bool is_nnf(const Formula& f) {
  switch (f.op()) {
    case Op::kVar:
      return true;
    case Op::kNeg:
      return f.child().is_var();
    case Op::kBox:
    case Op::kDia:
      return is_nnf(f.child());
    case Op::kAnd:
    case Op::kOr:
      return is_nnf(f.left()) && is_nnf(f.right());
  }
  return false;
}

Formula dual_negate(const Formula& f) { return nnf(Formula::neg(f)); }

Formula top() {
  Formula c = Formula::var(std::string(kConstVar));
  return Formula::disj(c, Formula::neg(c));
}

Formula bottom() {
  Formula c = Formula::var(std::string(kConstVar));
  return Formula::conj(c, Formula::neg(c));
}

namespace {

bool is_const_var(const Formula& f) { return f.is_var() && f.name() == kConstVar; }

// Matches `_c op !_c` in either operand order.
bool is_const_pair(const Formula& f) {
  const Formula& l = f.left();
  const Formula& r = f.right();
  auto neg_c = [](const Formula& g) { return g.op() == Op::kNeg && is_const_var(g.child()); };
  return (is_const_var(l) && neg_c(r)) || (neg_c(l) && is_const_var(r));
}

void print_into(const Formula& f, std::string& out);

void print_operand(const Formula& f, std::string& out) {
  bool wrap = (f.op() == Op::kAnd || f.op() == Op::kOr) && !is_const_pair(f);
  if (wrap) out += '(';
  print_into(f, out);
  if (wrap) out += ')';
}

void print_into(const Formula& f, std::string& out) {
  switch (f.op()) {
    case Op::kVar:
      out += f.name();
      return;
    case Op::kNeg:
    case Op::kBox:
    case Op::kDia:
      out += f.op() == Op::kNeg ? "!" : f.op() == Op::kBox ? "[]" : "<>";
      out += '(';
      print_into(f.child(), out);
      out += ')';
      return;
    case Op::kAnd:
    case Op::kOr:
      if (is_const_pair(f)) {
        out += f.op() == Op::kOr ? "true" : "false";
        return;
      }
      print_operand(f.left(), out);
      out += f.op() == Op::kAnd ? " & " : " | ";
      print_operand(f.right(), out);
      return;
  }
}

}  // namespace

std::string print(const Formula& f) {
  std::string out;
  print_into(f, out);
  return out;
}

std::ostream& operator<<(std::ostream& os, const Formula& f) { return os << print(f); }

}  // namespace kpi
