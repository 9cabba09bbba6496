#include "kpi/grammar.hpp"

#include <algorithm>
#include <functional>

namespace kpi {

namespace {

bool is_lit(const Formula& f) { return f.is_prop_literal(); }

// Matches `rule` against every operand of a maximal `op` chain.
bool chain(const Formula& f, Op op, const std::function<bool(const Formula&)>& rule) {
  if (f.op() == op) return chain(f.left(), op, rule) && chain(f.right(), op, rule);
  return rule(f);
}

// D1: modal operators over the same nonterminal.
bool d1_lit(const Formula& f) {
  if (is_lit(f)) return true;
  return f.is_modal() && d1_lit(f.child());
}
bool d1_clause(const Formula& f) {
  if (is_lit(f)) return true;
  if (f.is_modal()) return d1_clause(f.child());
  return f.op() == Op::kOr && d1_clause(f.left()) && d1_clause(f.right());
}
bool d1_term(const Formula& f) {
  if (is_lit(f)) return true;
  if (f.is_modal()) return d1_term(f.child());
  return f.op() == Op::kAnd && d1_term(f.left()) && d1_term(f.right());
}

// D3a / D3b clauses share C and ConjC.
bool d3_clause(const Formula& f);
bool d3_conj_clause(const Formula& f) { return chain(f, Op::kAnd, d3_clause); }
bool d3_clause(const Formula& f) {
  if (is_lit(f)) return true;
  if (f.op() == Op::kBox) return d3_clause(f.child());
  if (f.op() == Op::kDia) return d3_conj_clause(f.child());
  return f.op() == Op::kOr && d3_clause(f.left()) && d3_clause(f.right());
}

bool d3a_term(const Formula& f);
bool d3a_disj_term(const Formula& f) { return chain(f, Op::kOr, d3a_term); }
bool d3a_term(const Formula& f) {
  if (is_lit(f)) return true;
  if (f.op() == Op::kBox) return d3a_disj_term(f.child());
  if (f.op() == Op::kDia) return d3a_term(f.child());
  return f.op() == Op::kAnd && d3a_term(f.left()) && d3a_term(f.right());
}

bool d3b_lit(const Formula& f) {
  if (is_lit(f)) return true;
  if (f.op() == Op::kBox) return d3_clause(f.child());
  if (f.op() == Op::kDia) return d3_conj_clause(f.child());
  return false;
}

bool d4_lit(const Formula& f) { return is_lit(f) || (f.is_modal() && is_nnf(f.child())); }

bool d5_clause(const Formula& f);
bool d5_term(const Formula& f);
bool d5_lit(const Formula& f) {
  if (is_lit(f)) return true;
  if (f.op() == Op::kBox) return d5_clause(f.child());
  if (f.op() == Op::kDia) return d5_term(f.child());
  return false;
}
bool d5_clause(const Formula& f) { return chain(f, Op::kOr, d5_lit); }
bool d5_term(const Formula& f) { return chain(f, Op::kAnd, d5_lit); }

void flatten(const Formula& f, Op op, std::vector<Formula>& out) {
  if (f.op() == op) {
    flatten(f.left(), op, out);
    flatten(f.right(), op, out);
  } else {
    out.push_back(f);
  }
}

void push_unique(std::vector<Formula>& v, const Formula& f) {
  if (std::ranges::find(v, f) == v.end()) v.push_back(f);
}

}  // namespace

bool is_member(const Formula& f, DefId d, SyntacticKind k) {
  using K = SyntacticKind;
  switch (d) {
    case DefId::kD1:
      return k == K::kLiteral ? d1_lit(f) : k == K::kClause ? d1_clause(f) : d1_term(f);
    case DefId::kD2:
      if (k == K::kLiteral) return d1_lit(f);
      return chain(f, k == K::kClause ? Op::kOr : Op::kAnd, d1_lit);
    case DefId::kD3a:
      return k == K::kLiteral ? d1_lit(f) : k == K::kClause ? d3_clause(f) : d3a_term(f);
    case DefId::kD3b:
      if (k == K::kLiteral) return d3b_lit(f);
      return k == K::kClause ? d3_clause(f) : chain(f, Op::kAnd, d3b_lit);
    case DefId::kD4:
      if (k == K::kLiteral) return d4_lit(f);
      return chain(f, k == K::kClause ? Op::kOr : Op::kAnd, d4_lit);
    case DefId::kD5:
      return k == K::kLiteral ? d5_lit(f) : k == K::kClause ? d5_clause(f) : d5_term(f);
  }
  return false;
}

std::vector<Formula> disjuncts(const Formula& f) {
  std::vector<Formula> out;
  flatten(f, Op::kOr, out);
  return out;
}

std::vector<Formula> conjuncts(const Formula& f) {
  std::vector<Formula> out;
  flatten(f, Op::kAnd, out);
  return out;
}

ClauseView4 clause_view(const Formula& f) {
  if (!is_member(f, DefId::kD4, SyntacticKind::kClause))
    throw NotD4Error("not a D4 clause: " + print(f));
  ClauseView4 v;
  for (const Formula& d : disjuncts(f)) {
    if (d.op() == Op::kDia) push_unique(v.diamonds, d.child());
    else if (d.op() == Op::kBox) push_unique(v.boxes, d.child());
    else push_unique(v.gammas, d);
  }
  return v;
}

TermView4 term_view(const Formula& f) {
  if (!is_member(f, DefId::kD4, SyntacticKind::kTerm))
    throw NotD4Error("not a D4 term: " + print(f));
  TermView4 v;
  for (const Formula& c : conjuncts(f)) {
    if (c.op() == Op::kDia) push_unique(v.diamonds, c.child());
    else if (c.op() == Op::kBox) push_unique(v.boxes, c.child());
    else push_unique(v.lits, c);
  }
  return v;
}

namespace {

std::vector<Formula> literals_of(const std::vector<Formula>& props, const std::vector<Formula>& dias,
                                 const std::vector<Formula>& boxes) {
  std::vector<Formula> all = props;
  for (const Formula& d : dias) all.push_back(Formula::dia(d));
  for (const Formula& b : boxes) all.push_back(Formula::box(b));
  return all;
}

}  // namespace

Formula assemble(const ClauseView4& c) {
  auto all = literals_of(c.gammas, c.diamonds, c.boxes);
  return all.empty() ? bottom() : Formula::disj_of(all);
}

Formula assemble(const TermView4& t) {
  auto all = literals_of(t.lits, t.diamonds, t.boxes);
  return all.empty() ? top() : Formula::conj_of(all);
}

Formula beta(const TermView4& t) { return t.boxes.empty() ? top() : Formula::conj_of(t.boxes); }

std::string to_string(DefId d) {
  switch (d) {
    case DefId::kD1: return "d1";
    case DefId::kD2: return "d2";
    case DefId::kD3a: return "d3a";
    case DefId::kD3b: return "d3b";
    case DefId::kD4: return "d4";
    case DefId::kD5: return "d5";
  }
  return "?";
}

std::string to_string(SyntacticKind k) {
  switch (k) {
    case SyntacticKind::kLiteral: return "literal";
    case SyntacticKind::kClause: return "clause";
    case SyntacticKind::kTerm: return "term";
  }
  return "?";
}

}  // namespace kpi
