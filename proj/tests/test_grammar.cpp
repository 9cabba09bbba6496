#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "kpi/decision.hpp"
#include "kpi/grammar.hpp"
#include "support.hpp"

namespace kpi {
namespace {

using testing::P;
constexpr DefId kAll[] = {DefId::kD1, DefId::kD2, DefId::kD3a, DefId::kD3b, DefId::kD4, DefId::kD5};

bool contains_op(const Formula& f, Op op) {
  if (f.op() == op) return true;
  if (f.is_var()) return false;
  if (f.op() == Op::kNeg || f.is_modal()) return contains_op(f.child(), op);
  return contains_op(f.left(), op) || contains_op(f.right(), op);
}

// Generator following the D5 productions: L ::= a | !a | []C | <>T, with
// clauses and terms as n-ary combinations of literals.
class D5Gen {
 public:
  explicit D5Gen(std::uint64_t seed) : rng_(seed) {}

  Formula literal(int depth) {
    int k = pick(depth > 0 ? 3 : 1);
    if (k <= 1) {
      Formula v = Formula::var(std::string(1, static_cast<char>('a' + pick(2))));
      return k == 0 ? v : Formula::neg(v);
    }
    return k == 2 ? Formula::box(clause(depth - 1)) : Formula::dia(term(depth - 1));
  }
  Formula clause(int depth) { return combine(depth, false); }
  Formula term(int depth) { return combine(depth, true); }

 private:
  int pick(int hi) { return std::uniform_int_distribution<int>(0, hi)(rng_); }
  Formula combine(int depth, bool conj) {
    std::vector<Formula> parts;
    for (int i = pick(2); i >= 0; --i) parts.push_back(literal(depth));
    return conj ? Formula::conj_of(parts) : Formula::disj_of(parts);
  }
  std::mt19937_64 rng_;
};

TEST(Membership, BoxOverDisjunction) {
  EXPECT_TRUE(is_member(P("[](a | b)"), DefId::kD1, SyntacticKind::kClause));
  EXPECT_FALSE(is_member(P("[](a | b)"), DefId::kD2, SyntacticKind::kClause));
}

TEST(Membership, DiamondLiterals) {
  EXPECT_TRUE(is_member(P("<>(a & b)"), DefId::kD4, SyntacticKind::kLiteral));
  Formula d = P("<>(a | b)");
  EXPECT_TRUE(is_member(d, DefId::kD3b, SyntacticKind::kLiteral));
  EXPECT_FALSE(is_member(dual_negate(d), DefId::kD3b, SyntacticKind::kLiteral));
}

TEST(Membership, NotNnf) {
  for (DefId d : kAll) EXPECT_FALSE(is_member(P("!<>a"), d, SyntacticKind::kClause)) << to_string(d);
}

TEST(Membership, D4ClausesCannotSplitPropositionally) {
  EXPECT_TRUE(is_member(P("a | <>(b & (c | []d)) | [](a & b)"), DefId::kD4, SyntacticKind::kClause));
  EXPECT_FALSE(is_member(P("a | (b & c)"), DefId::kD4, SyntacticKind::kClause));
  EXPECT_TRUE(is_member(P("a & <>(b | c) & [](a | b)"), DefId::kD4, SyntacticKind::kTerm));
  EXPECT_FALSE(is_member(P("a & (b | c)"), DefId::kD4, SyntacticKind::kTerm));
}

TEST(Membership, D5MembersBelongToWiderDefinitions) {
  D5Gen gen(21);
  for (int i = 0; i < 500; ++i) {
    Formula c = gen.clause(3), t = gen.term(3);
    ASSERT_TRUE(is_member(c, DefId::kD5, SyntacticKind::kClause)) << print(c);
    ASSERT_TRUE(is_member(t, DefId::kD5, SyntacticKind::kTerm)) << print(t);
    for (DefId d : {DefId::kD3a, DefId::kD3b, DefId::kD4}) {
      EXPECT_TRUE(is_member(c, d, SyntacticKind::kClause)) << to_string(d) << " " << print(c);
      EXPECT_TRUE(is_member(t, d, SyntacticKind::kTerm)) << to_string(d) << " " << print(t);
    }
  }
}

// Structural laws over random NNF formulas, tested wherever they are accepted.
TEST(Membership, StructuralLaws) {
  std::mt19937_64 rng(22);
  D5Gen gen(23);
  int accepted = 0;
  for (int i = 0; i < 3000; ++i) {
    Formula f = i % 2 ? nnf(random_formula(2, 2, 10, rng)) : (i % 4 ? gen.clause(2) : gen.term(2));
    for (DefId d : {DefId::kD1, DefId::kD2})
      if (is_member(f, d, SyntacticKind::kClause)) {
        ++accepted;
        EXPECT_FALSE(contains_op(f, Op::kAnd)) << print(f);
      }
    for (DefId d : {DefId::kD2, DefId::kD4, DefId::kD5})
      if (is_member(f, d, SyntacticKind::kClause)) {
        for (const Formula& l : disjuncts(f))
          EXPECT_TRUE(is_member(l, d, SyntacticKind::kLiteral)) << to_string(d) << " " << print(f);
      }
    for (DefId d : {DefId::kD1, DefId::kD2, DefId::kD3a, DefId::kD4, DefId::kD5}) {
      const std::pair<SyntacticKind, SyntacticKind> duals[] = {
          {SyntacticKind::kLiteral, SyntacticKind::kLiteral},
          {SyntacticKind::kClause, SyntacticKind::kTerm},
          {SyntacticKind::kTerm, SyntacticKind::kClause}};
      for (auto [k, dk] : duals)
        if (is_member(f, d, k)) {
          EXPECT_TRUE(is_member(dual_negate(f), d, dk)) << to_string(d) << " " << print(f);
        }
    }
  }
  EXPECT_GT(accepted, 100);
}

TEST(Views, TermBuckets) {
  TermView4 t = term_view(P("a & <>b & <>(c | d) & []e & []f"));
  EXPECT_EQ(t.lits, (std::vector<Formula>{P("a")}));
  EXPECT_EQ(t.diamonds, (std::vector<Formula>{P("b"), P("c | d")}));
  EXPECT_EQ(t.boxes, (std::vector<Formula>{P("e"), P("f")}));
  EXPECT_EQ(beta(t), P("e & f"));
}

TEST(Views, ClauseBuckets) {
  ClauseView4 c = clause_view(P(testing::kMixedClause));
  EXPECT_EQ(c.gammas, (std::vector<Formula>{P("!b")}));
  EXPECT_EQ(c.diamonds, (std::vector<Formula>{P("a & <>c"), P("d & []a")}));
  EXPECT_EQ(c.boxes, (std::vector<Formula>{P("c | d")}));
  ClauseView4 single = clause_view(P("a"));
  EXPECT_EQ(single.gammas.size(), 1U);
  EXPECT_EQ(single.size(), 1U);
}

TEST(Views, DuplicatesCollapse) {
  EXPECT_EQ(clause_view(P("a | a | <>b | <>b")).size(), 2U);
  EXPECT_EQ(beta(term_view(P("a"))), top());
}

TEST(Views, RejectsNonD4) {
  EXPECT_THROW(clause_view(P("a | (b & c)")), NotD4Error);
  EXPECT_THROW(term_view(P("a & (b | c)")), NotD4Error);
}

TEST(Views, RoundTrip) {
  std::mt19937_64 rng(24);
  for (int i = 0; i < 300; ++i) {
    Formula c = testing::random_clause(rng, 3, 6, 4);
    Formula back = assemble(clause_view(c));
    EXPECT_EQ(clause_view(back), clause_view(c));
    EXPECT_TRUE(equivalent(back, c)) << print(c);
    Formula t = dual_negate(c);
    Formula tback = assemble(term_view(t));
    EXPECT_EQ(term_view(tback), term_view(t));
    EXPECT_TRUE(equivalent(tback, t)) << print(t);
  }
}

}  // namespace
}  // namespace kpi
