// Acceptance run: one PASS/FAIL line per criterion; exit status 1 if any
// criterion fails. Optional arguments select criteria by number.
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "kpi/cli.hpp"
#include "kpi/decision.hpp"
#include "kpi/families.hpp"
#include "kpi/pigen.hpp"
#include "kpi/pirec.hpp"
#include "laws.hpp"
#include "support.hpp"

namespace {

using namespace kpi;
using testing::P;

struct Check {
  std::ostringstream why;
  bool ok = true;

  Check& expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      why << what << "; ";
    }
    return *this;
  }
};

bool pairwise_inequivalent(const std::vector<Formula>& fs) {
  for (std::size_t i = 0; i < fs.size(); ++i)
    for (std::size_t j = i + 1; j < fs.size(); ++j)
      if (equivalent(fs[i], fs[j])) return false;
  return true;
}

std::string cli(const std::vector<std::string>& args, int* code) {
  std::istringstream in;
  std::ostringstream out, err;
  *code = run(args, in, out, err);
  return out.str();
}

void generation_example(Check& c) {
  auto pis = gen_pi(P(testing::kTwoTermFormula));
  const std::vector<Formula> expect{P("a | a"), P("<>(b & c) | [](e & f)"), P("<>(b & c) | <>(b & e & f)"),
                                    P("<>(b & c) | <>((c | d) & e & f)")};
  c.expect(pis.size() == 4, "expected 4 clauses, got " + std::to_string(pis.size()));
  c.expect(pairwise_inequivalent(pis), "outputs not pairwise inequivalent");
  std::set<std::size_t> matched;
  for (const auto& p : pis) {
    std::size_t hit = expect.size();
    for (std::size_t i = 0; i < expect.size(); ++i)
      if (entails(p, expect[i]) && entails(expect[i], p)) hit = i;
    c.expect(hit < expect.size(), "unexpected clause " + print(p));
    matched.insert(hit);
  }
  c.expect(matched.size() == 4, "not every expected clause matched");
}

void recognition_example(Check& c) {
  const std::string phi = testing::kRecognitionFormula;
  struct Case {
    const char* clause;
    int code;
    const char* decided;
  } cases[] = {
      {"b", 1, "decided: step 1"},
      {"[]b | [](e | f)", 1, "decided: step 5"},
      {"a | <>c", 1, "decided: step 6"},
      {"<>(a & b)", 1, "decided: step 6"},
      {"<>(a & b & c) | <>(a & b & c & f) | [](e | f)", 0, "decided: all steps passed"},
  };
  int i = 1;
  for (const auto& k : cases) {
    int code = -1;
    std::string out = cli({"testpi", "--trace", "--clause", k.clause, "--formula", phi}, &code);
    std::string tag = "lambda" + std::to_string(i++);
    c.expect(code == k.code, tag + " exit code " + std::to_string(code));
    c.expect(out.rfind(k.code == 0 ? "yes\n" : "no\n", 0) == 0, tag + " verdict line");
    c.expect(out.find(k.decided) != std::string::npos, tag + " trace: " + out);
  }
}

void diamond_examples(Check& c) {
  DiaPiResult r30 = test_dia_pi(P("a & b"), P(testing::kRecognitionFormula));
  c.expect(!r30.prime, "first formula: expected no");
  c.expect(r30.witness.has_value(), "first formula: no witness reported");
  if (r30.witness)
    c.expect(testing::independently_refutes(*r30.witness, P("a & b"), P(testing::kRecognitionFormula)),
             "witness fails conditions (a)+(b)");
  DiaPiResult r31 = test_dia_pi(P("a & b & c"), P(testing::kStrengthenedFormula));
  c.expect(r31.prime, "second formula: expected yes");
}

void entailment_example(Check& c) {
  Formula lam = P(testing::kMixedClause);
  const std::pair<const char*, bool> cases[] = {
      {"!b | !d | <>(a | d) | []c", true},
      {"a | <>c", false},
      {"a | !b | <>(a & c)", false},
      {"!b | <>(a | []a) | []c", false},
  };
  for (const auto& [rhs, expect] : cases) {
    Formula r = P(rhs);
    c.expect(entails(lam, r) == expect, std::string("entails on ") + rhs);
    c.expect(clause_entails_fast(clause_view(lam), clause_view(r)) == expect, std::string("fast path on ") + rhs);
  }
}

void nnf_metrics(Check& c) {
  c.expect(metrics(P("a & !b")).length == 4, "|a & !b|");
  c.expect(metrics(P("<>(a | b) & []!a")).length == 8, "|<>(a | b) & []!a|");
  c.expect(metrics(P("<>(a & []a) | a")).depth == 2, "depth");
  c.expect(nnf(P("![](a & <>(!b | c))")) == P("<>(!a | [](b & !c))"), "nnf output");
}

void box_conjunction_fixture(Check& c) {
  auto pis = gen_pi(P("[](a & b)"));
  c.expect(pis.size() == 1 && equivalent(pis[0], P("[](a & b)")), "gen_pi([](a & b))");
  for (int k = 1; k <= 2; ++k) {
    FamilyInstance f = generate(NonFinitenessSpec{k});
    const Formula& lam = f.distinguished.at(0);
    c.expect(entails(P("[](a & b)"), lam), "k=" + std::to_string(k) + " not entailed");
    c.expect(!test_pi(lam, P("[](a & b)")), "k=" + std::to_string(k) + " recognized as prime");
  }
}

void box_disjunction_family(Check& c) {
  for (int n = 1; n <= 3; ++n) {
    FamilyInstance f = generate(BoxDisjunctionSpec{n});
    auto pis = gen_pi(f.formula);
    std::string tag = "n=" + std::to_string(n);
    c.expect(pis.size() == 1, tag + " clause count " + std::to_string(pis.size()));
    if (pis.size() != 1) continue;
    ClauseView4 v = clause_view(pis[0]);
    c.expect(v.boxes.size() == (std::size_t{1} << n) && v.size() == v.boxes.size(), tag + " box disjuncts");
    c.expect(equivalent(pis[0], f.distinguished.at(0)), tag + " not equivalent to distinguished clause");
  }
}

void diamond_disjunction_family(Check& c) {
  FamilyInstance f = generate(DiamondDisjunctionSpec{2});
  auto pis = gen_pi(f.formula);
  std::vector<Formula> dia;
  for (const auto& p : pis) {
    ClauseView4 v = clause_view(p);
    if (v.gammas.empty() && v.boxes.empty() && !v.diamonds.empty()) dia.push_back(p);
  }
  c.expect(dia.size() == 16, "diamond-disjunction clauses: " + std::to_string(dia.size()));
  c.expect(pairwise_inequivalent(dia), "not pairwise inequivalent");
  for (const auto& d : dia) {
    c.expect(testing::equivalent_to_some(d, f.distinguished), "outside distinguished set: " + print(d));
    c.expect(test_pi(d, f.formula), "rejected by test_pi: " + print(d));
  }
}

void oracle(Check& c, std::ostream& log) {
  long count = 0;
  int ex = testing::oracle_exhaustive_disagreements(log, &count);
  int rnd = testing::oracle_random_disagreements(10000, 9001, log);
  c.expect(count > 0, "exhaustive enumeration empty");
  c.expect(ex == 0, std::to_string(ex) + " exhaustive disagreements over " + std::to_string(count));
  c.expect(rnd == 0, std::to_string(rnd) + " random disagreements");
  log << "  exhaustive formulas: " << count << "\n";
}

void property_suite(Check& c, std::ostream& log) {
  auto v = testing::pi_property_violations(500, 200, 9002, log);
  c.expect(v.equivalence == 0, "equivalence " + std::to_string(v.equivalence));
  c.expect(v.duality == 0, "duality " + std::to_string(v.duality));
  c.expect(v.distribution == 0, "distribution " + std::to_string(v.distribution));
  c.expect(v.covering == 0, "covering " + std::to_string(v.covering));
  c.expect(v.agreement == 0, "agreement " + std::to_string(v.agreement));
  log << "  property checks: " << v.checks << "\n";
}

void kernel_laws(Check& c, std::ostream& log) {
  int t1 = testing::kernel_law_violations(2000, 9003, log);
  int fp = testing::fast_path_violations(2000, 9004, log);
  c.expect(t1 == 0, "kernel law violations " + std::to_string(t1));
  c.expect(fp == 0, "fast path violations " + std::to_string(fp));
}

void reduction_links(Check& c, std::ostream& log) {
  int q = testing::qbf_link_violations(200, 9005, log);
  int x = testing::xc_link_violations(log);
  c.expect(q == 0, "qbf link violations " + std::to_string(q));
  c.expect(x == 0, "exact cover link violations " + std::to_string(x));
}

struct Criterion {
  int id;
  const char* name;
  double limit_s;  // 0 = no runtime bound
  std::function<void(Check&, std::ostream&)> body;
};

}  // namespace

int main(int argc, char** argv) {
  auto quiet = [](void (*f)(Check&)) { return [f](Check& c, std::ostream&) { f(c); }; };
  const Criterion criteria[] = {
      {1, "generation golden output", 1, quiet(generation_example)},
      {2, "recognition verdicts and traces", 1, quiet(recognition_example)},
      {3, "diamond recognition and witness", 0, quiet(diamond_examples)},
      {4, "clause entailment verdicts", 0, quiet(entailment_example)},
      {5, "nnf and metrics", 0, quiet(nnf_metrics)},
      {6, "box-of-conjunction fixture", 5, quiet(box_conjunction_fixture)},
      {7, "box-disjunction family n<=3", 10, quiet(box_disjunction_family)},
      {8, "diamond-disjunction family n=2", 60, quiet(diamond_disjunction_family)},
      {9, "sat agrees with model enumeration", 300, oracle},
      {10, "prime implicate property suite", 600, property_suite},
      {11, "entailment kernel laws and fast path", 0, kernel_laws},
      {12, "reduction links", 0, reduction_links},
  };
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));

  int failed = 0;
  for (const auto& cr : criteria) {
    if (!only.empty() && !only.contains(cr.id)) continue;
    Check c;
    std::ostringstream log;
    auto start = std::chrono::steady_clock::now();
    try {
      cr.body(c, log);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (cr.limit_s > 0) {
      std::ostringstream lim;
      lim << "runtime " << secs << "s exceeds " << cr.limit_s << "s";
      c.expect(secs < cr.limit_s, lim.str());
    }
    std::cout << (c.ok ? "PASS" : "FAIL") << " [" << std::setw(2) << cr.id << "] " << cr.name << " ("
              << std::fixed << std::setprecision(2) << secs << "s)";
    if (!c.ok) std::cout << ": " << c.why.str();
    std::cout << "\n" << log.str() << std::flush;
    failed += !c.ok;
  }
  return failed == 0 ? 0 : 1;
}
