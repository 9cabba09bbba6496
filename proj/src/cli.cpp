#include "kpi/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "kpi/decision.hpp"
#include "kpi/dnf.hpp"
#include "kpi/families.hpp"
#include "kpi/formula.hpp"
#include "kpi/grammar.hpp"
#include "kpi/pigen.hpp"
#include "kpi/pirec.hpp"
#include "kpi/semantics.hpp"

namespace kpi {

namespace {

using nlohmann::json;

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path, std::istream& in) {
  if (path == "-") return {std::istreambuf_iterator<char>(in), {}};
  std::ifstream f(path);
  if (!f) throw InputError("cannot read `" + path + "`");
  return {std::istreambuf_iterator<char>(f), {}};
}

// Inline expressions first, then one formula per file.
struct Inputs {
  std::vector<std::string> exprs;
  std::vector<std::string> files;

  void attach(CLI::App* app) {
    app->add_option("-e,--expr", exprs, "formula text");
    app->add_option("files", files, "files holding one formula each (`-` for stdin)");
  }

  std::vector<Formula> load(std::istream& in) const {
    std::vector<Formula> out;
    for (const auto& e : exprs) out.push_back(parse(e));
    for (const auto& f : files) out.push_back(parse(slurp(f, in)));
    return out;
  }

  Formula one(std::istream& in) const {
    auto fs = load(in);
    if (fs.size() != 1) throw InputError("expected exactly one formula, got " + std::to_string(fs.size()));
    return fs[0];
  }
};

void print_list(std::ostream& out, const std::vector<Formula>& fs, bool as_json) {
  if (as_json) {
    json arr = json::array();
    for (const auto& f : fs) arr.push_back(print(f));
    out << arr.dump() << "\n";
    return;
  }
  for (const auto& f : fs) out << print(f) << "\n";
}

int verdict(std::ostream& out, bool yes, const char* pos = "yes", const char* neg = "no") {
  out << (yes ? pos : neg) << "\n";
  return yes ? 0 : 1;
}

void print_report(std::ostream& out, const PiReport& r, bool trace, bool as_json) {
  if (as_json) {
    json j{{"prime", r.prime}, {"step", r.step}, {"reason", r.reason}};
    if (r.witness) {
      json w = json::array();
      for (const auto& f : *r.witness) w.push_back(print(f));
      j["witness"] = w;
    }
    out << j.dump() << "\n";
    return;
  }
  out << (r.prime ? "yes" : "no") << "\n";
  if (!trace) return;
  if (r.prime) out << "decided: all steps passed (" << r.reason << ")\n";
  else out << "decided: step " << r.step << " (" << r.reason << ")\n";
  if (r.witness) {
    out << "witness:";
    for (const auto& f : *r.witness) out << " {" << print(f) << "}";
    out << "\n";
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Prime implicates and implicants for the modal logic K", "kpi"};
  app.require_subcommand(1);

  Inputs sat_in, ent_in, eval_in, nnf_in, dnf_in, cnf_in, gen_in, imp_in, cls_in;
  bool as_json = false, iter = false, simplify = false, trace = false;
  std::string model_path, world = "w0", clause_text, formula_text, term_text;
  std::string def = "d4", kind = "clause", family;
  int n = 1, k = 1, vars = 2, depth = 2, length = 9, cap = 4;
  std::uint64_t seed = 0;
  std::string qbf_file;

  auto* c_sat = app.add_subcommand("sat", "satisfiability");
  sat_in.attach(c_sat);
  auto* c_ent = app.add_subcommand("entail", "does the first formula entail the second");
  ent_in.attach(c_ent);
  auto* c_eval = app.add_subcommand("eval", "truth at a world of a model");
  eval_in.attach(c_eval);
  c_eval->add_option("-m,--model", model_path, "model file")->required();
  c_eval->add_option("-w,--world", world, "world identifier");
  auto* c_nnf = app.add_subcommand("nnf", "negation normal form");
  nnf_in.attach(c_nnf);
  auto* c_dnf = app.add_subcommand("dnf4", "satisfiable D4 terms, one per line");
  dnf_in.attach(c_dnf);
  c_dnf->add_flag("--json", as_json);
  auto* c_cnf = app.add_subcommand("cnf4", "D4 clauses, one per line");
  cnf_in.attach(c_cnf);
  c_cnf->add_flag("--json", as_json);
  auto* c_gen = app.add_subcommand("genpi", "prime implicates");
  gen_in.attach(c_gen);
  c_gen->add_flag("--json", as_json, "JSON array of clause strings");
  c_gen->add_flag("--iter", iter, "stream clauses as they are found");
  c_gen->add_flag("--simplify", simplify, "drop repeated disjuncts when printing");
  auto* c_imp = app.add_subcommand("implicants", "prime implicants");
  imp_in.attach(c_imp);
  c_imp->add_flag("--json", as_json);
  auto* c_tpi = app.add_subcommand("testpi", "is the clause a prime implicate");
  c_tpi->add_option("--clause", clause_text)->required();
  c_tpi->add_option("--formula", formula_text)->required();
  c_tpi->add_flag("--trace", trace, "report the deciding step");
  c_tpi->add_flag("--json", as_json);
  auto* c_tim = app.add_subcommand("testimplicant", "is the term a prime implicant");
  c_tim->add_option("--term", term_text)->required();
  c_tim->add_option("--formula", formula_text)->required();
  c_tim->add_flag("--trace", trace, "report the deciding step");
  c_tim->add_flag("--json", as_json);
  auto* c_cls = app.add_subcommand("classify", "grammar membership");
  cls_in.attach(c_cls);
  c_cls->add_option("--def", def)->check(CLI::IsMember({"d1", "d2", "d3a", "d3b", "d4", "d5"}));
  c_cls->add_option("--kind", kind)->check(CLI::IsMember({"literal", "clause", "term"}));
  auto* c_fam = app.add_subcommand("gen", "witness families and encodings");
  c_fam->add_option("--family", family)
      ->required()
      ->check(CLI::IsMember({"thm18", "thm19", "thm21", "thm11", "random", "qbf"}));
  c_fam->add_option("--n", n);
  c_fam->add_option("--k", k);
  c_fam->add_option("--seed", seed);
  c_fam->add_option("--vars", vars);
  c_fam->add_option("--depth", depth);
  c_fam->add_option("--length", length);
  c_fam->add_option("--cap", cap);
  c_fam->add_option("--file", qbf_file, "QBF file for --family qbf");
  c_fam->add_flag("--json", as_json);

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "kpi: " << e.what() << "\n";
    return 2;
  }

  try {
    if (c_sat->parsed()) return verdict(out, sat(sat_in.one(in)), "sat", "unsat");
    if (c_ent->parsed()) {
      auto fs = ent_in.load(in);
      if (fs.size() != 2) throw InputError("entail needs exactly two formulas");
      return verdict(out, entails(fs[0], fs[1]));
    }
    if (c_eval->parsed()) {
      KripkeModel m = KripkeModel::parse(slurp(model_path, in));
      return verdict(out, eval(m, world, eval_in.one(in)), "true", "false");
    }
    if (c_nnf->parsed()) {
      out << print(nnf(nnf_in.one(in))) << "\n";
      return 0;
    }
    if (c_dnf->parsed()) {
      std::vector<Formula> terms;
      for (const auto& t : dnf4(dnf_in.one(in))) terms.push_back(assemble(t));
      print_list(out, terms, as_json);
      return 0;
    }
    if (c_cnf->parsed()) {
      print_list(out, cnf4(cnf_in.one(in)), as_json);
      return 0;
    }
    if (c_gen->parsed()) {
      Formula f = gen_in.one(in);
      auto show = [&](const Formula& c) { return simplify ? collapse_duplicate_disjuncts(c) : c; };
      if (iter && !as_json) {
        PiGenerator g(f);
        while (auto c = g.next()) out << print(show(*c)) << std::endl;
        return 0;
      }
      std::vector<Formula> pis;
      for (const auto& c : gen_pi(f, iter ? GenMode::kIterative : GenMode::kEager))
        pis.push_back(show(c));
      print_list(out, pis, as_json);
      return 0;
    }
    if (c_imp->parsed()) {
      print_list(out, gen_implicants(imp_in.one(in)), as_json);
      return 0;
    }
    if (c_tpi->parsed()) {
      PiReport r = test_pi_report(parse(clause_text), parse(formula_text));
      print_report(out, r, trace, as_json);
      return r.prime ? 0 : 1;
    }
    if (c_tim->parsed()) {
      PiReport r = test_implicant_report(parse(term_text), parse(formula_text));
      print_report(out, r, trace, as_json);
      return r.prime ? 0 : 1;
    }
    if (c_cls->parsed()) {
      static const std::map<std::string, DefId> defs{{"d1", DefId::kD1},   {"d2", DefId::kD2},
                                                     {"d3a", DefId::kD3a}, {"d3b", DefId::kD3b},
                                                     {"d4", DefId::kD4},   {"d5", DefId::kD5}};
      static const std::map<std::string, SyntacticKind> kinds{
          {"literal", SyntacticKind::kLiteral},
          {"clause", SyntacticKind::kClause},
          {"term", SyntacticKind::kTerm}};
      return verdict(out, is_member(cls_in.one(in), defs.at(def), kinds.at(kind)));
    }
    if (c_fam->parsed()) {
      FamilyInstance inst{top(), {}};
      if (family == "qbf") {
        if (qbf_file.empty()) throw InputError("--family qbf needs --file");
        inst.formula = qbf_encode(parse_qbf(slurp(qbf_file, in)));
      } else if (family == "thm18") {
        inst = generate(BoxDisjunctionSpec{n}, cap);
      } else if (family == "thm19") {
        inst = generate(ExponentialClauseSpec{n}, cap);
      } else if (family == "thm21") {
        inst = generate(DiamondDisjunctionSpec{n}, cap);
      } else if (family == "thm11") {
        inst = generate(NonFinitenessSpec{k}, cap);
      } else {
        inst = generate(RandomSpec{vars, depth, length, seed}, cap);
      }
      if (as_json) {
        json d = json::array();
        for (const auto& c : inst.distinguished) d.push_back(print(c));
        out << json{{"formula", print(inst.formula)}, {"distinguished", d}}.dump() << "\n";
      } else {
        out << print(inst.formula) << "\n";
        for (const auto& c : inst.distinguished) out << print(c) << "\n";
      }
      return 0;
    }
  } catch (const ParseError& e) {
    err << "kpi: " << e.what() << "\n";
    return 2;
  } catch (const ReservedNameError& e) {
    err << "kpi: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "kpi: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace kpi
