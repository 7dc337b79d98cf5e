// Batch front-end for the finite set-topology laboratory.  Every subcommand
// reads files or literals, runs deterministic checks and prints a report,
// as JSON when --json is given.  Exit codes: 0 all checks pass, 1 a check
// failed, 2 malformed input or usage.

#include <chrono>
#include <functional>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "settop/acceptance.hpp"
#include "settop/compile.hpp"
#include "settop/hyperspace.hpp"
#include "settop/hyperuniverse.hpp"
#include "settop/inner_model.hpp"
#include "settop/io.hpp"
#include "settop/ordinal.hpp"
#include "settop/report.hpp"
#include "settop/rng.hpp"
#include "settop/structure.hpp"
#include "settop/topology.hpp"
#include "settop/wellorder.hpp"

namespace {

using namespace settop;

struct Options {
  bool json = false;
  bool unsafe_limits = false;
  std::uint64_t seed = 0;
};

int emit(const Report& report, const Options& opt, double seconds) {
  if (opt.json)
    std::cout << report.to_json();
  else
    std::cout << report.to_text(seconds);
  return report.ok() ? 0 : 1;
}

Zero parse_zero(const std::string& text) {
  if (text == "empty") return Zero::empty();
  if (text == "pair") return Zero::atom_pair();
  return Zero(parse_hf(text));
}

std::vector<HfObject> parse_atom_collection(const std::string& text, const Zero& z) {
  if (text == "empty") return {};
  if (text == "zero") return z.value().elements();
  const HfObject as_set = parse_hf(text);
  if (as_set.is_atom()) return {as_set};
  return as_set.elements();
}

std::string verdict_of(const ConditionReport& c) {
  if (c.vacuous) return "vacuous";
  if (c.fail > 0) return "fail";
  if (c.out_of_bound > 0 && c.pass == 0) return "out-of-bound";
  return "pass";
}

std::string counts_of(const ConditionReport& c) {
  return "pass " + std::to_string(c.pass) + ", fail " + std::to_string(c.fail) +
         ", out-of-bound " + std::to_string(c.out_of_bound);
}

void add_condition_checks(Report& report, const std::string& prefix,
                          const std::vector<ConditionReport>& conditions) {
  for (const auto& c : conditions)
    report.add_verdict(prefix + c.name, verdict_of(c), counts_of(c), c.failure_witnesses);
}

KBound parse_k(int k) { return k <= 0 ? KBound::unbounded() : KBound::of(std::uint32_t(k)); }

std::string profile_string(const SeparationProfile& p) {
  std::string s;
  auto flag = [&](const char* name, bool v) {
    if (!s.empty()) s += " ";
    s += name;
    s += v ? "+" : "-";
  };
  flag("t0", p.t0);
  flag("t1", p.t1);
  flag("t2", p.t2);
  flag("reg", p.regular);
  flag("t3", p.t3);
  flag("norm", p.normal);
  flag("t4", p.t4);
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-model laboratory for closed-set topology and positive specification"};
  app.require_subcommand(1);

  Options opt;
  if (const char* env = std::getenv("SETTOP_SEED"))
    opt.seed = std::strtoull(env, nullptr, 10);
  app.add_flag("--json", opt.json, "emit the report as JSON");
  app.add_flag("--unsafe-limits", opt.unsafe_limits, "lift the desk-scale guards");
  app.add_option("--seed", opt.seed, "seed for the sampled checks");

  std::string command_echo;
  for (int i = 1; i < argc; ++i) command_echo += std::string(i > 1 ? " " : "") + argv[i];

  // ---- topo ----
  auto* topo = app.add_subcommand("topo", "finite closed-set topologies");
  auto* topo_enum = topo->add_subcommand("enum", "enumerate all topologies on n points");
  int enum_points = 2;
  bool enum_separation = false;
  topo_enum->add_option("--points", enum_points, "point count (1..5)")->required();
  topo_enum->add_flag("--check-separation", enum_separation, "profile each topology");

  auto* topo_check = topo->add_subcommand("check", "validate a space file");
  std::string check_file;
  int check_k = 0;
  topo_check->add_option("file", check_file, "space JSON file")->required();
  topo_check->add_option("--k", check_k, "compactness bound (0 = unbounded)");

  auto* topo_exp = topo->add_subcommand("exp", "exponential space of a space file");
  std::string exp_file, exp_out, exp_map_file, exp_codomain;
  bool exp_twice = false;
  topo_exp->add_option("file", exp_file, "space JSON file")->required();
  topo_exp->add_option("--out", exp_out, "write the hyperspace JSON here");
  topo_exp->add_flag("--twice", exp_twice, "apply the construction a second time");
  topo_exp->add_option("--map", exp_map_file, "push a point map through the functor");
  topo_exp->add_option("--codomain", exp_codomain, "codomain space for --map");

  // ---- formula ----
  auto* formula = app.add_subcommand("formula", "positive formulas and their compilation");
  auto* f_parse = formula->add_subcommand("parse", "parse and print formulas");
  std::string parse_text;
  f_parse->add_option("text", parse_text, "formula or @file of one per line")->required();

  auto* f_eval = formula->add_subcommand("eval", "evaluate a formula");
  std::string eval_text;
  std::vector<std::string> eval_assign, eval_class;
  f_eval->add_option("text", eval_text, "the formula")->required();
  f_eval->add_option("--assign", eval_assign, "values for x1, x2, ... in order");
  f_eval->add_option("--class", eval_class, "class parameters B1, B2, ... as set literals");

  auto* f_compile = formula->add_subcommand("compile", "compile a formula to a closed term");
  std::string compile_text;
  int compile_arity = 1;
  std::vector<std::string> compile_args, compile_class;
  f_compile->add_option("text", compile_text, "the formula")->required();
  f_compile->add_option("--arity", compile_arity, "number of argument sets")->required();
  f_compile->add_option("--args", compile_args, "argument sets a1, a2, ...");
  f_compile->add_option("--class", compile_class, "class parameters as set literals");

  auto* f_check = formula->add_subcommand("check", "oracle equivalence over a hierarchy");
  int check_size = 7;
  std::string check_universe = "u3";
  f_check->add_option("--size", check_size, "largest AST size (default 7)");
  f_check->add_option("--universe", check_universe, "assignment pool (u3)");

  auto* f_dist = formula->add_subcommand("distributivity", "seeded distributive-law check");
  int dist_count = 1000;
  f_dist->add_option("--count", dist_count, "number of seeded instances");

  // ---- hf ----
  auto* hf = app.add_subcommand("hf", "hereditarily finite sets");
  auto* hf_canon = hf->add_subcommand("canon", "canonical form of a literal");
  std::string canon_text;
  hf_canon->add_option("text", canon_text, "an hf literal")->required();

  auto* hf_zero = hf->add_subcommand("zero", "test the zero condition");
  std::string zero_text;
  hf_zero->add_option("text", zero_text, "an hf literal")->required();

  auto* hf_ordinals = hf->add_subcommand("ordinals", "enumerate zero-ordinals");
  std::string ord_zero = "empty";
  int ord_limit = 4;
  hf_ordinals->add_option("--zero", ord_zero, "empty, pair, or an hf literal");
  hf_ordinals->add_option("--limit", ord_limit, "how many (1..8)");

  auto* hf_trcl = hf->add_subcommand("trcl", "transitive closure");
  std::string trcl_zero = "empty", trcl_text;
  hf_trcl->add_option("--zero", trcl_zero, "empty, pair, or an hf literal");
  hf_trcl->add_option("text", trcl_text, "an hf literal")->required();

  auto* hf_pristine = hf->add_subcommand("pristine", "pristineness and well-foundedness");
  std::string pris_zero = "empty", pris_atoms = "empty", pris_text;
  hf_pristine->add_option("--zero", pris_zero, "empty, pair, or an hf literal");
  hf_pristine->add_option("--atoms", pris_atoms, "empty, zero, or a set literal");
  hf_pristine->add_option("text", pris_text, "an hf literal")->required();

  // ---- innermodel ----
  auto* inner = app.add_subcommand("innermodel", "rank-bounded interpretations");
  auto* im_build = inner->add_subcommand("build", "build the pristine universe");
  std::string im_zero = "empty", im_atoms = "empty";
  int im_rank = 3;
  bool im_audit = false;
  int im_depth = 6;
  im_build->add_option("--zero", im_zero, "empty, pair, or an hf literal");
  im_build->add_option("--atoms", im_atoms, "empty, zero, or a set literal");
  im_build->add_option("--rank", im_rank, "rank bound (1..5)");
  im_build->add_flag("--audit", im_audit, "run the eight interpretation conditions");
  im_build->add_option("--depth", im_depth, "formula size for the digraph audit");

  auto* im_audit_cmd = inner->add_subcommand("audit", "audit a structure file");
  std::string audit_file;
  int audit_depth = 6;
  im_audit_cmd->add_option("file", audit_file, "structure JSON file")->required();
  im_audit_cmd->add_option("--depth", audit_depth, "formula size budget");

  auto* im_search = inner->add_subcommand("hyperuniverse-search", "exhaustive witness search");
  int search_points = 4;
  im_search->add_option("--max-points", search_points, "largest space size (1..4)");

  // ---- wellorder ----
  auto* wo = app.add_subcommand("wellorder", "choice functions and finite order types");
  auto* wo_choice = wo->add_subcommand("from-choice", "well-order a carrier from a choice file");
  std::string choice_file;
  wo_choice->add_option("file", choice_file, "choice JSON file")->required();

  auto* wo_arith = wo->add_subcommand("arith", "order-type arithmetic");
  std::vector<int> arith_sum, arith_prod, arith_sup;
  wo_arith->add_option("--sum", arith_sum, "lengths to add")->expected(2);
  wo_arith->add_option("--prod", arith_prod, "lengths to multiply")->expected(2);
  wo_arith->add_option("--sup", arith_sup, "lengths to take the sup of");

  // ---- suite ----
  auto* suite = app.add_subcommand("suite", "batch verification suites");
  auto* suite_acceptance = suite->add_subcommand("acceptance", "run all nine criteria");
  (void)suite_acceptance;

  // global flags remain usable after any subcommand
  std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* cmd) {
    cmd->fallthrough();
    for (auto* sub : cmd->get_subcommands({})) enable_fallthrough(sub);
  };
  enable_fallthrough(&app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  Report report;
  report.command = command_echo;
  report.seed = opt.seed;
  const auto started = std::chrono::steady_clock::now();

  try {
    if (topo_enum->parsed()) {
      const auto all = enumerate_topologies(enum_points);
      report.add("topology-count", true, std::to_string(all.size()) + " topologies");
      if (enum_separation) {
        std::size_t index = 0;
        for (const auto& t : all) {
          const SeparationProfile p = separation_profile(t);
          report.add("topology-" + std::to_string(index), true, profile_string(p));
          ++index;
        }
      }
    } else if (topo_check->parsed()) {
      const PointTopology t = load_space(read_file(check_file));
      report.add("is-topology", true, std::to_string(t.closed_count()) + " closed sets");
      report.add("separation", true, profile_string(separation_profile(t)));
      report.add("k-compact", is_k_compact(t, parse_k(check_k)),
                 check_k <= 0 ? "unbounded" : "k = " + std::to_string(check_k));
    } else if (topo_exp->parsed()) {
      PointTopology base = load_space(read_file(exp_file));
      if (exp_twice && base.closed_count() > 7)
        throw std::invalid_argument(
            "topo exp --twice: base has more than 7 closed sets; a second exponential "
            "would not stay at desk scale");
      HyperSpace h = exp_space(base, KBound::unbounded());
      report.add("exp", true,
                 std::to_string(h.points.size()) + " hyperpoints, " +
                     std::to_string(h.topology.closed_count()) + " closed sets");
      if (exp_twice) {
        h = exp_space(h.topology, KBound::unbounded());
        report.add("exp-twice", true,
                   std::to_string(h.points.size()) + " hyperpoints, " +
                       std::to_string(h.topology.closed_count()) + " closed sets");
      }
      if (!exp_map_file.empty()) {
        if (exp_codomain.empty())
          throw std::invalid_argument("topo exp --map needs --codomain");
        const PointTopology y = load_space(read_file(exp_codomain));
        const auto table = load_map(read_file(exp_map_file));
        const HyperSpace hy = exp_space(y, KBound::unbounded());
        std::string images;
        for (const auto& a : h.base.closed()) {
          const PointSet img = exp_map(table, h.base, y, a);
          images += a.to_string() + "->" + img.to_string() + " ";
        }
        report.add("exp-map", true, images);
        (void)hy;
      }
      if (!exp_out.empty()) write_file(exp_out, save_hyperspace(h));
    } else if (f_parse->parsed()) {
      std::vector<FormulaPtr> formulas;
      if (!parse_text.empty() && parse_text[0] == '@')
        formulas = load_formulas(read_file(parse_text.substr(1)));
      else
        formulas.push_back(parse_formula(parse_text));
      for (const auto& f : formulas)
        report.add("formula", true,
                   f->to_string() + (f->is_bpf() ? "  [bpf]" : "  [gpf]") + "  size " +
                       std::to_string(f->size()));
    } else if (f_eval->parsed()) {
      const FormulaPtr f = parse_formula(eval_text);
      std::vector<HfObject> assignment;
      for (const auto& a : eval_assign) assignment.push_back(parse_hf(a));
      Universe u;
      for (const auto& c : eval_class) u.classes.push_back(parse_hf(c).elements());
      const bool value = eval_formula(f, assignment, u);
      report.add("eval", true, value ? "true" : "false");
    } else if (f_compile->parsed()) {
      const FormulaPtr f = parse_formula(compile_text);
      const CompiledTemplate tmpl = compile_formula(f, compile_arity);
      if (!compile_args.empty()) {
        std::vector<HfObject> args;
        for (const auto& a : compile_args) args.push_back(parse_hf(a));
        std::vector<std::vector<HfObject>> classes;
        for (const auto& c : compile_class) classes.push_back(parse_hf(c).elements());
        const TermPtr term = tmpl.instantiate(args, classes);
        report.add("term", true, term_to_string(term));
        report.add("value", true, eval_term(term).to_string());
      } else {
        report.add("template", true,
                   "arity " + std::to_string(compile_arity) + ", " + f->to_string());
      }
    } else if (f_check->parsed()) {
      if (check_universe != "u3")
        throw std::invalid_argument("formula check: only the u3 universe is wired up");
      if (check_size > 9 && !opt.unsafe_limits)
        throw std::invalid_argument("formula check: size above 9 needs --unsafe-limits");
      const std::vector<HfObject> pool = hierarchy(3);
      long instances = 0;
      bool all_equal = true;
      std::string witness;
      for (int m = 1; m <= 2 && all_equal; ++m) {
        for (const auto& f : enumerate_positive_formulas(check_size, m, 1)) {
          std::vector<std::vector<HfObject>> class_options;
          if (f->max_param() >= 1) {
            for (std::uint32_t mask = 1; mask < 16; ++mask) {
              if (__builtin_popcount(mask) > 2) continue;
              std::vector<HfObject> param;
              for (std::size_t i = 0; i < 4; ++i)
                if ((mask >> i) & 1u) param.push_back(pool[i]);
              class_options.push_back(std::move(param));
            }
          } else {
            class_options.push_back({});
          }
          const CompiledTemplate tmpl = compile_formula(f, m);
          std::vector<std::size_t> idx(static_cast<std::size_t>(m), 0);
          while (all_equal) {
            std::vector<HfObject> args;
            for (int i = 0; i < m; ++i) args.push_back(pool[idx[static_cast<std::size_t>(i)]]);
            for (const auto& param : class_options) {
              std::vector<std::vector<HfObject>> classes;
              if (!param.empty()) classes.push_back(param);
              ++instances;
              if (!(eval_term(tmpl.instantiate(args, classes)) ==
                    formula_graph_brute_force(f, m, args, classes))) {
                all_equal = false;
                witness = f->to_string();
                break;
              }
            }
            int pos = m - 1;
            while (pos >= 0) {
              if (++idx[static_cast<std::size_t>(pos)] < pool.size()) break;
              idx[static_cast<std::size_t>(pos)] = 0;
              --pos;
            }
            if (pos < 0) break;
          }
          if (!all_equal) break;
        }
      }
      report.add("oracle-equivalence", all_equal,
                 std::to_string(instances) + " instances at size " + std::to_string(check_size),
                 all_equal ? std::vector<std::string>{} : std::vector<std::string>{witness});
    } else if (f_dist->parsed()) {
      const std::vector<HfObject> pool = hierarchy(3);
      Rng rng(opt.seed ^ 0xd15ULL);
      bool all = true;
      for (int trial = 0; trial < dist_count && all; ++trial) {
        std::vector<std::vector<HfObject>> families(1 + rng.below(3));
        for (auto& fam : families) {
          const std::size_t size = 1 + rng.below(3);
          for (std::size_t i = 0; i < size; ++i) fam.push_back(pool[rng.below(pool.size())]);
        }
        all = check_distributivity(families);
      }
      report.add("distributivity", all, std::to_string(dist_count) + " seeded instances");
    } else if (hf_canon->parsed()) {
      report.add("canonical", true, parse_hf(canon_text).to_string());
    } else if (hf_zero->parsed()) {
      report.add("zero", is_zero(parse_hf(zero_text)));
    } else if (hf_ordinals->parsed()) {
      const Zero z = parse_zero(ord_zero);
      std::string listing;
      for (const auto& a : enumerate_zero_ordinals(z, ord_limit))
        listing += a.to_string() + " ";
      report.add("ordinals", true, listing);
    } else if (hf_trcl->parsed()) {
      const Zero z = parse_zero(trcl_zero);
      report.add("trcl", true, trcl(z, parse_hf(trcl_text)).to_string());
    } else if (hf_pristine->parsed()) {
      const Zero z = parse_zero(pris_zero);
      const auto b = parse_atom_collection(pris_atoms, z);
      const HfObject a = parse_hf(pris_text);
      report.add("pristine", is_pristine(z, b, a));
      report.add("well-founded", is_wellfounded(z, a));
    } else if (im_build->parsed()) {
      if (im_rank > 4 && !opt.unsafe_limits)
        throw std::invalid_argument("innermodel build: rank 5 needs --unsafe-limits");
      const Zero z = parse_zero(im_zero);
      const auto b = parse_atom_collection(im_atoms, z);
      const InterpretationContext ctx = build_w3(z, b, im_rank);
      report.add("universe-size", true, std::to_string(ctx.phi_dom.size()) + " sets");
      if (im_audit) {
        const auto rep = check_interpretation_conditions(ctx, KBound::unbounded());
        add_condition_checks(report, "condition/", rep.preconditions);
        add_condition_checks(report, "condition/", rep.conditions);
        const auto digraph =
            audit_axioms(structure_of_context(ctx), im_depth, context_horizon(ctx));
        add_condition_checks(report, "axiom/", digraph.checks);
      }
    } else if (im_audit_cmd->parsed()) {
      const MembershipStructure m = load_structure(read_file(audit_file));
      const auto rep = audit_axioms(m, audit_depth);
      add_condition_checks(report, "axiom/", rep.checks);
    } else if (im_search->parsed()) {
      const auto witnesses = search_hyperuniverses(search_points);
      report.add("witness-count", true, std::to_string(witnesses.size()));
      for (const auto& w : witnesses) report.add("witness", true, w.to_string());
    } else if (wo_choice->parsed()) {
      const ChoiceFunction f = load_choice(read_file(choice_file));
      ApproximationChain chain;
      const FiniteOrder order = wellorder_from_choice(f, &chain);
      std::string ranking;
      for (int x : order.ranking) ranking += std::to_string(x) + " ";
      report.add("order", true, ranking);
      std::string chain_text;
      for (const auto& s : chain.sets) chain_text += s.to_string() + " ";
      report.add("chain", true, chain_text);
    } else if (wo_arith->parsed()) {
      if (arith_sum.size() == 2)
        report.add("sum", true,
                   std::to_string(order_sum(FiniteOrder::identity(arith_sum[0]),
                                            FiniteOrder::identity(arith_sum[1]))
                                      .size()));
      if (arith_prod.size() == 2)
        report.add("product", true,
                   std::to_string(order_product(FiniteOrder::identity(arith_prod[0]),
                                                FiniteOrder::identity(arith_prod[1]))
                                      .size()));
      if (!arith_sup.empty()) {
        std::vector<FiniteOrder> orders;
        for (int n : arith_sup) orders.push_back(FiniteOrder::identity(n));
        report.add("sup", true, std::to_string(order_sup(orders).size()));
      }
      if (report.checks.empty())
        throw std::invalid_argument("wellorder arith: nothing to compute");
    } else if (suite_acceptance->parsed()) {
      for (const auto& r : settop::acceptance::run_all(opt.seed))
        report.add("criterion-" + std::to_string(r.id) + "/" + r.name, r.pass, r.detail);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return emit(report, opt, seconds);
}
