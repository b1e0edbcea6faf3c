#include "latpoly/cli.hpp"

#include <iomanip>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "latpoly/errors.hpp"
#include "latpoly/io.hpp"

namespace latpoly {

namespace {

std::vector<Elem> s_choice_elems(const FunctionTable& f, const std::string& choice) {
  if (choice == "range") {
    const Interval h = range_hull(f);
    return interval_elems(f.lattice(), h.lo, h.hi);
  }
  if (choice == "all") {
    std::vector<Elem> out(static_cast<size_t>(f.lattice().size()));
    for (int i = 0; i < f.lattice().size(); ++i) out[static_cast<size_t>(i)] = i;
    return out;
  }
  throw ValidationError("--s must be 'range' or 'all', got '" + choice + "'");
}

PropertyReport dispatch_check(const FunctionTable& f, const std::string& prop,
                              const std::optional<std::string>& domain_text,
                              const std::optional<std::string>& s_text) {
  const auto need_no_domain = [&] {
    if (domain_text)
      throw ValidationError("property '" + prop + "' does not take --domain");
  };
  const auto need_no_s = [&] {
    if (s_text) throw ValidationError("property '" + prop + "' does not take --s");
  };
  const auto s_elems = [&] { return s_choice_elems(f, s_text.value_or("range")); };
  const auto dom = [&](Domain dflt) {
    return domain_text ? domain_from_name(*domain_text) : dflt;
  };

  if (prop == "nondecreasing") {
    need_no_domain();
    need_no_s();
    return check_nondecreasing(f);
  }
  if (prop == "idempotent") {
    need_no_domain();
    return check_idempotent(f, s_elems());
  }
  if (prop == "min-homogeneous") return check_min_homogeneous(f, s_elems(), dom(Domain::Full));
  if (prop == "max-homogeneous") return check_max_homogeneous(f, s_elems(), dom(Domain::Full));
  if (prop == "horizontally-minitive")
    return check_horizontally_minitive(f, s_elems(), dom(Domain::Full));
  if (prop == "horizontally-maxitive")
    return check_horizontally_maxitive(f, s_elems(), dom(Domain::Full));
  if (prop == "median-decomposable") {
    need_no_s();
    return check_median_decomposable(f, dom(Domain::Full));
  }
  if (prop == "strongly-idempotent") {
    need_no_domain();
    need_no_s();
    return check_strongly_idempotent(f);
  }
  if (prop == "convex-range") {
    need_no_domain();
    need_no_s();
    return check_convex_range(f);
  }
  if (prop == "componentwise-convex-range") {
    need_no_domain();
    need_no_s();
    return check_componentwise_convex_range(f);
  }
  if (prop == "comonotonic-minitive") {
    need_no_domain();
    need_no_s();
    return check_comonotonic_minitive(f);
  }
  if (prop == "comonotonic-maxitive") {
    need_no_domain();
    need_no_s();
    return check_comonotonic_maxitive(f);
  }
  if (prop == "conservative") {
    need_no_s();
    return check_conservative(f, dom(Domain::Full));
  }
  throw ValidationError(
      "unknown property '" + prop +
      "' (known: nondecreasing, idempotent, min-homogeneous, max-homogeneous, "
      "horizontally-minitive, horizontally-maxitive, median-decomposable, "
      "strongly-idempotent, convex-range, componentwise-convex-range, "
      "comonotonic-minitive, comonotonic-maxitive, conservative)");
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact lattice polynomial toolkit"};
  app.name("latpoly");
  app.require_subcommand(1);

  // eval
  auto* eval_cmd = app.add_subcommand("eval", "evaluate a coefficient or measure file at a tuple");
  std::string eval_func;
  std::string eval_at;
  std::string eval_form = "dnf";
  eval_cmd->add_option("--func", eval_func, "coefficient/measure file")->required();
  eval_cmd->add_option("--at", eval_at, "tuple, e.g. \"(0,1)\"")->required();
  eval_cmd->add_option("--form", eval_form, "dnf|cnf|simplex|sugeno (default dnf)");

  // canon
  auto* canon_cmd = app.add_subcommand("canon", "canonical coefficients of a function table");
  std::string canon_table;
  canon_cmd->add_option("--table", canon_table, "function table file")->required();

  // check
  auto* check_cmd = app.add_subcommand("check", "check one property of a function table");
  std::string check_table;
  std::string check_prop;
  std::string check_domain;
  std::string check_s;
  check_cmd->add_option("--table", check_table, "function table file")->required();
  check_cmd->add_option("--prop", check_prop, "property name")->required();
  auto* check_domain_opt =
      check_cmd->add_option("--domain", check_domain, "full|weak|boolean|zero-two-only");
  auto* check_s_opt = check_cmd->add_option("--s", check_s, "range|all (default range)");

  // decide
  auto* decide_cmd = app.add_subcommand("decide", "class membership of a function table");
  std::string decide_table;
  std::string decide_class = "poly";
  decide_cmd->add_option("--table", decide_table, "function table file")->required();
  decide_cmd->add_option("--class", decide_class, "poly|sugeno|term (default poly)");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "sweep a theorem over tables");
  std::string verify_id;
  std::string verify_lattice;
  int verify_arity = 1;
  std::string verify_mode = "exhaustive";
  std::uint64_t verify_samples = 0;
  std::uint64_t verify_seed = 0;
  bool verify_expect = false;
  verify_cmd->add_option("--theorem", verify_id, "theorem identifier")->required();
  verify_cmd->add_option("--lattice", verify_lattice, "lattice file")->required();
  verify_cmd->add_option("--arity", verify_arity, "function arity")->required();
  verify_cmd->add_option("--mode", verify_mode,
                         "exhaustive|exhaustive-monotone|random|random-monotone|random-any");
  verify_cmd->add_option("--samples", verify_samples, "sample count for random modes");
  auto* verify_seed_opt = verify_cmd->add_option("--seed", verify_seed, "random seed");
  verify_cmd->add_flag("--expect-counterexample", verify_expect,
                       "pass only when a discrepancy is found");

  // counterexample
  auto* cex_cmd = app.add_subcommand("counterexample", "replay a registry entry");
  std::string cex_name;
  cex_cmd->add_option("name", cex_name, "registry entry name")->required();

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("latpoly");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (app.got_subcommand(eval_cmd)) {
      const CoefFile cf = load_coef_file(eval_func);
      const Tuple x = parse_tuple(*cf.lattice, cf.coef.arity, eval_at);
      Elem result = 0;
      if (eval_form == "dnf") {
        result = eval_dnf(*cf.lattice, cf.coef, x);
      } else if (eval_form == "cnf") {
        result = eval_cnf(*cf.lattice, cf.coef, x);
      } else if (eval_form == "simplex") {
        result = eval_simplex(*cf.lattice, cf.coef, x);
      } else if (eval_form == "sugeno") {
        result = sugeno_eval(FuzzyMeasure(cf.lattice, cf.coef), x);
      } else {
        throw ValidationError("--form must be dnf, cnf, simplex, or sugeno, got '" + eval_form +
                              "'");
      }
      out << cf.lattice->name(result) << "\n";
      return 0;
    }

    if (app.got_subcommand(canon_cmd)) {
      const FunctionTable f = load_table_file(canon_table);
      write_canon_report(out, f);
      return 0;
    }

    if (app.got_subcommand(check_cmd)) {
      const FunctionTable f = load_table_file(check_table);
      const std::optional<std::string> domain_text =
          check_domain_opt->count() ? std::optional<std::string>(check_domain) : std::nullopt;
      const std::optional<std::string> s_text =
          check_s_opt->count() ? std::optional<std::string>(check_s) : std::nullopt;
      const PropertyReport rep = dispatch_check(f, check_prop, domain_text, s_text);
      write_property_report(out, f.lattice(), rep);
      return rep.holds ? 0 : 1;
    }

    if (app.got_subcommand(decide_cmd)) {
      const FunctionTable f = load_table_file(decide_table);
      Decision d;
      std::string class_name;
      if (decide_class == "poly") {
        d = decide_polynomial(f);
        class_name = "polynomial";
      } else if (decide_class == "sugeno") {
        d = decide_sugeno(f);
        class_name = "sugeno-integral";
      } else if (decide_class == "term") {
        d = decide_term(f);
        class_name = "term-function";
      } else {
        throw ValidationError("--class must be poly, sugeno, or term, got '" + decide_class +
                              "'");
      }
      write_decision_report(out, f.lattice(), class_name, d);
      return d.verdict ? 0 : 1;
    }

    if (app.got_subcommand(verify_cmd)) {
      SweepPlan plan;
      plan.lattice = load_lattice_file(verify_lattice);
      plan.arity = verify_arity;
      plan.mode = sweep_mode_from_name(verify_mode);
      plan.sample_count = verify_samples;
      if (verify_seed_opt->count()) plan.seed = verify_seed;
      plan.expect_counterexample = verify_expect;
      plan.cap = table_cap();
      const TheoremRun run = verify_theorem(verify_id, plan);
      write_theorem_report(out, run);
      err << "elapsed-seconds: " << std::fixed << std::setprecision(3) << run.elapsed_seconds
          << "\n";
      return run.passed() ? 0 : 1;
    }

    if (app.got_subcommand(cex_cmd)) {
      const RegistryEntry& entry = registry_entry(cex_name);
      const std::vector<PropertyReport> reports = replay(entry);
      bool matches = true;
      for (size_t i = 0; i < reports.size(); ++i)
        matches = matches && reports[i].holds == entry.profile[i].expected;
      write_registry_report(out, entry, reports, matches);
      return matches ? 0 : 1;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  err << "error: no command selected\n";
  return 2;
}

} // namespace latpoly
