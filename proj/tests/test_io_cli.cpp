#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "latpoly/cli.hpp"
#include "latpoly/errors.hpp"
#include "latpoly/io.hpp"
#include "oracles.hpp"

using namespace latpoly;

namespace {

std::string data_path(const std::string& name) {
  return std::string(LATPOLY_DATA_DIR) + "/" + name;
}

struct CliResult {
  int code = 0;
  std::string out;
  std::string err;
};

CliResult cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("lattice files: chains and tables") {
  auto chain = load_lattice_file(data_path("chain3.json"));
  CHECK(chain->is_chain());
  CHECK(chain->size() == 3);

  auto diamond = load_lattice_file(data_path("diamond.json"));
  CHECK_FALSE(diamond->is_chain());
  CHECK(diamond->size() == 4);
  CHECK(diamond->name(1) == "a");
  CHECK(diamond->meet(1, 2) == 0);
  CHECK(diamond->join(1, 2) == 3);

  CHECK_THROWS_AS(load_lattice_file(data_path("missing.json")), ValidationError);
}

TEST_CASE("lattice text parsing and its validation errors") {
  auto L = parse_lattice_text(R"({"kind":"chain","size":4})", "inline");
  CHECK(L->size() == 4);
  CHECK_THROWS_AS(parse_lattice_text("{not json", "inline"), ValidationError);
  CHECK_THROWS_AS(parse_lattice_text(R"({"kind":"ring","size":4})", "inline"), ValidationError);
  CHECK_THROWS_AS(parse_lattice_text(R"({"kind":"chain"})", "inline"), ValidationError);
  CHECK_THROWS_AS(parse_lattice_text(R"({"kind":"chain","size":0})", "inline"), ValidationError);
  // Table lattices run the full law validation on load.
  CHECK_THROWS_AS(parse_lattice_text(R"({"kind":"table","elements":["0","1"],)"
                                     R"("meet":[[0,0],[0,0]],"join":[[0,1],[1,1]]})",
                                     "inline"),
                  ValidationError);
}

TEST_CASE("table files resolve lattice references relative to themselves") {
  const auto f = load_table_file(data_path("med_example.json"));
  CHECK(f.lattice().is_chain());
  CHECK(f.values() == std::vector<Elem>{0, 1, 1, 1, 1, 1, 1, 1, 2});

  // diamond_binary.json names diamond.json by a relative path.
  const auto d = load_table_file(data_path("diamond_binary.json"));
  CHECK_FALSE(d.lattice().is_chain());
  CHECK(d.lattice().size() == 4);
  CHECK(d(Tuple{1, 2}) == 1); // f(a, b) = a
}

TEST_CASE("coefficient files") {
  const auto cf = load_coef_file(data_path("med_alpha.json"));
  CHECK(cf.coef.arity == 2);
  CHECK(cf.coef.values == std::vector<Elem>{0, 1, 1, 2});
  // A table file is no coefficient file: 9 values cannot fill 2^2 slots.
  CHECK_THROWS_AS(load_coef_file(data_path("med_example.json")), ValidationError);
}

TEST_CASE("element and tuple parsing") {
  auto chain = make_chain(3);
  CHECK(parse_elem_name(*chain, "2", "test") == 2);
  CHECK(parse_elem_name(*chain, " 1 ", "test") == 1);
  CHECK_THROWS_AS(parse_elem_name(*chain, "7", "test"), ValidationError);
  CHECK_THROWS_AS(parse_elem_name(*chain, "x", "test"), ValidationError);

  auto diamond = test::make_diamond();
  CHECK(parse_elem_name(*diamond, "a", "test") == 1);
  CHECK(parse_elem_name(*diamond, "1", "test") == 3); // "1" is the top's name
  CHECK_THROWS_AS(parse_elem_name(*diamond, "q", "test"), ValidationError);

  CHECK(parse_tuple(*chain, 2, "(0,2)") == Tuple{0, 2});
  CHECK(parse_tuple(*chain, 2, " ( 0 , 2 ) ") == Tuple{0, 2});
  CHECK(parse_tuple(*diamond, 2, "(a,b)") == Tuple{1, 2});
  CHECK_THROWS_AS(parse_tuple(*chain, 2, "0,2"), ValidationError);
  CHECK_THROWS_AS(parse_tuple(*chain, 2, "(0,1,2)"), ValidationError);
  CHECK_THROWS_AS(parse_tuple(*chain, 2, "(0,7)"), ValidationError);

  CHECK(elems_display(*diamond, {0, 1, 3}) == "[0,a,1]");
  CHECK(elems_display(*chain, {2, 0}) == "[2,0]");
}

TEST_CASE("cli: eval prints the bare element name") {
  const auto dnf = cli({"eval", "--func", data_path("med_alpha.json"), "--at", "(2,0)"});
  CHECK(dnf.code == 0);
  CHECK(dnf.out == "1\n");

  const auto sug = cli({"eval", "--func", data_path("med_alpha.json"), "--form", "sugeno",
                        "--at", "(0,2)"});
  CHECK(sug.code == 0);
  CHECK(sug.out == "1\n");

  const auto simplex = cli({"eval", "--func", data_path("med_alpha.json"), "--form", "simplex",
                            "--at", "(1,2)"});
  CHECK(simplex.code == 0);
  CHECK(simplex.out == "1\n");

  // The same value vector read as conjunctive coefficients is a different
  // function family: at (2,0) the factor (beta({2}) or x2) caps it at 0.
  const auto cnf = cli({"eval", "--func", data_path("med_alpha.json"), "--form", "cnf",
                        "--at", "(2,0)"});
  CHECK(cnf.code == 0);
  CHECK(cnf.out == "0\n");

  const auto bad = cli({"eval", "--func", data_path("med_alpha.json"), "--form", "prefix",
                        "--at", "(0,0)"});
  CHECK(bad.code == 2);
}

TEST_CASE("cli: canon report is byte-stable") {
  const auto r = cli({"canon", "--table", data_path("med_example.json")});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "lattice: chain-3\n"
        "arity: 2\n"
        "values: [0,1,1,1,1,1,1,1,2]\n"
        "polynomial: true\n"
        "alpha: [0,1,1,2]\n"
        "beta: [2,1,1,0]\n"
        "alpha-star: [0,1,1,2]\n"
        "beta-star: [2,1,1,0]\n"
        "unique-dnf: true\n"
        "unique-cnf: true\n");

  // Off chains the starred maps and uniqueness flags have no meaning and
  // stay out of the report.
  const auto d = cli({"canon", "--table", data_path("diamond_binary.json")});
  CHECK(d.code == 0);
  CHECK(d.out ==
        "lattice: table-4\n"
        "arity: 2\n"
        "values: [0,a,0,1,a,a,a,1,0,a,1,1,1,1,1,1]\n"
        "polynomial: false\n"
        "alpha: [0,1,1,1]\n"
        "beta: [1,1,1,0]\n");
}

TEST_CASE("cli: property checks set the exit code from the verdict") {
  const auto holds = cli({"check", "--table", data_path("med_example.json"), "--prop",
                          "min-homogeneous", "--domain", "weak"});
  CHECK(holds.code == 0);
  CHECK(holds.out ==
        "property: min-homogeneous\n"
        "holds: true\n"
        "domain: weak\n"
        "s-set: {0,1,2}\n"
        "checked: x in L_2^(0,2), c in S={0,1,2}\n");

  const auto fails = cli({"check", "--table", data_path("ternary_median.json"), "--prop",
                          "median-decomposable", "--domain", "weak"});
  CHECK(fails.code == 1);
  CHECK(fails.out ==
        "property: median-decomposable\n"
        "holds: false\n"
        "domain: weak\n"
        "checked: x in L_3^(0,2) union L_3^(1,3), k in [3]\n"
        "witness-x: (0,1,2)\n"
        "witness-k: 2\n");

  // Without --domain the sweep defaults to the full domain.
  const auto cons = cli({"check", "--table", data_path("threshold_mix.json"), "--prop",
                         "conservative"});
  CHECK(cons.code == 0);
  CHECK(cons.out ==
        "property: conservative\n"
        "holds: true\n"
        "domain: full\n"
        "checked: x in L^2\n");

  const auto como = cli({"check", "--table", data_path("ternary_median.json"), "--prop",
                         "comonotonic-minitive"});
  CHECK(como.code == 1);
  CHECK(como.out.find("witness-x: ") != std::string::npos);
  CHECK(como.out.find("witness-y: ") != std::string::npos);
}

TEST_CASE("cli: check validates the property/option combinations") {
  const std::string table = data_path("med_example.json");
  const auto unknown = cli({"check", "--table", table, "--prop", "bogus"});
  CHECK(unknown.code == 2);
  CHECK(unknown.err.find("unknown property 'bogus'") != std::string::npos);
  CHECK(unknown.err.find("comonotonic-maxitive") != std::string::npos);

  const auto extra_domain = cli({"check", "--table", table, "--prop", "nondecreasing",
                                 "--domain", "full"});
  CHECK(extra_domain.code == 2);
  CHECK(extra_domain.err == "error: property 'nondecreasing' does not take --domain\n");

  const auto extra_s =
      cli({"check", "--table", table, "--prop", "median-decomposable", "--s", "all"});
  CHECK(extra_s.code == 2);

  const auto bad_s = cli({"check", "--table", table, "--prop", "idempotent", "--s", "most"});
  CHECK(bad_s.code == 2);
}

TEST_CASE("cli: decide reports and exit codes") {
  const auto sug = cli({"decide", "--table", data_path("med_example.json"), "--class", "sugeno"});
  CHECK(sug.code == 0);
  CHECK(sug.out ==
        "class: sugeno-integral\n"
        "verdict: true\n"
        "certificate: [0,1,1,2]\n"
        "measure: [0,1,1,2]\n");

  const auto rej = cli({"decide", "--table", data_path("clamped_meet.json"), "--class", "sugeno"});
  CHECK(rej.code == 1);
  CHECK(rej.out ==
        "class: sugeno-integral\n"
        "verdict: false\n"
        "counterexample: (0,0)\n");

  const auto term = cli({"decide", "--table", data_path("threshold_mix.json"), "--class", "term"});
  CHECK(term.code == 1);
  CHECK(term.out ==
        "class: term-function\n"
        "verdict: false\n"
        "counterexample: (1,2)\n");

  const auto defaulted = cli({"decide", "--table", data_path("med_example.json")});
  CHECK(defaulted.code == 0);
  CHECK(defaulted.out.find("class: polynomial\n") == 0);

  const auto bad = cli({"decide", "--table", data_path("med_example.json"), "--class", "magic"});
  CHECK(bad.code == 2);
}

TEST_CASE("cli: verify keeps timing off stdout and is byte-deterministic") {
  const std::vector<std::string> args{"verify", "--theorem", "mainChar", "--lattice",
                                      data_path("chain2.json"), "--arity", "1",
                                      "--mode", "exhaustive"};
  const auto a = cli(args);
  CHECK(a.code == 0);
  CHECK(a.out ==
        "theorem: mainChar\n"
        "lattice: chain-2\n"
        "arity: 1\n"
        "mode: exhaustive\n"
        "expect-counterexample: false\n"
        "tables-checked: 4\n"
        "discrepancies: 0\n"
        "result: pass\n");
  CHECK(a.out.find("elapsed") == std::string::npos);
  CHECK(a.err.find("elapsed-seconds: ") == 0);

  const auto b = cli(args);
  CHECK(b.out == a.out);

  // Random sweeps include the sample count and seed in the report and
  // reproduce bytes exactly for the same seed.
  const std::vector<std::string> rnd{"verify", "--theorem",  "prop:sug", "--lattice",
                                     data_path("chain3.json"), "--arity", "2",
                                     "--mode", "random", "--samples", "50", "--seed", "7"};
  const auto r1 = cli(rnd);
  const auto r2 = cli(rnd);
  CHECK(r1.code == 0);
  CHECK(r1.out ==
        "theorem: prop:sug\n"
        "lattice: chain-3\n"
        "arity: 2\n"
        "mode: random-monotone\n"
        "samples: 50\n"
        "seed: 7\n"
        "expect-counterexample: false\n"
        "tables-checked: 100\n"
        "discrepancies: 0\n"
        "result: pass\n");
  CHECK(r1.out == r2.out);
}

TEST_CASE("cli: verify validation paths") {
  const auto no_seed = cli({"verify", "--theorem", "mainChar", "--lattice",
                            data_path("chain3.json"), "--arity", "2", "--mode", "random",
                            "--samples", "10"});
  CHECK(no_seed.code == 2);
  CHECK(no_seed.err == "error: random modes need a seed\n");

  const auto over_cap = cli({"verify", "--theorem", "mainChar", "--lattice",
                             data_path("chain4.json"), "--arity", "2", "--mode", "exhaustive"});
  CHECK(over_cap.code == 2);
  CHECK(over_cap.err ==
        "error: exhaustive sweep needs 4294967296 tables, above the cap of 16777216; restrict "
        "to nondecreasing tables (mode exhaustive-monotone), sample (mode random-monotone), or "
        "raise LATPOLY_CAP\n");

  const auto off_chain = cli({"verify", "--theorem", "SimplexDNF", "--lattice",
                              data_path("diamond.json"), "--arity", "2", "--mode", "exhaustive"});
  CHECK(off_chain.code == 2);
  CHECK(off_chain.err ==
        "error: theorem 'SimplexDNF' is stated for chains; lattice table-4 is not a chain\n");

  // An expected counterexample that never shows up flips the exit code.
  const auto unmet = cli({"verify", "--theorem", "mainChar", "--lattice",
                          data_path("chain2.json"), "--arity", "1", "--mode", "exhaustive",
                          "--expect-counterexample"});
  CHECK(unmet.code == 1);
  CHECK(unmet.out.find("result: fail\n") != std::string::npos);
}

TEST_CASE("cli: registry replay") {
  const auto r = cli({"counterexample", "threshold-mix-binary"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "name: threshold-mix-binary\n"
        "note: nondecreasing and conservative but not a term function\n"
        "lattice: chain-3\n"
        "arity: 2\n"
        "values: [0,0,0,0,1,2,0,2,2]\n"
        "checks: 5\n"
        "check-1-label: nondecreasing\n"
        "check-1-expected: true\n"
        "check-1-actual: true\n"
        "check-2-label: conservative\n"
        "check-2-expected: true\n"
        "check-2-actual: true\n"
        "check-3-label: weakly conservative\n"
        "check-3-expected: true\n"
        "check-3-actual: true\n"
        "check-4-label: polynomial\n"
        "check-4-expected: false\n"
        "check-4-actual: false\n"
        "check-4-witness: x=(1,2)\n"
        "check-5-label: term-function\n"
        "check-5-expected: false\n"
        "check-5-actual: false\n"
        "check-5-witness: x=(1,2)\n"
        "profile-match: true\n");

  const auto unknown = cli({"counterexample", "nope"});
  CHECK(unknown.code == 2);
  CHECK(unknown.err.find("unknown registry entry 'nope'") != std::string::npos);
}

TEST_CASE("cli: io error surfaces carry the file context") {
  const auto missing = cli({"canon", "--table", data_path("missing.json")});
  CHECK(missing.code == 2);
  CHECK(missing.err.find("cannot open file") != std::string::npos);

  const auto coef_mismatch = cli({"eval", "--func", data_path("med_example.json"), "--at",
                                  "(0,0)"});
  CHECK(coef_mismatch.code == 2);
  CHECK(coef_mismatch.err.find("values: expected 4 entries, got 9") != std::string::npos);

  const auto bad_tuple = cli({"eval", "--func", data_path("med_alpha.json"), "--at", "0,0"});
  CHECK(bad_tuple.code == 2);
  CHECK(bad_tuple.err == "error: tuple '0,0' must be parenthesized, e.g. (0,1)\n");
}

TEST_CASE("cli: help and usage errors") {
  const auto help = cli({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("eval") != std::string::npos);
  CHECK(help.out.find("verify") != std::string::npos);

  const auto none = cli({});
  CHECK(none.code == 2);

  const auto missing_opt = cli({"canon"});
  CHECK(missing_opt.code == 2);

  const auto unknown_cmd = cli({"frobnicate"});
  CHECK(unknown_cmd.code == 2);
}
