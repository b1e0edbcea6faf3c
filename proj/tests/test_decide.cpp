#include <doctest.h>

#include <map>
#include <set>
#include <vector>

#include "latpoly/decide.hpp"
#include "latpoly/errors.hpp"
#include "oracles.hpp"

using namespace latpoly;
using test::make_diamond;

namespace {

FunctionTable med_mid_table() {
  return FunctionTable(make_chain(3), 2, {0, 1, 1, 1, 1, 1, 1, 1, 2});
}

FunctionTable clamped_meet_table() {
  return FunctionTable(make_chain(3), 2, {1, 1, 1, 1, 1, 1, 1, 1, 2});
}

FunctionTable threshold_mix_table() {
  return FunctionTable(make_chain(3), 2, {0, 0, 0, 0, 1, 2, 0, 2, 2});
}

FunctionTable diamond_binary_table() {
  return FunctionTable(make_diamond(), 2, {0, 1, 0, 3, 1, 1, 1, 3, 0, 1, 3, 3, 3, 3, 3, 3});
}

void sweep_tables(const LatticePtr& L, int arity,
                  const std::function<void(const FunctionTable&)>& fn) {
  const std::uint64_t points = domain_size(*L, arity);
  std::vector<Elem> vals(points, 0);
  while (true) {
    fn(FunctionTable(L, arity, vals));
    size_t pos = 0;
    while (pos < vals.size() && vals[pos] == L->size() - 1) vals[pos++] = 0;
    if (pos == vals.size()) break;
    ++vals[pos];
  }
}

} // namespace

TEST_CASE("polynomial recognition: certificates and counterexamples") {
  const auto yes = decide_polynomial(med_mid_table());
  CHECK(yes.verdict);
  REQUIRE(yes.certificate.has_value());
  CHECK(yes.certificate->values == std::vector<Elem>{0, 1, 1, 2});
  CHECK_FALSE(yes.counterexample.has_value());

  const auto no = decide_polynomial(threshold_mix_table());
  CHECK_FALSE(no.verdict);
  CHECK_FALSE(no.certificate.has_value());
  REQUIRE(no.counterexample.has_value());
  CHECK(*no.counterexample == Tuple{1, 2});

  // The rejection really is the first mismatch in ascending index order:
  // earlier points agree with the extension of the boolean restriction.
  const auto f = threshold_mix_table();
  const auto alpha = alpha_from_oracle(f);
  const auto upto = tuple_index(f.lattice(), *no.counterexample);
  for (std::uint64_t i = 0; i < upto; ++i) {
    const Tuple x = index_tuple(f.lattice(), 2, i);
    CHECK(eval_dnf(f.lattice(), alpha, x) == f(x));
  }
  CHECK(eval_dnf(f.lattice(), alpha, *no.counterexample) != f(*no.counterexample));
}

TEST_CASE("polynomial recognition agrees with brute force everywhere it can run") {
  // chain 2, n = 2: all 16 tables against the exponential sweep oracle.
  auto L2 = make_chain(2);
  int accepted = 0;
  sweep_tables(L2, 2, [&](const FunctionTable& f) {
    const bool got = decide_polynomial(f).verdict;
    CHECK(got == test::is_polynomial_bruteforce(f));
    if (got) ++accepted;
  });
  CHECK(accepted == 6);

  // diamond, n = 1: 256 tables; the oracle sweeps 4^2 coefficient maps.
  auto D = make_diamond();
  sweep_tables(D, 1, [&](const FunctionTable& f) {
    CHECK(decide_polynomial(f).verdict == test::is_polynomial_bruteforce(f));
  });
}

TEST_CASE("recognition on the diamond rejects the mixed binary table") {
  const auto d = decide_polynomial(diamond_binary_table());
  CHECK_FALSE(d.verdict);
  REQUIRE(d.counterexample.has_value());
  // First disagreement in ascending index order: at (0, b) the extension of
  // the boolean restriction gives b while the table holds 0.
  CHECK(*d.counterexample == Tuple{0, 2});
}

TEST_CASE("sugeno recognition: endpoint gates") {
  const auto yes = decide_sugeno(med_mid_table());
  CHECK(yes.verdict);
  REQUIRE(yes.measure.has_value());
  CHECK(yes.measure->coef().values == std::vector<Elem>{0, 1, 1, 2});

  // Polynomial pinned off bottom: rejected at the all-bottom point.
  const auto off_bottom = decide_sugeno(clamped_meet_table());
  CHECK_FALSE(off_bottom.verdict);
  CHECK(*off_bottom.counterexample == Tuple{0, 0});
  CHECK_FALSE(off_bottom.certificate.has_value());
  CHECK_FALSE(off_bottom.measure.has_value());

  // Polynomial capped below top: rejected at the all-top point.
  const auto capped = decide_sugeno(FunctionTable(make_chain(3), 1, {0, 1, 1}));
  CHECK_FALSE(capped.verdict);
  CHECK(*capped.counterexample == Tuple{2});

  // Non-polynomials keep the polynomial counterexample.
  const auto no = decide_sugeno(threshold_mix_table());
  CHECK_FALSE(no.verdict);
  CHECK(*no.counterexample == Tuple{1, 2});
}

TEST_CASE("term recognition: conservative boolean restriction") {
  auto L = make_chain(3);
  const FunctionTable join_fn(L, 2, {0, 1, 2, 1, 1, 2, 2, 2, 2}); // x1 or x2
  const auto yes = decide_term(join_fn);
  CHECK(yes.verdict);
  CHECK(yes.certificate->values == std::vector<Elem>{0, 2, 2, 2});
  CHECK(yes.measure.has_value());

  // A Sugeno integral that is not a term: (1 and x1) or x2 takes the value
  // 1 at (2, 0), which is neither coordinate.
  const FunctionTable blend(L, 2, {0, 1, 2, 1, 1, 2, 1, 1, 2});
  REQUIRE(decide_sugeno(blend).verdict);
  const auto no = decide_term(blend);
  CHECK_FALSE(no.verdict);
  CHECK(*no.counterexample == Tuple{2, 0});
  CHECK_FALSE(no.measure.has_value());

  CHECK_FALSE(decide_term(threshold_mix_table()).verdict);
}

TEST_CASE("class counts over full table sweeps") {
  // chain 3, n = 2: 19,683 tables.
  auto L3 = make_chain(3);
  int poly = 0, sugeno = 0, term = 0;
  sweep_tables(L3, 2, [&](const FunctionTable& f) {
    if (decide_polynomial(f).verdict) ++poly;
    if (decide_sugeno(f).verdict) ++sugeno;
    if (decide_term(f).verdict) ++term;
  });
  CHECK(poly == 20);
  CHECK(sugeno == 9);
  CHECK(term == 4); // the two projections, the meet, and the join

  // chain 2, n = 2.
  auto L2 = make_chain(2);
  poly = sugeno = term = 0;
  sweep_tables(L2, 2, [&](const FunctionTable& f) {
    if (decide_polynomial(f).verdict) ++poly;
    if (decide_sugeno(f).verdict) ++sugeno;
    if (decide_term(f).verdict) ++term;
  });
  CHECK(poly == 6);
  CHECK(sugeno == 4);
  CHECK(term == 4);
}

TEST_CASE("the distinct tabulations of all coefficient maps are the accepted set") {
  auto L = make_chain(3);
  std::set<std::vector<Elem>> tabulated;
  std::vector<Elem> gamma(4, 0);
  while (true) {
    tabulated.insert(PolyFunc{L, CoefMap(2, gamma)}.tabulate().values());
    size_t pos = 0;
    while (pos < 4 && gamma[pos] == 2) gamma[pos++] = 0;
    if (pos == 4) break;
    ++gamma[pos];
  }
  CHECK(tabulated.size() == 20);
  std::set<std::vector<Elem>> accepted;
  sweep_tables(L, 2, [&](const FunctionTable& f) {
    if (decide_polynomial(f).verdict) accepted.insert(f.values());
  });
  CHECK(accepted == tabulated);
}

TEST_CASE("bundle list is fixed") {
  const std::vector<std::string> expect{
      "mainChar-ii",  "mainChar-iii",  "mainChar-iv",  "mainChar-v",   "mainChar-vi",
      "mainChar-vii", "weakHom-ii",    "weakHom-iii",  "weakHom-iv",   "weakHom-v",
      "weakHom-iii-SL", "weakHom-iv-SL", "weakHom-v-SL", "weakMed",    "strongIdem",
      "comonot-ii",   "comonot-iii",   "comonot-iv",   "comonot-v",    "comonot-vi",
      "comonot-iv-SL", "comonot-v-SL"};
  CHECK(bundle_names() == expect);
}

TEST_CASE("characterization matrix on chains") {
  const auto poly_matrix = characterize(med_mid_table());
  CHECK(poly_matrix.polynomial);
  CHECK(poly_matrix.s_elems == std::vector<Elem>{0, 1, 2});
  CHECK(poly_matrix.bundles.size() == 22);
  for (const auto& b : poly_matrix.bundles) {
    CHECK(b.applicable);
    CHECK(b.holds);
    for (const auto& cond : b.conditions) CHECK(cond.holds);
  }

  const auto mix_matrix = characterize(threshold_mix_table());
  CHECK_FALSE(mix_matrix.polynomial);
  for (const auto& b : mix_matrix.bundles) {
    CHECK(b.applicable);
    CHECK_FALSE(b.holds);
    // Witnesses inside the failing conditions replay.
    for (const auto& cond : b.conditions)
      if (!cond.holds) CHECK(recheck_witness(threshold_mix_table(), cond));
  }
}

TEST_CASE("characterization matrix off chains marks comonotone bundles inapplicable") {
  const auto matrix = characterize(diamond_binary_table());
  CHECK_FALSE(matrix.polynomial);
  int inapplicable = 0;
  for (const auto& b : matrix.bundles) {
    if (!b.applicable) {
      ++inapplicable;
      CHECK(b.bundle.substr(0, 7) == "comonot");
      CHECK(b.conditions.empty());
    }
  }
  CHECK(inapplicable == 7);

  // The weak-homogeneity bundle does not hold here: the function is not
  // weakly min homogeneous (witness x = (0,1), c = b).
  for (const auto& b : matrix.bundles)
    if (b.bundle == "weakHom-ii") {
      CHECK(b.applicable);
      CHECK_FALSE(b.holds);
    }
}

TEST_CASE("bundles agree with recognition on every chain-2 binary table") {
  auto L2 = make_chain(2);
  sweep_tables(L2, 2, [&](const FunctionTable& f) {
    const auto matrix = characterize(f);
    CHECK(matrix.polynomial == decide_polynomial(f).verdict);
    for (const auto& b : matrix.bundles) {
      REQUIRE(b.applicable);
      CHECK(b.holds == matrix.polynomial);
    }
  });
}
