#include <doctest.h>

#include <algorithm>
#include <initializer_list>
#include <vector>

#include "latpoly/errors.hpp"
#include "latpoly/function_table.hpp"
#include "latpoly/lattice.hpp"
#include "oracles.hpp"

using namespace latpoly;
using test::make_diamond;

TEST_CASE("chain basics: order, bounds, names, covers, rank") {
  auto L = make_chain(4);
  CHECK(L->is_chain());
  CHECK(L->size() == 4);
  CHECK(L->bottom() == 0);
  CHECK(L->top() == 3);
  CHECK(L->meet(1, 3) == 1);
  CHECK(L->join(1, 3) == 3);
  CHECK(L->leq(2, 2));
  CHECK(L->leq(0, 3));
  CHECK_FALSE(L->leq(3, 1));
  CHECK(L->name(0) == "0");
  CHECK(L->name(3) == "3");
  CHECK(L->upper_covers(1) == std::vector<Elem>{2});
  CHECK(L->lower_covers(1) == std::vector<Elem>{0});
  CHECK(L->upper_covers(3).empty());
  CHECK(L->lower_covers(0).empty());
  for (Elem a = 0; a < 4; ++a) CHECK(L->rank(a) == a);
  CHECK_THROWS_AS(L->check_elem(4), ValidationError);
  CHECK_THROWS_AS(L->check_elem(-1), ValidationError);
  CHECK_THROWS_AS(make_chain(0), ValidationError);
}

TEST_CASE("diamond construction: order structure and covers") {
  auto D = make_diamond();
  CHECK_FALSE(D->is_chain());
  CHECK(D->size() == 4);
  CHECK(D->bottom() == 0);
  CHECK(D->top() == 3);
  CHECK(D->name(1) == "a");
  CHECK(D->name(2) == "b");
  // a and b are incomparable.
  CHECK_FALSE(D->leq(1, 2));
  CHECK_FALSE(D->leq(2, 1));
  CHECK(D->meet(1, 2) == 0);
  CHECK(D->join(1, 2) == 3);
  CHECK(D->upper_covers(0) == std::vector<Elem>{1, 2});
  CHECK(D->lower_covers(3) == std::vector<Elem>{1, 2});
  // rank is a linear extension: strictly ordered pairs keep their order.
  for (Elem x = 0; x < 4; ++x)
    for (Elem y = 0; y < 4; ++y)
      if (x != y && D->leq(x, y)) CHECK(D->rank(x) < D->rank(y));
}

TEST_CASE("lattice law validation reports the first broken law with a witness") {
  // The pentagon: 0 < a < c < 1 and 0 < b < 1 with b incomparable to a, c.
  // It is a lattice but not distributive: a or (c and b) = a while
  // (a or c) and (a or b) = c.
  std::vector<std::string> names{"0", "a", "c", "b", "1"};
  std::vector<std::vector<Elem>> meet{{0, 0, 0, 0, 0},
                                      {0, 1, 1, 0, 1},
                                      {0, 1, 2, 0, 2},
                                      {0, 0, 0, 3, 3},
                                      {0, 1, 2, 3, 4}};
  std::vector<std::vector<Elem>> join{{0, 1, 2, 3, 4},
                                      {1, 1, 2, 4, 4},
                                      {2, 2, 2, 4, 4},
                                      {3, 4, 4, 3, 4},
                                      {4, 4, 4, 4, 4}};
  try {
    make_table_lattice(names, meet, join);
    FAIL("pentagon accepted");
  } catch (const LatticeLawError& e) {
    CHECK(e.law() == "distributivity (join over meet)");
    CHECK(e.witness().size() == 3);
    // Replay the witness against the raw tables.
    const auto& w = e.witness();
    auto mt = [&](Elem x, Elem y) { return meet[size_t(x)][size_t(y)]; };
    auto jn = [&](Elem x, Elem y) { return join[size_t(x)][size_t(y)]; };
    CHECK(jn(w[0], mt(w[1], w[2])) != mt(jn(w[0], w[1]), jn(w[0], w[2])));
  }

  SUBCASE("broken idempotency is caught before anything else") {
    auto bad = meet;
    bad[1][1] = 0;
    CHECK_THROWS_AS(make_table_lattice(names, bad, join), LatticeLawError);
    try {
      make_table_lattice(names, bad, join);
    } catch (const LatticeLawError& e) {
      CHECK(e.law() == "meet idempotency");
    }
  }
  SUBCASE("shape errors") {
    auto bad = meet;
    bad.pop_back();
    CHECK_THROWS_AS(make_table_lattice(names, bad, join), ValidationError);
    CHECK_THROWS_AS(make_table_lattice({"x", "x"}, {{0, 0}, {0, 1}}, {{0, 1}, {1, 1}}),
                    ValidationError);
  }
}

TEST_CASE("tuple meet/join with a constant is componentwise") {
  auto L = make_chain(4);
  Tuple x{0, 2, 3};
  CHECK(tuple_meet_const(*L, x, 2) == Tuple{0, 2, 2});
  CHECK(tuple_join_const(*L, x, 2) == Tuple{2, 2, 3});
  auto D = make_diamond();
  Tuple y{0, 1, 2, 3}; // (0, a, b, 1)
  CHECK(tuple_meet_const(*D, y, 1) == Tuple{0, 1, 0, 1});
  CHECK(tuple_join_const(*D, y, 2) == Tuple{2, 3, 2, 3});
}

TEST_CASE("median on chains equals the sorted middle element") {
  auto L = make_chain(5);
  CHECK(med(*L, {0, 1, 0}) == 0);
  CHECK(med(*L, {0, 4, 2}) == 2);
  CHECK(med(*L, {3, 3, 1}) == 3);
  // Every triple over the 5-chain agrees with both independent routes:
  // the sorted middle element and the join over 2-subsets of meets.
  for (Elem a = 0; a < 5; ++a)
    for (Elem b = 0; b < 5; ++b)
      for (Elem c = 0; c < 5; ++c) {
        const Elem got = med(*L, {a, b, c});
        CHECK(got == test::sorted_median({a, b, c}));
        const Elem pairwise = std::max({std::min(a, b), std::min(a, c), std::min(b, c)});
        CHECK(got == pairwise);
      }
  for_each_tuple(*L, 5, [&](const Tuple& x) {
    std::vector<Elem> args(x.begin(), x.end());
    CHECK(med(*L, std::span<const Elem>(args.data(), args.size())) == test::sorted_median(args));
  });
}

TEST_CASE("median rejects even argument counts and works off chains") {
  auto L = make_chain(3);
  CHECK_THROWS_AS(med(*L, {0, 1}), ValidationError);
  CHECK_THROWS_AS(med(*L, std::initializer_list<Elem>{}), ValidationError);
  auto D = make_diamond();
  // med(a, b, 0) = (a^b) v (a^0) v (b^0) = 0; med(a, b, 1) = a v b = 1.
  CHECK(med(*D, {1, 2, 0}) == 0);
  CHECK(med(*D, {1, 2, 3}) == 3);
  CHECK(med(*D, {1, 1, 2}) == 1);
}

TEST_CASE("intervals and convex hulls") {
  auto L = make_chain(5);
  CHECK(interval_elems(*L, 1, 3) == std::vector<Elem>{1, 2, 3});
  CHECK(interval(*L, 2, 2).lo == 2);
  CHECK(interval(*L, 2, 2).hi == 2);
  CHECK_THROWS_AS(interval(*L, 3, 1), ValidationError);

  std::vector<Elem> pts{4, 0, 4};
  CHECK(convex_hull(*L, std::span<const Elem>(pts.data(), pts.size())) ==
        std::vector<Elem>{0, 1, 2, 3, 4});

  auto D = make_diamond();
  // {a, b} is already order-convex (no element strictly between them),
  // while {0, 1} pulls in the whole diamond.
  std::vector<Elem> ab{1, 2};
  CHECK(convex_hull(*D, std::span<const Elem>(ab.data(), ab.size())) == std::vector<Elem>{1, 2});
  std::vector<Elem> bounds{0, 3};
  CHECK(convex_hull(*D, std::span<const Elem>(bounds.data(), bounds.size())) ==
        std::vector<Elem>{0, 1, 2, 3});
  std::vector<Elem> empty;
  CHECK_THROWS_AS(convex_hull(*D, std::span<const Elem>(empty.data(), 0)), ValidationError);
}

TEST_CASE("function table indexing: first coordinate most significant") {
  auto L = make_chain(3);
  CHECK(domain_size(*L, 2) == 9);
  CHECK(tuple_index(*L, {0, 0}) == 0);
  CHECK(tuple_index(*L, {0, 2}) == 2);
  CHECK(tuple_index(*L, {1, 0}) == 3);
  CHECK(tuple_index(*L, {2, 1}) == 7);
  for (std::uint64_t i = 0; i < 9; ++i) CHECK(tuple_index(*L, index_tuple(*L, 2, i)) == i);

  // for_each_tuple sweeps ascending flat indices.
  std::uint64_t expect = 0;
  for_each_tuple(*L, 2, [&](const Tuple& x) {
    CHECK(tuple_index(*L, x) == expect);
    ++expect;
  });
  CHECK(expect == 9);
}

TEST_CASE("function table construction and display") {
  auto L = make_chain(3);
  FunctionTable f(L, 2, {0, 1, 1, 1, 1, 1, 1, 1, 2});
  CHECK(f(Tuple{0, 0}) == 0);
  CHECK(f(Tuple{2, 2}) == 2);
  CHECK(f.at_bottom() == 0);
  CHECK(f.at_top() == 2);
  CHECK(f.display() == "[0,1,1,1,1,1,1,1,2]");
  CHECK_THROWS_AS(FunctionTable(L, 2, {0, 1}), ValidationError);
  CHECK_THROWS_AS(FunctionTable(L, 2, {0, 1, 1, 1, 1, 1, 1, 1, 7}), ValidationError);
  CHECK_THROWS_AS(FunctionTable(L, 0, {0}), ValidationError);
  CHECK_THROWS_AS(FunctionTable(L, 21, {}), ValidationError);

  auto g = FunctionTable::constant(L, 1, 2);
  CHECK(g.values() == std::vector<Elem>{2, 2, 2});
  auto h = FunctionTable::tabulate(L, 2, [&](const Tuple& x) { return L->meet(x[0], x[1]); });
  CHECK(h(Tuple{1, 2}) == 1);

  auto D = make_diamond();
  FunctionTable d(D, 1, {0, 1, 2, 3});
  CHECK(d.display() == "[0,a,b,1]");
  CHECK(tuple_display(*D, {1, 2}) == "(a,b)");
}
