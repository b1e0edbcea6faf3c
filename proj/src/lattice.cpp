#include "latpoly/lattice.hpp"

#include <algorithm>
#include <numeric>

namespace latpoly {

namespace {

// Law validation runs on raw tables, before any Lattice object exists, so
// witnesses are reported by element index.
std::string law_msg_idx(const std::string& law, std::span<const Elem> w) {
  std::string msg = "lattice law violated: " + law + " at indices (";
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) msg += ", ";
    msg += std::to_string(w[i]);
  }
  msg += ")";
  return msg;
}

} // namespace

Lattice Lattice::chain(int m) {
  if (m < 1) throw ValidationError("chain size must be at least 1, got " + std::to_string(m));
  Lattice L;
  L.kind_ = LatticeKind::Chain;
  L.size_ = m;
  L.bottom_ = 0;
  L.top_ = m - 1;
  L.names_.reserve(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) L.names_.push_back(std::to_string(i));
  L.finish_setup();
  return L;
}

Lattice Lattice::from_tables(std::vector<std::string> names,
                             std::vector<std::vector<Elem>> meet,
                             std::vector<std::vector<Elem>> join) {
  const int m = static_cast<int>(names.size());
  if (m < 1) throw ValidationError("table lattice needs at least one element");
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (names[static_cast<size_t>(i)] == names[static_cast<size_t>(j)])
        throw ValidationError("duplicate element name '" + names[static_cast<size_t>(i)] + "'");
  auto check_shape = [&](const std::vector<std::vector<Elem>>& t, const char* which) {
    if (static_cast<int>(t.size()) != m)
      throw ValidationError(std::string(which) + " table must have " + std::to_string(m) + " rows");
    for (const auto& row : t) {
      if (static_cast<int>(row.size()) != m)
        throw ValidationError(std::string(which) + " table rows must have " + std::to_string(m) +
                              " entries");
      for (Elem v : row)
        if (v < 0 || v >= m)
          throw ValidationError(std::string(which) + " table entry " + std::to_string(v) +
                                " out of range");
    }
  };
  check_shape(meet, "meet");
  check_shape(join, "join");

  Lattice L;
  L.kind_ = LatticeKind::Table;
  L.size_ = m;
  L.names_ = std::move(names);
  L.meet_.resize(static_cast<size_t>(m) * m);
  L.join_.resize(static_cast<size_t>(m) * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      L.meet_[static_cast<size_t>(a) * m + b] = meet[static_cast<size_t>(a)][static_cast<size_t>(b)];
      L.join_[static_cast<size_t>(a) * m + b] = join[static_cast<size_t>(a)][static_cast<size_t>(b)];
    }

  auto mt = [&](Elem a, Elem b) { return L.meet_[static_cast<size_t>(a) * m + b]; };
  auto jn = [&](Elem a, Elem b) { return L.join_[static_cast<size_t>(a) * m + b]; };
  auto fail = [&](const std::string& law, std::initializer_list<Elem> w) {
    std::vector<Elem> wit(w);
    throw LatticeLawError(law, wit, law_msg_idx(law, wit));
  };

  // Laws are checked cheapest-first so the reported witness names the first
  // violated law in this fixed order.
  for (Elem a = 0; a < m; ++a) {
    if (mt(a, a) != a) fail("meet idempotency", {a});
    if (jn(a, a) != a) fail("join idempotency", {a});
  }
  for (Elem a = 0; a < m; ++a)
    for (Elem b = 0; b < m; ++b) {
      if (mt(a, b) != mt(b, a)) fail("meet commutativity", {a, b});
      if (jn(a, b) != jn(b, a)) fail("join commutativity", {a, b});
    }
  for (Elem a = 0; a < m; ++a)
    for (Elem b = 0; b < m; ++b) {
      if (mt(a, jn(a, b)) != a) fail("absorption (a and (a or b))", {a, b});
      if (jn(a, mt(a, b)) != a) fail("absorption (a or (a and b))", {a, b});
    }
  for (Elem a = 0; a < m; ++a)
    for (Elem b = 0; b < m; ++b)
      for (Elem c = 0; c < m; ++c) {
        if (mt(mt(a, b), c) != mt(a, mt(b, c))) fail("meet associativity", {a, b, c});
        if (jn(jn(a, b), c) != jn(a, jn(b, c))) fail("join associativity", {a, b, c});
      }
  for (Elem a = 0; a < m; ++a)
    for (Elem b = 0; b < m; ++b)
      for (Elem c = 0; c < m; ++c) {
        if (mt(a, jn(b, c)) != jn(mt(a, b), mt(a, c)))
          fail("distributivity (meet over join)", {a, b, c});
        if (jn(a, mt(b, c)) != mt(jn(a, b), jn(a, c)))
          fail("distributivity (join over meet)", {a, b, c});
      }

  // Bottom and top: fold meets/joins, then verify the unit laws.
  Elem bot = 0, top = 0;
  for (Elem a = 1; a < m; ++a) {
    bot = mt(bot, a);
    top = jn(top, a);
  }
  for (Elem a = 0; a < m; ++a) {
    if (mt(bot, a) != bot || jn(bot, a) != a) fail("bottom unit law", {bot, a});
    if (jn(top, a) != top || mt(top, a) != a) fail("top unit law", {top, a});
  }
  L.bottom_ = bot;
  L.top_ = top;

  L.finish_setup();
  return L;
}

void Lattice::finish_setup() {
  const int m = size_;
  up_covers_.assign(static_cast<size_t>(m), {});
  down_covers_.assign(static_cast<size_t>(m), {});
  rank_.assign(static_cast<size_t>(m), 0);
  if (is_chain()) {
    for (Elem a = 0; a < m; ++a) {
      rank_[static_cast<size_t>(a)] = a;
      if (a + 1 < m) up_covers_[static_cast<size_t>(a)].push_back(a + 1);
      if (a > 0) down_covers_[static_cast<size_t>(a)].push_back(a - 1);
    }
    return;
  }
  auto lt = [&](Elem a, Elem b) { return a != b && meet(a, b) == a; };
  for (Elem a = 0; a < m; ++a)
    for (Elem b = 0; b < m; ++b) {
      if (!lt(a, b)) continue;
      bool covered = true;
      for (Elem c = 0; c < m && covered; ++c)
        if (lt(a, c) && lt(c, b)) covered = false;
      if (covered) {
        up_covers_[static_cast<size_t>(a)].push_back(b);
        down_covers_[static_cast<size_t>(b)].push_back(a);
      }
    }
  // Linear extension rank: number of elements strictly below, tie-broken by
  // index. This is strictly monotone along the lattice order.
  std::vector<int> below(static_cast<size_t>(m), 0);
  for (Elem a = 0; a < m; ++a)
    for (Elem b = 0; b < m; ++b)
      if (lt(b, a)) ++below[static_cast<size_t>(a)];
  std::vector<Elem> order(static_cast<size_t>(m));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](Elem a, Elem b) {
    if (below[static_cast<size_t>(a)] != below[static_cast<size_t>(b)])
      return below[static_cast<size_t>(a)] < below[static_cast<size_t>(b)];
    return a < b;
  });
  for (int r = 0; r < m; ++r) rank_[static_cast<size_t>(order[static_cast<size_t>(r)])] = r;
}

LatticePtr make_chain(int m) { return std::make_shared<const Lattice>(Lattice::chain(m)); }

LatticePtr make_table_lattice(std::vector<std::string> names,
                              std::vector<std::vector<Elem>> meet,
                              std::vector<std::vector<Elem>> join) {
  return std::make_shared<const Lattice>(
      Lattice::from_tables(std::move(names), std::move(meet), std::move(join)));
}

Tuple tuple_meet_const(const Lattice& L, const Tuple& x, Elem c) {
  Tuple r(x.size());
  for (size_t i = 0; i < x.size(); ++i) r[i] = L.meet(x[i], c);
  return r;
}

Tuple tuple_join_const(const Lattice& L, const Tuple& x, Elem c) {
  Tuple r(x.size());
  for (size_t i = 0; i < x.size(); ++i) r[i] = L.join(x[i], c);
  return r;
}

Elem med(const Lattice& L, std::span<const Elem> args) {
  const size_t len = args.size();
  if (len == 0 || len % 2 == 0)
    throw ValidationError("med needs an odd number of arguments, got " + std::to_string(len));
  for (Elem a : args) L.check_elem(a);
  if (L.is_chain()) {
    std::vector<Elem> v(args.begin(), args.end());
    std::nth_element(v.begin(), v.begin() + static_cast<long>(len / 2), v.end());
    return v[len / 2];
  }
  // Join over all (k+1)-subsets of meets for 2k+1 arguments.
  const size_t k1 = len / 2 + 1;
  Elem acc = L.bottom();
  for (unsigned s = 0; s < (1u << len); ++s) {
    if (static_cast<size_t>(__builtin_popcount(s)) != k1) continue;
    Elem term = L.top();
    for (size_t i = 0; i < len; ++i)
      if (s & (1u << i)) term = L.meet(term, args[i]);
    acc = L.join(acc, term);
  }
  return acc;
}

Elem med(const Lattice& L, std::initializer_list<Elem> args) {
  return med(L, std::span<const Elem>(args.begin(), args.size()));
}

std::vector<Elem> interval_elems(const Lattice& L, Elem lo, Elem hi) {
  L.check_elem(lo);
  L.check_elem(hi);
  std::vector<Elem> out;
  for (Elem c = 0; c < L.size(); ++c)
    if (L.leq(lo, c) && L.leq(c, hi)) out.push_back(c);
  return out;
}

Interval interval(const Lattice& L, Elem lo, Elem hi) {
  L.check_elem(lo);
  L.check_elem(hi);
  if (!L.leq(lo, hi))
    throw ValidationError("interval endpoints are not ordered: " + L.name(lo) + " is not below " +
                          L.name(hi));
  return Interval{lo, hi};
}

std::vector<Elem> convex_hull(const Lattice& L, std::span<const Elem> elems) {
  if (elems.empty()) throw ValidationError("convex_hull of an empty set");
  for (Elem a : elems) L.check_elem(a);
  std::vector<bool> in(static_cast<size_t>(L.size()), false);
  for (Elem a : elems) in[static_cast<size_t>(a)] = true;
  if (L.is_chain()) {
    Elem lo = *std::min_element(elems.begin(), elems.end());
    Elem hi = *std::max_element(elems.begin(), elems.end());
    std::vector<Elem> out;
    for (Elem c = lo; c <= hi; ++c) out.push_back(c);
    return out;
  }
  // Fixpoint closure under betweenness: add every c with u <= c <= v for
  // u, v already in the set, until stable.
  bool changed = true;
  while (changed) {
    changed = false;
    for (Elem c = 0; c < L.size(); ++c) {
      if (in[static_cast<size_t>(c)]) continue;
      bool between = false;
      for (Elem u = 0; u < L.size() && !between; ++u) {
        if (!in[static_cast<size_t>(u)] || !L.leq(u, c)) continue;
        for (Elem v = 0; v < L.size() && !between; ++v)
          if (in[static_cast<size_t>(v)] && L.leq(c, v)) between = true;
      }
      if (between) {
        in[static_cast<size_t>(c)] = true;
        changed = true;
      }
    }
  }
  std::vector<Elem> out;
  for (Elem c = 0; c < L.size(); ++c)
    if (in[static_cast<size_t>(c)]) out.push_back(c);
  return out;
}

} // namespace latpoly
