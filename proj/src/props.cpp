#include "latpoly/props.hpp"

#include <algorithm>

namespace latpoly {

namespace {

std::string set_display(const Lattice& L, const std::vector<Elem>& S) {
  std::string out = "{";
  for (size_t i = 0; i < S.size(); ++i) {
    if (i) out += ",";
    out += L.name(S[i]);
  }
  out += "}";
  return out;
}

std::vector<Elem> normalize_set(const Lattice& L, const std::vector<Elem>& S) {
  std::vector<Elem> out = S;
  for (Elem c : out) L.check_elem(c);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Elem> all_elems(const Lattice& L) {
  std::vector<Elem> out(static_cast<size_t>(L.size()));
  for (Elem c = 0; c < L.size(); ++c) out[static_cast<size_t>(c)] = c;
  return out;
}

bool is_boolean_tuple(const Lattice& L, const Tuple& x) {
  return std::all_of(x.begin(), x.end(),
                     [&](Elem v) { return v == L.bottom() || v == L.top(); });
}

void require_domain(const std::string& property, Domain d, std::initializer_list<Domain> allowed) {
  if (std::find(allowed.begin(), allowed.end(), d) == allowed.end())
    throw ValidationError(property + " does not accept domain '" + domain_name(d) + "'");
}

/// Membership of x in the tuple sweep of a checker for the given selector.
/// median_union selects the L_n^(0,2) union L_n^(1,3) reading of Weak used
/// by median decomposability.
bool in_sweep(const Lattice& L, const Tuple& x, Domain d, bool median_union) {
  switch (d) {
    case Domain::Full: return true;
    case Domain::Boolean: return is_boolean_tuple(L, x);
    case Domain::Weak:
      if (median_union)
        return class_contains(L, x, VectorClass(0, 2)) || class_contains(L, x, VectorClass(1, 3));
      return class_contains(L, x, VectorClass(0, 2));
    case Domain::ZeroTwoOnly: return class_contains(L, x, VectorClass(0, 2));
  }
  return false;
}

std::string tuple_domain_display(Domain d, int n, bool median_union) {
  const std::string ns = std::to_string(n);
  switch (d) {
    case Domain::Full: return "L^" + ns;
    case Domain::Boolean: return "{bottom,top}^" + ns;
    case Domain::Weak:
      if (median_union) return "L_" + ns + "^(0,2) union L_" + ns + "^(1,3)";
      return "L_" + ns + "^(0,2)";
    case Domain::ZeroTwoOnly: return "L_" + ns + "^(0,2)";
  }
  return "";
}

// Raw defining equations, shared by the sweeps and by recheck_witness.

bool violates_min_hom(const FunctionTable& f, const Tuple& x, Elem c) {
  const Lattice& L = f.lattice();
  return f(tuple_meet_const(L, x, c)) != L.meet(f(x), c);
}

bool violates_max_hom(const FunctionTable& f, const Tuple& x, Elem c) {
  const Lattice& L = f.lattice();
  return f(tuple_join_const(L, x, c)) != L.join(f(x), c);
}

bool violates_hor_min(const FunctionTable& f, const Tuple& x, Elem c) {
  const Lattice& L = f.lattice();
  return f(x) != L.meet(f(tuple_join_const(L, x, c)), f(cut_above(L, x, c)));
}

bool violates_hor_max(const FunctionTable& f, const Tuple& x, Elem c) {
  const Lattice& L = f.lattice();
  return f(x) != L.join(f(tuple_meet_const(L, x, c)), f(cut_below(L, x, c)));
}

bool violates_med_decomp(const FunctionTable& f, const Tuple& x, int k0) {
  const Lattice& L = f.lattice();
  Tuple lo = x, hi = x;
  lo[static_cast<size_t>(k0)] = L.bottom();
  hi[static_cast<size_t>(k0)] = L.top();
  return f(x) != med(L, {f(lo), x[static_cast<size_t>(k0)], f(hi)});
}

bool violates_strong_idem(const FunctionTable& f, const Tuple& x, int k0) {
  Tuple y = x;
  y[static_cast<size_t>(k0)] = f(x);
  return f(y) != f(x);
}

bool violates_conservative(const FunctionTable& f, const Tuple& x) {
  const Elem v = f(x);
  return std::find(x.begin(), x.end(), v) == x.end();
}

bool violates_comonot_min(const FunctionTable& f, const Tuple& x, const Tuple& y) {
  const Lattice& L = f.lattice();
  Tuple z(x.size());
  for (size_t i = 0; i < x.size(); ++i) z[i] = L.meet(x[i], y[i]);
  return f(z) != L.meet(f(x), f(y));
}

bool violates_comonot_max(const FunctionTable& f, const Tuple& x, const Tuple& y) {
  const Lattice& L = f.lattice();
  Tuple z(x.size());
  for (size_t i = 0; i < x.size(); ++i) z[i] = L.join(x[i], y[i]);
  return f(z) != L.join(f(x), f(y));
}

/// Shared sweep for the four (x, c)-quantified checkers. The violation is
/// searched tuple-major, then c ascending; S must already be normalized.
PropertyReport sweep_x_c(const FunctionTable& f, const std::string& property, Domain domain,
                         const std::vector<Elem>& cs, const std::vector<Elem>& s_reported,
                         const std::string& c_display,
                         bool (*violates)(const FunctionTable&, const Tuple&, Elem)) {
  const Lattice& L = f.lattice();
  PropertyReport rep;
  rep.property = property;
  rep.domain = domain;
  rep.s_set = s_reported;
  rep.checked_domain =
      "x in " + tuple_domain_display(domain, f.arity(), false) + ", c in " + c_display;
  for_each_tuple(L, f.arity(), [&](const Tuple& x) {
    if (!rep.holds) return;
    if (!in_sweep(L, x, domain, false)) return;
    for (Elem c : cs)
      if (violates(f, x, c)) {
        rep.holds = false;
        rep.witness_tuples = {x};
        rep.witness_c = c;
        return;
      }
  });
  return rep;
}

/// Shared sweep for the (x, k)-quantified checkers.
PropertyReport sweep_x_k(const FunctionTable& f, const std::string& property,
                         std::optional<Domain> domain, bool median_union,
                         const std::string& domain_display,
                         bool (*violates)(const FunctionTable&, const Tuple&, int)) {
  const Lattice& L = f.lattice();
  PropertyReport rep;
  rep.property = property;
  rep.domain = domain;
  rep.checked_domain = domain_display;
  for_each_tuple(L, f.arity(), [&](const Tuple& x) {
    if (!rep.holds) return;
    if (domain && !in_sweep(L, x, *domain, median_union)) return;
    for (int k = 0; k < f.arity(); ++k)
      if (violates(f, x, k)) {
        rep.holds = false;
        rep.witness_tuples = {x};
        rep.witness_k = k + 1;
        return;
      }
  });
  return rep;
}

/// Range of a unary section: values of f as coordinate k0 sweeps L with the
/// other coordinates frozen at x.
std::vector<Elem> section_values(const FunctionTable& f, const Tuple& x, int k0) {
  const Lattice& L = f.lattice();
  std::vector<Elem> vals;
  vals.reserve(static_cast<size_t>(L.size()));
  Tuple y = x;
  for (Elem v = 0; v < L.size(); ++v) {
    y[static_cast<size_t>(k0)] = v;
    vals.push_back(f(y));
  }
  return vals;
}

/// First convex-hull element missing from the given value collection,
/// ascending; nullopt when the value set is convex.
std::optional<Elem> first_hull_gap(const Lattice& L, const std::vector<Elem>& vals) {
  std::vector<bool> present(static_cast<size_t>(L.size()), false);
  for (Elem v : vals) present[static_cast<size_t>(v)] = true;
  for (Elem h : convex_hull(L, std::span<const Elem>(vals.data(), vals.size())))
    if (!present[static_cast<size_t>(h)]) return h;
  return std::nullopt;
}

PropertyReport comonotonic_sweep(const FunctionTable& f, const std::string& property,
                                 bool (*violates)(const FunctionTable&, const Tuple&,
                                                  const Tuple&)) {
  const Lattice& L = f.lattice();
  if (!L.is_chain())
    throw UnsupportedLatticeError(property + " is defined on chains only");
  PropertyReport rep;
  rep.property = property;
  rep.checked_domain = "comonotonic pairs (x, x') in L^" + std::to_string(f.arity()) + " x L^" +
                       std::to_string(f.arity());
  for_each_tuple(L, f.arity(), [&](const Tuple& x) {
    if (!rep.holds) return;
    for_each_tuple(L, f.arity(), [&](const Tuple& y) {
      if (!rep.holds) return;
      if (!are_comonotonic(L, x, y)) return;
      if (violates(f, x, y)) {
        rep.holds = false;
        rep.witness_tuples = {x, y};
      }
    });
  });
  return rep;
}

} // namespace

std::string domain_name(Domain d) {
  switch (d) {
    case Domain::Full: return "full";
    case Domain::Weak: return "weak";
    case Domain::Boolean: return "boolean";
    case Domain::ZeroTwoOnly: return "zero-two-only";
  }
  return "?";
}

Domain domain_from_name(const std::string& name) {
  if (name == "full") return Domain::Full;
  if (name == "weak") return Domain::Weak;
  if (name == "boolean") return Domain::Boolean;
  if (name == "zero-two-only") return Domain::ZeroTwoOnly;
  throw ValidationError("unknown domain '" + name +
                        "' (expected full, weak, boolean, or zero-two-only)");
}

VectorClass::VectorClass(int p_value, int q_value) : p(p_value), q(q_value) {
  if (p < 0 || p > q)
    throw ValidationError("vector class requires 0 <= p <= q, got p=" + std::to_string(p) +
                          ", q=" + std::to_string(q));
}

bool class_contains(const Lattice& L, const Tuple& x, VectorClass cls) {
  std::vector<Elem> distinct;
  for (Elem v : x)
    if (std::find(distinct.begin(), distinct.end(), v) == distinct.end()) distinct.push_back(v);
  int boundary = 0;
  for (Elem v : distinct)
    if (v == L.bottom() || v == L.top()) ++boundary;
  return boundary >= cls.p && static_cast<int>(distinct.size()) <= cls.q;
}

std::vector<Tuple> enumerate_class(const Lattice& L, int n, VectorClass cls) {
  if (cls.q > n)
    throw ValidationError("vector class requires q <= n, got q=" + std::to_string(cls.q) +
                          ", n=" + std::to_string(n));
  std::vector<Tuple> out;
  for_each_tuple(L, n, [&](const Tuple& x) {
    if (class_contains(L, x, cls)) out.push_back(x);
  });
  return out;
}

Interval range_hull(const FunctionTable& f) {
  const Lattice& L = f.lattice();
  const Elem a = f.at_bottom();
  const Elem b = f.at_top();
  return Interval{L.meet(a, b), L.join(a, b)};
}

Tuple cut_above(const Lattice& L, const Tuple& x, Elem c) {
  L.check_elem(c);
  Tuple r = x;
  for (Elem& v : r) {
    L.check_elem(v);
    if (L.leq(c, v)) v = L.top();
  }
  return r;
}

Tuple cut_below(const Lattice& L, const Tuple& x, Elem c) {
  L.check_elem(c);
  Tuple r = x;
  for (Elem& v : r) {
    L.check_elem(v);
    if (L.leq(v, c)) v = L.bottom();
  }
  return r;
}

Tuple clamp(const FunctionTable& f, const Tuple& x) {
  const Lattice& L = f.lattice();
  const Elem a = f.at_bottom();
  const Elem b = f.at_top();
  Tuple r = x;
  for (Elem& v : r) {
    L.check_elem(v);
    v = med(L, {a, v, b});
  }
  return r;
}

PropertyReport check_nondecreasing(const FunctionTable& f) {
  const Lattice& L = f.lattice();
  PropertyReport rep;
  rep.property = "nondecreasing";
  rep.checked_domain = "single-coordinate cover steps over L^" + std::to_string(f.arity());
  for_each_tuple(L, f.arity(), [&](const Tuple& x) {
    if (!rep.holds) return;
    for (int k = 0; k < f.arity(); ++k) {
      for (Elem u : L.upper_covers(x[static_cast<size_t>(k)])) {
        Tuple y = x;
        y[static_cast<size_t>(k)] = u;
        if (!L.leq(f(x), f(y))) {
          rep.holds = false;
          rep.witness_tuples = {x, y};
          rep.witness_k = k + 1;
          return;
        }
      }
    }
  });
  return rep;
}

PropertyReport check_idempotent(const FunctionTable& f, const std::vector<Elem>& S) {
  const Lattice& L = f.lattice();
  const std::vector<Elem> s = normalize_set(L, S);
  PropertyReport rep;
  rep.property = "idempotent";
  rep.s_set = s;
  rep.checked_domain = "c in S=" + set_display(L, s);
  for (Elem c : s) {
    const Tuple x(static_cast<size_t>(f.arity()), c);
    if (f(x) != c) {
      rep.holds = false;
      rep.witness_tuples = {x};
      rep.witness_c = c;
      break;
    }
  }
  return rep;
}

PropertyReport check_min_homogeneous(const FunctionTable& f, const std::vector<Elem>& S,
                                     Domain domain) {
  require_domain("min-homogeneous", domain, {Domain::Full, Domain::Weak, Domain::Boolean});
  const Lattice& L = f.lattice();
  const std::vector<Elem> s = normalize_set(L, S);
  if (domain != Domain::Boolean && s.empty())
    throw ValidationError("min-homogeneous requires a nonempty S");
  const bool over_l = domain == Domain::Boolean;
  return sweep_x_c(f, "min-homogeneous", domain, over_l ? all_elems(L) : s,
                   over_l ? all_elems(L) : s, over_l ? "L" : "S=" + set_display(L, s),
                   &violates_min_hom);
}

PropertyReport check_max_homogeneous(const FunctionTable& f, const std::vector<Elem>& S,
                                     Domain domain) {
  require_domain("max-homogeneous", domain, {Domain::Full, Domain::Weak, Domain::Boolean});
  const Lattice& L = f.lattice();
  const std::vector<Elem> s = normalize_set(L, S);
  if (domain != Domain::Boolean && s.empty())
    throw ValidationError("max-homogeneous requires a nonempty S");
  const bool over_l = domain == Domain::Boolean;
  return sweep_x_c(f, "max-homogeneous", domain, over_l ? all_elems(L) : s,
                   over_l ? all_elems(L) : s, over_l ? "L" : "S=" + set_display(L, s),
                   &violates_max_hom);
}

PropertyReport check_horizontally_minitive(const FunctionTable& f, const std::vector<Elem>& S,
                                           Domain domain) {
  require_domain("horizontally-minitive", domain, {Domain::Full, Domain::Weak});
  const Lattice& L = f.lattice();
  const std::vector<Elem> s = normalize_set(L, S);
  return sweep_x_c(f, "horizontally-minitive", domain, s, s, "S=" + set_display(L, s),
                   &violates_hor_min);
}

PropertyReport check_horizontally_maxitive(const FunctionTable& f, const std::vector<Elem>& S,
                                           Domain domain) {
  require_domain("horizontally-maxitive", domain, {Domain::Full, Domain::Weak});
  const Lattice& L = f.lattice();
  const std::vector<Elem> s = normalize_set(L, S);
  return sweep_x_c(f, "horizontally-maxitive", domain, s, s, "S=" + set_display(L, s),
                   &violates_hor_max);
}

PropertyReport check_median_decomposable(const FunctionTable& f, Domain domain) {
  require_domain("median-decomposable", domain,
                 {Domain::Full, Domain::Weak, Domain::ZeroTwoOnly});
  const bool median_union = domain == Domain::Weak;
  const std::string display = "x in " +
                              tuple_domain_display(domain, f.arity(), median_union) + ", k in [" +
                              std::to_string(f.arity()) + "]";
  return sweep_x_k(f, "median-decomposable", domain, median_union, display,
                   &violates_med_decomp);
}

PropertyReport check_strongly_idempotent(const FunctionTable& f) {
  const std::string display =
      "x in L^" + std::to_string(f.arity()) + ", k in [" + std::to_string(f.arity()) + "]";
  return sweep_x_k(f, "strongly-idempotent", std::nullopt, false, display,
                   &violates_strong_idem);
}

PropertyReport check_convex_range(const FunctionTable& f) {
  const Lattice& L = f.lattice();
  PropertyReport rep;
  rep.property = "convex-range";
  rep.checked_domain = "range of f over L^" + std::to_string(f.arity());
  if (const auto gap = first_hull_gap(L, f.values())) {
    rep.holds = false;
    rep.witness_c = *gap;
  }
  return rep;
}

PropertyReport check_componentwise_convex_range(const FunctionTable& f) {
  const Lattice& L = f.lattice();
  PropertyReport rep;
  rep.property = "componentwise-convex-range";
  if (f.arity() == 1) {
    rep.checked_domain = "unary range of f over L";
    if (const auto gap = first_hull_gap(L, f.values())) {
      rep.holds = false;
      rep.witness_c = *gap;
    }
    return rep;
  }
  rep.checked_domain = "unary sections of f over L^" + std::to_string(f.arity());
  for_each_tuple(L, f.arity(), [&](const Tuple& x) {
    if (!rep.holds) return;
    for (int k = 0; k < f.arity(); ++k) {
      if (x[static_cast<size_t>(k)] != L.bottom()) continue; // one visit per section
      if (const auto gap = first_hull_gap(L, section_values(f, x, k))) {
        rep.holds = false;
        rep.witness_tuples = {x};
        rep.witness_k = k + 1;
        rep.witness_c = *gap;
        return;
      }
    }
  });
  return rep;
}

bool are_comonotonic(const Lattice& L, const Tuple& x, const Tuple& y) {
  if (!L.is_chain())
    throw UnsupportedLatticeError("comonotonicity is defined on chains only");
  if (x.size() != y.size()) throw ValidationError("comonotonicity needs tuples of equal arity");
  for (size_t i = 0; i < x.size(); ++i)
    for (size_t j = i + 1; j < x.size(); ++j) {
      if (x[i] < x[j] && y[i] > y[j]) return false;
      if (x[i] > x[j] && y[i] < y[j]) return false;
    }
  return true;
}

PropertyReport check_comonotonic_minitive(const FunctionTable& f) {
  return comonotonic_sweep(f, "comonotonic-minitive", &violates_comonot_min);
}

PropertyReport check_comonotonic_maxitive(const FunctionTable& f) {
  return comonotonic_sweep(f, "comonotonic-maxitive", &violates_comonot_max);
}

PropertyReport check_conservative(const FunctionTable& f, Domain domain) {
  require_domain("conservative", domain, {Domain::Full, Domain::Boolean});
  const Lattice& L = f.lattice();
  PropertyReport rep;
  rep.property = "conservative";
  rep.domain = domain;
  rep.checked_domain = "x in " + tuple_domain_display(domain, f.arity(), false);
  for_each_tuple(L, f.arity(), [&](const Tuple& x) {
    if (!rep.holds) return;
    if (!in_sweep(L, x, domain, false)) return;
    if (violates_conservative(f, x)) {
      rep.holds = false;
      rep.witness_tuples = {x};
    }
  });
  return rep;
}

bool recheck_witness(const FunctionTable& f, const PropertyReport& report) {
  if (report.holds) return true;
  const Lattice& L = f.lattice();
  const auto& w = report.witness_tuples;
  auto tuple_ok = [&](const Tuple& x) {
    if (static_cast<int>(x.size()) != f.arity()) return false;
    for (Elem v : x)
      if (v < 0 || v >= L.size()) return false;
    return true;
  };
  for (const Tuple& x : w)
    if (!tuple_ok(x)) return false;
  auto in_domain = [&](const Tuple& x, bool median_union) {
    return !report.domain || in_sweep(L, x, *report.domain, median_union);
  };
  auto c_in_s = [&]() {
    if (!report.witness_c) return false;
    if (!report.s_set) return true;
    return std::find(report.s_set->begin(), report.s_set->end(), *report.witness_c) !=
           report.s_set->end();
  };
  const std::string& p = report.property;

  if (p == "nondecreasing") {
    if (w.size() != 2) return false;
    for (size_t i = 0; i < w[0].size(); ++i)
      if (!L.leq(w[0][i], w[1][i])) return false;
    return !L.leq(f(w[0]), f(w[1]));
  }
  if (p == "idempotent") {
    if (!c_in_s()) return false;
    const Tuple x(static_cast<size_t>(f.arity()), *report.witness_c);
    return f(x) != *report.witness_c;
  }
  if (p == "min-homogeneous" || p == "max-homogeneous") {
    if (w.size() != 1 || !c_in_s() || !in_domain(w[0], false)) return false;
    return p == "min-homogeneous" ? violates_min_hom(f, w[0], *report.witness_c)
                                  : violates_max_hom(f, w[0], *report.witness_c);
  }
  if (p == "horizontally-minitive" || p == "horizontally-maxitive") {
    if (w.size() != 1 || !c_in_s() || !in_domain(w[0], false)) return false;
    return p == "horizontally-minitive" ? violates_hor_min(f, w[0], *report.witness_c)
                                        : violates_hor_max(f, w[0], *report.witness_c);
  }
  if (p == "median-decomposable") {
    if (w.size() != 1 || !report.witness_k || !in_domain(w[0], true)) return false;
    const int k = *report.witness_k - 1;
    if (k < 0 || k >= f.arity()) return false;
    return violates_med_decomp(f, w[0], k);
  }
  if (p == "strongly-idempotent") {
    if (w.size() != 1 || !report.witness_k) return false;
    const int k = *report.witness_k - 1;
    if (k < 0 || k >= f.arity()) return false;
    return violates_strong_idem(f, w[0], k);
  }
  if (p == "convex-range") {
    if (!report.witness_c) return false;
    const auto hull = convex_hull(L, std::span<const Elem>(f.values().data(), f.values().size()));
    const bool in_hull = std::find(hull.begin(), hull.end(), *report.witness_c) != hull.end();
    const bool in_range =
        std::find(f.values().begin(), f.values().end(), *report.witness_c) != f.values().end();
    return in_hull && !in_range;
  }
  if (p == "componentwise-convex-range") {
    if (!report.witness_c) return false;
    std::vector<Elem> vals;
    if (f.arity() == 1) {
      vals = f.values();
    } else {
      if (w.size() != 1 || !report.witness_k) return false;
      const int k = *report.witness_k - 1;
      if (k < 0 || k >= f.arity()) return false;
      vals = section_values(f, w[0], k);
    }
    const auto hull = convex_hull(L, std::span<const Elem>(vals.data(), vals.size()));
    const bool in_hull = std::find(hull.begin(), hull.end(), *report.witness_c) != hull.end();
    const bool in_range = std::find(vals.begin(), vals.end(), *report.witness_c) != vals.end();
    return in_hull && !in_range;
  }
  if (p == "comonotonic-minitive" || p == "comonotonic-maxitive") {
    if (w.size() != 2 || !are_comonotonic(L, w[0], w[1])) return false;
    return p == "comonotonic-minitive" ? violates_comonot_min(f, w[0], w[1])
                                       : violates_comonot_max(f, w[0], w[1]);
  }
  if (p == "conservative") {
    if (w.size() != 1 || !in_domain(w[0], false)) return false;
    return violates_conservative(f, w[0]);
  }
  throw ValidationError("recheck_witness: unknown property '" + p + "'");
}

} // namespace latpoly
