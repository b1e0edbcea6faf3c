#include "latpoly/harness.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <future>
#include <limits>
#include <map>
#include <span>
#include <thread>
#include <utility>

#include "latpoly/errors.hpp"

namespace latpoly {

namespace {

constexpr std::uint64_t kCountSaturation = std::uint64_t{1} << 63;

std::string b2s(bool v) { return v ? "true" : "false"; }

std::vector<Elem> all_of(const Lattice& L) {
  std::vector<Elem> out(static_cast<size_t>(L.size()));
  for (int i = 0; i < L.size(); ++i) out[static_cast<size_t>(i)] = i;
  return out;
}

/// Endpoint range hull [f(0..0) meet f(1..1), join of the same] as a set.
std::vector<Elem> hull_set(const FunctionTable& f) {
  const Interval h = range_hull(f);
  return interval_elems(f.lattice(), h.lo, h.hi);
}

/// Distinct achieved values, ascending.
std::vector<Elem> range_set(const FunctionTable& f) {
  std::vector<Elem> vals = f.values();
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  return vals;
}

/// All nonempty subsets of the carrier, by ascending characteristic mask.
std::vector<std::vector<Elem>> nonempty_subsets(const Lattice& L) {
  const int m = L.size();
  if (m > 20)
    throw ValidationError("subset sweeps support carriers with at most 20 elements, got " +
                          std::to_string(m));
  std::vector<std::vector<Elem>> out;
  out.reserve((size_t{1} << m) - 1);
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << m); ++mask) {
    std::vector<Elem> s;
    for (int i = 0; i < m; ++i)
      if (mask & (std::uint32_t{1} << i)) s.push_back(i);
    out.push_back(std::move(s));
  }
  return out;
}

std::string set_display(const Lattice& L, const std::vector<Elem>& s) {
  std::string out = "{";
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += L.name(s[i]);
  }
  return out + "}";
}

std::string values_display(const Lattice& L, const std::vector<Elem>& vals) {
  std::string out = "[";
  for (size_t i = 0; i < vals.size(); ++i) {
    if (i) out += ",";
    out += L.name(vals[i]);
  }
  return out + "]";
}

// ---------------------------------------------------------------------------
// Per-statement table checks. Each returns the first found violation detail,
// or nullopt when the statement holds for the given table.
// ---------------------------------------------------------------------------

using TableCheck = std::function<std::optional<std::string>(const FunctionTable&)>;

/// Equivalence of each named characterization bundle with the recognition
/// verdict, per table.
TableCheck bundle_check(std::vector<std::string> names) {
  return [names = std::move(names)](const FunctionTable& f) -> std::optional<std::string> {
    const BundleMatrix m = characterize(f);
    for (const BundleVerdict& b : m.bundles) {
      if (!b.applicable) continue;
      if (std::find(names.begin(), names.end(), b.bundle) == names.end()) continue;
      if (b.holds != m.polynomial)
        return "bundle " + b.bundle + (b.holds ? " holds" : " fails") +
               " but recognition says polynomial=" + b2s(m.polynomial);
    }
    return std::nullopt;
  };
}

/// Three-way equivalence between recognition and the two simplex form
/// families (canonical join/meet/median forms, and their duals).
std::optional<std::string> check_simplex_dnf(const FunctionTable& f) {
  const Lattice& L = f.lattice();
  const int n = f.arity();
  const bool poly = decide_polynomial(f).verdict;
  const CoefMap alpha = alpha_from_oracle(f);
  const CoefMap beta = beta_from_oracle(f);

  bool alpha_forms = true;
  bool beta_forms = true;
  for_each_tuple(L, n, [&](const Tuple& x) {
    if (!alpha_forms && !beta_forms) return;
    const Elem fx = f(x);
    if (alpha_forms) {
      const SimplexForms sf = simplex_forms(L, alpha, x);
      if (!(sf.agree() && sf.join_form == fx)) alpha_forms = false;
    }
    if (beta_forms) {
      const SimplexDecomp d = decompose(L, x);
      auto xs = [&](int i) { // x_sigma(i), with sigma(0) -> bottom, sigma(n+1) -> top
        if (i <= 0) return L.bottom();
        if (i > n) return L.top();
        return x[static_cast<size_t>(d.sigma[static_cast<size_t>(i - 1)])];
      };
      Elem join_form = L.bottom();
      Elem meet_form = L.top();
      for (int i = 1; i <= n + 1; ++i) {
        const Elem coef = beta.at(d.down_sets[static_cast<size_t>(i - 1)]);
        join_form = L.join(join_form, L.meet(coef, xs(i)));
        meet_form = L.meet(meet_form, L.join(coef, xs(i - 1)));
      }
      std::vector<Elem> med_args(x.begin(), x.end());
      for (int i = 0; i <= n; ++i) med_args.push_back(beta.at(d.down_sets[static_cast<size_t>(i)]));
      const Elem med_form = med(L, std::span<const Elem>(med_args.data(), med_args.size()));
      if (!(join_form == fx && meet_form == fx && med_form == fx)) beta_forms = false;
    }
  });
  if (poly != alpha_forms || poly != beta_forms)
    return "polynomial=" + b2s(poly) + " but canonical simplex forms reproduce f: " +
           b2s(alpha_forms) + ", dual simplex forms reproduce f: " + b2s(beta_forms);
  return std::nullopt;
}

bool coef_isotone(const Lattice& L, const CoefMap& g) {
  for (Mask I = 0; I < g.subset_count(); ++I)
    for (int j = 0; j < g.arity; ++j) {
      const Mask J = I | (Mask{1} << j);
      if (J != I && !L.leq(g.at(I), g.at(J))) return false;
    }
  return true;
}

bool coef_antitone(const Lattice& L, const CoefMap& g) {
  for (Mask I = 0; I < g.subset_count(); ++I)
    for (int j = 0; j < g.arity; ++j) {
      const Mask J = I | (Mask{1} << j);
      if (J != I && !L.leq(g.at(J), g.at(I))) return false;
    }
  return true;
}

/// For a polynomial table, the representing DNF coefficient maps are
/// exactly the box [alpha*, alpha] (dually [beta, beta*] for CNF), alpha is
/// the unique isotone map in the box (beta the unique antitone one), and
/// the uniqueness flags equal box degeneracy. Verified against a sweep of
/// every coefficient map.
std::optional<std::string> check_uniqueness(const FunctionTable& f) {
  const Lattice& L = f.lattice();
  const int n = f.arity();
  const Decision d = decide_polynomial(f);
  if (!d.verdict) return std::nullopt;

  const CoefMap alpha = alpha_from_oracle(f);
  const CoefMap astar = alpha_star(L, alpha);
  const CoefMap beta = beta_from_oracle(f);
  const CoefMap bstar = beta_star(L, beta);
  const Mask subsets = Mask{1} << n;

  bool dnf_degenerate = true;
  bool cnf_degenerate = true;
  for (Mask I = 0; I < subsets; ++I) {
    dnf_degenerate = dnf_degenerate && astar.at(I) == alpha.at(I);
    cnf_degenerate = cnf_degenerate && beta.at(I) == bstar.at(I);
  }
  if (is_unique_dnf(f) != dnf_degenerate)
    return "unique-dnf flag " + b2s(is_unique_dnf(f)) + " but the box [alpha*, alpha] " +
           (dnf_degenerate ? "is" : "is not") + " a single map";
  if (is_unique_cnf(f) != cnf_degenerate)
    return "unique-cnf flag " + b2s(is_unique_cnf(f)) + " but the box [beta, beta*] " +
           (cnf_degenerate ? "is" : "is not") + " a single map";

  CoefMap gamma{n, std::vector<Elem>(static_cast<size_t>(subsets), L.bottom())};
  const int m = L.size();
  bool more = true;
  while (more) {
    bool dnf_same = true;
    bool cnf_same = true;
    for_each_tuple(L, n, [&](const Tuple& x) {
      if (dnf_same && eval_dnf(L, gamma, x) != f(x)) dnf_same = false;
      if (cnf_same && eval_cnf(L, gamma, x) != f(x)) cnf_same = false;
    });
    bool in_dnf_box = true;
    bool in_cnf_box = true;
    for (Mask I = 0; I < subsets; ++I) {
      in_dnf_box = in_dnf_box && L.leq(astar.at(I), gamma.at(I)) && L.leq(gamma.at(I), alpha.at(I));
      in_cnf_box = in_cnf_box && L.leq(beta.at(I), gamma.at(I)) && L.leq(gamma.at(I), bstar.at(I));
    }
    if (dnf_same != in_dnf_box)
      return "coefficients " + values_display(L, gamma.values) + " reproduce f as DNF: " +
             b2s(dnf_same) + " but lie in [alpha*, alpha]: " + b2s(in_dnf_box);
    if (cnf_same != in_cnf_box)
      return "coefficients " + values_display(L, gamma.values) + " reproduce f as CNF: " +
             b2s(cnf_same) + " but lie in [beta, beta*]: " + b2s(in_cnf_box);
    if (in_dnf_box && coef_isotone(L, gamma) && !(gamma == alpha))
      return "isotone coefficients " + values_display(L, gamma.values) +
             " lie in [alpha*, alpha] but differ from alpha";
    if (in_cnf_box && coef_antitone(L, gamma) && !(gamma == beta))
      return "antitone coefficients " + values_display(L, gamma.values) +
             " lie in [beta, beta*] but differ from beta";

    more = false;
    for (size_t pos = gamma.values.size(); pos-- > 0;) {
      if (++gamma.values[pos] < m) {
        more = true;
        break;
      }
      gamma.values[pos] = 0;
    }
  }
  return std::nullopt;
}

/// Range-hull homogeneity and idempotency interplay: hull idempotency
/// forces a convex range; polynomials satisfy all hull conditions; hull
/// homogeneity factors into range homogeneity plus convexity, and then the
/// range is the closed interval between the endpoint values.
std::optional<std::string> check_hom_id(const FunctionTable& f) {
  const Lattice& L = f.lattice();
  const std::vector<Elem> range = range_set(f);
  const std::vector<Elem> hull = convex_hull(L, std::span<const Elem>(range.data(), range.size()));
  const bool convex = range == hull;

  const bool idem_hull = check_idempotent(f, hull).holds;
  if (idem_hull && !convex)
    return "idempotent over the range hull but the range " + set_display(L, range) +
           " is not convex";

  const bool min_hull = check_min_homogeneous(f, hull, Domain::Full).holds;
  const bool max_hull = check_max_homogeneous(f, hull, Domain::Full).holds;
  if (decide_polynomial(f).verdict && !(min_hull && max_hull && idem_hull && convex))
    return "polynomial but hull min-homogeneous=" + b2s(min_hull) +
           ", hull max-homogeneous=" + b2s(max_hull) + ", hull idempotent=" + b2s(idem_hull) +
           ", convex range=" + b2s(convex);

  const bool min_range = check_min_homogeneous(f, range, Domain::Full).holds;
  if (min_hull != (min_range && convex))
    return "hull min-homogeneous=" + b2s(min_hull) + " but range min-homogeneous=" +
           b2s(min_range) + " and convex range=" + b2s(convex);
  const bool max_range = check_max_homogeneous(f, range, Domain::Full).holds;
  if (max_hull != (max_range && convex))
    return "hull max-homogeneous=" + b2s(max_hull) + " but range max-homogeneous=" +
           b2s(max_range) + " and convex range=" + b2s(convex);

  // Both-sided hull homogeneity pins the range to the endpoint interval:
  // one side alone does not (witness [0,0,0,0,1,1,0,2,1] on the size-3
  // chain, hull-min-homogeneous with range {0,1,2} but f(top)=1).
  if (min_hull && max_hull) {
    const Elem f0 = f.at_bottom();
    const Elem f1 = f.at_top();
    const bool interval_ok =
        L.leq(f0, f1) && convex && hull == interval_elems(L, f0, f1);
    if (!interval_ok)
      return "hull-homogeneous but the range is not the interval between f(bottom)=" + L.name(f0) +
             " and f(top)=" + L.name(f1);
  }
  return std::nullopt;
}

/// Every polynomial equals the clamped Sugeno integral of its derived
/// measure.
std::optional<std::string> check_prop_sug(const FunctionTable& f) {
  if (!decide_polynomial(f).verdict) return std::nullopt;
  const Lattice& L = f.lattice();
  const FuzzyMeasure mu = measure_from_poly(f);
  std::optional<std::string> detail;
  for_each_tuple(L, f.arity(), [&](const Tuple& x) {
    if (detail) return;
    const Elem clamped = med(L, {f.at_bottom(), sugeno_eval(mu, x), f.at_top()});
    if (clamped != f(x))
      detail = "clamped Sugeno integral gives " + L.name(clamped) + " at " +
               tuple_display(L, x) + " but f gives " + L.name(f(x));
  });
  return detail;
}

/// Sugeno recognition agrees with nondecreasing + Boolean min and max
/// homogeneity.
std::optional<std::string> check_sug_weakhom(const FunctionTable& f) {
  const bool sugeno = decide_sugeno(f).verdict;
  const bool nondec = check_nondecreasing(f).holds;
  const bool bmin = check_min_homogeneous(f, {}, Domain::Boolean).holds;
  const bool bmax = check_max_homogeneous(f, {}, Domain::Boolean).holds;
  if (sugeno != (nondec && bmin && bmax))
    return "sugeno=" + b2s(sugeno) + " but nondecreasing=" + b2s(nondec) +
           ", Boolean min-homogeneous=" + b2s(bmin) + ", Boolean max-homogeneous=" + b2s(bmax);
  return std::nullopt;
}

/// For nondecreasing tables, weak median decomposability agrees with weak
/// hull homogeneity (both directions).
std::optional<std::string> check_weakmed_weakhom(const FunctionTable& f) {
  if (!check_nondecreasing(f).holds) return std::nullopt;
  const std::vector<Elem> hull = hull_set(f);
  const bool med_weak = check_median_decomposable(f, Domain::Weak).holds;
  const bool min_weak = check_min_homogeneous(f, hull, Domain::Weak).holds;
  const bool max_weak = check_max_homogeneous(f, hull, Domain::Weak).holds;
  if (med_weak != (min_weak && max_weak))
    return "weakly median decomposable=" + b2s(med_weak) + " but weak hull min-homogeneous=" +
           b2s(min_weak) + ", weak hull max-homogeneous=" + b2s(max_weak);
  return std::nullopt;
}

/// For Sugeno integrals, term recognition, conservativeness, and weak
/// conservativeness coincide.
std::optional<std::string> check_mainchar3(const FunctionTable& f) {
  if (!decide_sugeno(f).verdict) return std::nullopt;
  const bool term = decide_term(f).verdict;
  const bool cons = check_conservative(f, Domain::Full).holds;
  const bool weak_cons = check_conservative(f, Domain::Boolean).holds;
  if (term != cons || term != weak_cons)
    return "term=" + b2s(term) + ", conservative=" + b2s(cons) +
           ", weakly conservative=" + b2s(weak_cons);
  return std::nullopt;
}

/// Weak S-min plus weak S-max homogeneity force S-idempotency; with both
/// endpoint values in S, f is then invariant under clamping on two-valued
/// tuples whose value lies between the endpoint values.
std::optional<std::string> check_weakly_minmax_idem(const FunctionTable& f) {
  const Lattice& L = f.lattice();
  for (const std::vector<Elem>& S : nonempty_subsets(L)) {
    if (!check_min_homogeneous(f, S, Domain::Weak).holds) continue;
    if (!check_max_homogeneous(f, S, Domain::Weak).holds) continue;
    if (!check_idempotent(f, S).holds)
      return "weakly min- and max-homogeneous over S=" + set_display(L, S) +
             " but not idempotent over S";
    const Elem f0 = f.at_bottom();
    const Elem f1 = f.at_top();
    if (std::find(S.begin(), S.end(), f0) == S.end() ||
        std::find(S.begin(), S.end(), f1) == S.end())
      continue;
    std::optional<std::string> detail;
    for_each_tuple(L, f.arity(), [&](const Tuple& x) {
      if (detail) return;
      if (!class_contains(L, x, VectorClass(0, 2))) return;
      if (!(L.leq(f0, f(x)) && L.leq(f(x), f1))) return;
      if (f(x) != f(clamp(f, x)))
        detail = "clamping " + tuple_display(L, x) + " changes the value from " +
                 L.name(f(x)) + " to " + L.name(f(clamp(f, x))) + " despite S=" +
                 set_display(L, S);
    });
    if (detail) return detail;
  }
  return std::nullopt;
}

/// For nondecreasing tables, weak hull homogeneity on either side forces
/// hull idempotency.
std::optional<std::string> check_weakly_minmax_range_idem(const FunctionTable& f) {
  if (!check_nondecreasing(f).holds) return std::nullopt;
  const std::vector<Elem> hull = hull_set(f);
  const bool min_weak = check_min_homogeneous(f, hull, Domain::Weak).holds;
  const bool max_weak = check_max_homogeneous(f, hull, Domain::Weak).holds;
  if ((min_weak || max_weak) && !check_idempotent(f, hull).holds)
    return "weak hull min-homogeneous=" + b2s(min_weak) + ", weak hull max-homogeneous=" +
           b2s(max_weak) + " but not idempotent over the hull";
  return std::nullopt;
}

/// Nondecreasing + S-idempotent tables upgrade weak horizontal conditions
/// to weak homogeneity, for every S.
std::optional<std::string> check_weak15682(const FunctionTable& f) {
  if (!check_nondecreasing(f).holds) return std::nullopt;
  const Lattice& L = f.lattice();
  for (const std::vector<Elem>& S : nonempty_subsets(L)) {
    if (!check_idempotent(f, S).holds) continue;
    if (check_horizontally_minitive(f, S, Domain::Weak).holds &&
        !check_min_homogeneous(f, S, Domain::Weak).holds)
      return "nondecreasing, idempotent and weakly horizontally minitive over S=" +
             set_display(L, S) + " but not weakly min-homogeneous over S";
    if (check_horizontally_maxitive(f, S, Domain::Weak).holds &&
        !check_max_homogeneous(f, S, Domain::Weak).holds)
      return "nondecreasing, idempotent and weakly horizontally maxitive over S=" +
             set_display(L, S) + " but not weakly max-homogeneous over S";
  }
  return std::nullopt;
}

/// Under nondecreasingness and weak hull homogeneity on one side, weak
/// homogeneity on the other side agrees with weak horizontal splitting on
/// that side (and with its variant over all of L).
std::optional<std::string> check_weak_hor_min_hom(const FunctionTable& f) {
  if (!check_nondecreasing(f).holds) return std::nullopt;
  const Lattice& L = f.lattice();
  const std::vector<Elem> hull = hull_set(f);
  const std::vector<Elem> full = all_of(L);
  const bool min_weak = check_min_homogeneous(f, hull, Domain::Weak).holds;
  const bool max_weak = check_max_homogeneous(f, hull, Domain::Weak).holds;
  if (min_weak) {
    const bool hor_max = check_horizontally_maxitive(f, hull, Domain::Weak).holds;
    if (max_weak != hor_max)
      return "weak hull min-homogeneous, but weak hull max-homogeneous=" + b2s(max_weak) +
             " while weakly horizontally hull-maxitive=" + b2s(hor_max);
    const bool hor_max_full = check_horizontally_maxitive(f, full, Domain::Weak).holds;
    if (max_weak != hor_max_full)
      return "weak hull min-homogeneous, but weak hull max-homogeneous=" + b2s(max_weak) +
             " while weakly horizontally maxitive over L=" + b2s(hor_max_full);
  }
  if (max_weak) {
    const bool hor_min = check_horizontally_minitive(f, hull, Domain::Weak).holds;
    if (min_weak != hor_min)
      return "weak hull max-homogeneous, but weak hull min-homogeneous=" + b2s(min_weak) +
             " while weakly horizontally hull-minitive=" + b2s(hor_min);
    const bool hor_min_full = check_horizontally_minitive(f, full, Domain::Weak).holds;
    if (min_weak != hor_min_full)
      return "weak hull max-homogeneous, but weak hull min-homogeneous=" + b2s(min_weak) +
             " while weakly horizontally minitive over L=" + b2s(hor_min_full);
  }
  return std::nullopt;
}

/// Nondecreasing weakly median decomposable tables are hull idempotent.
std::optional<std::string> check_wmd_ri(const FunctionTable& f) {
  if (!check_nondecreasing(f).holds) return std::nullopt;
  if (!check_median_decomposable(f, Domain::Weak).holds) return std::nullopt;
  if (!check_idempotent(f, hull_set(f)).holds)
    return "nondecreasing and weakly median decomposable but not idempotent over the range hull";
  return std::nullopt;
}

/// Componentwise range convexity implies range convexity for nondecreasing
/// tables.
std::optional<std::string> check_componentwise_implies_conv(const FunctionTable& f) {
  if (!check_nondecreasing(f).holds) return std::nullopt;
  if (!check_componentwise_convex_range(f).holds) return std::nullopt;
  if (!check_convex_range(f).holds)
    return "nondecreasing with componentwise convex sections but a non-convex range";
  return std::nullopt;
}

/// Comonotonic minitivity yields horizontal S-minitivity for every S, and
/// S-min homogeneity once S-idempotency is added (dually for maxitivity).
std::optional<std::string> check_comonot_homog(const FunctionTable& f) {
  const Lattice& L = f.lattice();
  const bool cmin = check_comonotonic_minitive(f).holds;
  const bool cmax = check_comonotonic_maxitive(f).holds;
  if (!cmin && !cmax) return std::nullopt;
  for (const std::vector<Elem>& S : nonempty_subsets(L)) {
    const bool idem = check_idempotent(f, S).holds;
    if (cmin) {
      if (!check_horizontally_minitive(f, S, Domain::Full).holds)
        return "comonotonic minitive but not horizontally minitive over S=" + set_display(L, S);
      if (idem && !check_min_homogeneous(f, S, Domain::Full).holds)
        return "comonotonic minitive and idempotent over S=" + set_display(L, S) +
               " but not min-homogeneous over S";
    }
    if (cmax) {
      if (!check_horizontally_maxitive(f, S, Domain::Full).holds)
        return "comonotonic maxitive but not horizontally maxitive over S=" + set_display(L, S);
      if (idem && !check_max_homogeneous(f, S, Domain::Full).holds)
        return "comonotonic maxitive and idempotent over S=" + set_display(L, S) +
               " but not max-homogeneous over S";
    }
  }
  return std::nullopt;
}

/// Comonotonic minitivity or maxitivity forces nondecreasingness; every
/// nondecreasing unary table is comonotonic both ways.
std::optional<std::string> check_comonot_nondec(const FunctionTable& f) {
  const bool cmin = check_comonotonic_minitive(f).holds;
  const bool cmax = check_comonotonic_maxitive(f).holds;
  const bool nondec = check_nondecreasing(f).holds;
  if ((cmin || cmax) && !nondec)
    return "comonotonic minitive=" + b2s(cmin) + ", comonotonic maxitive=" + b2s(cmax) +
           " but not nondecreasing";
  if (f.arity() == 1 && nondec && !(cmin && cmax))
    return "nondecreasing unary table but comonotonic minitive=" + b2s(cmin) +
           ", comonotonic maxitive=" + b2s(cmax);
  return std::nullopt;
}

/// Boolean min plus Boolean max homogeneity force idempotency over all of
/// L.
std::optional<std::string> check_4985(const FunctionTable& f) {
  if (!check_min_homogeneous(f, {}, Domain::Boolean).holds) return std::nullopt;
  if (!check_max_homogeneous(f, {}, Domain::Boolean).holds) return std::nullopt;
  if (!check_idempotent(f, all_of(f.lattice())).holds)
    return "Boolean min- and max-homogeneous but not idempotent";
  return std::nullopt;
}

/// Conservativeness, closure of every S^n under f, and the membership
/// transfer condition are equivalent, all three brute-forced.
std::optional<std::string> check_conservative_equivalences(const FunctionTable& f) {
  const Lattice& L = f.lattice();
  const bool direct = check_conservative(f, Domain::Full).holds;

  bool closure = true;
  bool transfer = true;
  for (const std::vector<Elem>& S : nonempty_subsets(L)) {
    std::vector<bool> in_s(static_cast<size_t>(L.size()), false);
    for (Elem e : S) in_s[static_cast<size_t>(e)] = true;
    for_each_tuple(L, f.arity(), [&](const Tuple& x) {
      bool all_in = true;
      bool any_in = false;
      for (Elem xi : x) {
        all_in = all_in && in_s[static_cast<size_t>(xi)];
        any_in = any_in || in_s[static_cast<size_t>(xi)];
      }
      const bool fx_in = in_s[static_cast<size_t>(f(x))];
      if (all_in && !fx_in) closure = false;
      if (fx_in && !any_in) transfer = false;
    });
    if (!closure && !transfer) break;
  }
  if (direct != closure || direct != transfer)
    return "conservative=" + b2s(direct) + ", S^n closure=" + b2s(closure) +
           ", membership transfer=" + b2s(transfer);
  return std::nullopt;
}

struct TheoremSpec {
  bool chain_only = false;
  bool sequence_sweep = false;
  TableCheck check;
};

const std::map<std::string, TheoremSpec>& theorem_specs() {
  static const std::map<std::string, TheoremSpec> specs = [] {
    std::map<std::string, TheoremSpec> m;
    m["mainChar"] = {false, false,
                     bundle_check({"mainChar-ii", "mainChar-iii", "mainChar-iv", "mainChar-v",
                                   "mainChar-vi", "mainChar-vii"})};
    m["WLP-WeakHom"] = {false, false, bundle_check({"weakHom-ii"})};
    m["WLP-WeakHomWeakHor"] = {false, false,
                               bundle_check({"weakHom-ii", "weakHom-iii", "weakHom-iv",
                                             "weakHom-v", "weakHom-iii-SL", "weakHom-iv-SL",
                                             "weakHom-v-SL"})};
    m["WLP-WeaklyMed"] = {false, false, bundle_check({"weakMed"})};
    m["ChainStrIdemWLP"] = {false, false, bundle_check({"strongIdem"})};
    m["WLP-comonot"] = {true, false,
                        bundle_check({"comonot-ii", "comonot-iii", "comonot-iv", "comonot-v",
                                      "comonot-vi", "comonot-iv-SL", "comonot-v-SL"})};
    m["SimplexDNF"] = {true, false, check_simplex_dnf};
    m["SimplexMedian"] = {true, true, nullptr};
    m["Uniqueness"] = {true, false, check_uniqueness};
    m["Hom-Id-46"] = {false, false, check_hom_id};
    m["prop:sug"] = {false, false, check_prop_sug};
    m["Sug-WeakHom"] = {false, false, check_sug_weakhom};
    m["WeakMedWeakHom"] = {false, false, check_weakmed_weakhom};
    m["mainChar3"] = {false, false, check_mainchar3};
    m["WeaklyMinMaxIdem"] = {false, false, check_weakly_minmax_idem};
    m["WeaklyMinMaxRangeIdem"] = {false, false, check_weakly_minmax_range_idem};
    m["Weak15682"] = {false, false, check_weak15682};
    m["Weak-Hor-Min-Hom"] = {false, false, check_weak_hor_min_hom};
    m["WMD-RI"] = {false, false, check_wmd_ri};
    m["ComponentwiseImpliesConv"] = {false, false, check_componentwise_implies_conv};
    m["ComonotHomog"] = {true, false, check_comonot_homog};
    m["ComonotNonDec"] = {true, false, check_comonot_nondec};
    m["4985"] = {false, false, check_4985};
    m["conservative-equivalences"] = {false, false, check_conservative_equivalences};
    return m;
  }();
  return specs;
}

// ---------------------------------------------------------------------------
// Sweep drivers
// ---------------------------------------------------------------------------

void enumerate_table_range(const LatticePtr& lattice, int n, std::uint64_t lo, std::uint64_t hi,
                           const std::function<bool(std::uint64_t, const FunctionTable&)>& visit) {
  if (lo >= hi) return;
  const int m = lattice->size();
  const std::uint64_t points = domain_size(*lattice, n);
  std::vector<Elem> vals(static_cast<size_t>(points), lattice->bottom());
  std::uint64_t rest = lo;
  for (size_t p = vals.size(); p-- > 0;) {
    vals[p] = static_cast<Elem>(rest % static_cast<std::uint64_t>(m));
    rest /= static_cast<std::uint64_t>(m);
  }
  for (std::uint64_t idx = lo; idx < hi; ++idx) {
    if (!visit(idx, FunctionTable(lattice, n, vals))) return;
    for (size_t p = vals.size(); p-- > 0;) {
      if (++vals[p] < m) break;
      vals[p] = 0;
    }
  }
}

struct SweepStats {
  std::uint64_t checked = 0;
  std::vector<Discrepancy> found;
};

void apply_check(const TableCheck& check, const FunctionTable& t, std::uint64_t idx,
                 SweepStats& stats) {
  if (auto detail = check(t)) stats.found.push_back({idx, t.values(), std::move(*detail)});
  ++stats.checked;
}

SweepStats run_exhaustive(const TableCheck& check, const SweepPlan& plan) {
  const std::uint64_t total = exhaustive_table_count(*plan.lattice, plan.arity);
  if (total > plan.cap)
    throw ValidationError(
        "exhaustive sweep needs " + std::to_string(total) + " tables, above the cap of " +
        std::to_string(plan.cap) +
        "; restrict to nondecreasing tables (mode exhaustive-monotone), sample (mode "
        "random-monotone), or raise LATPOLY_CAP");

  unsigned workers = std::thread::hardware_concurrency();
  if (workers == 0) workers = 1;
  workers = std::min<unsigned>(workers, 8);
  if (total < 8192) workers = 1;

  if (workers == 1) {
    SweepStats stats;
    enumerate_table_range(plan.lattice, plan.arity, 0, total,
                          [&](std::uint64_t idx, const FunctionTable& t) {
                            apply_check(check, t, idx, stats);
                            return true;
                          });
    return stats;
  }

  const std::uint64_t chunk = total / workers;
  const std::uint64_t rem = total % workers;
  std::vector<std::future<SweepStats>> futures;
  std::uint64_t start = 0;
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t len = chunk + (w < rem ? 1 : 0);
    const std::uint64_t lo = start;
    const std::uint64_t hi = start + len;
    start = hi;
    futures.push_back(std::async(std::launch::async, [&, lo, hi] {
      SweepStats stats;
      enumerate_table_range(plan.lattice, plan.arity, lo, hi,
                            [&](std::uint64_t idx, const FunctionTable& t) {
                              apply_check(check, t, idx, stats);
                              return true;
                            });
      return stats;
    }));
  }
  SweepStats merged; // block order keeps discrepancy indices ascending
  for (auto& fut : futures) {
    SweepStats part = fut.get();
    merged.checked += part.checked;
    std::move(part.found.begin(), part.found.end(), std::back_inserter(merged.found));
  }
  return merged;
}

SweepStats run_exhaustive_monotone(const TableCheck& check, const SweepPlan& plan) {
  SweepStats stats;
  enumerate_monotone_tables(plan.lattice, plan.arity,
                            [&](std::uint64_t idx, const FunctionTable& t) {
                              apply_check(check, t, idx, stats);
                              return true;
                            });
  return stats;
}

SweepStats run_random(const TableCheck& check, const SweepPlan& plan) {
  SweepStats stats;
  Rng rng(*plan.seed);
  for (std::uint64_t s = 0; s < plan.sample_count; ++s) {
    const FunctionTable t = plan.mode == SweepMode::RandomMonotone
                                ? sample_monotone(plan.lattice, plan.arity, rng)
                                : sample_any(plan.lattice, plan.arity, rng);
    apply_check(check, t, stats.checked, stats);
    const CoefMap gamma = sample_coef(*plan.lattice, plan.arity, rng);
    const FunctionTable poly = PolyFunc{plan.lattice, gamma}.tabulate();
    apply_check(check, poly, stats.checked, stats);
  }
  return stats;
}

/// The median identity sweep: admissible nondecreasing/nonincreasing chain
/// sequence pairs instead of tables.
SweepStats run_median_identity(const SweepPlan& plan) {
  const Lattice& L = *plan.lattice;
  const int n = plan.arity;
  const int len = n + 1;

  std::vector<std::vector<Elem>> ascending;
  std::vector<std::vector<Elem>> descending;
  std::vector<Elem> seq(static_cast<size_t>(len), L.bottom());
  const int m = L.size();
  bool more = true;
  while (more) {
    if (std::is_sorted(seq.begin(), seq.end())) ascending.push_back(seq);
    if (std::is_sorted(seq.rbegin(), seq.rend())) descending.push_back(seq);
    more = false;
    for (size_t p = seq.size(); p-- > 0;) {
      if (++seq[p] < m) {
        more = true;
        break;
      }
      seq[p] = 0;
    }
  }

  SweepStats stats;
  for (const std::vector<Elem>& a : ascending) {
    for (const std::vector<Elem>& b : descending) {
      if (!(a.back() >= b.back())) continue;
      Elem lhs = L.bottom();
      for (int i = 0; i < len; ++i)
        lhs = L.join(lhs, L.meet(a[static_cast<size_t>(i)], b[static_cast<size_t>(i)]));
      std::vector<Elem> med_args(a.begin(), a.end() - 1); // a_1..a_n
      med_args.insert(med_args.end(), b.begin(), b.end()); // b_1..b_{n+1}
      const Elem rhs = med(L, std::span<const Elem>(med_args.data(), med_args.size()));
      if (lhs != rhs) {
        std::vector<Elem> pair(a.begin(), a.end());
        pair.insert(pair.end(), b.begin(), b.end());
        stats.found.push_back({stats.checked, pair,
                               "join of pairwise meets = " + L.name(lhs) + " but median = " +
                                   L.name(rhs) + " for a=" + values_display(L, a) +
                                   ", b=" + values_display(L, b)});
      }
      ++stats.checked;
    }
  }
  return stats;
}

// ---------------------------------------------------------------------------
// Registry
// ---------------------------------------------------------------------------

PropertyReport decision_report(const std::string& name, const Decision& d) {
  PropertyReport rep;
  rep.property = name;
  rep.holds = d.verdict;
  rep.checked_domain = "recognition procedure";
  if (d.counterexample) rep.witness_tuples.push_back(*d.counterexample);
  return rep;
}

ProfileCheck prop_check(std::string label, bool expected,
                        std::function<PropertyReport(const FunctionTable&)> run) {
  return ProfileCheck{std::move(label), expected, std::move(run)};
}

LatticePtr diamond_lattice() {
  // 0 < a, b < 1 with a and b incomparable.
  return make_table_lattice(
      {"0", "a", "b", "1"},
      {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 0, 2, 2}, {0, 1, 2, 3}},
      {{0, 1, 2, 3}, {1, 1, 3, 3}, {2, 3, 2, 3}, {3, 3, 3, 3}});
}

std::vector<RegistryEntry> build_registry() {
  std::vector<RegistryEntry> entries;

  auto run_nondecreasing = [](const FunctionTable& f) { return check_nondecreasing(f); };
  auto run_poly = [](const FunctionTable& f) {
    return decision_report("polynomial", decide_polynomial(f));
  };
  auto run_sugeno = [](const FunctionTable& f) {
    return decision_report("sugeno-integral", decide_sugeno(f));
  };
  auto run_term = [](const FunctionTable& f) {
    return decision_report("term-function", decide_term(f));
  };

  {
    const LatticePtr D = diamond_lattice();
    // 1 when either coordinate is 1 or both are b; a when some coordinate is
    // a and the other is below 1; 0 otherwise.
    FunctionTable table(D, 2,
                        {0, 1, 0, 3, 1, 1, 1, 3, 0, 1, 3, 3, 3, 3, 3, 3});
    RegistryEntry entry{
        "diamond-binary",
        "nondecreasing non-polynomial on the four-element diamond whose Boolean restriction "
        "extends to x1 or x2",
        std::move(table),
        {}};
    entry.profile.push_back(prop_check("nondecreasing", true, run_nondecreasing));
    entry.profile.push_back(prop_check(
        "weakly min-homogeneous (S = range hull)", false, [](const FunctionTable& f) {
          return check_min_homogeneous(f, hull_set(f), Domain::Weak);
        }));
    entry.profile.push_back(prop_check(
        "weakly max-homogeneous (S = range hull)", false, [](const FunctionTable& f) {
          return check_max_homogeneous(f, hull_set(f), Domain::Weak);
        }));
    entry.profile.push_back(prop_check(
        "weakly median decomposable", false,
        [](const FunctionTable& f) { return check_median_decomposable(f, Domain::Weak); }));
    entry.profile.push_back(prop_check("polynomial", false, run_poly));
    entries.push_back(std::move(entry));
  }

  {
    const LatticePtr C3 = make_chain(3);
    FunctionTable table = FunctionTable::tabulate(C3, 3, [&](const Tuple& x) -> Elem {
      const Elem mid = med(*C3, {x[0], x[1], x[2]});
      const Elem low = std::min({x[0], x[1], x[2]});
      if (mid == 2) return 2;
      if (mid == 1 && low == 1) return 1;
      return 0;
    });
    RegistryEntry entry{
        "ternary-median-min",
        "median decomposable on two-valued tuples only; fails on tuples holding a bound plus "
        "two other values",
        std::move(table),
        {}};
    entry.profile.push_back(prop_check("nondecreasing", true, run_nondecreasing));
    entry.profile.push_back(prop_check(
        "median decomposable (two-valued tuples)", true, [](const FunctionTable& f) {
          return check_median_decomposable(f, Domain::ZeroTwoOnly);
        }));
    entry.profile.push_back(prop_check(
        "weakly median decomposable", false,
        [](const FunctionTable& f) { return check_median_decomposable(f, Domain::Weak); }));
    entry.profile.push_back(prop_check("polynomial", false, run_poly));
    entries.push_back(std::move(entry));
  }

  {
    const LatticePtr C3 = make_chain(3);
    RegistryEntry entry{"square-unary-chain3",
                        "strongly idempotent unary with a non-convex range",
                        FunctionTable(C3, 1, {0, 0, 2}),
                        {}};
    entry.profile.push_back(prop_check("nondecreasing", true, run_nondecreasing));
    entry.profile.push_back(prop_check("strongly idempotent", true, [](const FunctionTable& f) {
      return check_strongly_idempotent(f);
    }));
    entry.profile.push_back(prop_check(
        "convex range", false, [](const FunctionTable& f) { return check_convex_range(f); }));
    entry.profile.push_back(prop_check("polynomial", false, run_poly));
    entries.push_back(std::move(entry));
  }

  {
    const LatticePtr C4 = make_chain(4);
    RegistryEntry entry{"square-unary-chain4",
                        "nondecreasing unary, horizontally minitive and maxitive over L, yet "
                        "not idempotent on its range hull",
                        FunctionTable(C4, 1, {0, 0, 1, 3}),
                        {}};
    entry.profile.push_back(prop_check("nondecreasing", true, run_nondecreasing));
    entry.profile.push_back(prop_check("comonotonic minitive", true, [](const FunctionTable& f) {
      return check_comonotonic_minitive(f);
    }));
    entry.profile.push_back(prop_check("comonotonic maxitive", true, [](const FunctionTable& f) {
      return check_comonotonic_maxitive(f);
    }));
    entry.profile.push_back(prop_check(
        "horizontally minitive (S = L)", true, [](const FunctionTable& f) {
          return check_horizontally_minitive(f, all_of(f.lattice()), Domain::Full);
        }));
    entry.profile.push_back(prop_check(
        "horizontally maxitive (S = L)", true, [](const FunctionTable& f) {
          return check_horizontally_maxitive(f, all_of(f.lattice()), Domain::Full);
        }));
    entry.profile.push_back(prop_check(
        "idempotent (S = range hull)", false,
        [](const FunctionTable& f) { return check_idempotent(f, hull_set(f)); }));
    entry.profile.push_back(prop_check("strongly idempotent", false, [](const FunctionTable& f) {
      return check_strongly_idempotent(f);
    }));
    entry.profile.push_back(prop_check("polynomial", false, run_poly));
    entries.push_back(std::move(entry));
  }

  {
    const LatticePtr C3 = make_chain(3);
    RegistryEntry entry{"two-valued-binary",
                        "strongly idempotent binary whose sections have non-convex ranges",
                        FunctionTable(C3, 2, {0, 0, 0, 0, 0, 0, 0, 0, 2}),
                        {}};
    entry.profile.push_back(prop_check("nondecreasing", true, run_nondecreasing));
    entry.profile.push_back(prop_check("strongly idempotent", true, [](const FunctionTable& f) {
      return check_strongly_idempotent(f);
    }));
    entry.profile.push_back(prop_check(
        "componentwise convex range", false,
        [](const FunctionTable& f) { return check_componentwise_convex_range(f); }));
    entry.profile.push_back(prop_check("polynomial", false, run_poly));
    entries.push_back(std::move(entry));
  }

  {
    const LatticePtr C3 = make_chain(3);
    RegistryEntry entry{"meet-constant-unary",
                        "x meet d for an inner constant d: homogeneous on one side and "
                        "horizontally split on the other, but the top endpoint drops",
                        FunctionTable(C3, 1, {0, 1, 1}),
                        {}};
    entry.profile.push_back(prop_check(
        "min-homogeneous (S = L)", true, [](const FunctionTable& f) {
          return check_min_homogeneous(f, all_of(f.lattice()), Domain::Full);
        }));
    entry.profile.push_back(prop_check(
        "horizontally maxitive (S = L)", true, [](const FunctionTable& f) {
          return check_horizontally_maxitive(f, all_of(f.lattice()), Domain::Full);
        }));
    entry.profile.push_back(prop_check("polynomial", true, run_poly));
    entry.profile.push_back(prop_check("sugeno-integral", false, run_sugeno));
    entries.push_back(std::move(entry));
  }

  {
    const LatticePtr C3 = make_chain(3);
    RegistryEntry entry{"join-constant-unary",
                        "x join d for an inner constant d: the dual of meet-constant-unary, "
                        "with the bottom endpoint raised",
                        FunctionTable(C3, 1, {1, 1, 2}),
                        {}};
    entry.profile.push_back(prop_check(
        "max-homogeneous (S = L)", true, [](const FunctionTable& f) {
          return check_max_homogeneous(f, all_of(f.lattice()), Domain::Full);
        }));
    entry.profile.push_back(prop_check(
        "horizontally minitive (S = L)", true, [](const FunctionTable& f) {
          return check_horizontally_minitive(f, all_of(f.lattice()), Domain::Full);
        }));
    entry.profile.push_back(prop_check("polynomial", true, run_poly));
    entry.profile.push_back(prop_check("sugeno-integral", false, run_sugeno));
    entries.push_back(std::move(entry));
  }

  {
    const LatticePtr C3 = make_chain(3);
    // Join above the inner threshold, meet elsewhere.
    RegistryEntry entry{"threshold-mix-binary",
                        "nondecreasing and conservative but not a term function",
                        FunctionTable(C3, 2, {0, 0, 0, 0, 1, 2, 0, 2, 2}),
                        {}};
    entry.profile.push_back(prop_check("nondecreasing", true, run_nondecreasing));
    entry.profile.push_back(prop_check("conservative", true, [](const FunctionTable& f) {
      return check_conservative(f, Domain::Full);
    }));
    entry.profile.push_back(prop_check(
        "weakly conservative", true,
        [](const FunctionTable& f) { return check_conservative(f, Domain::Boolean); }));
    entry.profile.push_back(prop_check("polynomial", false, run_poly));
    entry.profile.push_back(prop_check("term-function", false, run_term));
    entries.push_back(std::move(entry));
  }

  return entries;
}

} // namespace

// ---------------------------------------------------------------------------
// Modes, caps, labels
// ---------------------------------------------------------------------------

std::string sweep_mode_name(SweepMode mode) {
  switch (mode) {
    case SweepMode::Exhaustive: return "exhaustive";
    case SweepMode::ExhaustiveMonotone: return "exhaustive-monotone";
    case SweepMode::RandomMonotone: return "random-monotone";
    case SweepMode::RandomAny: return "random-any";
  }
  throw ContractViolation("unhandled sweep mode");
}

SweepMode sweep_mode_from_name(const std::string& name) {
  if (name == "exhaustive") return SweepMode::Exhaustive;
  if (name == "exhaustive-monotone") return SweepMode::ExhaustiveMonotone;
  if (name == "random" || name == "random-monotone") return SweepMode::RandomMonotone;
  if (name == "random-any") return SweepMode::RandomAny;
  throw ValidationError("unknown sweep mode '" + name +
                        "' (expected exhaustive, exhaustive-monotone, random, random-monotone, "
                        "or random-any)");
}

std::uint64_t table_cap() {
  if (const char* env = std::getenv("LATPOLY_CAP")) {
    const std::string text(env);
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || value == 0)
      throw ValidationError("LATPOLY_CAP must be a positive integer, got '" + text + "'");
    return value;
  }
  return std::uint64_t{1} << 24;
}

std::string lattice_label(const Lattice& L) {
  return (L.is_chain() ? "chain-" : "table-") + std::to_string(L.size());
}

// ---------------------------------------------------------------------------
// Enumeration and sampling
// ---------------------------------------------------------------------------

std::uint64_t exhaustive_table_count(const Lattice& L, int n) {
  const std::uint64_t points = domain_size(L, n);
  const std::uint64_t base = static_cast<std::uint64_t>(L.size());
  std::uint64_t result = 1;
  for (std::uint64_t i = 0; i < points; ++i) {
    if (result > kCountSaturation / base) return kCountSaturation;
    result *= base;
    if (result >= kCountSaturation) return kCountSaturation;
  }
  return result;
}

FunctionTable table_at_index(const LatticePtr& lattice, int n, std::uint64_t index) {
  const std::uint64_t total = exhaustive_table_count(*lattice, n);
  if (index >= total)
    throw ValidationError("table index " + std::to_string(index) + " out of range [0," +
                          std::to_string(total - 1) + "]");
  const std::uint64_t points = domain_size(*lattice, n);
  const std::uint64_t m = static_cast<std::uint64_t>(lattice->size());
  std::vector<Elem> vals(static_cast<size_t>(points), lattice->bottom());
  for (size_t p = vals.size(); p-- > 0;) {
    vals[p] = static_cast<Elem>(index % m);
    index /= m;
  }
  return FunctionTable(lattice, n, std::move(vals));
}

void enumerate_tables(const LatticePtr& lattice, int n, std::uint64_t cap,
                      const std::function<bool(std::uint64_t, const FunctionTable&)>& visit) {
  const std::uint64_t total = exhaustive_table_count(*lattice, n);
  if (total > cap)
    throw ValidationError(
        "exhaustive enumeration needs " + std::to_string(total) + " tables, above the cap of " +
        std::to_string(cap) +
        "; restrict to nondecreasing tables (mode exhaustive-monotone), sample (mode "
        "random-monotone), or raise LATPOLY_CAP");
  enumerate_table_range(lattice, n, 0, total, visit);
}

namespace {

/// Tuple visit order for monotone construction/repair: ascending sum of
/// coordinate ranks (a linear extension of the product order), ties by flat
/// index. Also the flat indices of every tuple's lower covers.
struct MonotoneOrder {
  std::vector<std::uint64_t> order;
  std::vector<std::vector<std::uint64_t>> lower;
};

MonotoneOrder monotone_order(const Lattice& L, int n) {
  const std::uint64_t points = domain_size(L, n);
  MonotoneOrder mo;
  mo.order.resize(static_cast<size_t>(points));
  mo.lower.resize(static_cast<size_t>(points));
  std::vector<int> ranksum(static_cast<size_t>(points), 0);
  std::uint64_t idx = 0;
  for_each_tuple(L, n, [&](const Tuple& x) {
    int sum = 0;
    for (Elem xi : x) sum += L.rank(xi);
    ranksum[static_cast<size_t>(idx)] = sum;
    Tuple y = x;
    for (int k = 0; k < n; ++k) {
      for (Elem c : L.lower_covers(x[static_cast<size_t>(k)])) {
        y[static_cast<size_t>(k)] = c;
        mo.lower[static_cast<size_t>(idx)].push_back(tuple_index(L, y));
      }
      y[static_cast<size_t>(k)] = x[static_cast<size_t>(k)];
    }
    mo.order[static_cast<size_t>(idx)] = idx;
    ++idx;
  });
  std::stable_sort(mo.order.begin(), mo.order.end(),
                   [&](std::uint64_t a, std::uint64_t b) {
                     return ranksum[static_cast<size_t>(a)] < ranksum[static_cast<size_t>(b)];
                   });
  return mo;
}

} // namespace

void enumerate_monotone_tables(
    const LatticePtr& lattice, int n,
    const std::function<bool(std::uint64_t, const FunctionTable&)>& visit) {
  const Lattice& L = *lattice;
  const MonotoneOrder mo = monotone_order(L, n);
  const std::uint64_t points = domain_size(L, n);
  std::vector<Elem> vals(static_cast<size_t>(points), L.bottom());
  std::uint64_t emitted = 0;
  bool stop = false;

  std::function<void(size_t)> assign = [&](size_t depth) {
    if (stop) return;
    if (depth == mo.order.size()) {
      stop = !visit(emitted, FunctionTable(lattice, n, vals));
      ++emitted;
      return;
    }
    const size_t pos = static_cast<size_t>(mo.order[depth]);
    Elem bound = L.bottom();
    for (std::uint64_t cov : mo.lower[pos]) bound = L.join(bound, vals[static_cast<size_t>(cov)]);
    for (int v = 0; v < L.size() && !stop; ++v) {
      if (!L.leq(bound, v)) continue;
      vals[pos] = v;
      assign(depth + 1);
    }
    vals[pos] = L.bottom();
  };
  assign(0);
}

std::uint64_t count_monotone_tables(const LatticePtr& lattice, int n) {
  std::uint64_t count = 0;
  enumerate_monotone_tables(lattice, n, [&](std::uint64_t, const FunctionTable&) {
    ++count;
    return true;
  });
  return count;
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw ContractViolation("random draw needs a positive bound");
  if ((bound & (bound - 1)) == 0) return engine_() & (bound - 1);
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t overhang = (max % bound + 1) % bound; // 2^64 mod bound
  const std::uint64_t cutoff = max - overhang;
  std::uint64_t draw = engine_();
  while (draw > cutoff) draw = engine_();
  return draw % bound;
}

FunctionTable sample_any(const LatticePtr& lattice, int n, Rng& rng) {
  const std::uint64_t points = domain_size(*lattice, n);
  std::vector<Elem> vals(static_cast<size_t>(points));
  for (Elem& v : vals) v = static_cast<Elem>(rng.below(static_cast<std::uint64_t>(lattice->size())));
  return FunctionTable(lattice, n, std::move(vals));
}

FunctionTable monotone_repair(const FunctionTable& f) {
  const Lattice& L = f.lattice();
  const MonotoneOrder mo = monotone_order(L, f.arity());
  std::vector<Elem> vals = f.values();
  for (std::uint64_t pos : mo.order) {
    Elem v = vals[static_cast<size_t>(pos)];
    for (std::uint64_t cov : mo.lower[static_cast<size_t>(pos)])
      v = L.join(v, vals[static_cast<size_t>(cov)]);
    vals[static_cast<size_t>(pos)] = v;
  }
  return FunctionTable(f.lattice_ptr(), f.arity(), std::move(vals));
}

FunctionTable sample_monotone(const LatticePtr& lattice, int n, Rng& rng) {
  return monotone_repair(sample_any(lattice, n, rng));
}

FunctionTable sample_monotone(const LatticePtr& lattice, int n, std::uint64_t seed) {
  Rng rng(seed);
  return sample_monotone(lattice, n, rng);
}

CoefMap sample_coef(const Lattice& L, int n, Rng& rng) {
  std::vector<Elem> vals(size_t{1} << n);
  for (Elem& v : vals) v = static_cast<Elem>(rng.below(static_cast<std::uint64_t>(L.size())));
  return CoefMap(n, std::move(vals));
}

// ---------------------------------------------------------------------------
// Theorem verification
// ---------------------------------------------------------------------------

const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids = {
      "mainChar",       "WLP-WeakHom",     "WLP-WeakHomWeakHor",
      "WLP-WeaklyMed",  "ChainStrIdemWLP", "WLP-comonot",
      "SimplexDNF",     "SimplexMedian",   "Uniqueness",
      "Hom-Id-46",      "prop:sug",        "Sug-WeakHom",
      "WeakMedWeakHom", "mainChar3",       "WeaklyMinMaxIdem",
      "WeaklyMinMaxRangeIdem", "Weak15682", "Weak-Hor-Min-Hom",
      "WMD-RI",         "ComponentwiseImpliesConv", "ComonotHomog",
      "ComonotNonDec",  "4985",            "conservative-equivalences"};
  return ids;
}

TheoremRun verify_theorem(const std::string& id, const SweepPlan& plan) {
  const auto& specs = theorem_specs();
  const auto it = specs.find(id);
  if (it == specs.end()) {
    std::string known;
    for (const std::string& name : theorem_ids()) {
      if (!known.empty()) known += ", ";
      known += name;
    }
    throw ValidationError("unknown theorem id '" + id + "' (known ids: " + known + ")");
  }
  const TheoremSpec& spec = it->second;

  if (!plan.lattice) throw ValidationError("theorem run needs a lattice");
  if (plan.arity < 1 || plan.arity > 20)
    throw ValidationError("theorem run arity must be in [1,20], got " +
                          std::to_string(plan.arity));
  if (spec.chain_only && !plan.lattice->is_chain())
    throw ValidationError("theorem '" + id + "' is stated for chains; lattice " +
                          lattice_label(*plan.lattice) + " is not a chain");

  const bool random_mode =
      plan.mode == SweepMode::RandomMonotone || plan.mode == SweepMode::RandomAny;
  if (random_mode) {
    if (!plan.seed) throw ValidationError("random modes need a seed");
    if (plan.sample_count == 0)
      throw ValidationError("random modes need a positive sample count");
  }
  if (spec.sequence_sweep && plan.mode != SweepMode::Exhaustive)
    throw ValidationError("theorem '" + id + "' sweeps sequence pairs and supports mode "
                          "exhaustive only");

  TheoremRun run;
  run.id = id;
  run.plan = plan;

  const auto started = std::chrono::steady_clock::now();
  SweepStats stats;
  if (spec.sequence_sweep) {
    stats = run_median_identity(plan);
  } else {
    switch (plan.mode) {
      case SweepMode::Exhaustive: stats = run_exhaustive(spec.check, plan); break;
      case SweepMode::ExhaustiveMonotone:
        stats = run_exhaustive_monotone(spec.check, plan);
        break;
      case SweepMode::RandomMonotone:
      case SweepMode::RandomAny: stats = run_random(spec.check, plan); break;
    }
  }
  run.tables_checked = stats.checked;
  run.discrepancies = std::move(stats.found);
  run.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return run;
}

// ---------------------------------------------------------------------------
// Registry
// ---------------------------------------------------------------------------

const std::vector<RegistryEntry>& registry() {
  static const std::vector<RegistryEntry> entries = build_registry();
  return entries;
}

const RegistryEntry& registry_entry(const std::string& name) {
  for (const RegistryEntry& entry : registry())
    if (entry.name == name) return entry;
  std::string known;
  for (const RegistryEntry& entry : registry()) {
    if (!known.empty()) known += ", ";
    known += entry.name;
  }
  throw ValidationError("unknown registry entry '" + name + "' (known entries: " + known + ")");
}

std::vector<PropertyReport> replay(const RegistryEntry& entry) {
  std::vector<PropertyReport> reports;
  reports.reserve(entry.profile.size());
  for (const ProfileCheck& check : entry.profile) reports.push_back(check.run(entry.table));
  return reports;
}

bool registry_entry_matches(const RegistryEntry& entry) {
  const std::vector<PropertyReport> reports = replay(entry);
  for (size_t i = 0; i < reports.size(); ++i)
    if (reports[i].holds != entry.profile[i].expected) return false;
  return true;
}

} // namespace latpoly
