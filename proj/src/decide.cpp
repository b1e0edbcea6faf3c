#include "latpoly/decide.hpp"

#include <array>

namespace latpoly {

Decision decide_polynomial(const FunctionTable& f) {
  Decision d;
  const CoefMap alpha = alpha_from_oracle(f);
  Tuple bad;
  if (dnf_reproduces(f, alpha, &bad)) {
    d.verdict = true;
    d.certificate = alpha;
  } else {
    d.counterexample = bad;
  }
  return d;
}

Decision decide_sugeno(const FunctionTable& f) {
  Decision d = decide_polynomial(f);
  if (!d.verdict) return d;
  const Lattice& L = f.lattice();
  if (f.at_bottom() != L.bottom()) {
    d.verdict = false;
    d.certificate.reset();
    d.counterexample = Tuple(static_cast<size_t>(f.arity()), L.bottom());
    return d;
  }
  if (f.at_top() != L.top()) {
    d.verdict = false;
    d.certificate.reset();
    d.counterexample = Tuple(static_cast<size_t>(f.arity()), L.top());
    return d;
  }
  d.measure = FuzzyMeasure(f.lattice_ptr(), *d.certificate);
  return d;
}

Decision decide_term(const FunctionTable& f) {
  Decision d = decide_sugeno(f);
  if (!d.verdict) return d;
  const PropertyReport boolean_route = check_conservative(f, Domain::Boolean);
  if (f.lattice().is_chain()) {
    // On chains a Sugeno integral is conservative exactly when its Boolean
    // restriction is; the two recognition routes must agree.
    const PropertyReport full_route = check_conservative(f, Domain::Full);
    if (full_route.holds != boolean_route.holds)
      throw ContractViolation(
          "term recognition routes disagree on a Sugeno integral: boolean conservativeness is " +
          std::string(boolean_route.holds ? "true" : "false") + " but full conservativeness is " +
          std::string(full_route.holds ? "true" : "false"));
  }
  if (!boolean_route.holds) {
    d.verdict = false;
    d.certificate.reset();
    d.measure.reset();
    d.counterexample = boolean_route.witness_tuples.front();
  }
  return d;
}

namespace {

/// Memoized hypothesis checks shared across bundles. Every bundle condition
/// is one of these primitives; each is computed at most once per function.
enum Prim : int {
  NonDecr,
  IdemS,
  MinHomFull,
  MaxHomFull,
  MinHomWeak,
  MaxHomWeak,
  HorMinFull,
  HorMaxFull,
  HorMinWeak,
  HorMaxWeak,
  HorMinWeakL,
  HorMaxWeakL,
  MedFull,
  MedWeak,
  StrongIdem,
  Convex,
  CwConvex,
  ComonotMin,
  ComonotMax,
  PrimCount,
};

struct BundleSpec {
  const char* name;
  bool chain_only;
  std::vector<Prim> prims;
};

const std::vector<BundleSpec>& bundle_specs() {
  static const std::vector<BundleSpec> specs = {
      {"mainChar-ii", false, {MedFull}},
      {"mainChar-iii", false, {NonDecr, StrongIdem, Convex, CwConvex}},
      {"mainChar-iv", false, {NonDecr, MinHomFull, MaxHomFull}},
      {"mainChar-v", false, {NonDecr, MinHomFull, HorMaxFull}},
      {"mainChar-vi", false, {NonDecr, HorMinFull, MaxHomFull}},
      {"mainChar-vii", false, {NonDecr, IdemS, HorMinFull, HorMaxFull}},
      {"weakHom-ii", false, {NonDecr, MinHomWeak, MaxHomWeak}},
      {"weakHom-iii", false, {NonDecr, MinHomWeak, HorMaxWeak}},
      {"weakHom-iv", false, {NonDecr, HorMinWeak, MaxHomWeak}},
      {"weakHom-v", false, {NonDecr, IdemS, HorMinWeak, HorMaxWeak}},
      {"weakHom-iii-SL", false, {NonDecr, MinHomWeak, HorMaxWeakL}},
      {"weakHom-iv-SL", false, {NonDecr, HorMinWeakL, MaxHomWeak}},
      {"weakHom-v-SL", false, {NonDecr, IdemS, HorMinWeakL, HorMaxWeakL}},
      {"weakMed", false, {NonDecr, MedWeak}},
      {"strongIdem", false, {NonDecr, StrongIdem, CwConvex}},
      {"comonot-ii", true, {MinHomWeak, ComonotMax}},
      {"comonot-iii", true, {ComonotMin, MaxHomWeak}},
      {"comonot-iv", true, {IdemS, HorMinWeak, ComonotMax}},
      {"comonot-v", true, {IdemS, ComonotMin, HorMaxWeak}},
      {"comonot-vi", true, {IdemS, ComonotMin, ComonotMax}},
      {"comonot-iv-SL", true, {IdemS, HorMinWeakL, ComonotMax}},
      {"comonot-v-SL", true, {IdemS, ComonotMin, HorMaxWeakL}},
  };
  return specs;
}

class PrimCache {
public:
  PrimCache(const FunctionTable& f, std::vector<Elem> s) : f_(f), s_(std::move(s)) {}

  const PropertyReport& get(Prim p) {
    auto& slot = slots_[static_cast<size_t>(p)];
    if (!slot) slot = compute(p);
    return *slot;
  }

private:
  PropertyReport compute(Prim p) const {
    const std::vector<Elem>& S = s_;
    switch (p) {
      case NonDecr: return check_nondecreasing(f_);
      case IdemS: return check_idempotent(f_, S);
      case MinHomFull: return check_min_homogeneous(f_, S, Domain::Full);
      case MaxHomFull: return check_max_homogeneous(f_, S, Domain::Full);
      case MinHomWeak: return check_min_homogeneous(f_, S, Domain::Weak);
      case MaxHomWeak: return check_max_homogeneous(f_, S, Domain::Weak);
      case HorMinFull: return check_horizontally_minitive(f_, S, Domain::Full);
      case HorMaxFull: return check_horizontally_maxitive(f_, S, Domain::Full);
      case HorMinWeak: return check_horizontally_minitive(f_, S, Domain::Weak);
      case HorMaxWeak: return check_horizontally_maxitive(f_, S, Domain::Weak);
      case HorMinWeakL: return check_horizontally_minitive(f_, everything(), Domain::Weak);
      case HorMaxWeakL: return check_horizontally_maxitive(f_, everything(), Domain::Weak);
      case MedFull: return check_median_decomposable(f_, Domain::Full);
      case MedWeak: return check_median_decomposable(f_, Domain::Weak);
      case StrongIdem: return check_strongly_idempotent(f_);
      case Convex: return check_convex_range(f_);
      case CwConvex: return check_componentwise_convex_range(f_);
      case ComonotMin: return check_comonotonic_minitive(f_);
      case ComonotMax: return check_comonotonic_maxitive(f_);
      case PrimCount: break;
    }
    throw ContractViolation("unknown primitive check");
  }

  std::vector<Elem> everything() const {
    std::vector<Elem> out(static_cast<size_t>(f_.lattice().size()));
    for (Elem c = 0; c < f_.lattice().size(); ++c) out[static_cast<size_t>(c)] = c;
    return out;
  }

  const FunctionTable& f_;
  std::vector<Elem> s_;
  std::array<std::optional<PropertyReport>, PrimCount> slots_;
};

} // namespace

const std::vector<std::string>& bundle_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const BundleSpec& b : bundle_specs()) out.emplace_back(b.name);
    return out;
  }();
  return names;
}

BundleMatrix characterize(const FunctionTable& f) {
  const Lattice& L = f.lattice();
  BundleMatrix matrix;
  const Interval hull = range_hull(f);
  matrix.s_elems = interval_elems(L, hull.lo, hull.hi);
  matrix.polynomial = decide_polynomial(f).verdict;

  PrimCache cache(f, matrix.s_elems);
  for (const BundleSpec& spec : bundle_specs()) {
    BundleVerdict v;
    v.bundle = spec.name;
    if (spec.chain_only && !L.is_chain()) {
      v.applicable = false;
      matrix.bundles.push_back(std::move(v));
      continue;
    }
    v.holds = true;
    for (Prim p : spec.prims) {
      const PropertyReport& rep = cache.get(p);
      v.conditions.push_back(rep);
      if (!rep.holds) v.holds = false;
    }
    matrix.bundles.push_back(std::move(v));
  }
  return matrix;
}

} // namespace latpoly
