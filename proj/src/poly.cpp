#include "latpoly/poly.hpp"

#include <algorithm>
#include <numeric>

namespace latpoly {

CoefMap::CoefMap(int n, std::vector<Elem> vals) : arity(n), values(std::move(vals)) {
  if (n < 0 || n > 20) throw ValidationError("coefficient map arity out of range: " + std::to_string(n));
  if (values.size() != (size_t{1} << n))
    throw ValidationError("coefficient map needs " + std::to_string(size_t{1} << n) +
                          " values, got " + std::to_string(values.size()));
}

void check_coefs(const Lattice& L, const CoefMap& coef) {
  for (Elem v : coef.values) L.check_elem(v);
}

Elem PolyFunc::operator()(const Tuple& x) const { return eval_dnf(*lattice, alpha, x); }

FunctionTable PolyFunc::tabulate() const {
  return FunctionTable::tabulate(lattice, alpha.arity,
                                 [&](const Tuple& x) { return eval_dnf(*lattice, alpha, x); });
}

FuzzyMeasure::FuzzyMeasure(LatticePtr lattice, CoefMap coef)
    : lattice_(std::move(lattice)), coef_(std::move(coef)) {
  if (!lattice_) throw ValidationError("fuzzy measure needs a lattice");
  check_coefs(*lattice_, coef_);
  const Mask full = coef_.subset_count() - 1;
  if (coef_.at(0) != lattice_->bottom())
    throw ValidationError("fuzzy measure must map the empty set to bottom, got " +
                          lattice_->name(coef_.at(0)));
  if (coef_.at(full) != lattice_->top())
    throw ValidationError("fuzzy measure must map the full set to top, got " +
                          lattice_->name(coef_.at(full)));
  // Monotonicity along single-element extensions suffices by transitivity.
  for (Mask I = 0; I <= full; ++I)
    for (int i = 0; i < coef_.arity; ++i) {
      if (I & (Mask{1} << i)) continue;
      const Mask J = I | (Mask{1} << i);
      if (!lattice_->leq(coef_.at(I), coef_.at(J)))
        throw ValidationError("fuzzy measure is not monotone: mu(" + std::to_string(I) +
                              ") = " + lattice_->name(coef_.at(I)) + " is not below mu(" +
                              std::to_string(J) + ") = " + lattice_->name(coef_.at(J)));
    }
}

Elem eval_dnf(const Lattice& L, const CoefMap& alpha, const Tuple& x) {
  if (static_cast<int>(x.size()) != alpha.arity)
    throw ValidationError("tuple arity does not match coefficient map");
  Elem acc = L.bottom();
  const Mask count = alpha.subset_count();
  for (Mask I = 0; I < count; ++I) {
    Elem term = alpha.at(I);
    for (int i = 0; i < alpha.arity; ++i)
      if (I & (Mask{1} << i)) term = L.meet(term, x[static_cast<size_t>(i)]);
    acc = L.join(acc, term);
  }
  return acc;
}

Elem eval_cnf(const Lattice& L, const CoefMap& beta, const Tuple& x) {
  if (static_cast<int>(x.size()) != beta.arity)
    throw ValidationError("tuple arity does not match coefficient map");
  Elem acc = L.top();
  const Mask count = beta.subset_count();
  for (Mask I = 0; I < count; ++I) {
    Elem factor = beta.at(I);
    for (int i = 0; i < beta.arity; ++i)
      if (I & (Mask{1} << i)) factor = L.join(factor, x[static_cast<size_t>(i)]);
    acc = L.meet(acc, factor);
  }
  return acc;
}

Tuple indicator_tuple(const Lattice& L, int arity, Mask I) {
  Tuple x(static_cast<size_t>(arity), L.bottom());
  for (int i = 0; i < arity; ++i)
    if (I & (Mask{1} << i)) x[static_cast<size_t>(i)] = L.top();
  return x;
}

CoefMap alpha_from_oracle(const FunctionTable& f) {
  const int n = f.arity();
  std::vector<Elem> vals(size_t{1} << n);
  for (Mask I = 0; I < (Mask{1} << n); ++I)
    vals[I] = f(indicator_tuple(f.lattice(), n, I));
  return CoefMap(n, std::move(vals));
}

CoefMap beta_from_oracle(const FunctionTable& f) {
  const int n = f.arity();
  const Mask full = (Mask{1} << n) - 1;
  std::vector<Elem> vals(size_t{1} << n);
  for (Mask I = 0; I < (Mask{1} << n); ++I)
    vals[I] = f(indicator_tuple(f.lattice(), n, full & ~I));
  return CoefMap(n, std::move(vals));
}

CoefMap alpha_star(const Lattice& L, const CoefMap& alpha) {
  if (!L.is_chain())
    throw UnsupportedLatticeError("minimal DNF coefficients are defined on chains only");
  check_coefs(L, alpha);
  const Mask count = alpha.subset_count();
  std::vector<Elem> vals(count);
  for (Mask I = 0; I < count; ++I) {
    Elem dom = L.bottom(); // join over proper subsets; empty join is bottom
    if (I != 0)
      for (Mask J = (I - 1) & I;; J = (J - 1) & I) {
        dom = L.join(dom, alpha.at(J));
        if (J == 0) break;
      }
    const bool strict = L.leq(dom, alpha.at(I)) && dom != alpha.at(I);
    vals[I] = strict ? alpha.at(I) : L.bottom();
  }
  return CoefMap(alpha.arity, std::move(vals));
}

CoefMap beta_star(const Lattice& L, const CoefMap& beta) {
  if (!L.is_chain())
    throw UnsupportedLatticeError("maximal CNF coefficients are defined on chains only");
  check_coefs(L, beta);
  const Mask count = beta.subset_count();
  std::vector<Elem> vals(count);
  for (Mask I = 0; I < count; ++I) {
    Elem dom = L.top(); // meet over proper subsets; empty meet is top
    if (I != 0)
      for (Mask J = (I - 1) & I;; J = (J - 1) & I) {
        dom = L.meet(dom, beta.at(J));
        if (J == 0) break;
      }
    const bool strict = L.leq(beta.at(I), dom) && dom != beta.at(I);
    vals[I] = strict ? beta.at(I) : L.top();
  }
  return CoefMap(beta.arity, std::move(vals));
}

bool dnf_reproduces(const FunctionTable& f, const CoefMap& alpha, Tuple* first_mismatch) {
  bool ok = true;
  Tuple witness;
  for_each_tuple(f.lattice(), f.arity(), [&](const Tuple& x) {
    if (!ok) return;
    if (eval_dnf(f.lattice(), alpha, x) != f(x)) {
      ok = false;
      witness = x;
    }
  });
  if (!ok && first_mismatch) *first_mismatch = witness;
  return ok;
}

std::pair<CoefMap, CoefMap> dnf_interval(const FunctionTable& f) {
  if (!f.lattice().is_chain())
    throw UnsupportedLatticeError("the DNF coefficient interval is defined on chains only");
  const CoefMap alpha = alpha_from_oracle(f);
  Tuple bad;
  if (!dnf_reproduces(f, alpha, &bad))
    throw ContractViolation("dnf_interval requires a polynomial function; table disagrees with "
                            "its DNF extension at " +
                            tuple_display(f.lattice(), bad));
  return {alpha_star(f.lattice(), alpha), alpha};
}

bool is_unique_dnf(const FunctionTable& f) {
  auto [lo, hi] = dnf_interval(f);
  return lo == hi;
}

bool is_unique_cnf(const FunctionTable& f) {
  if (!f.lattice().is_chain())
    throw UnsupportedLatticeError("the CNF coefficient interval is defined on chains only");
  const CoefMap beta = beta_from_oracle(f);
  Tuple bad;
  const CoefMap alpha = alpha_from_oracle(f);
  if (!dnf_reproduces(f, alpha, &bad))
    throw ContractViolation("is_unique_cnf requires a polynomial function; table disagrees with "
                            "its DNF extension at " +
                            tuple_display(f.lattice(), bad));
  return beta_star(f.lattice(), beta) == beta;
}

PolyFunc extend_boolean(LatticePtr lattice, const CoefMap& g) {
  check_coefs(*lattice, g);
  for (Mask I = 0; I < g.subset_count(); ++I)
    for (int i = 0; i < g.arity; ++i) {
      if (I & (Mask{1} << i)) continue;
      const Mask J = I | (Mask{1} << i);
      if (!lattice->leq(g.at(I), g.at(J))) {
        const Tuple lo = indicator_tuple(*lattice, g.arity, I);
        const Tuple hi = indicator_tuple(*lattice, g.arity, J);
        throw MonotonicityError(lo, hi,
                                "boolean map is not nondecreasing: value at " +
                                    tuple_display(*lattice, lo) + " is " + lattice->name(g.at(I)) +
                                    " but value at " + tuple_display(*lattice, hi) + " is " +
                                    lattice->name(g.at(J)));
      }
    }
  return PolyFunc{std::move(lattice), g};
}

SimplexDecomp decompose(const Lattice& L, const Tuple& x) {
  if (!L.is_chain())
    throw UnsupportedLatticeError("simplex decomposition is defined on chains only");
  const int n = static_cast<int>(x.size());
  SimplexDecomp d;
  d.sigma.resize(static_cast<size_t>(n));
  std::iota(d.sigma.begin(), d.sigma.end(), 0);
  std::stable_sort(d.sigma.begin(), d.sigma.end(),
                   [&](int a, int b) { return x[static_cast<size_t>(a)] < x[static_cast<size_t>(b)]; });
  d.up_sets.resize(static_cast<size_t>(n) + 1);
  d.down_sets.resize(static_cast<size_t>(n) + 1);
  Mask up = 0;
  d.up_sets[static_cast<size_t>(n)] = 0; // S_up(n+1) is empty
  for (int i = n - 1; i >= 0; --i) {
    up |= Mask{1} << d.sigma[static_cast<size_t>(i)];
    d.up_sets[static_cast<size_t>(i)] = up; // S_up(i+1) = {sigma(i+1..n)} 1-based
  }
  Mask down = 0;
  d.down_sets[0] = 0; // S_down(0) is empty
  for (int i = 0; i < n; ++i) {
    down |= Mask{1} << d.sigma[static_cast<size_t>(i)];
    d.down_sets[static_cast<size_t>(i) + 1] = down;
  }
  return d;
}

SimplexForms simplex_forms(const Lattice& L, const CoefMap& alpha, const Tuple& x) {
  if (!L.is_chain())
    throw UnsupportedLatticeError("simplex evaluation is defined on chains only");
  if (static_cast<int>(x.size()) != alpha.arity)
    throw ValidationError("tuple arity does not match coefficient map");
  check_coefs(L, alpha);
  const int n = alpha.arity;
  const SimplexDecomp d = decompose(L, x);
  auto x_sorted = [&](int i) { // x_sigma(i), 1-based, with sigma(0) -> bottom, sigma(n+1) -> top
    if (i <= 0) return L.bottom();
    if (i > n) return L.top();
    return x[static_cast<size_t>(d.sigma[static_cast<size_t>(i - 1)])];
  };
  SimplexForms forms;
  forms.join_form = L.bottom();
  forms.meet_form = L.top();
  for (int i = 1; i <= n + 1; ++i) {
    const Elem coef = alpha.at(d.up_sets[static_cast<size_t>(i - 1)]);
    forms.join_form = L.join(forms.join_form, L.meet(coef, x_sorted(i)));
    forms.meet_form = L.meet(forms.meet_form, L.join(coef, x_sorted(i - 1)));
  }
  std::vector<Elem> med_args(x.begin(), x.end());
  for (int i = 1; i <= n + 1; ++i)
    med_args.push_back(alpha.at(d.up_sets[static_cast<size_t>(i - 1)]));
  forms.median_form = med(L, std::span<const Elem>(med_args.data(), med_args.size()));
  return forms;
}

Elem eval_simplex(const Lattice& L, const CoefMap& alpha, const Tuple& x) {
  const SimplexForms forms = simplex_forms(L, alpha, x);
  if (!forms.agree())
    throw ContractViolation(
        "simplex forms disagree at " + tuple_display(L, x) + ": join form " +
        L.name(forms.join_form) + ", meet form " + L.name(forms.meet_form) + ", median form " +
        L.name(forms.median_form) +
        " (coefficients are not canonical for a polynomial function)");
  return forms.join_form;
}

Elem sugeno_eval(const FuzzyMeasure& mu, const Tuple& x) {
  return eval_dnf(mu.lattice(), mu.coef(), x);
}

FuzzyMeasure measure_from_poly(const FunctionTable& f) {
  CoefMap alpha = alpha_from_oracle(f);
  Tuple bad;
  if (!dnf_reproduces(f, alpha, &bad))
    throw ContractViolation("measure_from_poly requires a polynomial function; table disagrees "
                            "with its DNF extension at " +
                            tuple_display(f.lattice(), bad));
  alpha.values.front() = f.lattice().bottom();
  alpha.values.back() = f.lattice().top();
  return FuzzyMeasure(f.lattice_ptr(), std::move(alpha));
}

} // namespace latpoly
