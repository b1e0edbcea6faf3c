#pragma once

#include <cstdint>
#include <utility>

#include "latpoly/function_table.hpp"
#include "latpoly/lattice.hpp"

namespace latpoly {

/// Subset of coordinates {1..n} as a bitmask; bit i-1 encodes membership of
/// coordinate i.
using Mask = std::uint32_t;

/// Coefficient map 2^[n] -> L, one lattice element per subset, indexed by
/// Mask. Also the storage for fuzzy measures.
struct CoefMap {
  int arity = 0;
  std::vector<Elem> values; // size 1 << arity

  CoefMap() = default;
  CoefMap(int n, std::vector<Elem> vals);

  Mask subset_count() const { return Mask{1} << arity; }
  Elem at(Mask s) const { return values[s]; }

  bool operator==(const CoefMap& other) const = default;
};

/// Check that every value is a valid element of L.
void check_coefs(const Lattice& L, const CoefMap& coef);

/// A polynomial function represented by its lattice and a disjunctive
/// normal form coefficient map.
struct PolyFunc {
  LatticePtr lattice;
  CoefMap alpha;

  Elem operator()(const Tuple& x) const;
  FunctionTable tabulate() const;
};

/// Monotone set function with mu(empty) = bottom and mu(full) = top,
/// validated at construction.
class FuzzyMeasure {
public:
  FuzzyMeasure(LatticePtr lattice, CoefMap coef);

  const Lattice& lattice() const { return *lattice_; }
  const LatticePtr& lattice_ptr() const { return lattice_; }
  const CoefMap& coef() const { return coef_; }
  int arity() const { return coef_.arity; }

private:
  LatticePtr lattice_;
  CoefMap coef_;
};

/// Join over all subsets I of (alpha(I) and the meet of x_i, i in I).
/// The empty meet is top, so the empty subset contributes alpha(empty).
Elem eval_dnf(const Lattice& L, const CoefMap& alpha, const Tuple& x);

/// Meet over all subsets I of (beta(I) or the join of x_i, i in I).
/// The empty join is bottom, so the empty subset contributes beta(empty).
Elem eval_cnf(const Lattice& L, const CoefMap& beta, const Tuple& x);

/// The tuple e_I: top on coordinates in I, bottom elsewhere.
Tuple indicator_tuple(const Lattice& L, int arity, Mask I);

/// Canonical DNF coefficients alpha_f(I) = f(e_I), read off any function.
CoefMap alpha_from_oracle(const FunctionTable& f);

/// Canonical CNF coefficients beta_f(I) = f(e_{complement of I}).
CoefMap beta_from_oracle(const FunctionTable& f);

/// Minimal DNF coefficients on a chain: alpha*(I) = alpha(I) when the join
/// of alpha over proper subsets of I is strictly below alpha(I), else
/// bottom. The join over proper subsets of the empty set is bottom.
CoefMap alpha_star(const Lattice& L, const CoefMap& alpha);

/// Maximal CNF coefficients on a chain: beta*(I) = beta(I) when the meet of
/// beta over proper subsets of I is strictly above beta(I), else top.
CoefMap beta_star(const Lattice& L, const CoefMap& beta);

/// The set of DNF coefficient maps representing a polynomial function f is
/// the box [alpha*_f, alpha_f]. Requires a chain; verifies that f is
/// polynomial and throws ContractViolation otherwise.
std::pair<CoefMap, CoefMap> dnf_interval(const FunctionTable& f);

/// True when the DNF (resp. CNF) coefficient box degenerates to a single
/// map, i.e. f has exactly one DNF (CNF) representation.
bool is_unique_dnf(const FunctionTable& f);
bool is_unique_cnf(const FunctionTable& f);

/// Extend a nondecreasing map g: {bottom,top}^n -> L (given as a CoefMap:
/// g(I) = value at e_I) to the polynomial function with DNF coefficients g.
/// Throws MonotonicityError naming a witness pair when g is not
/// nondecreasing.
PolyFunc extend_boolean(LatticePtr lattice, const CoefMap& g);

/// Ordering data of a point of L^n on a chain: a permutation sigma sorting
/// the coordinates ascending (ties by ascending index), the upper sets
/// {sigma(i),...,sigma(n)} and lower sets {sigma(1),...,sigma(i)} as masks.
struct SimplexDecomp {
  std::vector<int> sigma; // 0-based coordinate order, size n
  std::vector<Mask> up_sets;   // up_sets[i-1] = S_up(i) for i in 1..n+1; last entry empty
  std::vector<Mask> down_sets; // down_sets[i] = S_down(i) for i in 0..n; first entry empty
};

SimplexDecomp decompose(const Lattice& L, const Tuple& x);

/// The three single-simplex forms of a coefficient map at one point
/// (chains only):
///   join form    join_i (alpha(S_up(i)) and x_sigma(i)), x_sigma(n+1) = top
///   meet form    meet_i (alpha(S_up(i)) or x_sigma(i-1)), x_sigma(0) = bottom
///   median form  med(x_1..x_n, alpha(S_up(1)), ..., alpha(S_up(n+1)))
/// The three agree exactly when alpha is the canonical coefficient map of a
/// polynomial function.
struct SimplexForms {
  Elem join_form = 0;
  Elem meet_form = 0;
  Elem median_form = 0;

  bool agree() const { return join_form == meet_form && join_form == median_form; }
};

SimplexForms simplex_forms(const Lattice& L, const CoefMap& alpha, const Tuple& x);

/// Evaluate the three single-simplex forms and check them for mutual
/// equality (ContractViolation on disagreement); the common value is
/// returned.
Elem eval_simplex(const Lattice& L, const CoefMap& alpha, const Tuple& x);

/// Sugeno integral of x with respect to mu: the DNF evaluation of the
/// measure's coefficients.
Elem sugeno_eval(const FuzzyMeasure& mu, const Tuple& x);

/// The fuzzy measure mu(I) = alpha_f(I) for proper nonempty I, with
/// mu(empty) = bottom and mu(full) = top. Requires f polynomial; throws
/// ContractViolation otherwise.
FuzzyMeasure measure_from_poly(const FunctionTable& f);

/// True when eval_dnf(alpha_from_oracle(f), x) == f(x) everywhere. This is
/// the polynomial recognition identity shared by poly and decide.
bool dnf_reproduces(const FunctionTable& f, const CoefMap& alpha, Tuple* first_mismatch = nullptr);

} // namespace latpoly
