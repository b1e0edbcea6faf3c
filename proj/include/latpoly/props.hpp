#pragma once

#include <optional>
#include <string>
#include <vector>

#include "latpoly/function_table.hpp"
#include "latpoly/lattice.hpp"

namespace latpoly {

/// Sweep-domain selector for property checkers. Each checker documents the
/// selectors it accepts; passing an unsupported one raises ValidationError.
enum class Domain {
  Full,        ///< x ranges over all of L^n
  Weak,        ///< x over L_n^(0,2) (median decomposability: the union with L_n^(1,3))
  Boolean,     ///< x over {bottom,top}^n (homogeneity then sweeps c over all of L)
  ZeroTwoOnly, ///< x over L_n^(0,2) only (median decomposability)
};

std::string domain_name(Domain d);

/// Inverse of domain_name; throws ValidationError on unknown names.
Domain domain_from_name(const std::string& name);

/// The vector class L_n^(p,q): tuples whose value set {x_1,...,x_n}
/// intersects {bottom, top} in at least p elements and has at most q
/// distinct elements. Works on any bounded lattice.
struct VectorClass {
  int p = 0;
  int q = 0;
  VectorClass(int p_value, int q_value);
};

/// Membership test for L_n^(p,q).
bool class_contains(const Lattice& L, const Tuple& x, VectorClass cls);

/// All tuples of L_n^(p,q) in ascending flat-index order.
std::vector<Tuple> enumerate_class(const Lattice& L, int n, VectorClass cls);

/// Verdict plus a replayable witness for one property check. When a check
/// fails, the witness is the first violation found in lexicographic sweep
/// order: tuple-major (ascending flat index), then constant c ascending,
/// then coordinate k ascending.
struct PropertyReport {
  std::string property;       ///< stable checker name, e.g. "min-homogeneous"
  bool holds = true;
  std::string checked_domain; ///< human-readable description of the swept set

  std::optional<Domain> domain;           ///< sweep selector, when the checker takes one
  std::optional<std::vector<Elem>> s_set; ///< the constant set S swept, when applicable

  /// Witness payload, populated as applicable when holds == false.
  std::vector<Tuple> witness_tuples;
  std::optional<Elem> witness_c; ///< violating constant, or missing range element
  std::optional<int> witness_k;  ///< violating coordinate, 1-based
};

/// The interval [f(bottom tuple) meet f(top tuple), join of the same]; for
/// nondecreasing f this is the closed range hull [f(0..0), f(1..1)].
Interval range_hull(const FunctionTable& f);

/// [x]^c: coordinate i becomes top when c <= x_i, else stays x_i.
Tuple cut_above(const Lattice& L, const Tuple& x, Elem c);

/// [x]_c: coordinate i becomes bottom when x_i <= c, else stays x_i.
Tuple cut_below(const Lattice& L, const Tuple& x, Elem c);

/// <x>_f: componentwise med(f(0..0), x_i, f(1..1)).
Tuple clamp(const FunctionTable& f, const Tuple& x);

/// f never decreases along single-coordinate cover steps (equivalent to
/// monotonicity over all comparable pairs). Witness: the two tuples of the
/// violating step plus the stepped coordinate.
PropertyReport check_nondecreasing(const FunctionTable& f);

/// f(c,...,c) = c for every c in S. Witness: the constant c and its tuple.
PropertyReport check_idempotent(const FunctionTable& f, const std::vector<Elem>& S);

/// f(x meet c) = f(x) meet c (min) / f(x join c) = f(x) join c (max), for x
/// over the selected domain and c over S (Full, Weak) or over all of L
/// (Boolean, where S is ignored). Witness: x and c.
PropertyReport check_min_homogeneous(const FunctionTable& f, const std::vector<Elem>& S,
                                     Domain domain);
PropertyReport check_max_homogeneous(const FunctionTable& f, const std::vector<Elem>& S,
                                     Domain domain);

/// f(x) = f(x join c) meet f([x]^c) (minitive) / f(x) = f(x meet c) join
/// f([x]_c) (maxitive), for x over Full or Weak domain and c over S.
/// Witness: x and c.
PropertyReport check_horizontally_minitive(const FunctionTable& f, const std::vector<Elem>& S,
                                           Domain domain);
PropertyReport check_horizontally_maxitive(const FunctionTable& f, const std::vector<Elem>& S,
                                           Domain domain);

/// f(x) = med(f(x with x_k = bottom), x_k, f(x with x_k = top)) for x over
/// the selected domain (Full; Weak = L_n^(0,2) union L_n^(1,3);
/// ZeroTwoOnly = L_n^(0,2)) and every coordinate k. Witness: x and k.
PropertyReport check_median_decomposable(const FunctionTable& f, Domain domain);

/// f(x with x_k = f(x)) = f(x) for every x and k. Witness: x and k.
PropertyReport check_strongly_idempotent(const FunctionTable& f);

/// The range of f equals its convex hull. Witness: the first hull element
/// missing from the range (in witness_c).
PropertyReport check_convex_range(const FunctionTable& f);

/// Every unary section of f (all coordinates but one frozen) has a convex
/// range; for unary f this is plain range convexity. Witness: a tuple
/// identifying the section (coordinate k set to bottom), the section
/// coordinate k, and the missing element in witness_c.
PropertyReport check_componentwise_convex_range(const FunctionTable& f);

/// Pairwise comonotonicity on chains: no coordinate pair i, j has
/// x_i < x_j together with y_i > y_j.
bool are_comonotonic(const Lattice& L, const Tuple& x, const Tuple& y);

/// f(x meet y) = f(x) meet f(y) (minitive) / f(x join y) = f(x) join f(y)
/// (maxitive) over all comonotonic pairs, chains only. Witness: the pair.
PropertyReport check_comonotonic_minitive(const FunctionTable& f);
PropertyReport check_comonotonic_maxitive(const FunctionTable& f);

/// f(x) is one of the coordinates of x, for x over Full or Boolean domain.
/// Witness: x.
PropertyReport check_conservative(const FunctionTable& f, Domain domain);

/// Replay a report's witness against the raw defining equation of its
/// property (including domain membership of the witness). Returns true when
/// the witness reproduces the violation; reports with holds == true return
/// true vacuously.
bool recheck_witness(const FunctionTable& f, const PropertyReport& report);

} // namespace latpoly
