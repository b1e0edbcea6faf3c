#pragma once

#include <optional>
#include <string>
#include <vector>

#include "latpoly/poly.hpp"
#include "latpoly/props.hpp"

namespace latpoly {

/// Outcome of a recognition procedure. Exactly one of certificate /
/// counterexample is present: the canonical DNF coefficients alpha_f on
/// acceptance, or the first tuple (ascending flat index) where f provably
/// differs from every function of the target class on rejection.
struct Decision {
  bool verdict = false;
  std::optional<CoefMap> certificate;
  std::optional<FuzzyMeasure> measure; ///< Sugeno/term acceptance only
  std::optional<Tuple> counterexample;
};

/// Accept iff the polynomial extension of f's restriction to
/// {bottom,top}^n reproduces f everywhere; the certificate is alpha_f.
/// Works on chains and on validated distributive table lattices.
Decision decide_polynomial(const FunctionTable& f);

/// Accept iff f is polynomial with f(bottom tuple) = bottom and
/// f(top tuple) = top; the certificate then also carries the fuzzy measure
/// mu = alpha_f. Rejections at the endpoints report the endpoint tuple.
Decision decide_sugeno(const FunctionTable& f);

/// Accept iff f is a Sugeno integral whose restriction to {bottom,top}^n is
/// conservative (a term function). On chains the full conservativeness
/// route is computed as well and asserted to agree.
Decision decide_term(const FunctionTable& f);

/// One characterization bundle: a named hypothesis set from an equivalence
/// theorem, with the per-condition reports that produced the verdict.
struct BundleVerdict {
  std::string bundle;
  bool applicable = true; ///< false for comonotonic bundles off chains
  bool holds = false;     ///< all conditions hold (meaningful when applicable)
  std::vector<PropertyReport> conditions;
};

/// Verdicts of every characterization bundle for one function, plus the
/// recognition verdict they are all equivalent to on chains.
struct BundleMatrix {
  std::vector<Elem> s_elems; ///< the set S = closed range hull used throughout
  bool polynomial = false;   ///< decide_polynomial verdict
  std::vector<BundleVerdict> bundles;
};

/// The fixed evaluation order of the characterization bundles.
const std::vector<std::string>& bundle_names();

/// Evaluate every characterization bundle with S = the closed range hull
/// [f(0..0) meet f(1..1), f(0..0) join f(1..1)]. Horizontal "-SL" variants
/// replace S by all of L in the horizontal conditions only. On non-chain
/// lattices the comonotonicity bundles are marked not applicable.
BundleMatrix characterize(const FunctionTable& f);

} // namespace latpoly
