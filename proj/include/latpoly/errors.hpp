#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace latpoly {

/// Base class for all latpoly errors. Everything thrown by the library
/// derives from this, so callers can catch one type at the boundary.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input: bad sizes, arity mismatches, empty sets, bad files.
class ValidationError : public Error {
public:
  explicit ValidationError(const std::string& what) : Error(what) {}
};

/// A lattice law failed during table validation. Carries the name of the
/// first violated law and the witness elements (as indices).
class LatticeLawError : public ValidationError {
public:
  LatticeLawError(std::string law, std::vector<int> witness, const std::string& what)
      : ValidationError(what), law_(std::move(law)), witness_(std::move(witness)) {}

  const std::string& law() const { return law_; }
  const std::vector<int>& witness() const { return witness_; }

private:
  std::string law_;
  std::vector<int> witness_;
};

/// Operation defined only on chains was called on a table lattice.
class UnsupportedLatticeError : public Error {
public:
  explicit UnsupportedLatticeError(const std::string& what) : Error(what) {}
};

/// A documented precondition was violated (e.g. a non-polynomial table was
/// passed where a polynomial one is required).
class ContractViolation : public Error {
public:
  explicit ContractViolation(const std::string& what) : Error(what) {}
};

/// A map expected to be nondecreasing was not. Carries the witness pair.
class MonotonicityError : public ValidationError {
public:
  MonotonicityError(std::vector<int> lo, std::vector<int> hi, const std::string& what)
      : ValidationError(what), lo_(std::move(lo)), hi_(std::move(hi)) {}

  const std::vector<int>& lo() const { return lo_; }
  const std::vector<int>& hi() const { return hi_; }

private:
  std::vector<int> lo_;
  std::vector<int> hi_;
};

} // namespace latpoly
