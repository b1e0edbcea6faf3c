#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "latpoly/lattice.hpp"

namespace latpoly {

/// Number of points of L^n.
std::uint64_t domain_size(const Lattice& L, int arity);

/// Flat index of a tuple: sum of x_k * m^(n-1-k), first coordinate most
/// significant. Ascending index order is the tuple-major lexicographic
/// sweep order used for witnesses.
std::uint64_t tuple_index(const Lattice& L, const Tuple& x);

/// Inverse of tuple_index.
Tuple index_tuple(const Lattice& L, int arity, std::uint64_t idx);

/// Visit all of L^n in ascending index order.
void for_each_tuple(const Lattice& L, int arity, const std::function<void(const Tuple&)>& fn);

/// An explicit function L^n -> L stored as a flat value vector indexed by
/// tuple_index.
class FunctionTable {
public:
  FunctionTable(LatticePtr lattice, int arity, std::vector<Elem> values);

  /// Table filled with a single value.
  static FunctionTable constant(LatticePtr lattice, int arity, Elem value);

  /// Tabulate an arbitrary callable.
  static FunctionTable tabulate(LatticePtr lattice, int arity,
                                const std::function<Elem(const Tuple&)>& fn);

  const Lattice& lattice() const { return *lattice_; }
  const LatticePtr& lattice_ptr() const { return lattice_; }
  int arity() const { return arity_; }
  const std::vector<Elem>& values() const { return values_; }
  std::vector<Elem>& values() { return values_; }

  Elem operator()(const Tuple& x) const { return values_[tuple_index(*lattice_, x)]; }
  Elem at_index(std::uint64_t idx) const { return values_[idx]; }

  /// Value at the all-bottom / all-top point.
  Elem at_bottom() const { return values_.front(); }
  Elem at_top() const { return values_.back(); }

  /// A short display such as [0,0,2] (names for table lattices).
  std::string display() const;

private:
  LatticePtr lattice_;
  int arity_;
  std::vector<Elem> values_;
};

/// Render a tuple as "(x1,...,xn)" using element names.
std::string tuple_display(const Lattice& L, const Tuple& x);

} // namespace latpoly
