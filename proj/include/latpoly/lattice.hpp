#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "latpoly/errors.hpp"

namespace latpoly {

/// Elements are dense indices 0..size()-1 into the carrier.
using Elem = int;

/// A point of L^n, one element index per coordinate.
using Tuple = std::vector<Elem>;

enum class LatticeKind { Chain, Table };

/// A closed interval [lo, hi] of a lattice. Invariant: lo <= hi in the
/// lattice order.
struct Interval {
  Elem lo = 0;
  Elem hi = 0;
};

/// Finite bounded lattice carrier. Either a chain 0 < 1 < ... < m-1 or an
/// explicit meet/join table. Table lattices are validated eagerly at
/// construction: idempotency, commutativity, associativity, absorption,
/// distributivity, and the existence of bottom and top. The first violated
/// law is reported with a witness.
class Lattice {
public:
  /// Total order 0 < 1 < ... < m-1. Element names are the decimal indices.
  static Lattice chain(int m);

  /// Build from explicit m*m meet and join tables (entries are indices).
  static Lattice from_tables(std::vector<std::string> names,
                             std::vector<std::vector<Elem>> meet,
                             std::vector<std::vector<Elem>> join);

  LatticeKind kind() const { return kind_; }
  bool is_chain() const { return kind_ == LatticeKind::Chain; }
  int size() const { return size_; }
  Elem bottom() const { return bottom_; }
  Elem top() const { return top_; }

  Elem meet(Elem a, Elem b) const {
    return is_chain() ? (a < b ? a : b) : meet_[static_cast<size_t>(a) * size_ + b];
  }
  Elem join(Elem a, Elem b) const {
    return is_chain() ? (a < b ? b : a) : join_[static_cast<size_t>(a) * size_ + b];
  }
  bool leq(Elem a, Elem b) const { return meet(a, b) == a; }

  const std::string& name(Elem a) const { return names_[static_cast<size_t>(a)]; }
  const std::vector<std::string>& names() const { return names_; }

  /// Elements covering a from above (immediate successors).
  const std::vector<Elem>& upper_covers(Elem a) const { return up_covers_[static_cast<size_t>(a)]; }
  /// Elements covered by a (immediate predecessors).
  const std::vector<Elem>& lower_covers(Elem a) const { return down_covers_[static_cast<size_t>(a)]; }

  /// Rank in a fixed linear extension of the lattice order
  /// (a < b implies rank(a) < rank(b)). For chains this is the index itself.
  int rank(Elem a) const { return rank_[static_cast<size_t>(a)]; }

  void check_elem(Elem a) const {
    if (a < 0 || a >= size_)
      throw ValidationError("element index " + std::to_string(a) + " out of range [0," +
                            std::to_string(size_ - 1) + "]");
  }

private:
  Lattice() = default;
  void finish_setup();

  LatticeKind kind_ = LatticeKind::Chain;
  int size_ = 0;
  Elem bottom_ = 0;
  Elem top_ = 0;
  std::vector<std::string> names_;
  std::vector<Elem> meet_; // row-major size*size, Table only
  std::vector<Elem> join_;
  std::vector<std::vector<Elem>> up_covers_;
  std::vector<std::vector<Elem>> down_covers_;
  std::vector<int> rank_;
};

using LatticePtr = std::shared_ptr<const Lattice>;

/// Factory helpers returning shared carriers (function tables keep a
/// reference to their lattice).
LatticePtr make_chain(int m);
LatticePtr make_table_lattice(std::vector<std::string> names,
                              std::vector<std::vector<Elem>> meet,
                              std::vector<std::vector<Elem>> join);

/// Componentwise meet/join of a tuple with a constant.
Tuple tuple_meet_const(const Lattice& L, const Tuple& x, Elem c);
Tuple tuple_join_const(const Lattice& L, const Tuple& x, Elem c);

/// Median term of an odd number of arguments: the join over all
/// (k+1)-subsets of their meets, for 2k+1 arguments. On chains this is the
/// middle order statistic. Even argument counts are rejected.
Elem med(const Lattice& L, std::span<const Elem> args);
Elem med(const Lattice& L, std::initializer_list<Elem> args);

/// All elements c with lo <= c <= hi, ascending by index.
std::vector<Elem> interval_elems(const Lattice& L, Elem lo, Elem hi);

/// Interval spanned by two comparable endpoints.
Interval interval(const Lattice& L, Elem lo, Elem hi);

/// Smallest convex subset containing the given nonempty element set.
/// On chains this is the contiguous range [min, max]; on table lattices it
/// is computed as a fixpoint closure under betweenness.
std::vector<Elem> convex_hull(const Lattice& L, std::span<const Elem> elems);

} // namespace latpoly
