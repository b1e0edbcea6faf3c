#include "latpoly/function_table.hpp"

namespace latpoly {

std::uint64_t domain_size(const Lattice& L, int arity) {
  if (arity < 0) throw ValidationError("arity must be nonnegative");
  std::uint64_t n = 1;
  for (int k = 0; k < arity; ++k) {
    if (n > UINT64_MAX / static_cast<std::uint64_t>(L.size()))
      throw ValidationError("domain size overflows");
    n *= static_cast<std::uint64_t>(L.size());
  }
  return n;
}

std::uint64_t tuple_index(const Lattice& L, const Tuple& x) {
  std::uint64_t idx = 0;
  for (Elem c : x) idx = idx * static_cast<std::uint64_t>(L.size()) + static_cast<std::uint64_t>(c);
  return idx;
}

Tuple index_tuple(const Lattice& L, int arity, std::uint64_t idx) {
  Tuple x(static_cast<size_t>(arity));
  for (int k = arity - 1; k >= 0; --k) {
    x[static_cast<size_t>(k)] = static_cast<Elem>(idx % static_cast<std::uint64_t>(L.size()));
    idx /= static_cast<std::uint64_t>(L.size());
  }
  return x;
}

void for_each_tuple(const Lattice& L, int arity, const std::function<void(const Tuple&)>& fn) {
  Tuple x(static_cast<size_t>(arity), 0);
  const int m = L.size();
  while (true) {
    fn(x);
    int k = arity - 1;
    while (k >= 0 && x[static_cast<size_t>(k)] == m - 1) {
      x[static_cast<size_t>(k)] = 0;
      --k;
    }
    if (k < 0) return;
    ++x[static_cast<size_t>(k)];
  }
}

FunctionTable::FunctionTable(LatticePtr lattice, int arity, std::vector<Elem> values)
    : lattice_(std::move(lattice)), arity_(arity), values_(std::move(values)) {
  if (!lattice_) throw ValidationError("function table needs a lattice");
  if (arity_ < 1) throw ValidationError("function table arity must be at least 1");
  const std::uint64_t want = domain_size(*lattice_, arity_);
  if (values_.size() != want)
    throw ValidationError("function table needs " + std::to_string(want) + " values, got " +
                          std::to_string(values_.size()));
  for (Elem v : values_) lattice_->check_elem(v);
}

FunctionTable FunctionTable::constant(LatticePtr lattice, int arity, Elem value) {
  const std::uint64_t n = domain_size(*lattice, arity);
  return FunctionTable(std::move(lattice), arity, std::vector<Elem>(n, value));
}

FunctionTable FunctionTable::tabulate(LatticePtr lattice, int arity,
                                      const std::function<Elem(const Tuple&)>& fn) {
  std::vector<Elem> vals;
  vals.reserve(domain_size(*lattice, arity));
  for_each_tuple(*lattice, arity, [&](const Tuple& x) { vals.push_back(fn(x)); });
  return FunctionTable(std::move(lattice), arity, std::move(vals));
}

std::string FunctionTable::display() const {
  std::string s = "[";
  for (size_t i = 0; i < values_.size(); ++i) {
    if (i) s += ",";
    s += lattice_->name(values_[i]);
  }
  s += "]";
  return s;
}

std::string tuple_display(const Lattice& L, const Tuple& x) {
  std::string s = "(";
  for (size_t i = 0; i < x.size(); ++i) {
    if (i) s += ",";
    s += L.name(x[i]);
  }
  s += ")";
  return s;
}

} // namespace latpoly
