#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "latpoly/decide.hpp"
#include "latpoly/function_table.hpp"
#include "latpoly/lattice.hpp"
#include "latpoly/poly.hpp"
#include "latpoly/props.hpp"

namespace latpoly {

/// Table-sweep strategies for theorem runs.
enum class SweepMode {
  Exhaustive,         ///< all m^(m^n) tables in lexicographic order, cap-guarded
  ExhaustiveMonotone, ///< all nondecreasing tables, exempt from the cap
  RandomMonotone,     ///< seeded monotone-repaired uniform samples
  RandomAny,          ///< seeded uniform samples over all tables
};

std::string sweep_mode_name(SweepMode mode);

/// Inverse of sweep_mode_name; "random" is accepted as an alias for
/// "random-monotone". Throws ValidationError on unknown names.
SweepMode sweep_mode_from_name(const std::string& name);

/// Exhaustive-sweep guard: the LATPOLY_CAP environment variable when it
/// holds a positive integer, otherwise 2^24 tables.
std::uint64_t table_cap();

/// One theorem-verification sweep request.
struct SweepPlan {
  LatticePtr lattice;
  int arity = 1;
  SweepMode mode = SweepMode::Exhaustive;
  std::uint64_t sample_count = 0;    ///< number of random samples (random modes)
  std::optional<std::uint64_t> seed; ///< required for random modes
  bool expect_counterexample = false; ///< flips the pass criterion
  std::uint64_t cap = table_cap();   ///< exhaustive-mode table budget
};

/// Carrier label derived from content, e.g. "chain-3" or "table-4".
std::string lattice_label(const Lattice& L);

/// One violation found during a theorem run.
struct Discrepancy {
  std::uint64_t index = 0;  ///< position in the sweep (table or sequence pair)
  std::vector<Elem> values; ///< the offending table (or concatenated pair)
  std::string detail;       ///< which side of the statement broke, with witness
};

/// Outcome of one theorem-verification sweep.
struct TheoremRun {
  std::string id;
  SweepPlan plan;
  std::uint64_t tables_checked = 0;
  std::vector<Discrepancy> discrepancies;
  double elapsed_seconds = 0.0; ///< diagnostic only; reports keep it off stdout

  /// Clean sweep, or a found discrepancy when one was expected.
  bool passed() const {
    return plan.expect_counterexample ? !discrepancies.empty() : discrepancies.empty();
  }
};

/// m^(m^n), saturating at 2^63 so it stays comparable against any cap.
std::uint64_t exhaustive_table_count(const Lattice& L, int n);

/// The table at a given lexicographic position: the value vector is the
/// mixed-radix expansion of the index, first tuple most significant.
FunctionTable table_at_index(const LatticePtr& lattice, int n, std::uint64_t index);

/// Visit all m^(m^n) tables in lexicographic order of their value vectors.
/// Throws ValidationError with a mode hint when the count exceeds cap.
/// The callback receives the table's lexicographic index; returning false
/// stops the sweep.
void enumerate_tables(const LatticePtr& lattice, int n, std::uint64_t cap,
                      const std::function<bool(std::uint64_t, const FunctionTable&)>& visit);

/// Visit exactly the nondecreasing tables, generated by assigning values to
/// tuples in rank order (a linear extension of the product order) and
/// trying smaller element indices first. Exempt from the exhaustive cap.
void enumerate_monotone_tables(const LatticePtr& lattice, int n,
                               const std::function<bool(std::uint64_t, const FunctionTable&)>& visit);

std::uint64_t count_monotone_tables(const LatticePtr& lattice, int n);

/// Deterministic RNG: std::mt19937_64 plus hand-rolled rejection sampling,
/// so value streams are identical across platforms and standard libraries.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform draw from {0, ..., bound-1}; bound must be positive.
  std::uint64_t below(std::uint64_t bound);

private:
  std::mt19937_64 engine_;
};

/// Uniform random table over all of L^(L^n).
FunctionTable sample_any(const LatticePtr& lattice, int n, Rng& rng);

/// One upward sweep in rank order replacing f(x) by the join of f(x) with
/// f at every lower cover of x. The result is always nondecreasing, and
/// nondecreasing inputs are fixed points.
FunctionTable monotone_repair(const FunctionTable& f);

/// A nondecreasing table: uniform draw followed by monotone_repair.
FunctionTable sample_monotone(const LatticePtr& lattice, int n, Rng& rng);
FunctionTable sample_monotone(const LatticePtr& lattice, int n, std::uint64_t seed);

/// Uniform random coefficient map; its DNF extension injects true
/// polynomial functions into random sweeps.
CoefMap sample_coef(const Lattice& L, int n, Rng& rng);

/// The fixed list of verifiable theorem/lemma identifiers.
const std::vector<std::string>& theorem_ids();

/// Sweep the plan's tables (or, for the median identity, its sequence
/// pairs) and check the statement named by id on each item, recording a
/// discrepancy whenever one side of the stated equivalence or implication
/// disagrees with the other. Random modes additionally check every
/// statement on a fresh random-coefficient polynomial per sample. Throws
/// ValidationError for unknown ids and for plans invalid for the id
/// (chain-only statements, missing seed, cap violations).
TheoremRun verify_theorem(const std::string& id, const SweepPlan& plan);

/// One stored property expectation of a registry entry.
struct ProfileCheck {
  std::string label; ///< stable display label, e.g. "weakly min-homogeneous (S = range hull)"
  bool expected = false; ///< frozen verdict
  std::function<PropertyReport(const FunctionTable&)> run;
};

/// A named function with its frozen property profile. Deciders contribute
/// synthesized reports whose property names are "polynomial",
/// "sugeno-integral", and "term-function".
struct RegistryEntry {
  std::string name;
  std::string note; ///< one line on what the entry documents
  FunctionTable table;
  std::vector<ProfileCheck> profile;
};

/// The built-in counterexample registry, in fixed order.
const std::vector<RegistryEntry>& registry();

/// Entry lookup by name; throws ValidationError listing the known names.
const RegistryEntry& registry_entry(const std::string& name);

/// Run every profile check of an entry against its table.
std::vector<PropertyReport> replay(const RegistryEntry& entry);

/// True when replay reproduces every expected verdict.
bool registry_entry_matches(const RegistryEntry& entry);

} // namespace latpoly
