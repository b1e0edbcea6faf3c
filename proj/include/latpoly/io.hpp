#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "latpoly/decide.hpp"
#include "latpoly/function_table.hpp"
#include "latpoly/harness.hpp"
#include "latpoly/lattice.hpp"
#include "latpoly/poly.hpp"
#include "latpoly/props.hpp"

namespace latpoly {

// ---------------------------------------------------------------------------
// Input files. Lattices are JSON objects {"kind":"chain","size":m} or
// {"kind":"table","elements":[names],"meet":[[..]],"join":[[..]]}. Files
// holding functions or coefficients name their lattice inline or by path
// (resolved relative to the referencing file). Element references are
// names; plain integers are additionally accepted as indices on chains
// (and inside a lattice file's own meet/join tables).
// ---------------------------------------------------------------------------

/// Load a lattice file. Throws ValidationError naming the offending field.
LatticePtr load_lattice_file(const std::string& path);

/// Parse lattice JSON given as text (for inline definitions and tests).
LatticePtr parse_lattice_text(const std::string& text, const std::string& context);

/// Load a function table file: {"lattice": <path or inline>, "arity": n,
/// "values": [ ... m^n element refs, row-major, first coordinate most
/// significant ... ]}.
FunctionTable load_table_file(const std::string& path);

/// A coefficient (or fuzzy measure) file: {"lattice": <path or inline>,
/// "arity": n, "values": [ v_0, ..., v_{2^n - 1} ]} with v_B the value at
/// bitmask B (bit i-1 <-> coordinate i).
struct CoefFile {
  LatticePtr lattice;
  CoefMap coef;
};

CoefFile load_coef_file(const std::string& path);

/// Resolve one element reference (name, or index on a chain).
Elem parse_elem_name(const Lattice& L, const std::string& token, const std::string& field);

/// Parse "(x1,...,xn)" with optional spaces; entries are element refs.
Tuple parse_tuple(const Lattice& L, int arity, const std::string& text);

// ---------------------------------------------------------------------------
// Report writers: structured text, one "key: value" per line, stable field
// order, deterministic bytes for identical inputs. Elements print as names.
// ---------------------------------------------------------------------------

/// "[v0,v1,...]" over element names, e.g. "[0,a,1]".
std::string elems_display(const Lattice& L, const std::vector<Elem>& values);

void write_property_report(std::ostream& out, const Lattice& L, const PropertyReport& rep);

/// Canonical coefficients of a table: alpha/beta always; the starred maps
/// on chains; uniqueness flags on chains when the table is polynomial.
void write_canon_report(std::ostream& out, const FunctionTable& f);

void write_decision_report(std::ostream& out, const Lattice& L, const std::string& class_name,
                           const Decision& d);

/// Everything except elapsed time, which callers report on stderr so that
/// stdout stays byte-identical across runs.
void write_theorem_report(std::ostream& out, const TheoremRun& run);

void write_registry_report(std::ostream& out, const RegistryEntry& entry,
                           const std::vector<PropertyReport>& reports, bool matches);

} // namespace latpoly
