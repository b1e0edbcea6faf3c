#include "latpoly/io.hpp"

#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "latpoly/errors.hpp"

namespace latpoly {

namespace {

using nlohmann::json;

json parse_json(const std::string& text, const std::string& context) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ValidationError(context + ": invalid JSON");
  return j;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str(), "file '" + path + "'");
}

const json& required_field(const json& j, const std::string& name, const std::string& context) {
  if (!j.is_object()) throw ValidationError(context + ": expected a JSON object");
  const auto it = j.find(name);
  if (it == j.end()) throw ValidationError(context + ": missing field '" + name + "'");
  return *it;
}

int int_field(const json& j, const std::string& name, const std::string& context) {
  const json& v = required_field(j, name, context);
  if (!v.is_number_integer())
    throw ValidationError(context + ": field '" + name + "' must be an integer");
  return v.get<int>();
}

/// Element reference inside a lattice file's own meet/join tables: name or
/// index, for any lattice kind.
Elem parse_table_entry(const std::vector<std::string>& names, const json& v,
                       const std::string& field) {
  if (v.is_number_integer()) {
    const long long idx = v.get<long long>();
    if (idx < 0 || idx >= static_cast<long long>(names.size()))
      throw ValidationError(field + ": element index " + std::to_string(idx) +
                            " out of range [0," + std::to_string(names.size() - 1) + "]");
    return static_cast<Elem>(idx);
  }
  if (v.is_string()) {
    const std::string token = v.get<std::string>();
    for (size_t i = 0; i < names.size(); ++i)
      if (names[i] == token) return static_cast<Elem>(i);
    throw ValidationError(field + ": unknown element name '" + token + "'");
  }
  throw ValidationError(field + ": element references must be names or indices");
}

Elem parse_elem_json(const Lattice& L, const json& v, const std::string& field) {
  if (v.is_number_integer()) {
    if (!L.is_chain())
      throw ValidationError(field + ": element references for table lattices must be names");
    const long long idx = v.get<long long>();
    if (idx < 0 || idx >= L.size())
      throw ValidationError(field + ": element index " + std::to_string(idx) +
                            " out of range [0," + std::to_string(L.size() - 1) + "]");
    return static_cast<Elem>(idx);
  }
  if (v.is_string()) return parse_elem_name(L, v.get<std::string>(), field);
  throw ValidationError(field + ": element references must be names or indices");
}

std::vector<Elem> parse_elem_array(const Lattice& L, const json& v, size_t expected,
                                   const std::string& field) {
  if (!v.is_array())
    throw ValidationError(field + ": expected an array of " + std::to_string(expected) +
                          " elements");
  if (v.size() != expected)
    throw ValidationError(field + ": expected " + std::to_string(expected) +
                          " entries, got " + std::to_string(v.size()));
  std::vector<Elem> out;
  out.reserve(expected);
  for (size_t i = 0; i < v.size(); ++i)
    out.push_back(parse_elem_json(L, v[i], field + "[" + std::to_string(i) + "]"));
  return out;
}

LatticePtr parse_lattice_json(const json& j, const std::string& context) {
  const json& kind = required_field(j, "kind", context);
  if (!kind.is_string()) throw ValidationError(context + ": field 'kind' must be a string");
  const std::string kind_name = kind.get<std::string>();

  if (kind_name == "chain") {
    const int size = int_field(j, "size", context);
    if (size < 1) throw ValidationError(context + ": chain size must be positive");
    return make_chain(size);
  }

  if (kind_name == "table") {
    const json& elems = required_field(j, "elements", context);
    if (!elems.is_array() || elems.empty())
      throw ValidationError(context + ": field 'elements' must be a non-empty array of names");
    std::vector<std::string> names;
    names.reserve(elems.size());
    for (const json& e : elems) {
      if (!e.is_string())
        throw ValidationError(context + ": field 'elements' must hold strings");
      names.push_back(e.get<std::string>());
    }
    auto parse_op = [&](const char* op) {
      const json& rows = required_field(j, op, context);
      if (!rows.is_array() || rows.size() != names.size())
        throw ValidationError(context + ": field '" + op + "' must be a " +
                              std::to_string(names.size()) + "x" +
                              std::to_string(names.size()) + " table");
      std::vector<std::vector<Elem>> table;
      table.reserve(rows.size());
      for (size_t r = 0; r < rows.size(); ++r) {
        const json& row = rows[r];
        const std::string field =
            context + ": " + op + " row " + std::to_string(r);
        if (!row.is_array() || row.size() != names.size())
          throw ValidationError(field + " must hold " + std::to_string(names.size()) +
                                " entries");
        std::vector<Elem> parsed;
        parsed.reserve(row.size());
        for (const json& cell : row) parsed.push_back(parse_table_entry(names, cell, field));
        table.push_back(std::move(parsed));
      }
      return table;
    };
    return make_table_lattice(std::move(names), parse_op("meet"), parse_op("join"));
  }

  throw ValidationError(context + ": unknown lattice kind '" + kind_name +
                        "' (expected chain or table)");
}

/// A "lattice" field is an inline lattice object or a path string resolved
/// relative to the referencing file.
LatticePtr resolve_lattice_field(const json& j, const std::string& referencing_path,
                                 const std::string& context) {
  const json& v = required_field(j, "lattice", context);
  if (v.is_object()) return parse_lattice_json(v, context + ": inline lattice");
  if (v.is_string()) {
    std::filesystem::path target(v.get<std::string>());
    if (target.is_relative())
      target = std::filesystem::path(referencing_path).parent_path() / target;
    return load_lattice_file(target.string());
  }
  throw ValidationError(context + ": field 'lattice' must be an object or a file path");
}

std::string trimmed(const std::string& text) {
  size_t b = 0;
  size_t e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  return text.substr(b, e - b);
}

std::string bool_text(bool v) { return v ? "true" : "false"; }

} // namespace

LatticePtr load_lattice_file(const std::string& path) {
  return parse_lattice_json(load_json_file(path), "file '" + path + "'");
}

LatticePtr parse_lattice_text(const std::string& text, const std::string& context) {
  return parse_lattice_json(parse_json(text, context), context);
}

FunctionTable load_table_file(const std::string& path) {
  const std::string context = "file '" + path + "'";
  const json j = load_json_file(path);
  const LatticePtr lattice = resolve_lattice_field(j, path, context);
  const int arity = int_field(j, "arity", context);
  if (arity < 1 || arity > 20)
    throw ValidationError(context + ": arity must be in [1,20], got " + std::to_string(arity));
  const std::uint64_t points = domain_size(*lattice, arity);
  std::vector<Elem> values = parse_elem_array(
      *lattice, required_field(j, "values", context), static_cast<size_t>(points),
      context + ": values");
  return FunctionTable(lattice, arity, std::move(values));
}

CoefFile load_coef_file(const std::string& path) {
  const std::string context = "file '" + path + "'";
  const json j = load_json_file(path);
  const LatticePtr lattice = resolve_lattice_field(j, path, context);
  const int arity = int_field(j, "arity", context);
  if (arity < 1 || arity > 20)
    throw ValidationError(context + ": arity must be in [1,20], got " + std::to_string(arity));
  std::vector<Elem> values =
      parse_elem_array(*lattice, required_field(j, "values", context),
                       size_t{1} << arity, context + ": values");
  return CoefFile{lattice, CoefMap(arity, std::move(values))};
}

Elem parse_elem_name(const Lattice& L, const std::string& token, const std::string& field) {
  const std::string name = trimmed(token);
  for (int i = 0; i < L.size(); ++i)
    if (L.name(i) == name) return i;
  if (L.is_chain() && !name.empty() &&
      name.find_first_not_of("0123456789") == std::string::npos)
    throw ValidationError(field + ": element index " + name + " out of range [0," +
                          std::to_string(L.size() - 1) + "]");
  throw ValidationError(field + ": unknown element name '" + name + "'");
}

Tuple parse_tuple(const Lattice& L, int arity, const std::string& text) {
  const std::string body = trimmed(text);
  if (body.size() < 2 || body.front() != '(' || body.back() != ')')
    throw ValidationError("tuple '" + text + "' must be parenthesized, e.g. (0,1)");
  std::vector<std::string> tokens;
  std::string token;
  for (size_t i = 1; i + 1 < body.size(); ++i) {
    if (body[i] == ',') {
      tokens.push_back(token);
      token.clear();
    } else {
      token += body[i];
    }
  }
  tokens.push_back(token);
  if (static_cast<int>(tokens.size()) != arity)
    throw ValidationError("tuple '" + text + "' has " + std::to_string(tokens.size()) +
                          " entries but the function has arity " + std::to_string(arity));
  Tuple x;
  x.reserve(tokens.size());
  for (const std::string& t : tokens) x.push_back(parse_elem_name(L, t, "tuple '" + text + "'"));
  return x;
}

std::string elems_display(const Lattice& L, const std::vector<Elem>& values) {
  std::string out = "[";
  for (size_t i = 0; i < values.size(); ++i) {
    if (i) out += ",";
    out += L.name(values[i]);
  }
  return out + "]";
}

namespace {

std::string set_display(const Lattice& L, const std::vector<Elem>& s) {
  std::string out = "{";
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += L.name(s[i]);
  }
  return out + "}";
}

/// One-line witness summary: "x=(0,1), y=(1,0), c=a, k=2" with only the
/// populated parts.
std::string witness_summary(const Lattice& L, const PropertyReport& rep) {
  std::string out;
  const char* tuple_names[] = {"x", "y"};
  for (size_t i = 0; i < rep.witness_tuples.size() && i < 2; ++i) {
    if (!out.empty()) out += ", ";
    out += std::string(tuple_names[i]) + "=" + tuple_display(L, rep.witness_tuples[i]);
  }
  if (rep.witness_c) {
    if (!out.empty()) out += ", ";
    out += "c=" + L.name(*rep.witness_c);
  }
  if (rep.witness_k) {
    if (!out.empty()) out += ", ";
    out += "k=" + std::to_string(*rep.witness_k);
  }
  return out;
}

} // namespace

void write_property_report(std::ostream& out, const Lattice& L, const PropertyReport& rep) {
  out << "property: " << rep.property << "\n";
  out << "holds: " << bool_text(rep.holds) << "\n";
  if (rep.domain) out << "domain: " << domain_name(*rep.domain) << "\n";
  if (rep.s_set) out << "s-set: " << set_display(L, *rep.s_set) << "\n";
  out << "checked: " << rep.checked_domain << "\n";
  if (!rep.witness_tuples.empty()) out << "witness-x: " << tuple_display(L, rep.witness_tuples[0]) << "\n";
  if (rep.witness_tuples.size() > 1)
    out << "witness-y: " << tuple_display(L, rep.witness_tuples[1]) << "\n";
  if (rep.witness_c) out << "witness-c: " << L.name(*rep.witness_c) << "\n";
  if (rep.witness_k) out << "witness-k: " << *rep.witness_k << "\n";
}

void write_canon_report(std::ostream& out, const FunctionTable& f) {
  const Lattice& L = f.lattice();
  out << "lattice: " << lattice_label(L) << "\n";
  out << "arity: " << f.arity() << "\n";
  out << "values: " << elems_display(L, f.values()) << "\n";
  const bool poly = decide_polynomial(f).verdict;
  out << "polynomial: " << bool_text(poly) << "\n";
  const CoefMap alpha = alpha_from_oracle(f);
  const CoefMap beta = beta_from_oracle(f);
  out << "alpha: " << elems_display(L, alpha.values) << "\n";
  out << "beta: " << elems_display(L, beta.values) << "\n";
  if (L.is_chain()) {
    out << "alpha-star: " << elems_display(L, alpha_star(L, alpha).values) << "\n";
    out << "beta-star: " << elems_display(L, beta_star(L, beta).values) << "\n";
    if (poly) {
      out << "unique-dnf: " << bool_text(is_unique_dnf(f)) << "\n";
      out << "unique-cnf: " << bool_text(is_unique_cnf(f)) << "\n";
    }
  }
}

void write_decision_report(std::ostream& out, const Lattice& L, const std::string& class_name,
                           const Decision& d) {
  out << "class: " << class_name << "\n";
  out << "verdict: " << bool_text(d.verdict) << "\n";
  if (d.certificate) out << "certificate: " << elems_display(L, d.certificate->values) << "\n";
  if (d.measure) out << "measure: " << elems_display(L, d.measure->coef().values) << "\n";
  if (d.counterexample) out << "counterexample: " << tuple_display(L, *d.counterexample) << "\n";
}

void write_theorem_report(std::ostream& out, const TheoremRun& run) {
  const Lattice& L = *run.plan.lattice;
  out << "theorem: " << run.id << "\n";
  out << "lattice: " << lattice_label(L) << "\n";
  out << "arity: " << run.plan.arity << "\n";
  out << "mode: " << sweep_mode_name(run.plan.mode) << "\n";
  if (run.plan.mode == SweepMode::RandomMonotone || run.plan.mode == SweepMode::RandomAny) {
    out << "samples: " << run.plan.sample_count << "\n";
    if (run.plan.seed) out << "seed: " << *run.plan.seed << "\n";
  }
  out << "expect-counterexample: " << bool_text(run.plan.expect_counterexample) << "\n";
  out << "tables-checked: " << run.tables_checked << "\n";
  out << "discrepancies: " << run.discrepancies.size() << "\n";
  for (size_t i = 0; i < run.discrepancies.size(); ++i) {
    const Discrepancy& d = run.discrepancies[i];
    const std::string prefix = "discrepancy-" + std::to_string(i + 1);
    out << prefix << "-index: " << d.index << "\n";
    out << prefix << "-values: " << elems_display(L, d.values) << "\n";
    out << prefix << "-detail: " << d.detail << "\n";
  }
  out << "result: " << (run.passed() ? "pass" : "fail") << "\n";
}

void write_registry_report(std::ostream& out, const RegistryEntry& entry,
                           const std::vector<PropertyReport>& reports, bool matches) {
  const Lattice& L = entry.table.lattice();
  out << "name: " << entry.name << "\n";
  out << "note: " << entry.note << "\n";
  out << "lattice: " << lattice_label(L) << "\n";
  out << "arity: " << entry.table.arity() << "\n";
  out << "values: " << elems_display(L, entry.table.values()) << "\n";
  out << "checks: " << entry.profile.size() << "\n";
  for (size_t i = 0; i < entry.profile.size(); ++i) {
    const std::string prefix = "check-" + std::to_string(i + 1);
    out << prefix << "-label: " << entry.profile[i].label << "\n";
    out << prefix << "-expected: " << bool_text(entry.profile[i].expected) << "\n";
    out << prefix << "-actual: " << bool_text(reports[i].holds) << "\n";
    if (!reports[i].holds) {
      const std::string witness = witness_summary(L, reports[i]);
      if (!witness.empty()) out << prefix << "-witness: " << witness << "\n";
    }
  }
  out << "profile-match: " << bool_text(matches) << "\n";
}

} // namespace latpoly
