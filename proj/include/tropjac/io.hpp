#pragma once

// JSON interchange, format version 1.
//
// Integers with |x| < 2^53 are JSON numbers; every other rational is the
// string "p/q" (or "p").  Objects are written with keys in a fixed order so
// output is byte-for-byte reproducible.

#include "tropjac/picard.hpp"

#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>

namespace tropjac::io {

using json = nlohmann::ordered_json;

inline constexpr int kFormat = 1;

// ---------------------------------------------------------------------------
// Scalars and vectors

inline json write_rational(const Rational& q) {
  static const Integer limit = Integer(1) << 53;
  if (q.get_den() == 1 && abs(q.get_num()) < limit) return json(q.get_num().get_si());
  return json(q.get_str());
}

inline Rational read_rational(const json& j, const std::string& path) {
  if (j.is_number_integer()) return to_rational(j.get<long long>());
  if (j.is_number_unsigned()) return Rational(Integer(std::to_string(j.get<unsigned long long>())));
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const InputError& e) {
      throw InputError(path + ": " + e.what());
    }
  }
  throw InputError(path + ": expected an integer or a \"p/q\" string");
}

inline long long read_int(const json& j, const std::string& path) {
  Rational q = read_rational(j, path);
  if (q.get_den() != 1 || !q.get_num().fits_slong_p()) throw InputError(path + ": expected a machine integer");
  return q.get_num().get_si();
}

inline json write_vector(const LatticeVector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(write_rational(x));
  return a;
}

inline LatticeVector read_vector(const json& j, const std::string& path, std::optional<std::size_t> rank = {}) {
  if (!j.is_array()) throw InputError(path + ": expected an array");
  std::vector<Rational> c;
  for (std::size_t i = 0; i < j.size(); ++i) c.push_back(read_rational(j[i], path + "/" + std::to_string(i)));
  if (rank && c.size() != *rank)
    throw InputError(path + ": expected " + std::to_string(*rank) + " coordinates, got " + std::to_string(c.size()));
  return LatticeVector(std::move(c));
}

inline std::string where(const std::string& path) { return path.empty() ? "(root)" : path; }

inline const json& field(const json& j, const char* key, const std::string& path) {
  if (!j.is_object()) throw InputError(where(path) + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(where(path) + ": missing key '" + key + "'");
  return *it;
}

inline void check_format(const json& j, const std::string& path) {
  if (!j.is_object()) throw InputError(where(path) + ": expected an object");
  auto it = j.find("format");
  if (it == j.end()) throw InputError(where(path) + ": missing key 'format'");
  if (!it->is_number_integer() || it->get<int>() != kFormat)
    throw InputError(path + "/format: unsupported format version");
}

inline void check_keys(const json& j, std::initializer_list<const char*> allowed, const std::string& path) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const char* k : allowed) ok = ok || it.key() == k;
    if (!ok) throw InputError(where(path) + ": unknown key '" + it.key() + "'");
  }
}

// ---------------------------------------------------------------------------
// Monoids and orders

inline json write_monoid_body(const SharpMonoid& m) {
  json j;
  j["ambient_rank"] = m.ambient_rank();
  json g = json::array();
  for (const auto& x : m.generators()) g.push_back(write_vector(x));
  j["generators"] = g;
  return j;
}

inline SharpMonoid read_monoid_body(const json& j, const std::string& path) {
  const json& r = field(j, "ambient_rank", path);
  if (!r.is_number_integer() || r.get<long long>() <= 0) throw InputError(path + "/ambient_rank: expected a positive integer");
  auto n = static_cast<std::size_t>(r.get<long long>());
  const json& g = field(j, "generators", path);
  if (!g.is_array()) throw InputError(path + "/generators: expected an array");
  std::vector<LatticeVector> gens;
  for (std::size_t i = 0; i < g.size(); ++i) gens.push_back(read_vector(g[i], path + "/generators/" + std::to_string(i), n));
  try {
    return SharpMonoid(n, std::move(gens));
  } catch (const Error& e) {
    throw InputError(path + ": " + e.what());
  }
}

inline json write_order_body(const ValuationOrder& v) {
  json j = write_monoid_body(v.base());
  json w = json::array();
  for (const auto& row : v.weights()) w.push_back(write_vector(LatticeVector(row)));
  j["weights"] = w;
  return j;
}

inline ValuationOrder read_order_body(const json& j, const std::string& path) {
  SharpMonoid m = read_monoid_body(j, path);
  const json& w = field(j, "weights", path);
  if (!w.is_array()) throw InputError(path + "/weights: expected an array");
  RationalMatrix rows;
  for (std::size_t i = 0; i < w.size(); ++i) {
    auto v = read_vector(w[i], path + "/weights/" + std::to_string(i), m.ambient_rank());
    rows.emplace_back(v.begin(), v.end());
  }
  try {
    return ValuationOrder(std::move(m), std::move(rows));
  } catch (const Error& e) {
    throw InputError(path + ": " + e.what());
  }
}

inline json write_monoid(const SharpMonoid& m) {
  json j;
  j["format"] = kFormat;
  json body = write_monoid_body(m);
  for (auto& [k, v] : body.items()) j[k] = v;
  return j;
}

inline SharpMonoid read_monoid(const json& j) {
  check_format(j, "");
  check_keys(j, {"format", "ambient_rank", "generators"}, "");
  return read_monoid_body(j, "");
}

inline json write_order(const ValuationOrder& v) {
  json j;
  j["format"] = kFormat;
  json body = write_order_body(v);
  for (auto& [k, val] : body.items()) j[k] = val;
  return j;
}

inline ValuationOrder read_order(const json& j) {
  check_format(j, "");
  check_keys(j, {"format", "ambient_rank", "generators", "weights"}, "");
  return read_order_body(j, "");
}

// ---------------------------------------------------------------------------
// Curves

struct CurveFile {
  TropicalCurve curve;
  std::optional<std::vector<Chain>> cycle_basis;

  CycleBasis basis() const {
    return cycle_basis ? CycleBasis::from_cycles(curve, *cycle_basis) : CycleBasis::fundamental(curve);
  }
};

inline json write_chain(const TropicalCurve& x, const Chain& c) {
  json j = json::object();
  for (std::size_t k = 0; k < c.size(); ++k)
    if (c[k] != 0) j[x.edge(k).name] = c[k];
  return j;
}

inline Chain read_chain(const TropicalCurve& x, const json& j, const std::string& path) {
  if (!j.is_object()) throw InputError(path + ": expected an object keyed by edge name");
  Chain c(x.num_edges());
  for (auto it = j.begin(); it != j.end(); ++it) {
    auto k = x.find_edge(it.key());
    if (!k) throw InputError(path + ": unknown edge '" + it.key() + "'");
    c[*k] = read_int(it.value(), path + "/" + it.key());
  }
  return c;
}

inline json write_curve(const CurveFile& f) {
  const TropicalCurve& x = f.curve;
  json j;
  j["format"] = kFormat;
  if (x.metric().is_total())
    j["order"] = write_order_body(x.metric().order());
  else
    j["monoid"] = write_monoid_body(x.metric().monoid());
  j["vertices"] = x.vertex_names();
  json edges = json::array();
  for (const auto& e : x.edges()) {
    json je;
    je["name"] = e.name;
    je["from"] = e.tail ? json(x.vertex_name(*e.tail)) : json(nullptr);
    je["to"] = e.head ? json(x.vertex_name(*e.head)) : json(nullptr);
    je["length"] = write_vector(e.length);
    edges.push_back(je);
  }
  j["edges"] = edges;
  if (f.cycle_basis) {
    json cb = json::array();
    for (const auto& c : *f.cycle_basis) cb.push_back(write_chain(x, c));
    j["cycle_basis"] = cb;
  }
  return j;
}

inline CurveFile read_curve(const json& j) {
  check_format(j, "");
  check_keys(j, {"format", "monoid", "order", "vertices", "edges", "cycle_basis"}, "");
  Metric metric;
  if (j.contains("order") == j.contains("monoid")) throw InputError("(root): exactly one of 'monoid' and 'order' is required");
  if (j.contains("order"))
    metric = read_order_body(j["order"], "/order");
  else
    metric = read_monoid_body(j["monoid"], "/monoid");
  CurveBuilder b(metric);
  const json& vs = field(j, "vertices", "");
  if (!vs.is_array()) throw InputError("/vertices: expected an array of names");
  std::map<std::string, std::size_t> vid;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (!vs[i].is_string()) throw InputError("/vertices/" + std::to_string(i) + ": expected a name");
    auto name = vs[i].get<std::string>();
    if (!vid.emplace(name, i).second) throw InputError("/vertices/" + std::to_string(i) + ": duplicate name");
    b.add_vertex(name);
  }
  const json& es = field(j, "edges", "");
  if (!es.is_array()) throw InputError("/edges: expected an array");
  std::set<std::string> enames;
  for (std::size_t i = 0; i < es.size(); ++i) {
    std::string p = "/edges/" + std::to_string(i);
    const json& e = es[i];
    if (!e.is_object()) throw InputError(p + ": expected an object");
    check_keys(e, {"name", "from", "to", "length"}, p);
    std::string name = "e" + std::to_string(i + 1);
    if (e.contains("name")) {
      if (!e["name"].is_string()) throw InputError(p + "/name: expected a string");
      name = e["name"].get<std::string>();
    }
    if (!enames.insert(name).second) throw InputError(p + "/name: duplicate edge name");
    auto end = [&](const char* key) -> std::optional<std::size_t> {
      const json& v = field(e, key, p);
      if (v.is_null()) return std::nullopt;
      if (!v.is_string() || !vid.count(v.get<std::string>()))
        throw InputError(p + "/" + key + ": unknown vertex");
      return vid[v.get<std::string>()];
    };
    auto from = end("from");
    auto to = end("to");
    b.add_edge(from, to, read_vector(field(e, "length", p), p + "/length", metric.ambient_rank()), name);
  }
  CurveFile f{b.build(), std::nullopt};
  auto bad = f.curve.validate();
  if (!bad.empty())
    throw InputError("/edges: flag " + std::to_string(bad[0].flag) + " violates " + bad[0].condition + " (" +
                     bad[0].message + ")");
  if (j.contains("cycle_basis")) {
    const json& cb = j["cycle_basis"];
    if (!cb.is_array()) throw InputError("/cycle_basis: expected an array");
    std::vector<Chain> cycles;
    for (std::size_t i = 0; i < cb.size(); ++i)
      cycles.push_back(read_chain(f.curve, cb[i], "/cycle_basis/" + std::to_string(i)));
    try {
      CycleBasis::from_cycles(f.curve, cycles);
    } catch (const Error& e) {
      throw InputError(std::string("/cycle_basis: ") + e.what());
    }
    f.cycle_basis = std::move(cycles);
  }
  return f;
}

// ---------------------------------------------------------------------------
// Monodromy, classes, PL functions

inline json write_hom(const MonodromyHom& mu) {
  json j;
  j["format"] = kFormat;
  json v = json::array();
  for (const auto& x : mu.values) v.push_back(write_vector(x));
  j["values"] = v;
  return j;
}

inline MonodromyHom read_hom_values(const json& v, const std::string& path, std::size_t rank) {
  if (!v.is_array()) throw InputError(path + ": expected an array");
  MonodromyHom mu;
  for (std::size_t i = 0; i < v.size(); ++i) mu.values.push_back(read_vector(v[i], path + "/" + std::to_string(i), rank));
  return mu;
}

inline MonodromyHom read_hom(const json& j, std::size_t rank) {
  check_format(j, "");
  check_keys(j, {"format", "values"}, "");
  return read_hom_values(field(j, "values", ""), "/values", rank);
}

inline json write_divisor(const TropicalCurve& x, const Divisor& d) {
  json j = json::object();
  for (std::size_t v = 0; v < d.values.size(); ++v)
    if (d.values[v] != 0) j[x.vertex_name(v)] = d.values[v];
  return j;
}

inline Divisor read_divisor(const TropicalCurve& x, const json& j, const std::string& path) {
  if (!j.is_object()) throw InputError(path + ": expected an object keyed by vertex name");
  Divisor d;
  d.values.assign(x.num_vertices(), 0);
  for (auto it = j.begin(); it != j.end(); ++it) {
    auto v = x.find_vertex(it.key());
    if (!v) throw InputError(path + ": unknown vertex '" + it.key() + "'");
    d.values[*v] = read_int(it.value(), path + "/" + it.key());
  }
  return d;
}

inline json write_class(const TropicalCurve& x, const TroPicClass& c) {
  json j;
  j["format"] = kFormat;
  j["divisor"] = write_divisor(x, c.divisor);
  json v = json::array();
  for (const auto& m : c.mu.values) v.push_back(write_vector(m));
  j["mu"] = v;
  return j;
}

inline TroPicClass read_class(const TropicalCurve& x, const json& j) {
  check_format(j, "");
  check_keys(j, {"format", "divisor", "mu"}, "");
  return {read_divisor(x, field(j, "divisor", ""), "/divisor"), read_hom_values(field(j, "mu", ""), "/mu", x.ambient_rank())};
}

inline json write_plf(const TropicalCurve& x, const PLFunction& f) {
  json j;
  j["format"] = kFormat;
  json vals = json::object();
  for (std::size_t v = 0; v < x.num_vertices(); ++v) vals[x.vertex_name(v)] = write_vector(f.vertex_value(x, v));
  j["vertex_values"] = vals;
  j["slopes"] = write_chain(x, f.edge_slopes(x));
  return j;
}

inline PLFunction read_plf(const TropicalCurve& x, const json& j) {
  check_format(j, "");
  check_keys(j, {"format", "vertex_values", "slopes"}, "");
  const json& vals = field(j, "vertex_values", "");
  if (!vals.is_object()) throw InputError("/vertex_values: expected an object");
  std::vector<std::optional<LatticeVector>> got(x.num_vertices());
  for (auto it = vals.begin(); it != vals.end(); ++it) {
    auto v = x.find_vertex(it.key());
    if (!v) throw InputError("/vertex_values: unknown vertex '" + it.key() + "'");
    got[*v] = read_vector(it.value(), "/vertex_values/" + it.key(), x.ambient_rank());
  }
  std::vector<LatticeVector> values;
  for (std::size_t v = 0; v < got.size(); ++v) {
    if (!got[v]) throw InputError("/vertex_values: missing vertex '" + x.vertex_name(v) + "'");
    values.push_back(*got[v]);
  }
  return pl_from_vertex_values(x, values, read_chain(x, field(j, "slopes", ""), "/slopes"));
}

// ---------------------------------------------------------------------------
// Files

inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

inline json parse(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(source + ": " + e.what());
  }
}

inline json load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path + ": cannot open");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str(), path);
}

// Prefixes path-level messages with the file name.
template <class F>
auto with_source(const std::string& path, F&& f) {
  try {
    return f();
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

}  // namespace tropjac::io
