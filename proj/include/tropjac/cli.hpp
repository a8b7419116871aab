#pragma once

// Batch front end.  run() executes one job and returns the process exit
// status: 0 on success, 1 on malformed input, 2 on a failed precondition.

#include "tropjac/cells.hpp"
#include "tropjac/io.hpp"

#include <cstdio>
#include <iomanip>
#include <ostream>

namespace tropjac::cli {

enum class Command { info, pairing, bounded, trivialize, normalize, jac_equal, class_equal, cells, tiling, tau };

inline const std::vector<std::pair<Command, std::string>>& command_names() {
  static const std::vector<std::pair<Command, std::string>> names = {
      {Command::info, "info"},           {Command::pairing, "pairing"},         {Command::bounded, "bounded"},
      {Command::trivialize, "trivialize"}, {Command::normalize, "normalize"}, {Command::jac_equal, "jac-equal"},
      {Command::class_equal, "class-equal"}, {Command::cells, "cells"},       {Command::tiling, "tiling"},
      {Command::tau, "tau"}};
  return names;
}

inline std::string command_help(Command c) {
  switch (c) {
    case Command::info: return "validate a curve, print Betti numbers, cycle basis and pairing";
    case Command::pairing: return "print the intersection pairing matrix";
    case Command::bounded: return "decide whether a monodromy is bounded by cycle lengths";
    case Command::trivialize: return "subdivide and find a cochain whose coboundary is the monodromy";
    case Command::normalize: return "reduce a monodromy into the normalized box";
    case Command::jac_equal: return "compare two monodromies modulo coboundaries of cycles";
    case Command::class_equal: return "compare two classes (divisor, monodromy)";
    case Command::cells: return "list quasistable cells (genus 2 plots via --svg)";
    case Command::tiling: return "check that the cells tile a fundamental domain";
    case Command::tau: return "test a point of a torus orbit and print the kernel";
  }
  return "";
}

inline std::string command_name(Command c) {
  for (const auto& [k, n] : command_names())
    if (k == c) return n;
  return "?";
}

struct JobSpec {
  Command command = Command::info;
  std::optional<std::string> curve, order, mu, mu2, cls, cls2, output, svg, csv, base_vertex, divisor_box;
  std::optional<std::vector<Rational>> lengths, u, v;
  std::optional<long long> degree, slope_bound, samples;
  std::optional<std::uint64_t> seed;
};

// Options each command accepts.
inline std::vector<std::string> allowed_options(Command c) {
  switch (c) {
    case Command::info: return {"curve"};
    case Command::pairing: return {"curve", "lengths"};
    case Command::bounded: return {"curve", "mu", "order", "seed", "samples"};
    case Command::trivialize: return {"curve", "mu", "order", "output"};
    case Command::normalize: return {"curve", "mu", "order", "output"};
    case Command::jac_equal: return {"curve", "mu", "mu2"};
    case Command::class_equal: return {"curve", "class", "class2", "base-vertex"};
    case Command::cells: return {"curve", "lengths", "d", "slope-bound", "box", "svg", "csv"};
    case Command::tiling: return {"curve", "lengths", "d", "slope-bound", "box", "samples"};
    case Command::tau: return {"curve", "u", "v"};
  }
  return {};
}

inline std::vector<std::string> set_options(const JobSpec& j) {
  std::vector<std::string> s;
  auto add = [&](bool present, const char* name) {
    if (present) s.push_back(name);
  };
  add(j.curve.has_value(), "curve");
  add(j.order.has_value(), "order");
  add(j.mu.has_value(), "mu");
  add(j.mu2.has_value(), "mu2");
  add(j.cls.has_value(), "class");
  add(j.cls2.has_value(), "class2");
  add(j.output.has_value(), "output");
  add(j.svg.has_value(), "svg");
  add(j.csv.has_value(), "csv");
  add(j.base_vertex.has_value(), "base-vertex");
  add(j.divisor_box.has_value(), "box");
  add(j.lengths.has_value(), "lengths");
  add(j.u.has_value(), "u");
  add(j.v.has_value(), "v");
  add(j.degree.has_value(), "d");
  add(j.slope_bound.has_value(), "slope-bound");
  add(j.samples.has_value(), "samples");
  add(j.seed.has_value(), "seed");
  return s;
}

// ---------------------------------------------------------------------------
// Formatting

// Linear form in the ambient coordinates d1..dn; a plain number in rank one.
inline std::string format_linear(const LatticeVector& v) {
  if (v.rank() == 1) return to_string(v[0]);
  std::string out;
  for (std::size_t i = 0; i < v.rank(); ++i) {
    const Rational& c = v[i];
    if (sgn(c) == 0) continue;
    Rational a = abs_of(c);
    if (out.empty())
      out += sgn(c) < 0 ? "-" : "";
    else
      out += sgn(c) < 0 ? " - " : " + ";
    if (a != 1) out += to_string(a) + "*";
    out += "d" + std::to_string(i + 1);
  }
  return out.empty() ? "0" : out;
}

inline std::string format_chain(const TropicalCurve& x, const Chain& c) {
  std::string out;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] == 0) continue;
    long long a = std::abs(c[k]);
    if (out.empty())
      out += c[k] < 0 ? "-" : "";
    else
      out += c[k] < 0 ? " - " : " + ";
    if (a != 1) out += std::to_string(a) + "*";
    out += x.edge(k).name;
  }
  return out.empty() ? "0" : out;
}

inline std::string format_point(const Point& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? ";" : "") + to_string(p[i]);
  return s + ")";
}

inline std::string format_fixed(const Rational& q) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", q.get_d());
  std::string s = buf;
  return s == "-0.000" ? "0.000" : s;
}

inline void print_matrix(std::ostream& out, const PairingMatrix& a) {
  for (const auto& row : a) {
    out << "  [";
    for (std::size_t k = 0; k < row.size(); ++k) out << (k ? ", " : " ") << format_linear(row[k]);
    out << " ]\n";
  }
}

// ---------------------------------------------------------------------------
// Curve setup

inline TropicalCurve theta_curve(const std::optional<std::vector<Rational>>& lengths) {
  const std::size_t rank = lengths ? 1 : 3;
  CurveBuilder b(Metric(SharpMonoid::orthant(rank)));
  auto v1 = b.add_vertex("v1"), v2 = b.add_vertex("v2");
  for (std::size_t k = 0; k < 3; ++k) {
    LatticeVector len = lengths ? LatticeVector(std::vector<Rational>{(*lengths)[k]}) : LatticeVector::unit(3, k);
    b.add_edge(v1, v2, len, "e" + std::to_string(k + 1));
  }
  return b.build();
}

inline io::CurveFile theta_file(const std::optional<std::vector<Rational>>& lengths) {
  if (lengths && lengths->size() != 3) throw InputError("--lengths: the theta graph has 3 edges");
  return {theta_curve(lengths), std::vector<Chain>{{1, -1, 0}, {0, 1, -1}}};
}

// Replaces every edge length by a real (rank one) value.
inline io::CurveFile with_real_lengths(const io::CurveFile& f, const std::vector<Rational>& lengths) {
  const TropicalCurve& x = f.curve;
  if (lengths.size() != x.num_edges())
    throw InputError("--lengths: expected " + std::to_string(x.num_edges()) + " values");
  CurveBuilder b(Metric(SharpMonoid::orthant(1)));
  for (std::size_t v = 0; v < x.num_vertices(); ++v) b.add_vertex(x.vertex_name(v));
  for (std::size_t k = 0; k < x.num_edges(); ++k) {
    const auto& e = x.edge(k);
    b.add_edge(e.tail, e.head, LatticeVector(std::vector<Rational>{lengths[k]}), e.name);
  }
  io::CurveFile out{b.build(), f.cycle_basis};
  out.curve.require_valid();
  return out;
}

inline io::CurveFile load_curve(const JobSpec& job, bool theta_default) {
  if (!job.curve) {
    if (!theta_default) throw InputError("--curve is required");
    return theta_file(job.lengths);
  }
  auto f = io::with_source(*job.curve, [&] { return io::read_curve(io::load(*job.curve)); });
  if (job.lengths) return with_real_lengths(f, *job.lengths);
  return f;
}

inline ValuationOrder pick_order(const JobSpec& job, const TropicalCurve& x, std::ostream& out) {
  if (job.order) {
    auto v = io::with_source(*job.order, [&] { return io::read_order(io::load(*job.order)); });
    if (v.ambient_rank() != x.ambient_rank()) throw InputError(*job.order + ": order rank differs from the curve");
    return v;
  }
  if (x.metric().is_total()) return x.metric().order();
  auto v = totalize(x.metric().monoid());
  out << "order: totalized, weights";
  for (const auto& row : v.weights()) out << " " << format_point(row);
  out << "\n";
  return v;
}

inline MonodromyHom load_hom(const std::string& path, const TropicalCurve& x, const CycleBasis& b) {
  auto mu = io::with_source(path, [&] { return io::read_hom(io::load(path), x.ambient_rank()); });
  if (mu.genus() != b.genus())
    throw InputError(path + ": /values has " + std::to_string(mu.genus()) + " entries, genus is " +
                     std::to_string(b.genus()));
  return mu;
}

inline void print_basis(std::ostream& out, const TropicalCurve& x, const CycleBasis& b) {
  out << "basis:\n";
  for (std::size_t j = 0; j < b.genus(); ++j)
    out << "  gamma" << j + 1 << " = " << format_chain(x, b.cycle(j)) << "\n";
}

inline CellOptions cell_options(const JobSpec& job, const TropicalCurve& x) {
  CellOptions o;
  o.degree = job.degree.value_or(0);
  o.slope_bound = job.slope_bound.value_or(1);
  if (job.divisor_box) {
    std::stringstream ss(*job.divisor_box);
    std::string part;
    while (std::getline(ss, part, ',')) {
      auto colon = part.find(':', part[0] == '-' ? 1 : 0);
      try {
        if (colon == std::string::npos) {
          long long v = std::stoll(part);
          o.box.range.push_back({v, v});
        } else {
          o.box.range.push_back({std::stoll(part.substr(0, colon)), std::stoll(part.substr(colon + 1))});
        }
      } catch (const std::exception&) {
        throw InputError("--box: cannot parse '" + part + "'");
      }
    }
    if (o.box.range.size() != x.num_vertices())
      throw InputError("--box: expected " + std::to_string(x.num_vertices()) + " ranges");
  } else if (!job.curve) {
    o.box.range = {{0, 2}, {-2, 0}};
  } else {
    throw InputError("--box is required with --curve");
  }
  return o;
}

// ---------------------------------------------------------------------------
// Exports

inline std::string cells_csv(const TropicalCurve& x, const std::vector<Cell>& cells) {
  std::string s = "model,divisor,slopes,dimension,vertices\n";
  for (const auto& c : cells) {
    std::string model;
    for (auto k : c.subdivided) model += (model.empty() ? "" : "+") + x.edge(k).name;
    if (model.empty()) model = "-";
    std::string div;
    for (std::size_t v = 0; v < x.num_vertices(); ++v)
      div += (v ? " " : "") + x.vertex_name(v) + "=" + std::to_string(c.divisor.values[v]);
    for (std::size_t i = 0; i < c.subdivided.size(); ++i)
      div += " p(" + x.edge(c.subdivided[i]).name + ")=" + std::to_string(c.divisor.values[x.num_vertices() + i]);
    std::string sl;
    for (std::size_t k = 0; k < x.num_edges(); ++k) {
      bool split = std::find(c.subdivided.begin(), c.subdivided.end(), k) != c.subdivided.end();
      sl += (k ? " " : "") + x.edge(k).name + "=" + std::to_string(c.slopes[k]);
      if (split) sl += "/" + std::to_string(c.slopes[k] + 1);
    }
    std::string verts;
    for (std::size_t i = 0; i < c.polytope.vertices.size(); ++i)
      verts += (i ? " " : "") + format_point(c.polytope.vertices[i]);
    s += model + "," + div + "," + sl + "," + std::to_string(c.polytope.dim) + "," + verts + "\n";
  }
  return s;
}

// Basis cycle 1 on the horizontal axis, cycle 2 on the vertical axis.
inline std::string cells_svg(const TropicalCurve& x, const CycleBasis& b, const std::vector<Cell>& cells) {
  if (b.genus() != 2) throw PreconditionError("svg export needs genus 2");
  auto a = intersection_matrix(x, b);
  std::vector<Point> domain = {{0, 0}, {a[0][0][0], a[0][1][0]},
                               {a[0][0][0] + a[1][0][0], a[0][1][0] + a[1][1][0]}, {a[1][0][0], a[1][1][0]}};
  Rational x0 = 0, x1 = 0, y0 = 0, y1 = 0;
  auto extend = [&](const Point& p) {
    x0 = std::min(x0, p[0]);
    x1 = std::max(x1, p[0]);
    y0 = std::min(y0, p[1]);
    y1 = std::max(y1, p[1]);
  };
  for (const auto& p : domain) extend(p);
  for (const auto& c : cells)
    for (const auto& p : c.polytope.vertices) extend(p);
  const Rational scale = 20, margin = 20;
  auto px = [&](const Point& p) {
    return format_fixed((p[0] - x0) * scale + margin) + "," + format_fixed((y1 - p[1]) * scale + margin);
  };
  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << format_fixed((x1 - x0) * scale + 2 * margin)
    << "\" height=\"" << format_fixed((y1 - y0) * scale + 2 * margin) << "\">\n";
  s << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  s << "<polygon points=\"";
  for (std::size_t i = 0; i < domain.size(); ++i) s << (i ? " " : "") << px(domain[i]);
  s << "\" fill=\"#d8d8d8\" stroke=\"none\"/>\n";
  for (const auto& c : cells) {
    std::string label;
    for (std::size_t v = 0; v < c.divisor.values.size(); ++v) label += (v ? "," : "") + std::to_string(c.divisor.values[v]);
    const auto& vs = c.polytope.vertices;
    if (c.polytope.dim == 2) {
      s << "<polygon points=\"";
      for (std::size_t i = 0; i < vs.size(); ++i) s << (i ? " " : "") << px(vs[i]);
      s << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
    } else if (c.polytope.dim == 1) {
      s << "<polyline points=\"" << px(vs[0]) << " " << px(vs[1]) << "\" stroke=\"#1f4e9c\" stroke-width=\"1.5\"/>\n";
    } else if (c.polytope.dim == 0) {
      auto xy = px(vs[0]);
      auto comma = xy.find(',');
      s << "<circle cx=\"" << xy.substr(0, comma) << "\" cy=\"" << xy.substr(comma + 1)
        << "\" r=\"2.5\" fill=\"#b22222\"/>\n";
    }
    Point centre(2);
    for (const auto& p : vs) {
      centre[0] += p[0] / static_cast<long>(vs.size());
      centre[1] += p[1] / static_cast<long>(vs.size());
    }
    auto xy = px(centre);
    auto comma = xy.find(',');
    s << "<text x=\"" << xy.substr(0, comma) << "\" y=\"" << xy.substr(comma + 1)
      << "\" font-size=\"6\" text-anchor=\"middle\">" << label << "</text>\n";
  }
  s << "</svg>\n";
  return s.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError(path + ": cannot write");
  f << text;
}

// ---------------------------------------------------------------------------
// Commands

namespace detail {

inline int cmd_info(const JobSpec& job, std::ostream& out) {
  auto f = load_curve(job, false);
  const auto& x = f.curve;
  out << "vertices: " << x.num_vertices() << "\nedges: " << x.num_edges() << "\n";
  out << "validation: ok\n";
  if (!x.is_compact()) {
    out << "compact: no\n";
    return 0;
  }
  auto [b0, b1] = x.betti();
  out << "b0 = " << b0 << "\nb1 = " << b1 << "\n";
  auto b = f.basis();
  print_basis(out, x, b);
  out << "pairing matrix:\n";
  print_matrix(out, intersection_matrix(x, b));
  return 0;
}

inline int cmd_pairing(const JobSpec& job, std::ostream& out) {
  auto f = load_curve(job, true);
  auto b = f.basis();
  auto a = intersection_matrix(f.curve, b);
  print_basis(out, f.curve, b);
  out << "pairing matrix:\n";
  print_matrix(out, a);
  if (f.curve.ambient_rank() == 1) {
    RationalMatrix m(a.size(), std::vector<Rational>(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < a.size(); ++j) m[i][j] = a[i][j][0];
    out << "det = " << to_string(determinant(m)) << "\n";
  }
  return 0;
}

inline void print_witnesses(std::ostream& out, const BoundednessReport& r) {
  for (std::size_t j = 0; j < r.witnesses.size(); ++j) {
    out << "  gamma" << j + 1 << ": ";
    if (r.witnesses[j])
      out << "(" << r.witnesses[j]->lower << "," << r.witnesses[j]->upper << ") witnesses\n";
    else
      out << "no witnesses\n";
  }
}

inline int cmd_bounded(const JobSpec& job, std::ostream& out) {
  auto f = load_curve(job, false);
  const auto& x = f.curve;
  auto b = f.basis();
  auto mu = load_hom(*job.mu, x, b);
  BoundednessReport r;
  if (job.order || x.metric().is_total())
    r = is_bounded(x, b, mu, pick_order(job, x, out));
  else
    r = is_bounded(x, b, mu);
  print_witnesses(out, r);
  if (r.bounded && job.samples) {
    auto bad = sample_unbounded_cycle(x, b, mu, job.seed.value_or(0), static_cast<int>(*job.samples));
    if (bad) {
      r.bounded = false;
      r.failing_cycle = bad;
    }
    out << "sampled " << *job.samples << " combinations\n";
  }
  if (r.bounded) {
    out << "bounded: yes\n";
    return 0;
  }
  const Chain& z = *r.failing_cycle;
  out << "bounded: no\ncertificate: cycle " << format_chain(x, z) << " has monodromy "
      << format_linear(evaluate(x, b, mu, z)) << ", not bounded by its length " << format_linear(cycle_length(x, z))
      << "\n";
  return 2;
}

inline int cmd_trivialize(const JobSpec& job, std::ostream& out) {
  auto f = load_curve(job, false);
  const auto& x = f.curve;
  auto b = f.basis();
  auto mu = load_hom(*job.mu, x, b);
  auto v = pick_order(job, x, out);
  auto t = trivialize(x, b, v, mu);
  const auto& y = t.subdivision.curve;
  out << "subdivision:\n";
  for (std::size_t k = 0; k < x.num_edges(); ++k)
    if (t.subdivision.edge_image[k].size() > 1)
      out << "  " << x.edge(k).name << " at " << format_linear(y.edge(k).length) << " from " << x.vertex_name(*x.edge(k).tail)
          << "\n";
  out << "cochain:\n";
  for (std::size_t k = 0; k < y.num_edges(); ++k)
    out << "  " << y.edge(k).name << " = " << t.cochain[k] << "\n";
  bool ok = pulled_back_coboundary(t.subdivision, b, t.cochain) == mu;
  out << "coboundary pulls back to mu: " << (ok ? "yes" : "no") << "\n";
  if (job.output) {
    io::json j;
    j["format"] = io::kFormat;
    j["curve"] = io::write_curve({y, std::nullopt});
    j["cochain"] = io::write_chain(y, t.cochain);
    write_file(*job.output, io::dump(j));
  }
  return ok ? 0 : 1;
}

inline int cmd_normalize(const JobSpec& job, std::ostream& out) {
  auto f = load_curve(job, false);
  const auto& x = f.curve;
  auto b = f.basis();
  auto mu = load_hom(*job.mu, x, b);
  auto v = pick_order(job, x, out);
  auto n = normalize(x, b, v, mu);
  out << "gamma = (";
  for (std::size_t j = 0; j < n.gamma.size(); ++j) out << (j ? "," : "") << n.gamma[j];
  out << ")\n";
  for (std::size_t j = 0; j < n.zeta.genus(); ++j)
    out << "  zeta(gamma" << j + 1 << ") = " << format_linear(n.zeta.values[j]) << "\n";
  out << "bound: " << x.ambient_rank() * (b.genus() + 1) << " * length, satisfied\n";
  if (job.output) write_file(*job.output, io::dump(io::write_hom(n.zeta)));
  return 0;
}

inline int cmd_jac_equal(const JobSpec& job, std::ostream& out) {
  auto f = load_curve(job, false);
  auto b = f.basis();
  auto m1 = load_hom(*job.mu, f.curve, b), m2 = load_hom(*job.mu2, f.curve, b);
  auto r = jac_equal(f.curve, b, m1, m2);
  if (r.equal) {
    out << "equal: yes\ngamma = (";
    for (std::size_t j = 0; j < r.gamma->size(); ++j) out << (j ? "," : "") << (*r.gamma)[j];
    out << ")\n";
  } else {
    out << "equal: no\n";
  }
  return 0;
}

inline void print_class(std::ostream& out, const TropicalCurve& x, const TroPicClass& c) {
  out << "  divisor:";
  for (std::size_t v = 0; v < x.num_vertices(); ++v)
    if (c.divisor.values[v] != 0) out << " " << x.vertex_name(v) << "=" << c.divisor.values[v];
  out << "\n  mu:";
  for (const auto& m : c.mu.values) out << " " << format_linear(m);
  out << "\n";
}

inline int cmd_class_equal(const JobSpec& job, std::ostream& out) {
  auto f = load_curve(job, false);
  const auto& x = f.curve;
  auto b = f.basis();
  auto read = [&](const std::string& p) {
    auto c = io::with_source(p, [&] { return io::read_class(x, io::load(p)); });
    check_hom(x, b, c.mu);
    return c;
  };
  auto c1 = read(*job.cls), c2 = read(*job.cls2);
  std::size_t base = 0;
  if (job.base_vertex) {
    auto v = x.find_vertex(*job.base_vertex);
    if (!v) throw InputError("--base-vertex: unknown vertex '" + *job.base_vertex + "'");
    base = *v;
  }
  out << "degrees: " << degree(c1) << ", " << degree(c2) << "\n";
  out << "canonical forms at " << x.vertex_name(base) << ":\n";
  print_class(out, x, canonicalize(x, b, c1, base));
  print_class(out, x, canonicalize(x, b, c2, base));
  out << "equal: " << (class_equal(x, b, c1, c2) ? "yes" : "no") << "\n";
  return 0;
}

inline int cmd_cells(const JobSpec& job, std::ostream& out) {
  auto f = load_curve(job, true);
  auto b = f.basis();
  auto opt = cell_options(job, f.curve);
  auto cells = quasistable_cells(f.curve, b, opt);
  auto csv = cells_csv(f.curve, cells);
  if (job.csv) {
    write_file(*job.csv, csv);
    out << cells.size() << " cells\n";
  } else {
    out << csv;
  }
  if (job.svg) write_file(*job.svg, cells_svg(f.curve, b, cells));
  return 0;
}

inline int cmd_tiling(const JobSpec& job, std::ostream& out) {
  auto f = load_curve(job, true);
  auto b = f.basis();
  auto opt = cell_options(job, f.curve);
  auto cells = quasistable_cells(f.curve, b, opt);
  auto r = verify_tiling(cells, f.curve, b, static_cast<std::size_t>(job.samples.value_or(100)));
  out << "cells: " << cells.size() << " (" << r.distinct_cells << " distinct)\n";
  out << "area: " << to_string(r.area_sum) << " / " << to_string(r.expected_area) << "\n";
  out << "overlaps: " << r.overlaps.size() << "\n";
  out << "uncovered samples: " << r.uncovered.size() << " of " << r.samples << "\n";
  for (const auto& p : r.uncovered) out << "  " << format_point(p) << "\n";
  out << "tiling: " << (r.ok() ? "ok" : "FAILED") << "\n";
  return 0;
}

inline int cmd_tau(const JobSpec& job, std::ostream& out) {
  auto f = load_curve(job, false);
  auto b = f.basis();
  auto r = tau_contains(f.curve, b, *job.u, *job.v);
  out << "u nonnegative on the monoid: " << (r.u_nonnegative ? "yes" : "no") << "\n";
  if (r.u_nonnegative) {
    out << "cycles killed by u:\n";
    for (const auto& k : r.kernel) {
      out << "  (";
      for (std::size_t j = 0; j < k.size(); ++j) out << (j ? "," : "") << k[j];
      out << ")\n";
    }
  }
  out << "in tau: " << (r.contains ? "yes" : "no") << "\n";
  return 0;
}

inline void require(bool present, const char* name) {
  if (!present) throw InputError(std::string("--") + name + " is required");
}

}  // namespace detail

inline int run(const JobSpec& job, std::ostream& out, std::ostream& err) {
  try {
    auto allowed = allowed_options(job.command);
    for (const auto& o : set_options(job))
      if (std::find(allowed.begin(), allowed.end(), o) == allowed.end())
        throw InputError("option --" + o + " does not apply to '" + command_name(job.command) + "'");
    switch (job.command) {
      case Command::info: return detail::cmd_info(job, out);
      case Command::pairing: return detail::cmd_pairing(job, out);
      case Command::bounded:
        detail::require(job.mu.has_value(), "mu");
        return detail::cmd_bounded(job, out);
      case Command::trivialize:
        detail::require(job.mu.has_value(), "mu");
        return detail::cmd_trivialize(job, out);
      case Command::normalize:
        detail::require(job.mu.has_value(), "mu");
        return detail::cmd_normalize(job, out);
      case Command::jac_equal:
        detail::require(job.mu.has_value(), "mu");
        detail::require(job.mu2.has_value(), "mu2");
        return detail::cmd_jac_equal(job, out);
      case Command::class_equal:
        detail::require(job.cls.has_value(), "class");
        detail::require(job.cls2.has_value(), "class2");
        return detail::cmd_class_equal(job, out);
      case Command::cells: return detail::cmd_cells(job, out);
      case Command::tiling: return detail::cmd_tiling(job, out);
      case Command::tau:
        detail::require(job.u.has_value(), "u");
        detail::require(job.v.has_value(), "v");
        return detail::cmd_tau(job, out);
    }
  } catch (const PreconditionError& e) {
    err << "precondition failed: " << e.what() << "\n";
    return 2;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

// "1,2/3,-4" -> rationals.
inline std::vector<Rational> parse_list(const std::string& text, const std::string& option) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string part;
  try {
    while (std::getline(ss, part, ',')) out.push_back(parse_rational(part));
  } catch (const InputError& e) {
    throw InputError(option + ": " + e.what());
  }
  if (out.empty()) throw InputError(option + ": empty list");
  return out;
}

}  // namespace tropjac::cli
