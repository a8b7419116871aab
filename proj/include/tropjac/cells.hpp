#pragma once

// Cells of balanced divisors on quasistable models of a curve with real
// (rank one) edge lengths, and the check that they tile a fundamental domain
// of Hom(H1, R) / coboundaries of H1.

#include "tropjac/picard.hpp"
#include "tropjac/polytope.hpp"

namespace tropjac {

struct DivisorBox {
  std::vector<std::pair<long long, long long>> range;  // per original vertex, inclusive

  static DivisorBox uniform(std::size_t vertices, long long lo, long long hi) {
    return {std::vector<std::pair<long long, long long>>(vertices, {lo, hi})};
  }
};

// A cell is indexed by the subdivided edges S, a divisor D and slopes.  D is
// the degree-zero divisor on the model (1 at each new point); the class of
// degree d it represents is D + d[twist vertex] with zero monodromy shift.
struct Cell {
  std::vector<std::size_t> subdivided;  // sorted edge indices
  Divisor divisor;                      // original vertices, then one entry per new point
  Chain slopes;                         // per original edge; on subdivided edges the first segment
  Polytope polytope;                    // in basis coordinates of Hom(H1, R)

  // Slope of the segment from the new point to the head of a subdivided edge
  // is the first-segment slope plus one.
  auto key() const { return std::tie(subdivided, divisor.values, slopes); }
  friend bool operator<(const Cell& a, const Cell& b) { return a.key() < b.key(); }
};

struct CellOptions {
  long long degree = 0;
  long long slope_bound = 1;
  DivisorBox box;
  std::size_t twist_vertex = 0;
};

namespace detail {

inline Rational real_length(const TropicalCurve& x, std::size_t k) { return x.edge(k).length[0]; }

inline void require_real(const TropicalCurve& x, std::string_view what) {
  if (x.ambient_rank() != 1) throw PreconditionError(std::string(what) + ": edge lengths must have rank 1");
  for (const auto& e : x.edges())
    if (sgn(e.length[0]) <= 0) throw PreconditionError(std::string(what) + ": lengths must be positive");
  if (!x.is_connected()) throw PreconditionError(std::string(what) + ": curve is not connected");
}

}  // namespace detail

// mu_j at positions t (one per subdivided edge, distance from the tail).
inline Point cell_point(const TropicalCurve& x, const CycleBasis& b, const Cell& c, const std::vector<Rational>& t) {
  Point mu(b.genus());
  std::vector<std::optional<Rational>> pos(x.num_edges());
  for (std::size_t i = 0; i < c.subdivided.size(); ++i) pos[c.subdivided[i]] = t.at(i);
  for (std::size_t j = 0; j < b.genus(); ++j)
    for (std::size_t k = 0; k < x.num_edges(); ++k) {
      long long gk = b.cycle(j)[k];
      if (gk == 0) continue;
      Rational len = detail::real_length(x, k);
      Rational traverse = pos[k] ? Rational(to_rational(c.slopes[k] + 1) * len - *pos[k])
                                 : Rational(to_rational(c.slopes[k]) * len);
      mu[j] += to_rational(gk) * traverse;
    }
  return mu;
}

// The model with new points at positions t, with divisor and slopes on it.
struct CellModel {
  Subdivision subdivision;
  Divisor divisor;
  Chain slopes;
};

inline CellModel cell_model(const TropicalCurve& x, const Cell& c, const std::vector<Rational>& t) {
  CellModel m{Subdivision::identity(x), {}, c.slopes};
  for (std::size_t i = 0; i < c.subdivided.size(); ++i) {
    std::size_t k = c.subdivided[i];
    m.subdivision = m.subdivision.then(subdivide(m.subdivision.curve, k, LatticeVector({t.at(i)})));
    // The appended segment runs from the old head to the new point.
    m.slopes.push_back(-(c.slopes[k] + 1));
  }
  m.divisor = c.divisor;
  return m;
}

inline std::vector<Cell> quasistable_cells(const TropicalCurve& x, const CycleBasis& b, const CellOptions& opt) {
  detail::require_real(x, "quasistable_cells");
  const std::size_t ne = x.num_edges(), nv = x.num_vertices();
  if (opt.box.range.size() != nv) throw InputError("divisor box needs one range per vertex");
  if (opt.slope_bound < 0) throw InputError("slope bound must be nonnegative");
  if (ne > 20) throw PreconditionError("quasistable_cells: too many edges");
  const long long bound = opt.slope_bound;
  std::vector<Cell> out;
  for (std::uint32_t mask = 0; mask < (1u << ne); ++mask) {
    std::vector<std::size_t> sub;
    for (std::size_t k = 0; k < ne; ++k)
      if (mask >> k & 1u) sub.push_back(k);
    // First-segment slopes a with a and a+1 both within the bound.
    std::vector<long long> lo(ne, -bound), hi(ne, bound);
    for (auto k : sub) hi[k] = bound - 1;
    bool empty = false;
    for (std::size_t k = 0; k < ne; ++k) empty = empty || lo[k] > hi[k];
    if (empty) continue;
    Chain s(lo.begin(), lo.end());
    while (true) {
      std::vector<long long> d(nv, 0);
      for (std::size_t k = 0; k < ne; ++k) {
        const auto& e = x.edge(k);
        bool split = mask >> k & 1u;
        d[*e.tail] += s[k];
        d[*e.head] -= split ? s[k] + 1 : s[k];
      }
      bool ok = true;
      for (std::size_t v = 0; v < nv && ok; ++v) ok = opt.box.range[v].first <= d[v] && d[v] <= opt.box.range[v].second;
      if (ok) {
        Cell c;
        c.subdivided = sub;
        c.divisor.values = d;
        c.divisor.values.insert(c.divisor.values.end(), sub.size(), 1);
        c.slopes = s;
        std::vector<Point> corners;
        for (std::uint32_t corner = 0; corner < (1u << sub.size()); ++corner) {
          std::vector<Rational> t;
          for (std::size_t i = 0; i < sub.size(); ++i)
            t.push_back(corner >> i & 1u ? detail::real_length(x, sub[i]) : Rational(0));
          corners.push_back(cell_point(x, b, c, t));
        }
        c.polytope = convex_hull(std::move(corners), b.genus());
        out.push_back(std::move(c));
      }
      std::size_t k = 0;
      while (k < ne && s[k] == hi[k]) s[k] = lo[k], ++k;
      if (k == ne) break;
      ++s[k];
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// The degree-d class a cell point represents.
inline TroPicClass cell_class(const TropicalCurve& x, const CycleBasis& b, const Cell& c,
                              const std::vector<Rational>& t, const CellOptions& opt) {
  auto m = cell_model(x, c, t);
  auto cls = class_from_divisor(x, b, m.subdivision, m.divisor, m.slopes);
  cls.divisor.values[opt.twist_vertex] += opt.degree;
  return cls;
}

// ---------------------------------------------------------------------------
// Tiling check

struct TilingReport {
  std::size_t genus = 0;
  std::size_t distinct_cells = 0;
  Rational area_sum;       // sum over cells of area(translates meeting the domain)
  Rational expected_area;  // |det A|
  std::vector<std::pair<std::size_t, std::size_t>> overlaps;  // indices into the deduplicated list
  std::vector<Point> uncovered;                                // samples u, where mu = u A
  std::size_t samples = 0;

  bool ok() const { return area_sum == expected_area && overlaps.empty() && uncovered.empty(); }
};

namespace detail {

struct Piece {
  std::size_t cell;
  std::vector<Point> poly;  // in unit-domain coordinates, counterclockwise
};

inline Point to_domain(const RationalMatrix& inv, const Point& mu) {
  Point u(inv.size());
  for (std::size_t i = 0; i < inv.size(); ++i) u[i] = dot(inv[i], mu);
  return u;
}

}  // namespace detail

// Works in coordinates u with mu = u A, so the domain is the unit cube and
// coboundaries of H1 are the integer translations.
inline TilingReport verify_tiling(const std::vector<Cell>& cells, const TropicalCurve& x, const CycleBasis& b,
                                  std::size_t samples_per_axis = 100) {
  detail::require_real(x, "verify_tiling");
  const std::size_t g = b.genus();
  if (g > 2) throw PreconditionError("verify_tiling: genus above 2 unsupported");
  TilingReport rep;
  rep.genus = g;
  auto a = intersection_matrix(x, b);
  RationalMatrix am(g, std::vector<Rational>(g));
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = 0; j < g; ++j) am[i][j] = a[i][j][0];
  Rational det = g == 0 ? Rational(1) : determinant(am);
  rep.expected_area = abs_of(det);

  std::vector<const Cell*> uniq;
  std::set<std::pair<std::vector<std::size_t>, std::vector<long long>>> seen;
  for (const auto& c : cells)
    if (seen.insert({c.subdivided, c.divisor.values}).second) uniq.push_back(&c);
  rep.distinct_cells = uniq.size();

  if (g == 0) {
    rep.area_sum = uniq.empty() ? Rational(0) : Rational(1);
    rep.samples = 1;
    if (uniq.empty()) rep.uncovered.push_back({});
    for (std::size_t i = 1; i < uniq.size(); ++i) rep.overlaps.push_back({0, i});
    return rep;
  }

  // inv maps mu to u: u = mu A^{-1}; A is symmetric so (A^{-1})^T = A^{-1}.
  RationalMatrix inv(g, std::vector<Rational>(g));
  for (std::size_t j = 0; j < g; ++j) {
    std::vector<Rational> e(g);
    e[j] = 1;
    auto col = solve_rational(am, e, g);
    for (std::size_t i = 0; i < g; ++i) inv[i][j] = (*col)[i];
  }

  std::vector<detail::Piece> pieces;
  for (std::size_t ci = 0; ci < uniq.size(); ++ci) {
    const auto& poly = uniq[ci]->polytope;
    if (poly.dim != static_cast<int>(g)) continue;
    std::vector<Point> us;
    for (const auto& v : poly.vertices) us.push_back(detail::to_domain(inv, v));
    if (g == 1) {
      auto [lo, hi] = std::minmax_element(us.begin(), us.end());
      Rational l = (*lo)[0], h = (*hi)[0];
      for (Integer m = floor_of(l); m < ceil_of(h); ++m) {
        Rational cl = std::max<Rational>(l - Rational(m), 0), ch = std::min<Rational>(h - Rational(m), 1);
        if (cl < ch) pieces.push_back({ci, {Point{cl}, Point{ch}}});
      }
      continue;
    }
    if (sgn(polygon_area(us)) < 0) std::reverse(us.begin(), us.end());
    Rational x0 = us[0][0], x1 = us[0][0], y0 = us[0][1], y1 = us[0][1];
    for (const auto& p : us) {
      x0 = std::min(x0, p[0]);
      x1 = std::max(x1, p[0]);
      y0 = std::min(y0, p[1]);
      y1 = std::max(y1, p[1]);
    }
    for (Integer m = floor_of(x0); m < ceil_of(x1); ++m)
      for (Integer n = floor_of(y0); n < ceil_of(y1); ++n) {
        Rational fm(m), fn(n);
        std::vector<Point> square = {{fm, fn}, {fm + 1, fn}, {fm + 1, fn + 1}, {fm, fn + 1}};
        auto clipped = clip_convex(us, square);
        if (clipped.size() < 3 || sgn(polygon_area(clipped)) == 0) continue;
        for (auto& p : clipped) p = {p[0] - fm, p[1] - fn};
        pieces.push_back({ci, std::move(clipped)});
      }
  }

  Rational unit_sum = 0;
  for (const auto& p : pieces) unit_sum += g == 1 ? Rational(p.poly[1][0] - p.poly[0][0]) : polygon_area(p.poly);
  rep.area_sum = unit_sum * rep.expected_area;

  std::set<std::pair<std::size_t, std::size_t>> bad;
  for (std::size_t i = 0; i < pieces.size(); ++i)
    for (std::size_t j = i + 1; j < pieces.size(); ++j) {
      bool overlap;
      if (g == 1) {
        overlap = std::max(pieces[i].poly[0][0], pieces[j].poly[0][0]) <
                  std::min(pieces[i].poly[1][0], pieces[j].poly[1][0]);
      } else {
        auto inter = clip_convex(pieces[i].poly, pieces[j].poly);
        overlap = inter.size() >= 3 && sgn(polygon_area(inter)) > 0;
      }
      if (overlap) bad.insert({std::min(pieces[i].cell, pieces[j].cell), std::max(pieces[i].cell, pieces[j].cell)});
    }
  rep.overlaps.assign(bad.begin(), bad.end());

  const std::size_t n = samples_per_axis;
  auto covered = [&](const Point& p) {
    for (const auto& pc : pieces) {
      if (g == 1 ? (pc.poly[0][0] <= p[0] && p[0] <= pc.poly[1][0]) : in_convex_polygon(pc.poly, p)) return true;
    }
    return false;
  };
  auto coord = [&](std::size_t i) { return Rational(static_cast<long>(2 * i + 1), static_cast<long>(2 * n)); };
  if (g == 1) {
    for (std::size_t i = 0; i < n; ++i) {
      Point p = {coord(i)};
      ++rep.samples;
      if (!covered(p)) rep.uncovered.push_back(p);
    }
  } else {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Point p = {coord(i), coord(j)};
        ++rep.samples;
        if (!covered(p)) rep.uncovered.push_back(p);
      }
  }
  return rep;
}

}  // namespace tropjac
