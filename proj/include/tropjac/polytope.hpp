#pragma once

// Exact convex hulls of small point sets in dimension <= 3 and convex
// polygon clipping.

#include "tropjac/linalg.hpp"

#include <map>
#include <set>

namespace tropjac {

using Point = std::vector<Rational>;

struct HalfSpace {
  std::vector<Rational> normal;
  Rational offset;  // normal . x <= offset (or == offset for equalities)
  friend bool operator==(const HalfSpace&, const HalfSpace&) = default;
};

struct Polytope {
  std::size_t ambient = 0;
  int dim = -1;                 // -1 for the empty polytope
  std::vector<Point> vertices;  // counterclockwise when dim == ambient == 2
  std::vector<HalfSpace> inequalities;
  std::vector<HalfSpace> equalities;

  bool contains(const Point& p) const {
    if (dim < 0) return false;
    for (const auto& h : equalities)
      if (dot(h.normal, p) != h.offset) return false;
    for (const auto& h : inequalities)
      if (dot(h.normal, p) > h.offset) return false;
    return true;
  }
};

namespace detail {

inline Rational cross2(const Point& o, const Point& a, const Point& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

// Andrew's monotone chain; strictly convex, counterclockwise.
inline std::vector<Point> hull2(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<Point> h(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && sgn(cross2(h[k - 2], h[k - 1], pts[i])) <= 0) --k;
    h[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && sgn(cross2(h[k - 2], h[k - 1], pts[i])) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

inline Point sub(const Point& a, const Point& b) {
  Point c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}

inline Point cross3(const Point& a, const Point& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

}  // namespace detail

inline Polytope convex_hull(std::vector<Point> points, std::size_t ambient) {
  Polytope poly;
  poly.ambient = ambient;
  for (const auto& p : points)
    if (p.size() != ambient) throw InputError("convex_hull: point has wrong dimension");
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.empty()) return poly;

  RationalMatrix diffs;
  for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(detail::sub(points[i], points[0]));
  auto ech = row_reduce(diffs, ambient);
  const auto& piv = ech.pivot_cols;
  const std::size_t k = piv.size();
  poly.dim = static_cast<int>(k);
  if (k > 3) throw InputError("convex_hull: dimension above 3 unsupported");

  for (const auto& n : nullspace_rational(diffs, ambient)) poly.equalities.push_back({n, dot(n, points[0])});

  auto project = [&](const Point& p) {
    Point q;
    for (auto c : piv) q.push_back(p[c]);
    return q;
  };
  auto lift = [&](const Point& a) {
    Point full(ambient);
    for (std::size_t i = 0; i < k; ++i) full[piv[i]] = a[i];
    return full;
  };
  std::map<Point, Point> back;
  std::vector<Point> proj;
  for (const auto& p : points) {
    auto q = project(p);
    back.emplace(q, p);
    proj.push_back(std::move(q));
  }

  if (k == 0) {
    poly.vertices = {points[0]};
  } else if (k == 1) {
    auto [lo, hi] = std::minmax_element(proj.begin(), proj.end());
    poly.vertices = {back.at(*lo), back.at(*hi)};
    poly.inequalities.push_back({lift({Rational(-1)}), -(*lo)[0]});
    poly.inequalities.push_back({lift({Rational(1)}), (*hi)[0]});
  } else if (k == 2) {
    auto h = detail::hull2(proj);
    for (std::size_t i = 0; i < h.size(); ++i) {
      const Point& p = h[i];
      const Point& q = h[(i + 1) % h.size()];
      Point a = {q[1] - p[1], p[0] - q[0]};
      poly.inequalities.push_back({lift(a), a[0] * p[0] + a[1] * p[1]});
      poly.vertices.push_back(back.at(p));
    }
  } else {
    std::set<std::pair<Point, Rational>> facets;
    const std::size_t n = proj.size();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        for (std::size_t l = j + 1; l < n; ++l) {
          Point nrm = detail::cross3(detail::sub(proj[j], proj[i]), detail::sub(proj[l], proj[i]));
          if (sgn(nrm[0]) == 0 && sgn(nrm[1]) == 0 && sgn(nrm[2]) == 0) continue;
          Rational off = dot(nrm, proj[i]);
          int side = 0;
          bool ok = true;
          for (const auto& p : proj) {
            int s = sgn(dot(nrm, p) - off);
            if (s == 0) continue;
            if (side == 0) side = s;
            if (s != side) ok = false;
          }
          if (!ok) continue;
          if (side > 0) {
            for (auto& c : nrm) c = -c;
            off = -off;
          }
          // Scale so the first nonzero entry has absolute value 1.
          Rational lead;
          for (const auto& c : nrm)
            if (sgn(c) != 0) {
              lead = abs_of(c);
              break;
            }
          for (auto& c : nrm) c /= lead;
          facets.insert({nrm, off / lead});
        }
    for (const auto& [nrm, off] : facets) poly.inequalities.push_back({lift(nrm), off});
    for (const auto& p : proj) {
      RationalMatrix tight;
      for (const auto& [nrm, off] : facets)
        if (dot(nrm, p) == off) tight.push_back(nrm);
      if (rank_of(tight, 3) == 3) poly.vertices.push_back(back.at(p));
    }
  }
  return poly;
}

// Signed area of a polygon given counterclockwise.
inline Rational polygon_area(const std::vector<Point>& poly) {
  Rational s = 0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const auto& p = poly[i];
    const auto& q = poly[(i + 1) % poly.size()];
    s += p[0] * q[1] - p[1] * q[0];
  }
  return s / 2;
}

// Sutherland-Hodgman: the part of `subject` on the left of the directed line a->b.
inline std::vector<Point> clip_halfplane(const std::vector<Point>& subject, const Point& a, const Point& b) {
  std::vector<Point> out;
  auto side = [&](const Point& p) { return detail::cross2(a, b, p); };
  for (std::size_t i = 0; i < subject.size(); ++i) {
    const Point& p = subject[i];
    const Point& q = subject[(i + 1) % subject.size()];
    Rational sp = side(p), sq = side(q);
    if (sgn(sp) >= 0) out.push_back(p);
    if ((sgn(sp) > 0 && sgn(sq) < 0) || (sgn(sp) < 0 && sgn(sq) > 0)) {
      Rational t = sp / (sp - sq);
      out.push_back({p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1])});
    }
  }
  return out;
}

// Intersection of two convex counterclockwise polygons.
inline std::vector<Point> clip_convex(std::vector<Point> subject, const std::vector<Point>& clip) {
  for (std::size_t i = 0; i < clip.size() && !subject.empty(); ++i)
    subject = clip_halfplane(subject, clip[i], clip[(i + 1) % clip.size()]);
  return subject;
}

inline bool in_convex_polygon(const std::vector<Point>& poly, const Point& p) {
  for (std::size_t i = 0; i < poly.size(); ++i)
    if (sgn(detail::cross2(poly[i], poly[(i + 1) % poly.size()], p)) < 0) return false;
  return true;
}

}  // namespace tropjac
