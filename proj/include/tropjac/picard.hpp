#pragma once

// The tropical Jacobian Hom(H1, M^gp)^+ / H1 and Picard classes.
//
// A class is a pair (D, mu) of a divisor on the vertices and a monodromy
// homomorphism.  The pair stands for L(D) + mu; moving D by the multidegree
// div(c) of an edge cochain c shifts mu by the coboundary of c:
//   (D, mu) ~ (D - div c, mu + coboundary(c)).

#include "tropjac/monodromy.hpp"

namespace tropjac {

struct TroPicClass {
  Divisor divisor;
  MonodromyHom mu;

  friend TroPicClass operator+(const TroPicClass& a, const TroPicClass& b) {
    if (a.divisor.values.size() != b.divisor.values.size()) throw InputError("classes on different curves");
    TroPicClass c{a.divisor, a.mu + b.mu};
    for (std::size_t v = 0; v < c.divisor.values.size(); ++v) c.divisor.values[v] += b.divisor.values[v];
    return c;
  }
  friend bool operator==(const TroPicClass&, const TroPicClass&) = default;
};

inline long long degree(const TroPicClass& c) { return c.divisor.degree(); }

namespace detail {
// gamma with target = sum gamma_i <gamma_i, ->, no boundedness check.
inline std::optional<std::vector<Integer>> solve_pairing(const TropicalCurve& x, const CycleBasis& b,
                                                         const MonodromyHom& target) {
  const std::size_t g = b.genus(), n = x.ambient_rank();
  auto a = intersection_matrix(x, b);
  RationalMatrix sys;
  std::vector<Rational> rhs;
  for (std::size_t j = 0; j < g; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Rational> row(g);
      for (std::size_t m = 0; m < g; ++m) row[m] = a[m][j][i];
      sys.push_back(std::move(row));
      rhs.push_back(target.values[j][i]);
    }
  if (rank_of(sys, g) != g) throw Error("jac_solve: pairing is degenerate");
  Integer den = 1;
  auto absorb = [&](const Rational& q) { mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t()); };
  for (const auto& row : sys)
    for (const auto& q : row) absorb(q);
  for (const auto& q : rhs) absorb(q);
  IntMatrix isys(sys.size(), IntVector(g));
  IntVector irhs(rhs.size());
  for (std::size_t r = 0; r < sys.size(); ++r) {
    for (std::size_t m = 0; m < g; ++m) isys[r][m] = Rational(sys[r][m] * den).get_num();
    irhs[r] = Rational(rhs[r] * den).get_num();
  }
  return solve_integer(isys, irhs, g);
}
}  // namespace detail

// gamma in Z^g with sum_i gamma_i A[i][.] = target, unique when it exists.
inline std::optional<std::vector<Integer>> jac_solve(const TropicalCurve& x, const CycleBasis& b,
                                                     const MonodromyHom& target) {
  if (!x.is_connected()) throw PreconditionError("jac_solve: curve is not connected");
  if (!is_bounded(x, b, target).bounded) throw PreconditionError("jac_solve: target is unbounded");
  return detail::solve_pairing(x, b, target);
}

struct JacComparison {
  bool equal = false;
  std::optional<std::vector<Integer>> gamma;  // mu1 - mu2 = (gamma . -)
};

inline JacComparison jac_equal(const TropicalCurve& x, const CycleBasis& b, const MonodromyHom& mu1,
                               const MonodromyHom& mu2) {
  for (const auto* mu : {&mu1, &mu2})
    if (!is_bounded(x, b, *mu).bounded) throw PreconditionError("jac_equal: input is unbounded");
  if (!x.is_connected()) throw PreconditionError("jac_equal: curve is not connected");
  // A difference of bounded homomorphisms is bounded.
  auto gamma = detail::solve_pairing(x, b, mu1 - mu2);
  return {gamma.has_value(), gamma};
}

// Tree-supported cochain c with div c = d, for d of degree zero.
inline Chain tree_cochain(const TropicalCurve& x, const CycleBasis& b, const Divisor& d) {
  if (d.values.size() != x.num_vertices()) throw InputError("divisor has wrong number of vertices");
  if (d.degree() != 0) throw PreconditionError("tree_cochain: divisor has nonzero degree");
  Chain c(x.num_edges());
  for (std::size_t v = 0; v < x.num_vertices(); ++v)
    if (d.values[v] != 0)
      for (std::size_t k = 0; k < c.size(); ++k) c[k] += d.values[v] * b.path_to_root(v)[k];
  return c;
}

// Moves the divisor to deg * [base].
inline TroPicClass canonicalize(const TropicalCurve& x, const CycleBasis& b, const TroPicClass& cls,
                                std::size_t base) {
  if (!x.is_connected()) throw PreconditionError("canonicalize: curve is not connected");
  if (base >= x.num_vertices()) throw InputError("canonicalize: no such base vertex");
  check_hom(x, b, cls.mu);
  Divisor shift = cls.divisor;
  shift.values[base] -= cls.divisor.degree();
  auto c = tree_cochain(x, b, shift);
  TroPicClass out;
  out.divisor.values.assign(x.num_vertices(), 0);
  out.divisor.values[base] = cls.divisor.degree();
  out.mu = cls.mu + coboundary(x, b, c);
  return out;
}

inline bool class_equal(const TropicalCurve& x, const CycleBasis& b, const TroPicClass& c1,
                        const TroPicClass& c2) {
  if (c1.divisor.values.size() != x.num_vertices() || c2.divisor.values.size() != x.num_vertices())
    throw InputError("class_equal: classes do not live on this curve");
  if (degree(c1) != degree(c2)) return false;
  auto a = canonicalize(x, b, c1, 0), z = canonicalize(x, b, c2, 0);
  return jac_equal(x, b, a.mu, z.mu).equal;
}

// Multidegree of an edge cochain read as slopes along canonical orientations.
inline Divisor slope_divisor(const TropicalCurve& y, const Chain& slopes) {
  y.check_chain(slopes);
  auto bd = y.boundary(slopes);
  Divisor d;
  for (auto v : bd) d.values.push_back(-v);
  return d;
}

// The class on the original curve determined by slopes on a model that
// trivialize H(D).  Since the slopes have multidegree D, (D, 0) on the model
// is (0, coboundary(slopes)).
inline TroPicClass class_from_divisor(const TropicalCurve& x, const CycleBasis& b, const Subdivision& model,
                                      const Divisor& d, const Chain& slopes) {
  if (model.source_edges() != x.num_edges()) throw InputError("model is not a subdivision of this curve");
  if (d.values.size() != model.curve.num_vertices()) throw InputError("divisor does not live on the model");
  if (!(slope_divisor(model.curve, slopes) == d))
    throw PreconditionError("class_from_divisor: outgoing slopes do not sum to D at every vertex");
  TroPicClass cls;
  cls.divisor.values.assign(x.num_vertices(), 0);
  cls.mu = pulled_back_coboundary(model, b, slopes);
  return cls;
}

// ---------------------------------------------------------------------------
// The cone tau

struct TauReport {
  bool contains = false;
  bool u_nonnegative = false;
  std::vector<std::vector<Integer>> kernel;  // basis coordinates of {gamma : u(l(gamma)) = 0}
};

// u is nonnegative on lengths, so u(l(gamma)) = sum |gamma_e| u(l_e) vanishes
// exactly on cycles supported where u kills the edge lengths.
inline TauReport tau_contains(const TropicalCurve& x, const CycleBasis& b, const std::vector<Rational>& u,
                              const std::vector<Rational>& v) {
  x.require_compact("tau_contains");
  if (u.size() != x.ambient_rank()) throw InputError("u has wrong length");
  if (v.size() != b.genus()) throw InputError("v has wrong length");
  TauReport rep;
  rep.u_nonnegative = true;
  for (const auto& g : x.metric().monoid().generators())
    if (sgn(dot(u, g)) < 0) rep.u_nonnegative = false;
  if (!rep.u_nonnegative) return rep;
  std::vector<bool> keep(x.num_edges());
  for (std::size_t k = 0; k < keep.size(); ++k) keep[k] = sgn(dot(u, x.edge(k).length)) == 0;
  rep.contains = true;
  for (const auto& z : detail::subgraph_cycles(x, keep)) {
    auto coords = b.express(x, z);
    Rational val = 0;
    for (std::size_t j = 0; j < coords.size(); ++j) val += Rational(coords[j]) * v[j];
    if (sgn(val) != 0) rep.contains = false;
    rep.kernel.push_back(std::move(coords));
  }
  return rep;
}

}  // namespace tropjac
