#pragma once

// Curve builders, random generators and brute-force oracles shared by the
// unit tests and the acceptance runner.

#include "tropjac/cells.hpp"

#include <random>

namespace tropjac::testing {

inline LatticeVector vec(std::initializer_list<long> xs) {
  std::vector<Rational> v;
  for (long x : xs) v.emplace_back(x);
  return LatticeVector(std::move(v));
}

inline LatticeVector real(const Rational& q) { return LatticeVector(std::vector<Rational>{q}); }

// Two vertices joined by three edges v1 -> v2.
inline TropicalCurve theta(const std::vector<LatticeVector>& lengths, Metric m) {
  CurveBuilder b(std::move(m));
  auto v1 = b.add_vertex("v1"), v2 = b.add_vertex("v2");
  for (std::size_t k = 0; k < 3; ++k) b.add_edge(v1, v2, lengths[k], "e" + std::to_string(k + 1));
  return b.build();
}

inline TropicalCurve theta_symbolic() {
  return theta({LatticeVector::unit(3, 0), LatticeVector::unit(3, 1), LatticeVector::unit(3, 2)},
               Metric(SharpMonoid::orthant(3)));
}

inline TropicalCurve theta_real(long a, long b, long c) {
  return theta({real(a), real(b), real(c)}, Metric(SharpMonoid::orthant(1)));
}

inline CycleBasis theta_basis(const TropicalCurve& x) { return CycleBasis::from_cycles(x, {{1, -1, 0}, {0, 1, -1}}); }

// n vertices in a circle, edge i from v_i to v_{i+1}.
inline TropicalCurve tate(const std::vector<Rational>& lengths) {
  CurveBuilder b(Metric(SharpMonoid::orthant(1)));
  const std::size_t n = lengths.size();
  for (std::size_t i = 0; i < n; ++i) b.add_vertex();
  for (std::size_t i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n, real(lengths[i]));
  return b.build();
}

inline MonodromyHom hom(std::vector<LatticeVector> values) { return MonodromyHom{std::move(values)}; }

// ---------------------------------------------------------------------------
// Random instances

struct RandomCase {
  TropicalCurve curve;
  ValuationOrder order;
  CycleBasis basis;
};

// A connected multigraph (loops allowed) with at most max_edges edges and
// genus at least one, lengths in N^rank under the standard lex order.
inline RandomCase random_case(std::mt19937_64& rng, std::size_t max_edges, std::size_t max_rank) {
  auto pick = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
  for (;;) {
    const std::size_t rank = static_cast<std::size_t>(pick(1, static_cast<long>(max_rank)));
    const std::size_t edges = static_cast<std::size_t>(pick(1, static_cast<long>(max_edges)));
    const std::size_t verts = static_cast<std::size_t>(pick(1, static_cast<long>(edges)));
    CurveBuilder b(Metric(SharpMonoid::orthant(rank)));
    for (std::size_t v = 0; v < verts; ++v) b.add_vertex();
    auto length = [&] {
      std::vector<Rational> l(rank);
      const std::size_t lead = static_cast<std::size_t>(pick(0, static_cast<long>(rank) - 1));
      l[lead] = pick(1, 4);
      for (std::size_t i = lead + 1; i < rank; ++i) l[i] = pick(0, 3);
      return LatticeVector(std::move(l));
    };
    std::size_t used = 0;
    for (std::size_t v = 1; v < verts; ++v, ++used)
      b.add_edge(static_cast<std::size_t>(pick(0, static_cast<long>(v) - 1)), v, length());
    for (; used < edges; ++used) {
      auto a = static_cast<std::size_t>(pick(0, static_cast<long>(verts) - 1));
      auto c = static_cast<std::size_t>(pick(0, static_cast<long>(verts) - 1));
      b.add_edge(a, c, length());
    }
    auto x = b.build();
    if (x.betti().second == 0) continue;
    RationalMatrix w(rank, std::vector<Rational>(rank));
    for (std::size_t i = 0; i < rank; ++i) w[i][i] = 1;
    ValuationOrder order(SharpMonoid::orthant(rank), w);
    auto basis = CycleBasis::fundamental(x);
    return {std::move(x), std::move(order), std::move(basis)};
  }
}

// A random cochain with values a_e in Q^rank, each of archimedean level no
// shallower than l(e); mu(gamma) = sum gamma_e a_e is then bounded.
inline MonodromyHom random_bounded_hom(std::mt19937_64& rng, const RandomCase& rc) {
  auto pick = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
  const auto& x = rc.curve;
  const std::size_t rank = x.ambient_rank();
  std::vector<LatticeVector> a;
  for (const auto& e : x.edges()) {
    std::size_t lead = rc.order.arch_level(e.length) - 1;
    LatticeVector v = Rational(pick(-12, 12)) / pick(1, 3) * e.length;
    for (std::size_t i = lead; i < rank; ++i) v[i] += Rational(pick(-9, 9)) / pick(1, 2);
    a.push_back(std::move(v));
  }
  MonodromyHom mu;
  for (const auto& g : rc.basis.cycles()) {
    LatticeVector s(rank);
    for (std::size_t k = 0; k < g.size(); ++k)
      if (g[k] != 0) s += to_rational(g[k]) * a[k];
    mu.values.push_back(std::move(s));
  }
  return mu;
}

// Any homomorphism with small integer values; bounded or not.
inline MonodromyHom random_hom(std::mt19937_64& rng, const TropicalCurve& x, std::size_t genus) {
  auto pick = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
  MonodromyHom mu;
  for (std::size_t j = 0; j < genus; ++j) {
    LatticeVector v(x.ambient_rank());
    for (std::size_t i = 0; i < v.rank(); ++i) v[i] = pick(-4, 4);
    mu.values.push_back(std::move(v));
  }
  return mu;
}

inline Chain random_chain(std::mt19937_64& rng, std::size_t edges, long bound) {
  Chain c(edges);
  for (auto& x : c) x = std::uniform_int_distribution<long>(-bound, bound)(rng);
  return c;
}

// ---------------------------------------------------------------------------
// Oracles

// Scans m <= n in [-r, r] for m*delta <= alpha <= n*delta under `leq`.
template <class Leq>
std::optional<std::pair<long, long>> scan_bounds(const LatticeVector& alpha, const LatticeVector& delta, long r,
                                                 Leq leq) {
  for (long m = -r; m <= r; ++m)
    for (long n = m; n <= r; ++n)
      if (leq(Rational(m) * delta, alpha) && leq(alpha, Rational(n) * delta)) return std::pair{m, n};
  return std::nullopt;
}

// Lex comparison of the images W.a and W.b.
inline bool lex_leq_images(const RationalMatrix& w, const LatticeVector& a, const LatticeVector& b) {
  for (const auto& row : w) {
    Rational x = dot(row, a), y = dot(row, b);
    if (x != y) return x < y;
  }
  return true;
}

// Sum over edges of a_e * b_e * l_e, computed edge by edge.
inline LatticeVector pairing_by_hand(const TropicalCurve& x, const Chain& a, const Chain& b) {
  LatticeVector s(x.ambient_rank());
  for (std::size_t k = 0; k < x.num_edges(); ++k) s += to_rational(a[k] * b[k]) * x.edge(k).length;
  return s;
}

}  // namespace tropjac::testing
