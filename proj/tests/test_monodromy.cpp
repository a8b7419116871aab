#include "support.hpp"

#include <gtest/gtest.h>

using namespace tropjac;
using namespace tropjac::testing;

namespace {

// Loop made of two edges of lengths 1 and 2 between two vertices.
TropicalCurve two_edge_loop() {
  CurveBuilder b(Metric(SharpMonoid::orthant(1)));
  b.add_vertex();
  b.add_vertex();
  b.add_edge(0, 1, real(1));
  b.add_edge(1, 0, real(2));
  return b.build();
}

ValuationOrder standard_order(std::size_t n) {
  RationalMatrix w(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) w[i][i] = 1;
  return ValuationOrder(SharpMonoid::orthant(n), w);
}

// Oracle for the coboundary identity: the pairing of c with each mapped basis
// cycle, summed edge by edge on the subdivided curve.
MonodromyHom pulled_back_by_hand(const Trivialization& t, const CycleBasis& b) {
  MonodromyHom mu;
  for (const auto& g : b.cycles()) mu.values.push_back(pairing_by_hand(t.subdivision.curve, t.cochain, t.subdivision.map_chain(g)));
  return mu;
}

}  // namespace

TEST(Coboundary, Examples) {
  auto t = tate({2, 3, 4});
  auto bt = cycle_basis(t);
  EXPECT_EQ(coboundary(t, bt, {0, 0, 0}), hom({real(0)}));
  // One edge of length 2: mu(gamma) = +-2 depending on the basis orientation.
  auto mu = coboundary(t, bt, {1, 0, 0});
  EXPECT_EQ(mu.values[0], to_rational(bt.cycle(0)[0]) * real(2));
  auto x = theta_symbolic();
  auto b = theta_basis(x);
  auto a = intersection_matrix(x, b);
  for (std::size_t j = 0; j < 2; ++j) {
    auto m = coboundary(x, b, b.cycle(j));
    EXPECT_EQ(m.values, a[j]);
    EXPECT_EQ(cycle_coboundary(a, j == 0 ? std::vector<Integer>{1, 0} : std::vector<Integer>{0, 1}, 3), m);
  }
}

TEST(Boundedness, Examples) {
  auto x = theta_symbolic();
  auto b = theta_basis(x);
  auto zero = is_bounded(x, b, hom({vec({0, 0, 0}), vec({0, 0, 0})}));
  EXPECT_TRUE(zero.bounded);
  EXPECT_EQ(zero.witnesses[0], (BoundWitness{0, 0}));
  auto t = tate({1, 2, 3});
  auto bt = cycle_basis(t);
  auto self = is_bounded(t, bt, hom({cycle_length(t, bt.cycle(0))}));
  EXPECT_TRUE(self.bounded);
  EXPECT_EQ(self.witnesses[0], (BoundWitness{1, 1}));
  // On theta, mu = l on both basis cycles gives mu(e1 - e3) = d1 + 2 d2 + d3,
  // which d1 + d3 does not bound.
  auto both = is_bounded(x, b, hom({vec({1, 1, 0}), vec({0, 1, 1})}));
  EXPECT_EQ(both.witnesses[0], (BoundWitness{1, 1}));
  EXPECT_FALSE(both.bounded);
  auto bad = is_bounded(x, b, hom({vec({0, 0, 1}), vec({0, 0, 0})}));
  EXPECT_FALSE(bad.bounded);
  ASSERT_TRUE(bad.failing_cycle.has_value());
  // Oracle: no m <= n in [-20, 20] bounds d3 by d1 + d2 in N^3.
  auto m = SharpMonoid::orthant(3);
  EXPECT_FALSE(scan_bounds(vec({0, 0, 1}), vec({1, 1, 0}), 20,
                           [&](const LatticeVector& p, const LatticeVector& q) { return m.leq(p, q); }));
}

TEST(Boundedness, LexLevelsSeeDeepCycles) {
  // gamma1 = e1 + f and gamma2 = e1 + g share the long edge e1; their
  // difference f - g only sees short edges.
  CurveBuilder cb(Metric(SharpMonoid::orthant(2)));
  auto v1 = cb.add_vertex(), v2 = cb.add_vertex();
  cb.add_edge(v1, v2, vec({1, 0}), "e1");
  cb.add_edge(v2, v1, vec({0, 1}), "f");
  cb.add_edge(v2, v1, vec({0, 1}), "g");
  auto x = cb.build();
  auto b = CycleBasis::from_cycles(x, {{1, 1, 0}, {1, 0, 1}});
  auto v = standard_order(2);
  auto mu = hom({vec({1, 0}), vec({0, 0})});
  // Both basis cycles are bounded on their own.
  for (std::size_t j = 0; j < 2; ++j)
    EXPECT_TRUE(x.metric().bounds(mu.values[j], cycle_length(x, b.cycle(j))).has_value());
  EXPECT_FALSE(is_bounded(x, b, mu).bounded);
  auto exact = is_bounded(x, b, mu, v);
  EXPECT_FALSE(exact.bounded);
  ASSERT_TRUE(exact.failing_cycle.has_value());
  auto val = evaluate(x, b, mu, *exact.failing_cycle);
  EXPECT_FALSE(v.bounded_by(val, cycle_length(x, *exact.failing_cycle)));
  EXPECT_TRUE(sample_unbounded_cycle(x, b, mu, 1, 200).has_value());
}

TEST(Boundedness, RepresentativeIndependence) {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 150; ++t) {
    auto rc = random_case(rng, 4, 3);
    auto mu = (t % 2) ? random_bounded_hom(rng, rc) : random_hom(rng, rc.curve, rc.basis.genus());
    auto c = random_chain(rng, rc.curve.num_edges(), 3);
    auto shifted = mu + coboundary(rc.curve, rc.basis, c);
    EXPECT_EQ(is_bounded(rc.curve, rc.basis, mu).bounded, is_bounded(rc.curve, rc.basis, shifted).bounded);
    EXPECT_EQ(is_bounded(rc.curve, rc.basis, mu, rc.order).bounded,
              is_bounded(rc.curve, rc.basis, shifted, rc.order).bounded);
  }
}

TEST(Boundedness, BasisChangeAgrees) {
  auto x = theta_symbolic();
  auto b1 = theta_basis(x);
  auto b2 = cycle_basis(x);
  std::mt19937_64 rng(2);
  for (int t = 0; t < 50; ++t) {
    auto mu = random_hom(rng, x, 2);
    MonodromyHom mu2;
    for (const auto& g : b2.cycles()) mu2.values.push_back(evaluate(x, b1, mu, g));
    EXPECT_EQ(is_bounded(x, b1, mu).bounded, is_bounded(x, b2, mu2).bounded);
  }
}

TEST(Trivialize, ZeroNeedsNoSubdivision) {
  auto x = theta_real(5, 3, 5);
  auto b = theta_basis(x);
  auto t = trivialize(x, b, standard_order(1), hom({real(0), real(0)}));
  EXPECT_EQ(t.subdivision.curve.num_edges(), 3u);
  EXPECT_EQ(t.cochain, (Chain{0, 0, 0}));
}

TEST(Trivialize, TwoEdgeLoop) {
  auto x = two_edge_loop();
  auto b = cycle_basis(x);
  auto mu = hom({real(2)});
  auto t = trivialize(x, b, standard_order(1), mu);
  EXPECT_EQ(pulled_back_by_hand(t, b), mu);
  EXPECT_EQ(pulled_back_coboundary(t.subdivision, b, t.cochain), mu);
  EXPECT_LE(t.subdivision.curve.num_edges(), 4u);
}

TEST(Trivialize, RankTwoLexLoop) {
  CurveBuilder cb(Metric(SharpMonoid::orthant(2)));
  cb.add_vertex();
  cb.add_edge(0, 0, vec({1, 0}));
  auto x = cb.build();
  auto b = cycle_basis(x);
  auto mu = hom({to_rational(b.cycle(0)[0]) * vec({2, 3})});
  auto v = standard_order(2);
  ASSERT_TRUE(is_bounded(x, b, mu, v).bounded);
  auto t = trivialize(x, b, v, mu);
  EXPECT_EQ(pulled_back_by_hand(t, b), mu);
  // The residual (0,3) is placed as a new point.
  ASSERT_EQ(t.subdivision.curve.num_edges(), 2u);
  EXPECT_EQ(t.subdivision.curve.edge(0).length, vec({0, 3}));
  EXPECT_EQ(t.subdivision.curve.edge(1).length, vec({1, -3}));
}

TEST(Trivialize, RejectsUnbounded) {
  auto x = theta_symbolic();
  auto b = theta_basis(x);
  // d1 is not bounded by the length d2 + d3 of e2 - e3 in the lex order.
  EXPECT_THROW(trivialize(x, b, standard_order(3), hom({vec({0, 0, 0}), vec({1, 0, 0})})), PreconditionError);
  // Under the totalized order d3 and d1 + d2 share a level, so this one is fine.
  EXPECT_NO_THROW(trivialize(x, b, totalize(SharpMonoid::orthant(3)), hom({vec({0, 0, 1}), vec({0, 0, 0})})));
}

TEST(Trivialize, RandomRoundTrips) {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 100; ++t) {
    auto rc = random_case(rng, 4, 3);
    auto mu = random_bounded_hom(rng, rc);
    ASSERT_TRUE(is_bounded(rc.curve, rc.basis, mu, rc.order).bounded);
    auto tr = trivialize(rc.curve, rc.basis, rc.order, mu);
    EXPECT_EQ(pulled_back_by_hand(tr, rc.basis), mu);
    EXPECT_LE(tr.subdivision.curve.num_edges(), 2 * rc.curve.num_edges());
  }
}

TEST(Normalize, Trivial) {
  auto x = theta_real(5, 3, 5);
  auto b = theta_basis(x);
  auto v = standard_order(1);
  auto n = normalize(x, b, v, hom({real(0), real(0)}));
  EXPECT_EQ(n.zeta, hom({real(0), real(0)}));
  EXPECT_EQ(n.gamma, (std::vector<Integer>{0, 0}));
  auto a = intersection_matrix(x, b);
  auto m = normalize(x, b, v, cycle_coboundary(a, {4, -7}, 1));
  EXPECT_FALSE(normalization_violation(x, b, v, m.zeta).has_value());
}

TEST(Normalize, ThetaLargeMonodromy) {
  auto x = theta_real(5, 3, 5);
  auto b = theta_basis(x);
  auto v = standard_order(1);
  auto a = intersection_matrix(x, b);
  auto mu = hom({real(100), real(-77)});
  // Oracle: some gamma in a box of radius 32 meets the bound 3 * l(e_j).
  auto within = [&](const MonodromyHom& z) {
    for (std::size_t j = 0; j < 2; ++j) {
      Rational bound = 3 * cycle_length(x, b.cycle(j))[0];
      if (abs_of(z.values[j][0]) > bound) return false;
    }
    return true;
  };
  bool exists = false;
  for (long p = -32; p <= 32 && !exists; ++p)
    for (long q = -32; q <= 32 && !exists; ++q) exists = within(mu - cycle_coboundary(a, {p, q}, 1));
  EXPECT_TRUE(exists);
  auto n = normalize(x, b, v, mu);
  EXPECT_TRUE(within(n.zeta));
  EXPECT_EQ(n.zeta, mu - cycle_coboundary(a, n.gamma, 1));
}

TEST(Normalize, RandomBound) {
  std::mt19937_64 rng(37);
  for (int t = 0; t < 100; ++t) {
    auto rc = random_case(rng, 4, 3);
    auto mu = random_bounded_hom(rng, rc);
    auto n = normalize(rc.curve, rc.basis, rc.order, mu);
    const Rational k = Rational(static_cast<long>(rc.order.levels() * (rc.basis.genus() + 1)));
    auto a = intersection_matrix(rc.curve, rc.basis);
    EXPECT_EQ(n.zeta, mu - cycle_coboundary(a, n.gamma, rc.curve.ambient_rank()));
    for (std::size_t j = 0; j < rc.basis.genus(); ++j) {
      auto len = k * cycle_length(rc.curve, rc.basis.cycle(j));
      EXPECT_TRUE(lex_leq_images(rc.order.weights(), -len, n.zeta.values[j]));
      EXPECT_TRUE(lex_leq_images(rc.order.weights(), n.zeta.values[j], len));
    }
  }
}
