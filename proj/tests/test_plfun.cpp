#include "support.hpp"

#include <gtest/gtest.h>

using namespace tropjac;
using namespace tropjac::testing;

namespace {

// Theta with lengths (2,0),(1,0),(2,0), a pendant edge v2 -> v3 of length
// (1,0) and a bridge v3 -> v4 of length (0,1).
TropicalCurve decorated_theta() {
  CurveBuilder b(Metric(SharpMonoid::orthant(2)));
  auto v1 = b.add_vertex(), v2 = b.add_vertex(), v3 = b.add_vertex(), v4 = b.add_vertex();
  b.add_edge(v1, v2, vec({2, 0}));
  b.add_edge(v1, v2, vec({1, 0}));
  b.add_edge(v1, v2, vec({2, 0}));
  b.add_edge(v2, v3, vec({1, 0}));
  b.add_edge(v3, v4, vec({0, 1}));
  return b.build();
}

PLFunction decorated_f(const TropicalCurve& x) {
  return pl_from_vertex_values(x, {vec({0, 0}), vec({2, 0}), vec({5, 0}), vec({5, 0})}, {1, 2, 1, 3, 0});
}

}  // namespace

TEST(PLFunction, ConstantIsLinear) {
  auto x = theta_symbolic();
  auto f = pl_from_vertex_values(x, {vec({1, 2, 3}), vec({1, 2, 3})}, {0, 0, 0});
  EXPECT_TRUE(pl_violations(x, f).empty());
  EXPECT_TRUE(is_linear(x, f));
  EXPECT_EQ(multidegree(x, f).values, (std::vector<long long>{0, 0}));
}

TEST(PLFunction, BalancedSlopesAdmitNoValues) {
  // Outgoing slopes 1, -1, 0 at v1 balance, but no vertex values fit them
  // when every edge has the same positive length.
  auto x = theta_real(4, 4, 4);
  for (long a = -8; a <= 8; ++a)
    EXPECT_THROW(pl_from_vertex_values(x, {real(0), real(a)}, {1, -1, 0}), InputError);
  EXPECT_EQ(slope_divisor(x, {1, -1, 0}).values, (std::vector<long long>{0, 0}));
}

TEST(PLFunction, SingleSlopeIsNotLinear) {
  CurveBuilder b(Metric(SharpMonoid::orthant(1)));
  b.add_vertex();
  b.add_vertex();
  b.add_edge(0, 1, real(3));
  auto x = b.build();
  auto f = pl_from_vertex_values(x, {real(0), real(3)}, {1});
  EXPECT_FALSE(is_linear(x, f));
  EXPECT_EQ(multidegree(x, f).values, (std::vector<long long>{1, -1}));
  // On the theta graph the same slope data is not a PL function at all.
  EXPECT_THROW(pl_from_vertex_values(theta_real(1, 1, 1), {real(0), real(1)}, {1, 0, 0}), InputError);
  EXPECT_EQ(slope_divisor(theta_real(1, 1, 1), {1, 0, 0}).values, (std::vector<long long>{1, -1}));
}

TEST(PLFunction, MultidegreeByHand) {
  auto x = theta_real(2, 1, 2);
  auto f = pl_from_vertex_values(x, {real(0), real(2)}, {1, 2, 1});
  EXPECT_EQ(multidegree(x, f).values, (std::vector<long long>{4, -4}));
  auto y = decorated_theta();
  auto g = decorated_f(y);
  auto d = multidegree(y, g);
  EXPECT_EQ(d.values, (std::vector<long long>{4, -1, -3, 0}));
  EXPECT_EQ(d.degree(), 0);
}

TEST(PLFunction, ViolationsAreReported) {
  auto x = theta_real(2, 1, 2);
  auto f = pl_from_vertex_values(x, {real(0), real(2)}, {1, 2, 1});
  f.mu[x.edge(0).head_flag] = 5;
  EXPECT_FALSE(pl_violations(x, f).empty());
  EXPECT_THROW(multidegree(x, f), InputError);
}

TEST(PLFunction, SumOfFunctions) {
  auto x = theta_real(2, 1, 2);
  auto f = pl_from_vertex_values(x, {real(0), real(2)}, {1, 2, 1});
  auto c = pl_from_vertex_values(x, {real(7), real(7)}, {0, 0, 0});
  auto s = f + c;
  EXPECT_TRUE(pl_violations(x, s).empty());
  EXPECT_EQ(multidegree(x, s), multidegree(x, f));
}

TEST(PLFunction, ContractionIdentity) {
  auto x = decorated_theta();
  auto f = decorated_f(x);
  auto c = contract(x, {{1, 0}, {0, 1}}, SharpMonoid::orthant(2));
  EXPECT_EQ(contract_plf(x, f, c), f);
}

TEST(PLFunction, ContractionCommutesWithMultidegree) {
  auto x = decorated_theta();
  auto f = decorated_f(x);
  auto c = contract(x, {{1, 0}}, SharpMonoid::orthant(1));
  EXPECT_EQ(c.curve.num_vertices(), 3u);
  auto g = contract_plf(x, f, c);
  EXPECT_TRUE(pl_violations(c.curve, g).empty());
  EXPECT_EQ(g.edge_slopes(c.curve), (Chain{1, 2, 1, 3}));
  EXPECT_EQ(multidegree(c.curve, g), pushforward(c, multidegree(x, f)));
}

TEST(PLFunction, ContractionOfConstant) {
  auto x = decorated_theta();
  auto f = pl_from_vertex_values(x, std::vector<LatticeVector>(4, vec({3, 1})), {0, 0, 0, 0, 0});
  auto c = contract(x, {{1, 0}}, SharpMonoid::orthant(1));
  auto g = contract_plf(x, f, c);
  for (std::size_t v = 0; v < c.curve.num_vertices(); ++v) EXPECT_EQ(g.vertex_value(c.curve, v), real(3));
  EXPECT_TRUE(is_linear(c.curve, g));
}
