#include "support.hpp"

#include "tropjac/cells.hpp"

#include <gtest/gtest.h>

using namespace tropjac;
using namespace tropjac::testing;

namespace {

CellOptions theta_options() {
  CellOptions opt;
  opt.degree = 2;
  opt.box = {{{0, 2}, {-2, 0}}};
  return opt;
}

MonodromyHom as_hom(const Point& p) {
  std::vector<LatticeVector> v;
  for (const auto& q : p) v.push_back(real(q));
  return hom(std::move(v));
}

}  // namespace

TEST(Cells, SingleVertex) {
  CurveBuilder bld(Metric(SharpMonoid::orthant(1)));
  bld.add_vertex();
  auto x = bld.build();
  auto b = cycle_basis(x);
  CellOptions opt;
  opt.box = DivisorBox::uniform(1, 0, 0);
  auto cells = quasistable_cells(x, b, opt);
  ASSERT_EQ(cells.size(), 1u);
  EXPECT_EQ(cells[0].polytope.dim, 0);
  EXPECT_TRUE(verify_tiling(cells, x, b).ok());
}

TEST(Cells, TateLoopCoversOnePeriod) {
  auto x = tate({Rational(7, 2)});
  auto b = cycle_basis(x);
  CellOptions opt;
  opt.box = DivisorBox::uniform(1, -1, -1);
  auto cells = quasistable_cells(x, b, opt);
  ASSERT_FALSE(cells.empty());
  for (const auto& c : cells) {
    EXPECT_EQ(c.subdivided, (std::vector<std::size_t>{0}));
    ASSERT_EQ(c.polytope.vertices.size(), 2u);
    auto lo = std::min(c.polytope.vertices[0][0], c.polytope.vertices[1][0]);
    auto hi = std::max(c.polytope.vertices[0][0], c.polytope.vertices[1][0]);
    EXPECT_EQ(hi - lo, Rational(7, 2));
  }
  auto r = verify_tiling(cells, x, b);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.expected_area, Rational(7, 2));
}

TEST(Cells, TateCycleTiles) {
  auto x = tate({1, Rational(3, 2), 2});
  auto b = cycle_basis(x);
  CellOptions opt;
  opt.box = {{{-1, 0}, {0, 0}, {0, 0}}};
  auto r = verify_tiling(quasistable_cells(x, b, opt), x, b);
  EXPECT_EQ(r.area_sum, Rational(9, 2));
  EXPECT_TRUE(r.overlaps.empty());
  EXPECT_TRUE(r.uncovered.empty());
}

TEST(Cells, ThetaTiles) {
  auto x = theta_real(5, 3, 5);
  auto b = theta_basis(x);
  auto cells = quasistable_cells(x, b, theta_options());
  auto r = verify_tiling(cells, x, b);
  EXPECT_EQ(r.expected_area, 55);
  EXPECT_EQ(r.area_sum, 55);
  EXPECT_TRUE(r.overlaps.empty());
  EXPECT_TRUE(r.uncovered.empty());
  EXPECT_EQ(r.samples, 10000u);
  EXPECT_TRUE(r.ok());
}

TEST(Cells, MissingCellIsDetected) {
  auto x = theta_real(5, 3, 5);
  auto b = theta_basis(x);
  auto cells = quasistable_cells(x, b, theta_options());
  auto top = std::find_if(cells.begin(), cells.end(), [](const Cell& c) { return c.polytope.dim == 2; });
  ASSERT_NE(top, cells.end());
  auto key = std::make_pair(top->subdivided, top->divisor.values);
  std::erase_if(cells, [&](const Cell& c) { return std::make_pair(c.subdivided, c.divisor.values) == key; });
  auto r = verify_tiling(cells, x, b);
  EXPECT_FALSE(r.ok());
  EXPECT_LT(r.area_sum, 55);
  EXPECT_FALSE(r.uncovered.empty());
}

TEST(Cells, DuplicatedCellOverlaps) {
  auto x = theta_real(5, 3, 5);
  auto b = theta_basis(x);
  auto cells = quasistable_cells(x, b, theta_options());
  auto top = std::find_if(cells.begin(), cells.end(), [](const Cell& c) { return c.polytope.dim == 2; });
  ASSERT_NE(top, cells.end());
  Cell copy = *top;
  copy.divisor.values[0] += 100;  // new key, same polygon
  cells.push_back(copy);
  auto r = verify_tiling(cells, x, b);
  EXPECT_FALSE(r.overlaps.empty());
  EXPECT_GT(r.area_sum, 55);
}

TEST(Cells, ClassOfCellPoint) {
  auto x = theta_real(5, 3, 5);
  auto b = theta_basis(x);
  auto opt = theta_options();
  for (const auto& c : quasistable_cells(x, b, opt)) {
    std::vector<Rational> t;
    for (auto k : c.subdivided) t.push_back(detail::real_length(x, k) / 2);
    auto cls = cell_class(x, b, c, t, opt);
    EXPECT_EQ(degree(cls), 2);
    auto m = cell_model(x, c, t);
    EXPECT_EQ(m.divisor.degree(), 0);
    EXPECT_EQ(slope_divisor(m.subdivision.curve, m.slopes), m.divisor);
    if (!c.subdivided.empty()) continue;
    // On the original model the class is (D + 2[v1], mu) with mu the coboundary of the slopes.
    EXPECT_TRUE(class_equal(x, b, cls, TroPicClass{Divisor{{2, 0}}, as_hom(cell_point(x, b, c, t))}));
  }
}

TEST(Cells, RejectsBadInput) {
  auto x = theta_real(5, 3, 5);
  auto b = theta_basis(x);
  CellOptions opt;
  opt.box = DivisorBox::uniform(1, 0, 0);
  EXPECT_THROW(quasistable_cells(x, b, opt), InputError);
  auto s = theta_symbolic();
  EXPECT_THROW(quasistable_cells(s, theta_basis(s), theta_options()), PreconditionError);
}
