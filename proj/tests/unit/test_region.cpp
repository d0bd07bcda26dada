#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "specincl/errors.hpp"
#include "specincl/region.hpp"

using namespace specincl;

namespace {

Region random_region(const GridSpec& g, double density, oracle::Rng& rng) {
  Region r(g);
  for (std::size_t i = 0; i < g.node_count(); ++i) r.set_node(i, rng.uniform(0, 1) < density);
  return r;
}

Region full_region(const GridSpec& g) {
  return Region(g, std::vector<std::uint8_t>(g.node_count(), 1));
}

}  // namespace

TEST(GridSpec, GeometryAndValidation) {
  GridSpec g{-1, 3, 0, 2, 5, 3};
  EXPECT_DOUBLE_EQ(g.dx(), 1.0);
  EXPECT_DOUBLE_EQ(g.dy(), 1.0);
  EXPECT_DOUBLE_EQ(g.cell_diagonal(), std::sqrt(2.0));
  EXPECT_EQ(g.node(7), (Complex{1.0, 1.0}));
  EXPECT_EQ(g.nearest_node({1.2, 0.9}), 7u);
  EXPECT_EQ(g.nearest_node({100, -100}), 4u);
  EXPECT_THROW((GridSpec{0, 0, 0, 1, 4, 4}).validate(), DomainError);
  EXPECT_THROW((GridSpec{0, 1, 0, 1, 1, 4}).validate(), DomainError);
  GridSpec c = GridSpec::centered({1, 1}, 2.0, 9);
  EXPECT_EQ(c.re_min, -1.0);
  EXPECT_EQ(c.im_max, 3.0);
  EXPECT_EQ(c.nx, 9u);
}

TEST(RegionAlgebra, Examples) {
  GridSpec g = GridSpec::centered(0.0, 1.0, 17);
  oracle::Rng rng(51);
  Region r = random_region(g, 0.3, rng);
  Region e(g);
  Region both[] = {r, e};
  EXPECT_EQ(region_union(both), r);
  EXPECT_EQ(region_intersect(r, r), r);
  EXPECT_TRUE(region_intersect(r, e).empty());
  GridSpec other = GridSpec::centered(0.0, 2.0, 17);
  Region mixed[] = {r, Region(other)};
  EXPECT_THROW(region_union(mixed), GridMismatch);
  EXPECT_THROW(region_intersect(r, Region(other)), GridMismatch);
}

TEST(RegionAlgebra, FieldsCombineByMinAndMax) {
  GridSpec g{0, 1, 0, 1, 2, 2};
  Region a(g, {1, 0, 1, 0}, {0.1, 0.9, 0.2, 0.8});
  Region b(g, {0, 1, 1, 0}, {0.5, 0.3, 0.1, 0.7});
  Region parts[] = {a, b};
  Region u = region_union(parts);
  ASSERT_TRUE(u.has_values());
  EXPECT_EQ(std::vector<double>(u.values().begin(), u.values().end()),
            (std::vector<double>{0.1, 0.3, 0.1, 0.7}));
  Region i = region_intersect(a, b);
  EXPECT_EQ(std::vector<double>(i.values().begin(), i.values().end()),
            (std::vector<double>{0.5, 0.9, 0.2, 0.8}));
  EXPECT_EQ(i.count(), 1u);
  Region c(g, {1, 1, 0, 0});
  Region mixed[] = {a, c};
  EXPECT_FALSE(region_union(mixed).has_values());
}

TEST(RegionAlgebra, PropertyLattice) {
  oracle::Rng rng(52);
  GridSpec g = GridSpec::centered(0.0, 1.0, 12);
  for (int trial = 0; trial < 50; ++trial) {
    Region a = random_region(g, 0.4, rng), b = random_region(g, 0.4, rng);
    Region ab[] = {a, b}, ba[] = {b, a};
    Region u = region_union(ab);
    EXPECT_EQ(u, region_union(ba));
    EXPECT_EQ(region_intersect(a, b), region_intersect(b, a));
    EXPECT_TRUE(a.is_subset_of(u));
    EXPECT_TRUE(region_intersect(a, b).is_subset_of(a));
    EXPECT_EQ(region_intersect(a, u), a);
  }
}

TEST(Region, Queries) {
  GridSpec g{0, 4, 0, 4, 5, 5};
  Region r(g);
  r.set_node(12, true);  // (2, 2)
  EXPECT_EQ(r.count(), 1u);
  EXPECT_DOUBLE_EQ(r.area(), 1.0);
  EXPECT_TRUE(r.has_node_near({2.5, 2.5}, 0.8));
  EXPECT_FALSE(r.has_node_near({3.5, 3.5}, 1.0));
  EXPECT_FALSE(r.touches_boundary());
  r.set_node(4, true);
  EXPECT_TRUE(r.touches_boundary());
  EXPECT_THROW(Region(g, std::vector<std::uint8_t>(3)), DomainError);
}

TEST(Hausdorff, Examples) {
  GridSpec g = GridSpec::centered(0.0, 2.5, 201);
  Region d1 = oracle::disc_region(g, 0.0, 1.0);
  Region d2 = oracle::disc_region(g, 0.0, 2.0);
  Region d115 = oracle::disc_region(g, 0.0, 1.15);
  EXPECT_EQ(hausdorff(d1, d1).value, 0.0);
  HausdorffDistance h = hausdorff(d1, d2);
  EXPECT_NEAR(h.value, 1.0, h.uncertainty);
  EXPECT_DOUBLE_EQ(h.uncertainty, g.cell_diagonal());
  EXPECT_NEAR(hausdorff(d1, d115).value, 0.15, g.cell_diagonal());
  EXPECT_THROW(hausdorff(d1, Region(g)), EmptyRegionError);
  EXPECT_THROW(hausdorff(d1, oracle::disc_region(GridSpec::centered(0.0, 2.0, 201), 0.0, 1.0)),
               GridMismatch);
}

TEST(Hausdorff, PropertyMatchesBruteForce) {
  oracle::Rng rng(53);
  for (int trial = 0; trial < 40; ++trial) {
    GridSpec g{rng.uniform(-2, -1), rng.uniform(0, 2), rng.uniform(-1, 0), rng.uniform(0.5, 3),
               8 + rng.index(20), 8 + rng.index(20)};
    Region a = random_region(g, rng.uniform(0.01, 0.3), rng);
    Region b = random_region(g, rng.uniform(0.01, 0.3), rng);
    if (a.empty() || b.empty()) continue;
    EXPECT_NEAR(directed_hausdorff(a, b), oracle::brute_directed(a, b), 1e-12);
    EXPECT_NEAR(hausdorff(a, b).value, oracle::brute_hausdorff(a, b), 1e-12);
  }
}

TEST(Contour, FullGridIsCutRectangle) {
  GridSpec g{-1, 2, -1, 1, 13, 9};
  auto loops = contour_extract(full_region(g));
  ASSERT_EQ(loops.size(), 1u);
  // mask edges are crossed at midpoints, so the loop sits half a cell outside
  // the box, with each corner cut by a diagonal
  double w = 3.0 + g.dx(), h = 2.0 + g.dy();
  EXPECT_NEAR(std::abs(signed_area(loops.front())), w * h - 0.5 * g.dx() * g.dy(), 1e-12);
  for (const Point2& p : loops.front()) {
    EXPECT_GE(p.x, g.re_min - 0.5 * g.dx() - 1e-12);
    EXPECT_LE(p.x, g.re_max + 0.5 * g.dx() + 1e-12);
  }
}

TEST(Contour, DiscIsOneLoopWindingOnce) {
  GridSpec g = GridSpec::centered(0.0, 2.0, 81);
  auto loops = contour_extract(oracle::disc_region(g, 0.0, 1.0));
  ASSERT_EQ(loops.size(), 1u);
  const Polyline& l = loops.front();
  EXPECT_EQ(l.front().x, l.back().x);
  EXPECT_EQ(l.front().y, l.back().y);
  EXPECT_NEAR(std::abs(signed_area(l)), std::numbers::pi, 0.1);
  double winding = 0.0;
  for (std::size_t i = 0; i + 1 < l.size(); ++i)
    winding += std::remainder(std::atan2(l[i + 1].y, l[i + 1].x) - std::atan2(l[i].y, l[i].x),
                              2 * std::numbers::pi);
  EXPECT_NEAR(std::abs(winding), 2 * std::numbers::pi, 1e-9);
}

TEST(Contour, AnnulusIsTwoLoops) {
  GridSpec g = GridSpec::centered(0.0, 2.0, 121);
  Region ring(g);
  for (std::size_t i = 0; i < g.node_count(); ++i) {
    double r = std::abs(g.node(i));
    ring.set_node(i, r >= 0.6 && r <= 1.4);
  }
  auto loops = contour_extract(ring);
  ASSERT_EQ(loops.size(), 2u);
  double a0 = std::abs(signed_area(loops[0])), a1 = std::abs(signed_area(loops[1]));
  EXPECT_NEAR(std::min(a0, a1), std::numbers::pi * 0.36, 0.1);
  EXPECT_NEAR(std::max(a0, a1), std::numbers::pi * 1.96, 0.1);
}

TEST(Contour, ValuesFieldInterpolates) {
  // field |z| thresholded at 1: the contour should sit on the unit circle
  GridSpec g = GridSpec::centered(0.0, 2.0, 41);
  std::vector<std::uint8_t> mask(g.node_count());
  std::vector<double> vals(g.node_count());
  for (std::size_t i = 0; i < g.node_count(); ++i) {
    vals[i] = std::abs(g.node(i));
    mask[i] = vals[i] <= 1.0;
  }
  Region r(g, mask, vals);
  r.set_level(1.0);
  auto loops = contour_extract(r);
  ASSERT_EQ(loops.size(), 1u);
  for (const Point2& p : loops.front()) EXPECT_NEAR(std::hypot(p.x, p.y), 1.0, 0.02);
  EXPECT_THROW(contour_extract(Region(g)), EmptyRegionError);
}
