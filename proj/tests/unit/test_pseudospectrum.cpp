#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "specincl/errors.hpp"
#include "specincl/pseudospectrum.hpp"
#include "specincl/toeplitz.hpp"

using namespace specincl;
using std::numbers::pi;

namespace {

EvalOptions serial() {
  EvalOptions o;
  o.jobs = 1;
  return o;
}

}  // namespace

TEST(Pseudospectrum, DiagonalIsUnionOfDiscs) {
  ComplexMatrix d(3, 3);
  d(0, 0) = {0.3, 0.1};
  d(1, 1) = {-0.5, 0.4};
  d(2, 2) = {0.0, -0.6};
  GridSpec g = GridSpec::centered(0.0, 1.2, 73);
  Region r = pseudospectrum(d, 0.25, g);
  for (std::size_t i = 0; i < g.node_count(); ++i) {
    double dist = INFINITY;
    for (std::size_t k = 0; k < 3; ++k) dist = std::min(dist, std::abs(g.node(i) - d(k, k)));
    if (std::abs(dist - 0.25) > 1e-12) EXPECT_EQ(r.contains_node(i), dist <= 0.25) << i;
  }
  ASSERT_TRUE(r.has_values());
}

TEST(Pseudospectrum, JordanIsDiscOfRadiusAlpha) {
  for (std::size_t n : {3u, 6u})
    for (double eps : {0.05, 0.15, 0.4}) {
      GridSpec g = GridSpec::centered(0.0, 2.0, 97);
      Region r = pseudospectrum(jordan_block(n), eps, g, std::nullopt, serial());
      double alpha = jordan_alpha(n, eps), cell = g.cell_diagonal();
      for (std::size_t i = 0; i < g.node_count(); ++i) {
        double s = std::abs(g.node(i));
        if (s < alpha - cell) EXPECT_TRUE(r.contains_node(i));
        if (s > alpha + cell) EXPECT_FALSE(r.contains_node(i));
      }
    }
}

TEST(Pseudospectrum, RectangularBelowThresholdIsEmpty) {
  std::size_t n = 5;
  ComplexMatrix e(n + 2, n), sel(n + 2, n);
  e(0, 0) = 1.0;
  for (std::size_t i = 0; i + 1 < n; ++i) e(1 + i, i + 1) = 1.0;
  for (std::size_t i = 0; i < n; ++i) sel(1 + i, i) = 1.0;
  GridSpec g = GridSpec::centered(0.0, 2.0, 65);
  double floor = std::sin(pi / (n + 1.0));
  EXPECT_TRUE(pseudospectrum(e, 0.95 * floor, g, sel).empty());
  Region ring = pseudospectrum(e, 0.8, g, sel);
  auto radii = jordan_annulus(n, 0.8);
  ASSERT_TRUE(radii);
  for (std::size_t i = 0; i < g.node_count(); ++i) {
    double s = std::abs(g.node(i));
    if (s > radii->first + g.cell_diagonal() && s < radii->second - g.cell_diagonal())
      EXPECT_TRUE(ring.contains_node(i));
    if (s < radii->first - g.cell_diagonal() || s > radii->second + g.cell_diagonal())
      EXPECT_FALSE(ring.contains_node(i));
  }
}

TEST(Pseudospectrum, NegativeEpsRejected) {
  EXPECT_THROW(pseudospectrum(ComplexMatrix::identity(2), -0.1, GridSpec::centered(0.0, 1.0, 8)),
               DomainError);
}

TEST(SminField, PropertyCertifiedMasksEqualExactMasks) {
  oracle::Rng rng(61);
  for (int trial = 0; trial < 12; ++trial) {
    std::size_t m = 3 + rng.index(6);
    ComplexMatrix a = trial % 3 == 0 ? oracle::random_hermitian(m, rng) : oracle::random_dense(m, rng);
    GridSpec g = GridSpec::centered(0.0, 4.0, 40 + rng.index(40));
    std::vector<double> levels{0.0, rng.uniform(0.05, 0.5), rng.uniform(0.5, 1.5)};

    SminField exact(make_shifted(a), g, serial());
    exact.resolve_all();
    SminField lazy(make_shifted(a), g, serial());
    lazy.resolve(levels);
    EXPECT_LE(lazy.exact_count(), exact.exact_count());
    for (double t : levels) EXPECT_EQ(lazy.region(t), exact.region(t)) << "level " << t;
    for (std::size_t i = 0; i < g.node_count(); ++i) {
      double v = exact.lower()[i];
      EXPECT_LE(lazy.lower()[i], v + 1e-12);
      EXPECT_GE(lazy.upper()[i], v - 1e-12);
    }
  }
}

TEST(SminField, UnresolvedThresholdThrows) {
  GridSpec g = GridSpec::centered(0.0, 2.0, 40);
  SminField f(make_shifted(jordan_block(4)), g, serial());
  f.resolve(0.3);
  EXPECT_NO_THROW(f.region(0.3));
  EXPECT_THROW(f.region(0.7), DomainError);
  f.resolve_all();
  EXPECT_TRUE(f.fully_exact());
  EXPECT_NO_THROW(f.region(0.7));
  EXPECT_TRUE(f.region(0.7).has_values());
}

TEST(SminField, ParallelMatchesSerial) {
  oracle::Rng rng(62);
  ComplexMatrix a = oracle::random_dense(8, rng);
  GridSpec g = GridSpec::centered(0.0, 4.0, 64);
  EvalOptions par;
  par.jobs = 3;
  SminField s(make_shifted(a), g, serial()), p(make_shifted(a), g, par);
  s.resolve(0.4);
  p.resolve(0.4);
  EXPECT_EQ(s.region(0.4), p.region(0.4));
  EXPECT_EQ(std::vector<double>(s.upper().begin(), s.upper().end()),
            std::vector<double>(p.upper().begin(), p.upper().end()));
}

TEST(SminField, ExactValueAgreesWithOracle) {
  oracle::Rng rng(63);
  ComplexMatrix a = oracle::random_dense(5, rng);
  GridSpec g = GridSpec::centered(0.0, 3.0, 21);
  SminField f(make_shifted(a), g, serial());
  for (std::size_t idx : {0u, 17u, 220u, 440u})
    EXPECT_NEAR(f.exact_value(idx), oracle::smin(oracle::shift(a, g.node(idx))), 1e-10);
}

TEST(Pseudospectrum, PropertyMonotoneInEps) {
  oracle::Rng rng(64);
  for (int trial = 0; trial < 8; ++trial) {
    ComplexMatrix a = oracle::random_dense(4 + rng.index(4), rng);
    GridSpec g = GridSpec::centered(0.0, 4.0, 48);
    SminField f(make_shifted(a), g, serial());
    double e1 = rng.uniform(0.0, 0.6), e2 = e1 + rng.uniform(0.0, 0.6);
    double lv[] = {e1, e2};
    f.resolve(lv);
    EXPECT_TRUE(f.region(e1).is_subset_of(f.region(e2)));
  }
}

TEST(Pseudospectrum, PropertyDirectSumIsUnion) {
  oracle::Rng rng(65);
  for (int trial = 0; trial < 8; ++trial) {
    ComplexMatrix a = oracle::random_dense(2 + rng.index(4), rng);
    ComplexMatrix b = oracle::random_dense(2 + rng.index(4), rng);
    GridSpec g = GridSpec::centered(0.0, 4.0, 48);
    double eps = rng.uniform(0.1, 1.0);
    Region parts[] = {pseudospectrum(a, eps, g, std::nullopt, serial()),
                      pseudospectrum(b, eps, g, std::nullopt, serial())};
    Region sum = pseudospectrum(direct_sum(a, b), eps, g, std::nullopt, serial());
    EXPECT_EQ(sum, region_union(parts));
  }
}
