#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "specincl/convergence.hpp"
#include "specincl/errors.hpp"
#include "specincl/linalg.hpp"
#include "specincl/penalty.hpp"
#include "specincl/pseudospectrum.hpp"
#include "specincl/toeplitz.hpp"

using namespace specincl;
using std::numbers::pi;

TEST(BuildToeplitz, Examples) {
  EXPECT_EQ(build_toeplitz(ToeplitzSpec::jordan(), 3), jordan_block(3));
  EXPECT_EQ(build_toeplitz(ToeplitzSpec::laplacian(), 4), discrete_laplacian(4));
  ComplexMatrix two = build_toeplitz(ToeplitzSpec::from_coefficients({{0, 2.0}}), 2);
  EXPECT_EQ(two, ComplexMatrix::identity(2) * Complex{2.0});
  EXPECT_EQ(jordan_block(3)(0, 1), Complex{1.0});
  EXPECT_THROW(build_toeplitz(ToeplitzSpec::jordan(), 1), DomainError);
  EXPECT_EQ(jordan_block(1), ComplexMatrix(1, 1));
}

TEST(ToeplitzSpec, Validation) {
  ToeplitzSpec s = ToeplitzSpec::from_coefficients({{-2, 1.0}, {1, Complex{0, 3}}});
  EXPECT_EQ(s.bandwidth(), 2u);
  EXPECT_FALSE(s.hermitian());
  EXPECT_EQ(s.coeff(5), Complex{0.0});
  EXPECT_DOUBLE_EQ(s.wiener_norm(), 4.0);
  EXPECT_TRUE(ToeplitzSpec::laplacian().hermitian());
  EXPECT_THROW(ToeplitzSpec({{3, 1.0}}, 2, false), DomainError);
  EXPECT_THROW(ToeplitzSpec({{1, 1.0}, {-1, 2.0}}, 1, true), DomainError);
}

TEST(ToeplitzSpec, PropertyEntriesFollowCoefficients) {
  oracle::Rng rng(81);
  for (int trial = 0; trial < 20; ++trial) {
    std::map<int, Complex> c;
    int w = 1 + static_cast<int>(rng.index(3));
    for (int j = -w; j <= w; ++j) c[j] = rng.cnormal();
    ToeplitzSpec s = ToeplitzSpec::from_coefficients(c);
    std::size_t m = 2 + rng.index(10);
    ComplexMatrix a = build_toeplitz(s, m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        EXPECT_EQ(a(i, j), s.coeff(static_cast<int>(i) - static_cast<int>(j)));
  }
}

TEST(BandedPartition, Examples) {
  auto sizes = [](const BlockPartition& p) {
    return std::vector<std::size_t>(p.sizes().begin(), p.sizes().end());
  };
  EXPECT_EQ(sizes(banded_partition(12, 3)), (std::vector<std::size_t>{3, 3, 3, 3}));
  EXPECT_EQ(sizes(banded_partition(10, 3)), (std::vector<std::size_t>{3, 3, 4}));
  EXPECT_EQ(sizes(banded_partition(8, 4)), (std::vector<std::size_t>{4, 4}));
  EXPECT_THROW(banded_partition(5, 3), DomainError);
  EXPECT_THROW(banded_partition(5, 0), DomainError);
}

TEST(BandedPartition, PropertyBandedToeplitzIsBlockTridiagonal) {
  oracle::Rng rng(82);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t w = 1 + rng.index(4), m = 2 * w + rng.index(20);
    BlockPartition p = banded_partition(m, w);
    EXPECT_EQ(p.total(), m);
    EXPECT_EQ(p.count(), m / w);
    ComplexMatrix a = oracle::random_toeplitz(m, static_cast<int>(w), rng);
    EXPECT_TRUE(split_tridiagonal(make_view(a, p)).remaining.is_zero());
  }
}

TEST(WienerTail, Examples) {
  EXPECT_EQ(wiener_tail(ToeplitzSpec::laplacian(), 1).value, 0.0);
  std::map<int, Complex> c;
  for (int j = -20; j <= 20; ++j) c[j] = std::pow(2.0, -std::abs(j));
  ToeplitzSpec geo(c, 20, true, true);
  TailBound t = wiener_tail(geo, 2);
  double expect = 0.0;
  for (int j = 3; j <= 20; ++j) expect += 2.0 * std::pow(2.0, -j);
  EXPECT_NEAR(t.value, expect, 1e-15);
  EXPECT_NEAR(t.value, 0.5 - std::pow(2.0, -19), 1e-15);
  EXPECT_TRUE(t.lower_bound_only);
  EXPECT_FALSE(wiener_tail(ToeplitzSpec::jordan(), 1).lower_bound_only);
}

TEST(WienerTail, PropertyBoundsRemainingNorm) {
  oracle::Rng rng(83);
  for (int trial = 0; trial < 20; ++trial) {
    std::map<int, Complex> c;
    for (int j = -6; j <= 6; ++j) c[j] = rng.cnormal() * std::pow(0.6, std::abs(j));
    ToeplitzSpec s = ToeplitzSpec::from_coefficients(c);
    std::size_t w = 1 + rng.index(3), m = 2 * w + 6 + rng.index(12);
    ComplexMatrix cm = split_tridiagonal(make_view(build_toeplitz(s, m), banded_partition(m, w))).remaining;
    EXPECT_LE(spectral_norm(cm), wiener_tail(s, w).value + 1e-12);
  }
}

TEST(JordanPhi, Examples) {
  for (std::size_t n = 1; n <= 10; ++n) EXPECT_NEAR(jordan_phi(n, 1.0), pi / (2.0 * n + 1.0), 1e-12);
  EXPECT_NEAR(jordan_phi(1, 2.0), std::acos(0.25), 1e-12);
  for (std::size_t n = 1; n <= 10; ++n) {
    double s = 1e4, phi = jordan_phi(n, s);
    EXPECT_LT(std::abs(s * std::sin((n + 1.0) * phi) - std::sin(n * phi)), 1e-10 * s);
    EXPECT_LT(phi, pi / (n + 1.0));
  }
  EXPECT_THROW(jordan_phi(3, 0.5), DomainError);
}

TEST(JordanVn, Examples) {
  for (std::size_t n = 1; n <= 10; ++n) {
    EXPECT_NEAR(jordan_vn(n, 1.0), 2 * std::sin(pi / (4.0 * n + 2.0)), 1e-12);
    EXPECT_NEAR(jordan_vn(n, 1.0), eps_tau(PenaltyParams::make(0, 1, 0, n)), 1e-12);
  }
  EXPECT_NEAR(jordan_vn(5, 0.0), 0.0, 1e-14);
}

TEST(JordanVn, PropertyRotationInvariantOracle) {
  oracle::Rng rng(84);
  for (std::size_t n = 1; n <= 12; ++n)
    for (int k = 0; k < 20; ++k) {
      double s = rng.uniform(1.0, 3.0);
      Complex lam = std::polar(s, rng.uniform(-pi, pi));
      EXPECT_NEAR(jordan_vn(n, s), oracle::smin(oracle::shift(jordan_block(n), lam)), 1e-9);
    }
}

TEST(JordanVnPlus, MatchesRectangularFormulaAndCnIdentity) {
  for (std::size_t n = 1; n <= 12; ++n) {
    double cn = std::cos(pi / (n + 1.0));
    double epp = eps_tau1(PenaltyParams::make(0, 1, 0, n));
    EXPECT_NEAR(cn, 1.0 - epp * epp / 2.0, 1e-14);
    EXPECT_NEAR(jordan_vn_plus(n, cn), std::sin(pi / (n + 1.0)), 1e-12);
  }
}

TEST(JordanAlpha, ExamplesAndBracket) {
  for (std::size_t n = 1; n <= 10; ++n) {
    double en = 2 * std::sin(pi / (4.0 * n + 2.0));
    EXPECT_NEAR(jordan_alpha(n, en), 1.0, 1e-10);
    for (double e : {0.0, 0.05, 0.15, 0.5}) {
      double a = jordan_alpha(n, en + e);
      EXPECT_GE(a, 1 + e - 1e-12);
      EXPECT_LE(a, 1 + e + std::min(en, std::sqrt(2 * en * e)) + 1e-12);
      EXPECT_NEAR(jordan_vn(n, a), en + e, 1e-10);
    }
  }
  double e4 = 2 * std::sin(pi / 18), e4pp = 2 * std::sin(pi / 10);
  EXPECT_NEAR(jordan_alpha(4, e4 + 0.15), 1.18, 0.01);
  EXPECT_NEAR(jordan_alpha(4, e4pp + 0.15), 1.48, 0.01);
  EXPECT_NEAR(jordan_alpha(4, e4pp), 1.32, 0.01);
  // below eps_n the disc is strictly inside the unit disc
  double small = jordan_alpha(6, 0.01);
  EXPECT_LT(small, 1.0);
  EXPECT_NEAR(oracle::smin(oracle::shift(jordan_block(6), small)), 0.01, 1e-9);
  EXPECT_EQ(jordan_alpha(6, 0.0), 0.0);
}

TEST(JordanAnnulus, Examples) {
  for (std::size_t n = 1; n <= 10; ++n) {
    double sn = std::sin(pi / (n + 1.0)), cn = std::cos(pi / (n + 1.0));
    auto tangent = jordan_annulus(n, sn);
    ASSERT_TRUE(tangent);
    EXPECT_NEAR(tangent->first, cn, 1e-7);
    EXPECT_NEAR(tangent->second, cn, 1e-7);
    EXPECT_FALSE(jordan_annulus(n, 0.99 * sn));
    double en = 2 * std::sin(pi / (4.0 * n + 2.0));
    for (double e : {0.0, 0.15}) {
      auto r = jordan_annulus(n, en + e);
      if (r) EXPECT_LT(r->second, jordan_alpha(n, en + e));
    }
  }
}

TEST(Laplacian, SpectrumAndTheta) {
  EXPECT_EQ(laplacian_spectrum(1), std::vector<double>{0.0});
  EXPECT_EQ(laplacian_spectrum(5)[2], 0.0);
  auto s4 = laplacian_spectrum(4);
  std::vector<double> expect{1.6180, 0.6180, -0.6180, -1.6180};
  for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(s4[i], expect[i], 1e-4);
  EXPECT_NEAR(laplacian_theta(1), pi / 3, 1e-12);
  EXPECT_NEAR(laplacian_theta(2), 2 * std::acos(std::sqrt(7.0 / 8.0)), 1e-12);
  EXPECT_NEAR(4 * std::sin(laplacian_theta(4) / 2), 0.9364, 5e-4);
  for (std::size_t n = 1; n <= 64; ++n) EXPECT_NEAR(laplacian_theta(n), solve_theta(n, 1, 1), 1e-10);
}

TEST(Laplacian, PropertySpectrumMatchesJacobi) {
  for (std::size_t m = 1; m <= 20; ++m) {
    auto a = laplacian_spectrum(m);
    auto b = oracle::jacobi_eigenvalues(discrete_laplacian(m));
    std::reverse(b.begin(), b.end());
    for (std::size_t i = 0; i < m; ++i) EXPECT_NEAR(a[i], b[i], 1e-10);
  }
}

TEST(Convergence, SmallJordanStudyMatchesDirectComputation) {
  std::vector<ScheduleRow> rows{{32, 2, 1}, {32, 4, 1}, {24, 8, 1}};
  StudyOptions o;
  o.nodes_per_axis = 64;
  o.inclusion.eval.jobs = 1;
  const double eps = 0.15;
  StudyResult r = convergence_study(ToeplitzSpec::jordan(), eps, rows, o);
  ASSERT_EQ(r.rows.size(), 3u);
  EXPECT_EQ(r.method, StudyMethod::tau);
  bool flag = true;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const StudyRow& row = r.rows[i];
    EXPECT_DOUBLE_EQ(row.cell_size, r.grid.cell_diagonal());
    EXPECT_EQ(row.m, rows[i].m);
    EXPECT_FALSE(row.clipped);
    ComplexMatrix a = jordan_block(rows[i].m);
    InclusionEngine engine(make_view(a, banded_partition(rows[i].m, 1)), r.grid, o.inclusion);
    Region incl = engine.sigma_tau(rows[i].n, eps).big_sigma;
    Region ref = pseudospectrum(a, eps, r.grid, std::nullopt, o.inclusion.eval);
    EXPECT_TRUE(ref.is_subset_of(incl));
    EXPECT_NEAR(row.d_h, oracle::brute_hausdorff(incl, ref), 1e-12);
    if (i > 0 && rows[i].n >= o.burn_in_n && rows[i - 1].n >= o.burn_in_n &&
        row.d_h > r.rows[i - 1].d_h + o.slack_cells * row.cell_size)
      flag = false;
  }
  EXPECT_EQ(r.decrease_within_slack, flag);
}

TEST(Convergence, Errors) {
  std::vector<ScheduleRow> rows{{16, 2, 1}};
  EXPECT_THROW(convergence_study(ToeplitzSpec::jordan(), 0.0, rows), DomainError);
  EXPECT_THROW(convergence_study(ToeplitzSpec::jordan(), 0.1, {}), DomainError);
  EXPECT_THROW(convergence_study(ToeplitzSpec::jordan(), -0.1, rows), DomainError);
}

TEST(Convergence, WienerSymbolUsesTau1) {
  std::map<int, Complex> c;
  for (int j = -6; j <= 6; ++j) c[j] = std::pow(0.3, std::abs(j));
  ToeplitzSpec s(c, 6, true, true);
  std::vector<ScheduleRow> rows{{24, 2, 2}, {24, 4, 2}};
  StudyOptions o;
  o.nodes_per_axis = 48;
  o.inclusion.eval.jobs = 1;
  StudyResult r = convergence_study(s, 0.1, rows, o);
  EXPECT_EQ(r.method, StudyMethod::tau1);
  EXPECT_EQ(r.rows.size(), 2u);
}
