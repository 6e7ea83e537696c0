#include "bohrkit/series.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <gtest/gtest.h>

#include "bohrkit/blaschke.hpp"
#include "bohrkit/random.hpp"

namespace bohrkit {
namespace {

void ExpectCoeffsNear(const TruncatedSeries& f, std::initializer_list<Complex> want,
                      double tol) {
  ASSERT_EQ(f.order() + 1, want.size());
  std::size_t n = 0;
  for (const Complex& w : want) {
    EXPECT_NEAR(f[n].real(), w.real(), tol) << "n=" << n;
    EXPECT_NEAR(f[n].imag(), w.imag(), tol) << "n=" << n;
    ++n;
  }
}

// Dense-grid estimate of max |p| on the circle, used as an oracle.
double DenseGridMax(const TruncatedSeries& p, int points) {
  double best = 0.0;
  for (int j = 0; j < points; ++j) {
    const double theta = 2.0 * std::numbers::pi * j / points;
    best = std::max(best, std::abs(p.evaluate(std::polar(1.0, theta))));
  }
  return best;
}

TEST(TruncatedSeriesTest, RejectsInvalidConstruction) {
  EXPECT_THROW(TruncatedSeries({}), std::invalid_argument);
  EXPECT_THROW(TruncatedSeries({1.0, 2.0}, 1.5), std::invalid_argument);
  EXPECT_THROW(TruncatedSeries({1.0}, -1.0), std::invalid_argument);
  EXPECT_THROW(TruncatedSeries({Complex(NAN, 0.0)}), std::invalid_argument);
  EXPECT_NO_THROW(TruncatedSeries({1.0, 2.0}, 2.0));
}

TEST(TruncatedSeriesTest, TruncateKeepsBound) {
  const TruncatedSeries f({1.0, 2.0, 3.0}, 6.0);
  const TruncatedSeries g = f.truncated(1);
  EXPECT_EQ(g.order(), 1u);
  EXPECT_EQ(g.sup_norm_bound(), 6.0);
  EXPECT_EQ(f.truncated(10).order(), 2u);
}

TEST(SeriesAddTest, Examples) {
  const TruncatedSeries f({1.0, 2.0, 3.0});
  const TruncatedSeries zero({0.0, 0.0, 0.0});
  ExpectCoeffsNear(series_add(f, zero, 1.0, 5.0), {1.0, 2.0, 3.0}, 0.0);

  ExpectCoeffsNear(series_add(TruncatedSeries({1.0, 0.0}), TruncatedSeries({0.0, 0.0}),
                              0.0, 0.0),
                   {0.0, 0.0}, 0.0);

  const TruncatedSeries h = series_add(TruncatedSeries({1.0, 1.0}, 2.0),
                                       TruncatedSeries({1.0, -1.0}, 2.0), 0.5, 0.5);
  ExpectCoeffsNear(h, {1.0, 0.0}, 0.0);
  EXPECT_EQ(h.sup_norm_bound(), 2.0);
}

TEST(SeriesAddTest, TruncatesToShorterOrderAndDropsMissingBound) {
  const TruncatedSeries f({1.0, 1.0, 1.0}, 3.0);
  const TruncatedSeries g({1.0, 1.0});
  const TruncatedSeries h = series_add(f, g, 1.0, 1.0);
  EXPECT_EQ(h.order(), 1u);
  EXPECT_FALSE(h.sup_norm_bound().has_value());
}

TEST(SeriesMulTest, Examples) {
  ExpectCoeffsNear(series_mul(TruncatedSeries({0.0, 1.0, 0.0}),
                              TruncatedSeries({0.0, 1.0, 0.0})),
                   {0.0, 0.0, 1.0}, 0.0);
  // Binomial oracle: (1+z)^2 = 1 + 2z + z^2.
  ExpectCoeffsNear(series_mul(TruncatedSeries({1.0, 1.0, 0.0}),
                              TruncatedSeries({1.0, 1.0, 0.0})),
                   {1.0, 2.0, 1.0}, 0.0);
  ExpectCoeffsNear(series_mul(TruncatedSeries({4.0, 5.0, 6.0}), TruncatedSeries({1.0})),
                   {4.0}, 0.0);
  const TruncatedSeries p = series_mul(TruncatedSeries({1.0, 1.0}, 2.0),
                                       TruncatedSeries({1.0, -1.0}, 2.0));
  EXPECT_EQ(p.sup_norm_bound(), 4.0);
}

TEST(SeriesMulTest, BinomialOracleHighPower) {
  // (1+z)^10 against C(10, n).
  TruncatedSeries acc({1.0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0});
  const TruncatedSeries factor({1.0, 1.0, 0, 0, 0, 0, 0, 0, 0, 0, 0});
  for (int i = 0; i < 10; ++i) acc = series_mul(acc, factor);
  double binom = 1.0;
  for (int n = 0; n <= 10; ++n) {
    EXPECT_EQ(acc[n].real(), binom);
    binom = binom * (10 - n) / (n + 1);
  }
}

TEST(SeriesPropertyTest, AddAndMulCommute) {
  Rng rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const TruncatedSeries f = random_polynomial(rng, 10);
    const TruncatedSeries g = random_polynomial(rng, 10);
    const TruncatedSeries fg = series_mul(f, g);
    const TruncatedSeries gf = series_mul(g, f);
    ASSERT_EQ(fg.order(), gf.order());
    for (std::size_t n = 0; n <= fg.order(); ++n) {
      const double scale = std::max(1.0, std::abs(fg[n]));
      EXPECT_LE(std::abs(fg[n] - gf[n]), 1e-13 * scale);
    }
    const TruncatedSeries s1 = series_add(f, g, 1.0, 1.0);
    const TruncatedSeries s2 = series_add(g, f, 1.0, 1.0);
    for (std::size_t n = 0; n <= s1.order(); ++n) EXPECT_EQ(s1[n], s2[n]);
  }
}

TEST(RootsOfUnityTest, QuarterPointsAreExact) {
  const auto roots = roots_of_unity(16);
  EXPECT_EQ(roots[0], Complex(1.0, 0.0));
  EXPECT_EQ(roots[4], Complex(0.0, 1.0));
  EXPECT_EQ(roots[8], Complex(-1.0, 0.0));
  EXPECT_EQ(roots[12], Complex(0.0, -1.0));
  for (std::size_t j = 0; j < roots.size(); ++j) {
    const Complex want = std::polar(1.0, 2.0 * std::numbers::pi * j / 16.0);
    EXPECT_NEAR(std::abs(roots[j] - want), 0.0, 1e-15);
  }
}

TEST(CoefficientsFromBoundaryTest, Examples) {
  const auto mono = coefficients_from_boundary([](Complex z) { return z; }, 3, 16);
  ExpectCoeffsNear(mono.series, {0.0, 1.0, 0.0, 0.0}, 1e-12);
  EXPECT_TRUE(mono.series.sup_norm_is_estimate());

  const auto constant = coefficients_from_boundary([](Complex) { return Complex(3.0); }, 1, 8);
  ExpectCoeffsNear(constant.series, {3.0, 0.0}, 1e-12);
  EXPECT_NEAR(*constant.series.sup_norm_bound(), 3.0, 1e-15);

  const BlaschkeSpec phi({0.5});
  const auto sampled = coefficients_from_boundary(
      [&](Complex z) { return evaluate(phi, z); }, 30, 4096);
  const TruncatedSeries exact = factor_coefficients(0.5, 30);
  for (std::size_t n = 0; n <= 30; ++n) {
    EXPECT_NEAR(std::abs(sampled.series[n] - exact[n]), 0.0, 1e-10) << "n=" << n;
  }
}

TEST(CoefficientsFromBoundaryTest, RejectsTooFewSamples) {
  auto f = [](Complex z) { return z; };
  EXPECT_THROW(coefficients_from_boundary(f, 3, 15), std::invalid_argument);
  EXPECT_NO_THROW(coefficients_from_boundary(f, 3, 16));
}

TEST(CoefficientsFromBoundaryTest, ExactOnPolynomials) {
  Rng rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const TruncatedSeries p = random_polynomial(rng, 12);
    const std::size_t order = 12;
    const auto got = coefficients_from_boundary(
        [&](Complex z) { return p.evaluate(z); }, order, 4 * (order + 1));
    for (std::size_t n = 0; n <= order; ++n) {
      const Complex want = n <= p.order() ? p[n] : Complex(0.0);
      EXPECT_LE(std::abs(got.series[n] - want), 1e-12);
      // Cauchy estimate against the sample maximum.
      EXPECT_LE(std::abs(got.series[n]), *got.series.sup_norm_bound() + 1e-12);
    }
  }
}

TEST(CoefficientsFromBoundaryTest, AliasingReportCoversSampleDoubling) {
  Rng rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const BlaschkeSpec spec = random_blaschke(rng, 6, 0.95);
    auto sampler = [&](Complex z) { return evaluate(spec, z); };
    for (std::size_t m : {64u, 256u, 1024u}) {
      const auto coarse =
          coefficients_from_boundary(sampler, 10, m, analyticity_bound(spec, m));
      const auto fine =
          coefficients_from_boundary(sampler, 10, 2 * m, analyticity_bound(spec, 2 * m));
      for (std::size_t n = 0; n <= 10; ++n) {
        EXPECT_LE(std::abs(coarse.series[n] - fine.series[n]),
                  coarse.aliasing_error[n] + fine.aliasing_error[n])
            << "m=" << m << " n=" << n;
        // The reported bound must also cover the true error.
        EXPECT_LE(std::abs(coarse.series[n] - product_coefficients(spec, 10)[n]),
                  coarse.aliasing_error[n] + 1e-13);
      }
    }
  }
}

TEST(CoefficientsFromBoundaryTest, NoAnalyticityBoundReportsInfinity) {
  const auto got = coefficients_from_boundary([](Complex z) { return z; }, 2, 12);
  for (double e : got.aliasing_error) EXPECT_TRUE(std::isinf(e));
}

TEST(SupNormUpperBoundTest, Examples) {
  EXPECT_EQ(sup_norm_upper_bound(TruncatedSeries({0.0, 1.0})).value, 1.0);
  EXPECT_EQ(sup_norm_upper_bound(TruncatedSeries({1.0, 1.0})).value, 2.0);
  const TruncatedSeries p({1.0, 0.0, -1.0});
  const SupNormBound b = sup_norm_upper_bound(p);
  EXPECT_EQ(b.coefficient_sum, 2.0);
  EXPECT_NEAR(DenseGridMax(p, 1 << 16), 2.0, 1e-12);
  EXPECT_GE(b.value, 2.0);
  EXPECT_LE(b.value, 2.0);
}

TEST(SupNormUpperBoundTest, DominatesDenseGridAndBeatsCoefficientSum) {
  Rng rng(17);
  int grid_wins = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const TruncatedSeries p = random_polynomial(rng, 12);
    const SupNormBound b = sup_norm_upper_bound(p);
    EXPECT_GE(b.value, DenseGridMax(p, 1 << 14));
    ASSERT_TRUE(b.grid_bound.has_value());
    EXPECT_EQ(b.grid_points, 8 * p.order() * p.order() + 64);
    if (*b.grid_bound < b.coefficient_sum) ++grid_wins;
  }
  EXPECT_GT(grid_wins, 100);
}

TEST(DefaultOrderTest, OneThirdGivesTwentySix) {
  EXPECT_EQ(default_order(1.0 / 3.0), 26u);
  EXPECT_EQ(default_order(0.0), 0u);
  const double r = 1.0 / 3.0;
  EXPECT_LT(std::pow(r, 27) / (1.0 - r), 1e-12);
  EXPECT_THROW(default_order(1.0), std::invalid_argument);
}

}  // namespace
}  // namespace bohrkit
