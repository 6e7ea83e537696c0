#include "bohrkit/blaschke.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <gtest/gtest.h>

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

TEST(BlaschkeSpecTest, Validation) {
  EXPECT_THROW(BlaschkeSpec({1.0}), std::invalid_argument);
  EXPECT_THROW(BlaschkeSpec({Complex(0.6, 0.8)}), std::invalid_argument);
  EXPECT_THROW(BlaschkeSpec({0.5}, 1.1), std::invalid_argument);
  EXPECT_NO_THROW(BlaschkeSpec({0.5, 0.5}, Complex(0.0, 1.0)));
  EXPECT_NO_THROW(BlaschkeSpec({std::nextafter(1.0, 0.0)}));
}

TEST(ConvexComboTest, Validation) {
  EXPECT_THROW(ConvexCombo({}), std::invalid_argument);
  EXPECT_THROW(ConvexCombo({{0.5, BlaschkeSpec()}}), std::invalid_argument);
  EXPECT_THROW(ConvexCombo({{1.5, BlaschkeSpec()}, {-0.5, BlaschkeSpec()}}),
               std::invalid_argument);
  EXPECT_NO_THROW(ConvexCombo({{0.3, BlaschkeSpec()}, {0.7, BlaschkeSpec({0.1})}}));
}

TEST(EvaluateTest, Examples) {
  EXPECT_EQ(evaluate(BlaschkeSpec(), Complex(0.3, 0.1)), Complex(1.0));
  const Complex w(0.2, -0.7);
  EXPECT_EQ(evaluate(BlaschkeSpec({0.0}), w), w);
  EXPECT_EQ(evaluate(BlaschkeSpec({0.5}), 1.0), Complex(1.0));
  EXPECT_THROW(evaluate(BlaschkeSpec({0.5}), 1.5), std::invalid_argument);
}

TEST(EvaluateTest, UnimodularOnCircle) {
  Rng rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    const BlaschkeSpec spec = random_blaschke(rng, 8, 0.95);
    for (int j = 0; j < 256; ++j) {
      const Complex z = std::polar(1.0, 2.0 * std::numbers::pi * j / 256.0);
      EXPECT_LE(std::abs(std::abs(evaluate(spec, z)) - 1.0), 1e-12);
    }
  }
}

TEST(FactorCoefficientsTest, Examples) {
  ExpectCoeffsNear(factor_coefficients(0.0, 3), {0.0, 1.0, 0.0, 0.0}, 0.0);
  ExpectCoeffsNear(factor_coefficients(0.5, 3), {-0.5, 0.75, 0.375, 0.1875}, 0.0);
  ExpectCoeffsNear(factor_coefficients(Complex(0.0, 0.5), 2),
                   {Complex(0.0, -0.5), 0.75, Complex(0.0, -0.375)}, 1e-16);
  EXPECT_THROW(factor_coefficients(1.0, 3), std::invalid_argument);
  EXPECT_EQ(factor_coefficients(0.3, 4).sup_norm_bound(), 1.0);
}

TEST(FactorCoefficientsTest, ImaginaryZeroMatchesBoundarySamples) {
  const BlaschkeSpec spec({Complex(0.0, 0.5)});
  const auto sampled = coefficients_from_boundary(
      [&](Complex z) { return evaluate(spec, z); }, 2, 4096);
  ExpectCoeffsNear(sampled.series, {Complex(0.0, -0.5), 0.75, Complex(0.0, -0.375)},
                   1e-12);
}

TEST(FactorCoefficientsTest, GeometricDecay) {
  Rng rng(2);
  for (int trial = 0; trial < 100; ++trial) {
    const Complex a = rng.in_disk(0.99);
    const TruncatedSeries f = factor_coefficients(a, 40);
    for (std::size_t n = 1; n < 40; ++n) {
      EXPECT_NEAR(std::abs(f[n + 1]), std::abs(a) * std::abs(f[n]),
                  4e-16 * std::abs(f[n]));
    }
  }
}

TEST(FactorCoefficientsTest, ModuliDependOnlyOnModulusOfZero) {
  Rng rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    const Complex a = rng.in_disk(0.99);
    const TruncatedSeries f = factor_coefficients(a, 30);
    const TruncatedSeries g = factor_coefficients(std::abs(a), 30);
    for (std::size_t n = 0; n <= 30; ++n) {
      EXPECT_NEAR(std::abs(f[n]), std::abs(g[n]), 1e-15);
    }
  }
}

TEST(FactorTailBoundTest, MatchesLongSum) {
  for (double a : {0.0, 0.3, 0.9}) {
    const TruncatedSeries f = factor_coefficients(a, 2000);
    double tail = 0.0;
    for (std::size_t n = 21; n <= 2000; ++n) tail += std::abs(f[n]);
    EXPECT_NEAR(factor_tail_bound(a, 20), tail, 1e-14);
  }
}

TEST(ProductCoefficientsTest, Examples) {
  ExpectCoeffsNear(product_coefficients(BlaschkeSpec({0.0, 0.0}), 3),
                   {0.0, 0.0, 1.0, 0.0}, 0.0);
  // Golden confirmed against boundary sampling in the next test.
  ExpectCoeffsNear(product_coefficients(BlaschkeSpec({0.5, 0.5}), 2),
                   {0.25, -0.75, 0.1875}, 1e-16);
  const Complex a(0.3, -0.4);
  const TruncatedSeries single = product_coefficients(BlaschkeSpec({a}), 12);
  const TruncatedSeries factor = factor_coefficients(a, 12);
  for (std::size_t n = 0; n <= 12; ++n) EXPECT_EQ(single[n], factor[n]);
}

TEST(ProductCoefficientsTest, SquaredFactorGoldenMatchesBoundaryOracle) {
  const BlaschkeSpec spec({0.5, 0.5});
  const auto sampled = coefficients_from_boundary(
      [&](Complex z) { return evaluate(spec, z); }, 2, 4096);
  ExpectCoeffsNear(sampled.series, {0.25, -0.75, 0.1875}, 1e-12);
}

TEST(ProductCoefficientsTest, AgreesWithBoundaryExtraction) {
  Rng rng(4);
  for (int trial = 0; trial < 50; ++trial) {
    const BlaschkeSpec spec = random_blaschke(rng, 6, 0.9).canonical();
    const TruncatedSeries series = product_coefficients(spec, 40);
    const auto sampled = coefficients_from_boundary(
        [&](Complex z) { return evaluate(spec, z); }, 40, 4096);
    for (std::size_t n = 0; n <= 40; ++n) {
      EXPECT_LE(std::abs(series[n] - sampled.series[n]), 1e-9);
      EXPECT_LE(std::abs(series[n]), 1.0 + 1e-12);
    }
  }
}

TEST(ProductCoefficientsTest, ZeroOrderOnlyMovesRoundoff) {
  Rng rng(6);
  for (int trial = 0; trial < 50; ++trial) {
    const BlaschkeSpec spec = random_blaschke(rng, 6, 0.9);
    std::vector<Complex> reversed(spec.zeros().rbegin(), spec.zeros().rend());
    const TruncatedSeries a = product_coefficients(spec, 30);
    const TruncatedSeries b = product_coefficients(BlaschkeSpec(reversed, spec.front()), 30);
    for (std::size_t n = 0; n <= 30; ++n) {
      EXPECT_LE(std::abs(a[n] - b[n]), 1e-13 * std::max(1.0, std::abs(a[n])));
    }
  }
}

TEST(ComboCoefficientsTest, Examples) {
  const BlaschkeSpec spec({0.2, Complex(0.1, 0.3)});
  const TruncatedSeries single = combo_coefficients(ConvexCombo({{1.0, spec}}), 8);
  const TruncatedSeries bare = product_coefficients(spec, 8);
  for (std::size_t n = 0; n <= 8; ++n) EXPECT_EQ(single[n], bare[n]);

  ExpectCoeffsNear(
      combo_coefficients(ConvexCombo({{0.5, BlaschkeSpec({0.0})}, {0.5, BlaschkeSpec()}}), 3),
      {0.5, 0.5, 0.0, 0.0}, 0.0);

  ExpectCoeffsNear(combo_coefficients(ConvexCombo({{0.3, BlaschkeSpec({}, 1.0)},
                                                   {0.7, BlaschkeSpec({}, -1.0)}}),
                                      2),
                   {-0.4, 0.0, 0.0}, 1e-16);
}

TEST(AnalyticityBoundTest, DominatesProductOnChosenCircle) {
  Rng rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    const BlaschkeSpec spec = random_blaschke(rng, 6, 0.9);
    const AnalyticityBound b = analyticity_bound(spec, 256);
    ASSERT_GT(b.radius, 1.0);
    if (spec.max_zero_modulus() > 0.0) {
      EXPECT_LT(b.radius * spec.max_zero_modulus(), 1.0);
    }
    // Direct evaluation of the rational function on |z| = R.
    for (int j = 0; j < 128; ++j) {
      const Complex z = std::polar(b.radius, 2.0 * std::numbers::pi * j / 128.0);
      Complex v = spec.front();
      for (const Complex& zk : spec.zeros()) v *= (z - zk) / (1.0 - std::conj(zk) * z);
      EXPECT_LE(std::abs(v), b.sup_on_circle * (1.0 + 1e-12));
    }
  }
}

}  // namespace
}  // namespace bohrkit
