#include "bohrkit/series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace bohrkit {

namespace {

constexpr double kUnitRoundoff = std::numeric_limits<double>::epsilon() / 2;

// Slack allowed when checking |a_n| <= C on computed coefficients.
double cauchy_slack(double bound) { return 1e-12 * std::max(1.0, bound); }

std::optional<double> combine_bounds(const TruncatedSeries& f,
                                     const TruncatedSeries& g, double wf,
                                     double wg) {
  if (!f.sup_norm_bound() || !g.sup_norm_bound()) return std::nullopt;
  return wf * *f.sup_norm_bound() + wg * *g.sup_norm_bound();
}

}  // namespace

TruncatedSeries::TruncatedSeries(std::vector<Complex> coeffs,
                                 std::optional<double> sup_norm_bound,
                                 bool sup_norm_is_estimate)
    : coeffs_(std::move(coeffs)),
      sup_norm_bound_(sup_norm_bound),
      sup_norm_is_estimate_(sup_norm_bound && sup_norm_is_estimate) {
  if (coeffs_.empty()) {
    throw std::invalid_argument("series needs at least one coefficient");
  }
  for (std::size_t n = 0; n < coeffs_.size(); ++n) {
    if (!std::isfinite(coeffs_[n].real()) || !std::isfinite(coeffs_[n].imag())) {
      throw std::invalid_argument("coefficient " + std::to_string(n) +
                                  " is not finite");
    }
  }
  if (!sup_norm_bound_) return;
  const double c = *sup_norm_bound_;
  if (!std::isfinite(c) || c < 0.0) {
    throw std::invalid_argument("sup-norm bound must be finite and >= 0");
  }
  for (std::size_t n = 0; n < coeffs_.size(); ++n) {
    if (std::abs(coeffs_[n]) > c + cauchy_slack(c)) {
      throw std::invalid_argument(
          "coefficient " + std::to_string(n) +
          " violates the Cauchy estimate |a_n| <= sup-norm bound");
    }
  }
}

TruncatedSeries TruncatedSeries::zero(std::size_t order) {
  return TruncatedSeries(std::vector<Complex>(order + 1), 0.0);
}

TruncatedSeries TruncatedSeries::truncated(std::size_t order) const {
  if (order >= this->order()) return *this;
  std::vector<Complex> head(coeffs_.begin(), coeffs_.begin() + order + 1);
  return TruncatedSeries(std::move(head), sup_norm_bound_, sup_norm_is_estimate_);
}

TruncatedSeries TruncatedSeries::with_sup_norm_bound(std::optional<double> bound,
                                                     bool is_estimate) const {
  return TruncatedSeries(coeffs_, bound, is_estimate);
}

Complex TruncatedSeries::evaluate(Complex z) const {
  Complex acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

TruncatedSeries series_add(const TruncatedSeries& f, const TruncatedSeries& g,
                           Complex alpha, Complex beta) {
  const std::size_t order = std::min(f.order(), g.order());
  std::vector<Complex> out(order + 1);
  for (std::size_t n = 0; n <= order; ++n) out[n] = alpha * f[n] + beta * g[n];
  const bool estimate = f.sup_norm_is_estimate() || g.sup_norm_is_estimate();
  return TruncatedSeries(std::move(out),
                         combine_bounds(f, g, std::abs(alpha), std::abs(beta)),
                         estimate);
}

TruncatedSeries series_mul(const TruncatedSeries& f, const TruncatedSeries& g) {
  const std::size_t order = std::min(f.order(), g.order());
  std::vector<Complex> out(order + 1);
  for (std::size_t n = 0; n <= order; ++n) {
    Complex acc = 0.0;
    for (std::size_t k = 0; k <= n; ++k) acc += f[k] * g[n - k];
    out[n] = acc;
  }
  std::optional<double> bound;
  if (f.sup_norm_bound() && g.sup_norm_bound()) {
    bound = *f.sup_norm_bound() * *g.sup_norm_bound();
  }
  const bool estimate = f.sup_norm_is_estimate() || g.sup_norm_is_estimate();
  return TruncatedSeries(std::move(out), bound, estimate);
}

std::vector<Complex> roots_of_unity(std::size_t count) {
  std::vector<Complex> out(count);
  if (count == 0) return out;
  // Quarter turns are exact multiplications by i.
  const Complex quarter[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  for (std::size_t j = 0; j < count; ++j) {
    const std::size_t scaled = 4 * j;
    const std::size_t q = scaled / count;
    const std::size_t rem = scaled - q * count;
    Complex w{1.0, 0.0};
    if (rem != 0) {
      w = std::polar(1.0, std::numbers::pi / 2 * static_cast<double>(rem) /
                              static_cast<double>(count));
    }
    out[j] = quarter[q % 4] * w;
  }
  return out;
}

BoundaryCoefficients coefficients_from_boundary(
    const CircleSampler& sample, std::size_t order, std::size_t samples,
    std::optional<AnalyticityBound> analyticity) {
  if (samples < 4 * (order + 1)) {
    throw std::invalid_argument("sample count must be at least 4(order+1)");
  }
  if (analyticity && (!(analyticity->radius > 1.0) ||
                      !(analyticity->sup_on_circle >= 0.0))) {
    throw std::invalid_argument("analyticity bound needs radius > 1");
  }
  const std::vector<Complex> roots = roots_of_unity(samples);
  std::vector<Complex> values(samples);
  double max_modulus = 0.0;
  for (std::size_t j = 0; j < samples; ++j) {
    values[j] = sample(roots[j]);
    max_modulus = std::max(max_modulus, std::abs(values[j]));
  }

  const double m = static_cast<double>(samples);
  std::vector<Complex> coeffs(order + 1);
  for (std::size_t n = 0; n <= order; ++n) {
    Complex acc = 0.0;
    for (std::size_t j = 0; j < samples; ++j) {
      acc += values[j] * std::conj(roots[(n * j) % samples]);
    }
    coeffs[n] = acc / m;
  }

  const double roundoff = (m + 6.0) * kUnitRoundoff * max_modulus;
  std::vector<double> aliasing(order + 1,
                               std::numeric_limits<double>::infinity());
  if (analyticity) {
    const double log_r = std::log(analyticity->radius);
    // 1 / (1 - R^{-M}); R^{-M} may underflow to 0, which is harmless.
    const double geometric = 1.0 / -std::expm1(-m * log_r);
    for (std::size_t n = 0; n <= order; ++n) {
      const double decay = std::exp(-(static_cast<double>(n) + m) * log_r);
      aliasing[n] = analyticity->sup_on_circle * decay * geometric + roundoff;
    }
  }
  return {TruncatedSeries(std::move(coeffs), max_modulus, true),
          std::move(aliasing)};
}

SupNormBound sup_norm_upper_bound(const TruncatedSeries& f,
                                  std::size_t grid_points) {
  SupNormBound out;
  for (const Complex& a : f.coeffs()) out.coefficient_sum += std::abs(a);
  out.value = out.coefficient_sum;

  const double degree = static_cast<double>(f.order());
  if (grid_points == 0) {
    grid_points = 8 * f.order() * f.order() + 64;
  }
  out.grid_points = grid_points;
  const double k = static_cast<double>(grid_points);
  // Between grid points |p| can grow by at most ||p'|| * pi/K <= N ||p|| pi/K.
  const double shrink = 1.0 - std::numbers::pi * degree / k;
  if (shrink <= 0.0) return out;

  double sampled = 0.0;
  for (const Complex& z : roots_of_unity(grid_points)) {
    sampled = std::max(sampled, std::abs(f.evaluate(z)));
  }
  // Horner roundoff on the unit circle.
  sampled += 4.0 * (degree + 1.0) * kUnitRoundoff * out.coefficient_sum;
  out.grid_bound = sampled / shrink;
  out.value = std::min(out.coefficient_sum, *out.grid_bound);
  return out;
}

std::size_t default_order(double r, double sup_norm, double target) {
  if (!(r >= 0.0 && r < 1.0)) {
    throw std::invalid_argument("radius must lie in [0,1)");
  }
  if (!(target > 0.0)) throw std::invalid_argument("target must be positive");
  if (r == 0.0 || sup_norm <= 0.0) return 0;
  const double scale = sup_norm / (1.0 - r);
  std::size_t n = 0;
  double term = scale;  // scale * r^n
  while (!(term < target)) {
    term *= r;
    ++n;
  }
  return n;
}

}  // namespace bohrkit
