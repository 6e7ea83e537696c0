#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace bohrkit {

using Complex = std::complex<double>;

/// Coefficients a_0..a_N of a power series f(z) = sum a_n z^n, known up to
/// order N, together with an optional bound C >= ||f||_inf on the closed unit
/// disk. When C is present the unknown tail obeys the Cauchy estimate
/// |a_n| <= C, which is what makes majorant enclosures rigorous.
///
/// A bound obtained from boundary samples is only an estimate; such series
/// carry `sup_norm_is_estimate() == true` and consumers must not treat the
/// bound as certified.
class TruncatedSeries {
 public:
  /// Throws std::invalid_argument if `coeffs` is empty, any coefficient is
  /// not finite, the bound is negative or not finite, or some |a_n| exceeds
  /// the bound beyond roundoff.
  explicit TruncatedSeries(std::vector<Complex> coeffs,
                           std::optional<double> sup_norm_bound = std::nullopt,
                           bool sup_norm_is_estimate = false);

  static TruncatedSeries zero(std::size_t order);

  std::size_t order() const { return coeffs_.size() - 1; }
  std::span<const Complex> coeffs() const { return coeffs_; }
  const Complex& operator[](std::size_t n) const { return coeffs_[n]; }

  const std::optional<double>& sup_norm_bound() const { return sup_norm_bound_; }
  bool sup_norm_is_estimate() const { return sup_norm_is_estimate_; }

  /// Drops coefficients above `order`; the bound is kept. Orders at or above
  /// the current one return a copy.
  TruncatedSeries truncated(std::size_t order) const;

  /// Same coefficients, different bound.
  TruncatedSeries with_sup_norm_bound(std::optional<double> bound,
                                      bool is_estimate = false) const;

  /// Horner evaluation of the stored polynomial part.
  Complex evaluate(Complex z) const;

 private:
  std::vector<Complex> coeffs_;
  std::optional<double> sup_norm_bound_;
  bool sup_norm_is_estimate_ = false;
};

/// alpha*f + beta*g truncated to min(order f, order g). The bound is
/// |alpha| C_f + |beta| C_g when both bounds exist.
TruncatedSeries series_add(const TruncatedSeries& f, const TruncatedSeries& g,
                           Complex alpha, Complex beta);

/// Cauchy product truncated to min(order f, order g), bound C_f * C_g.
TruncatedSeries series_mul(const TruncatedSeries& f, const TruncatedSeries& g);

/// Function evaluated at points of the unit circle.
using CircleSampler = std::function<Complex(Complex)>;

/// f is holomorphic on a neighbourhood of |z| <= radius (radius > 1) and
/// |f| <= sup_on_circle on |z| = radius.
struct AnalyticityBound {
  double radius = 1.0;
  double sup_on_circle = 0.0;
};

struct BoundaryCoefficients {
  /// Bound is max_j |f(xi_j)| and flagged as an estimate.
  TruncatedSeries series;
  /// Per-coefficient bound on |a_hat_n - a_n|: aliasing plus summation
  /// roundoff. +inf when no analyticity bound was supplied.
  std::vector<double> aliasing_error;
};

/// Trapezoidal rule for the coefficient integral on M equispaced circle
/// points: a_hat_n = (1/M) sum_j f(xi_j) xi_j^{-n}, n = 0..order.
/// Requires M >= 4(order+1); throws std::invalid_argument otherwise.
BoundaryCoefficients coefficients_from_boundary(
    const CircleSampler& sample, std::size_t order, std::size_t samples,
    std::optional<AnalyticityBound> analyticity = std::nullopt);

struct SupNormBound {
  double coefficient_sum = 0.0;     // sum |a_n|
  std::optional<double> grid_bound; // sampled maximum inflated by Bernstein
  std::size_t grid_points = 0;
  double value = 0.0;               // min of the available bounds
};

/// Certified upper bound on max_{|z|<=1} |p(z)| for the polynomial formed by
/// the stored coefficients (tail ignored). `grid_points == 0` selects the
/// default 8N^2 + 64.
SupNormBound sup_norm_upper_bound(const TruncatedSeries& f,
                                  std::size_t grid_points = 0);

/// Smallest N with C r^N / (1 - r) < target, so the tail of the majorant past
/// order N is below target * r. Requires 0 <= r < 1.
std::size_t default_order(double r, double sup_norm = 1.0,
                          double target = 1e-12);

/// xi_j = exp(2 pi i j / M), j = 0..M-1, using octant symmetry so that
/// xi_{M/4} = i exactly when 4 | M.
std::vector<Complex> roots_of_unity(std::size_t count);

}  // namespace bohrkit
