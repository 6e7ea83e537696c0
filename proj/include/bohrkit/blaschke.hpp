#pragma once

#include <cstddef>
#include <vector>

#include "bohrkit/series.hpp"

namespace bohrkit {

/// front * prod_k (z - z_k) / (1 - conj(z_k) z) with every |z_k| < 1 and
/// |front| = 1. Zeros may repeat; an empty list is the constant `front`.
class BlaschkeSpec {
 public:
  BlaschkeSpec() = default;
  /// Throws std::invalid_argument if some |z_k| >= 1 (no tolerance) or
  /// ||front| - 1| > 1e-12.
  explicit BlaschkeSpec(std::vector<Complex> zeros, Complex front = 1.0);

  const std::vector<Complex>& zeros() const { return zeros_; }
  Complex front() const { return front_; }
  std::size_t degree() const { return zeros_.size(); }
  /// max |z_k|, 0 for an empty product.
  double max_zero_modulus() const;

  /// Zeros sorted by (real, imag) so that expansions are reproducible
  /// regardless of input order.
  BlaschkeSpec canonical() const;

 private:
  std::vector<Complex> zeros_;
  Complex front_{1.0, 0.0};
};

/// Non-negative weights summing to 1 (within 1e-12) over Blaschke products.
class ConvexCombo {
 public:
  struct Term {
    double weight = 0.0;
    BlaschkeSpec spec;
  };

  /// Throws std::invalid_argument on an empty list, a negative or non-finite
  /// weight, or a weight sum off by more than 1e-12.
  explicit ConvexCombo(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  double max_zero_modulus() const;

 private:
  std::vector<Term> terms_;
};

/// Requires |z| <= 1 (1e-12 slack for rounded circle points).
Complex evaluate(const BlaschkeSpec& spec, Complex z);
Complex evaluate(const ConvexCombo& combo, Complex z);

/// Expansion of the single factor (z - a)/(1 - conj(a) z):
/// a_0 = -a, a_n = conj(a)^{n-1} (1 - |a|^2). Bound 1.
TruncatedSeries factor_coefficients(Complex a, std::size_t order);

/// sum_{n > order} |a_n| for the factor with zero a, i.e. |a|^order (1 + |a|).
double factor_tail_bound(Complex a, std::size_t order);

/// Cauchy product of the factor expansions in the given zero order, times
/// the front factor. Bound 1.
TruncatedSeries product_coefficients(const BlaschkeSpec& spec, std::size_t order);

/// Weighted sum of the product expansions. Bound 1.
TruncatedSeries combo_coefficients(const ConvexCombo& combo, std::size_t order);

/// Cauchy-estimate data for aliasing reports on M boundary samples: picks
/// R in (1, 1/max|z_k|) minimising S R^{-M} with
/// S = prod_k (R + |z_k|)/(1 - |z_k| R) >= max_{|z|=R} |B(z)|.
AnalyticityBound analyticity_bound(const BlaschkeSpec& spec, std::size_t samples);
AnalyticityBound analyticity_bound(const ConvexCombo& combo, std::size_t samples);

}  // namespace bohrkit
