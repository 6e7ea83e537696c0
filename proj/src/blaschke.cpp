#include "bohrkit/blaschke.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace bohrkit {

namespace {

constexpr double kUnimodularTol = 1e-12;
constexpr double kWeightSumTol = 1e-12;

// Upper bound on max_{|z|=R} |B(z)| for R < 1/max|z_k|.
double circle_bound(const BlaschkeSpec& spec, double radius) {
  double s = 1.0;
  for (const Complex& zk : spec.zeros()) {
    const double m = std::abs(zk);
    s *= (radius + m) / (1.0 - m * radius);
  }
  return s;
}

template <typename CircleBound>
AnalyticityBound pick_radius(double rho, std::size_t samples,
                             CircleBound&& bound_at) {
  constexpr std::array kExponents = {0.5, 0.75, 0.9, 0.95, 0.99};
  const double m = static_cast<double>(samples);
  AnalyticityBound best{2.0, bound_at(2.0)};
  double best_log = std::numeric_limits<double>::infinity();
  auto consider = [&](double radius) {
    const double s = bound_at(radius);
    if (!(s > 0.0) || !std::isfinite(s)) return;
    const double log_err = std::log(s) - m * std::log(radius);
    if (log_err < best_log) {
      best_log = log_err;
      best = {radius, s};
    }
  };
  if (rho <= 0.0) {
    // Polynomial times a constant: any radius works.
    for (double radius : {2.0, 4.0, 16.0}) consider(radius);
    return best;
  }
  for (double e : kExponents) consider(std::pow(rho, -e));
  return best;
}

}  // namespace

BlaschkeSpec::BlaschkeSpec(std::vector<Complex> zeros, Complex front)
    : zeros_(std::move(zeros)), front_(front) {
  for (std::size_t k = 0; k < zeros_.size(); ++k) {
    const Complex& z = zeros_[k];
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()) ||
        !(std::abs(z) < 1.0)) {
      throw std::invalid_argument("zero " + std::to_string(k) +
                                  " must lie in the open unit disk");
    }
  }
  if (!(std::abs(std::abs(front_) - 1.0) <= kUnimodularTol)) {
    throw std::invalid_argument("front factor must have modulus 1");
  }
}

double BlaschkeSpec::max_zero_modulus() const {
  double m = 0.0;
  for (const Complex& z : zeros_) m = std::max(m, std::abs(z));
  return m;
}

BlaschkeSpec BlaschkeSpec::canonical() const {
  std::vector<Complex> sorted = zeros_;
  std::sort(sorted.begin(), sorted.end(), [](Complex a, Complex b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return BlaschkeSpec(std::move(sorted), front_);
}

ConvexCombo::ConvexCombo(std::vector<Term> terms) : terms_(std::move(terms)) {
  if (terms_.empty()) {
    throw std::invalid_argument("convex combination needs at least one term");
  }
  double total = 0.0;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const double w = terms_[i].weight;
    if (!std::isfinite(w) || w < 0.0) {
      throw std::invalid_argument("weight " + std::to_string(i) +
                                  " must be finite and non-negative");
    }
    total += w;
  }
  if (!(std::abs(total - 1.0) <= kWeightSumTol)) {
    throw std::invalid_argument("weights must sum to 1");
  }
}

double ConvexCombo::max_zero_modulus() const {
  double m = 0.0;
  for (const Term& t : terms_) m = std::max(m, t.spec.max_zero_modulus());
  return m;
}

Complex evaluate(const BlaschkeSpec& spec, Complex z) {
  if (!(std::abs(z) <= 1.0 + 1e-12)) {
    throw std::invalid_argument("evaluation point must satisfy |z| <= 1");
  }
  Complex value = spec.front();
  for (const Complex& zk : spec.zeros()) {
    value *= (z - zk) / (1.0 - std::conj(zk) * z);
  }
  return value;
}

Complex evaluate(const ConvexCombo& combo, Complex z) {
  Complex value = 0.0;
  for (const auto& term : combo.terms()) {
    value += term.weight * evaluate(term.spec, z);
  }
  return value;
}

TruncatedSeries factor_coefficients(Complex a, std::size_t order) {
  if (!(std::abs(a) < 1.0)) {
    throw std::invalid_argument("factor zero must satisfy |a| < 1");
  }
  std::vector<Complex> coeffs(order + 1);
  coeffs[0] = -a;
  const Complex abar = std::conj(a);
  Complex term = 1.0 - std::norm(a);
  for (std::size_t n = 1; n <= order; ++n) {
    coeffs[n] = term;
    term *= abar;
  }
  return TruncatedSeries(std::move(coeffs), 1.0);
}

double factor_tail_bound(Complex a, std::size_t order) {
  const double m = std::abs(a);
  return std::pow(m, static_cast<double>(order)) * (1.0 + m);
}

TruncatedSeries product_coefficients(const BlaschkeSpec& spec, std::size_t order) {
  std::vector<Complex> unit(order + 1);
  unit[0] = spec.front();
  TruncatedSeries acc(std::move(unit), 1.0);
  for (const Complex& zk : spec.zeros()) {
    acc = series_mul(acc, factor_coefficients(zk, order));
  }
  return acc.with_sup_norm_bound(1.0);
}

TruncatedSeries combo_coefficients(const ConvexCombo& combo, std::size_t order) {
  std::vector<Complex> sum(order + 1);
  for (const auto& term : combo.terms()) {
    const TruncatedSeries part = product_coefficients(term.spec, order);
    for (std::size_t n = 0; n <= order; ++n) sum[n] += term.weight * part[n];
  }
  return TruncatedSeries(std::move(sum), 1.0);
}

AnalyticityBound analyticity_bound(const BlaschkeSpec& spec, std::size_t samples) {
  return pick_radius(spec.max_zero_modulus(), samples,
                     [&](double r) { return circle_bound(spec, r); });
}

AnalyticityBound analyticity_bound(const ConvexCombo& combo, std::size_t samples) {
  return pick_radius(combo.max_zero_modulus(), samples, [&](double r) {
    double s = 0.0;
    for (const auto& term : combo.terms()) s += term.weight * circle_bound(term.spec, r);
    return s;
  });
}

}  // namespace bohrkit
