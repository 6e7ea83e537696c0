#include "bohrkit/random.hpp"

#include <cmath>
#include <numbers>

namespace bohrkit {

double Rng::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::size_t Rng::integer(std::size_t lo, std::size_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  // Modulo bias is irrelevant at these span sizes.
  return lo + static_cast<std::size_t>(engine_() % span);
}

Complex Rng::in_disk(double max_modulus) {
  const double radius = max_modulus * std::sqrt(uniform());
  return std::polar(radius, 2.0 * std::numbers::pi * uniform());
}

Complex Rng::unimodular() { return std::polar(1.0, 2.0 * std::numbers::pi * uniform()); }

BlaschkeSpec random_blaschke(Rng& rng, std::size_t max_degree, double max_modulus) {
  const std::size_t degree = rng.integer(0, max_degree);
  std::vector<Complex> zeros(degree);
  for (auto& z : zeros) z = rng.in_disk(max_modulus);
  return BlaschkeSpec(std::move(zeros), rng.unimodular());
}

ConvexCombo random_combo(Rng& rng, std::size_t max_terms, std::size_t max_degree,
                         double max_modulus) {
  const std::size_t count = rng.integer(1, max_terms);
  std::vector<ConvexCombo::Term> terms(count);
  double total = 0.0;
  for (auto& term : terms) {
    term.weight = rng.uniform(0.05, 1.0);
    total += term.weight;
    term.spec = random_blaschke(rng, max_degree, max_modulus);
  }
  for (auto& term : terms) term.weight /= total;
  return ConvexCombo(std::move(terms));
}

TruncatedSeries random_polynomial(Rng& rng, std::size_t max_order) {
  const std::size_t order = rng.integer(0, max_order);
  std::vector<Complex> coeffs(order + 1);
  double sum = 0.0;
  for (auto& a : coeffs) {
    a = {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
    sum += std::abs(a);
  }
  return TruncatedSeries(std::move(coeffs), sum);
}

}  // namespace bohrkit
