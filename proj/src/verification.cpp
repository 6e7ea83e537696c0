#include "bohrkit/verification.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace bohrkit {

namespace {

using PropertyResult = BohrReport::PropertyResult;

void record(PropertyResult& out, const InequalityCheck& check) {
  ++out.instances;
  out.worst_gap = std::min(out.worst_gap, check.gap);
  if (!check.pass) {
    ++out.failures;
    out.pass = false;
  }
}

PropertyResult start(std::string name, double r) {
  PropertyResult out;
  out.name = std::move(name);
  out.r = r;
  out.worst_gap = std::numeric_limits<double>::infinity();
  return out;
}

Complex random_scalar(Rng& rng) { return {rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)}; }

}  // namespace

VerifyConfig default_verify_config() {
  VerifyConfig config;
  config.inputs = {
      BlaschkeSpec({0.5}),
      BlaschkeSpec({0.9}),
      BlaschkeSpec({0.5, 0.3}),
      ConvexCombo({{0.5, BlaschkeSpec({0.5})}, {0.5, BlaschkeSpec({0.7})}}),
  };
  config.r_grid = {0.0, 0.1, 0.2, 1.0 / 3.0};
  return config;
}

std::vector<double> property_radii() { return {0.1, 1.0 / 3.0, 0.9}; }
std::vector<double> lipschitz_radii() { return {0.1, 0.25, 1.0 / 3.0}; }

TruncatedSeries random_property_series(Rng& rng) {
  if (rng.uniform() < 0.5) return random_polynomial(rng, 12);
  return product_coefficients(random_blaschke(rng, 4, 0.9), 24);
}

PropertyResult subadditivity_suite(Rng& rng, double r, std::size_t count) {
  PropertyResult out = start("subadditivity", r);
  for (std::size_t i = 0; i < count; ++i) {
    const TruncatedSeries f = random_property_series(rng);
    const TruncatedSeries g = random_property_series(rng);
    const Complex alpha = random_scalar(rng);
    const Complex beta = random_scalar(rng);
    record(out, check_subadditivity(f, g, alpha, beta, r));
  }
  return out;
}

PropertyResult submultiplicativity_suite(Rng& rng, double r, std::size_t count) {
  PropertyResult out = start("submultiplicativity", r);
  for (std::size_t i = 0; i < count; ++i) {
    const TruncatedSeries f = random_property_series(rng);
    const TruncatedSeries g = random_property_series(rng);
    record(out, check_submultiplicativity(f, g, r));
  }
  return out;
}

PropertyResult monotonicity_suite(Rng& rng, double r, std::size_t count) {
  PropertyResult out = start("monotonicity", r);
  for (std::size_t i = 0; i < count; ++i) {
    const TruncatedSeries f = random_property_series(rng);
    const double r1 = rng.uniform() * r;
    record(out, monotone_in_r(f, r1, r));
  }
  return out;
}

double factor_difference_norm_bound(Complex a, Complex b, std::size_t order) {
  const TruncatedSeries diff = series_add(factor_coefficients(a, order),
                                          factor_coefficients(b, order), 1.0, -1.0);
  // The Bernstein factor stays below 1.2 with at least 16(N+1) points.
  const std::size_t grid = std::max<std::size_t>(4096, 16 * (order + 1));
  return sup_norm_upper_bound(diff, grid).value + factor_tail_bound(a, order) +
         factor_tail_bound(b, order);
}

PropertyResult lipschitz_suite(Rng& rng, double r, std::size_t count) {
  PropertyResult out = start("lipschitz", r);
  for (std::size_t i = 0; i < count; ++i) {
    const Complex a = rng.in_disk(0.9);
    const Complex b = rng.in_disk(0.9);
    const double rho = std::max(std::abs(a), std::abs(b));
    // Enough terms that the analytic tails stay below 1e-12.
    std::size_t order = 64;
    if (rho > 0.0) {
      order = std::max(order, static_cast<std::size_t>(std::ceil(std::log(1e-12) /
                                                                  std::log(rho))));
    }
    const double norm = factor_difference_norm_bound(a, b, order);
    record(out, check_lipschitz(factor_coefficients(a, order),
                                factor_coefficients(b, order), r, norm));
  }
  return out;
}

BohrReport run_verification(const VerifyConfig& config) {
  Rng rng(config.seed);
  std::vector<FunctionSpec> inputs = config.inputs;

  const std::size_t factors = config.counts.factors;
  for (std::size_t k = 0; k < factors; ++k) {
    const double t = factors == 1 ? 0.5
                                  : 0.999 * static_cast<double>(k) /
                                        static_cast<double>(factors - 1);
    inputs.emplace_back(BlaschkeSpec({t}));
  }
  for (std::size_t k = 0; k < config.counts.products; ++k) {
    inputs.emplace_back(random_blaschke(rng, 6, 0.9).canonical());
  }
  for (std::size_t k = 0; k < config.counts.combos; ++k) {
    inputs.emplace_back(canonicalize(random_combo(rng, 4, 6, 0.9)));
  }

  VerifyOptions options;
  options.order = config.order;
  options.expect_violation = config.expect_violation;
  BohrReport report = verify_theorem(inputs, config.r_grid, options);

  if (config.counts.properties > 0) {
    for (double r : property_radii()) {
      report.properties.push_back(subadditivity_suite(rng, r, config.counts.properties));
      report.properties.push_back(
          submultiplicativity_suite(rng, r, config.counts.properties));
      report.properties.push_back(monotonicity_suite(rng, r, config.counts.properties));
    }
  }
  if (config.counts.lipschitz > 0) {
    for (double r : lipschitz_radii()) {
      report.properties.push_back(lipschitz_suite(rng, r, config.counts.lipschitz));
    }
  }
  return report;
}

}  // namespace bohrkit
