#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "bohrkit/bohr.hpp"
#include "bohrkit/function_spec.hpp"
#include "bohrkit/random.hpp"

namespace bohrkit {

struct SuiteCounts {
  std::size_t factors = 12;      // single factors on a t-grid in [0, 0.999]
  std::size_t products = 200;    // random products, <= 6 zeros
  std::size_t combos = 200;      // random convex combinations, <= 4 terms
  std::size_t properties = 10000;  // per inequality and radius
  std::size_t lipschitz = 1000;    // factor pairs per radius
};

struct VerifyConfig {
  std::vector<FunctionSpec> inputs;
  std::vector<double> r_grid;
  std::uint64_t seed = 0;
  SuiteCounts counts;
  bool expect_violation = false;
  std::size_t order = 64;
};

/// The shipped suite: four hand-picked inputs, r_grid {0, 0.1, 0.2, 1/3},
/// seed 0 and the default counts.
VerifyConfig default_verify_config();

/// Runs verify_theorem on the explicit inputs plus the generated factor
/// grid, products and combinations, then the seeded property suites. The
/// same config always yields the same report.
BohrReport run_verification(const VerifyConfig& config);

/// Radii of the subadditivity, submultiplicativity and monotonicity suites.
std::vector<double> property_radii();
/// Radii of the Lipschitz suite.
std::vector<double> lipschitz_radii();

/// Random truncated series for the property suites: either a polynomial
/// (order <= 12, bound sum |a_n|) or a Blaschke product expansion (<= 4
/// zeros, |z_k| <= 0.9, order 24, bound 1).
TruncatedSeries random_property_series(Rng& rng);

BohrReport::PropertyResult subadditivity_suite(Rng& rng, double r, std::size_t count);
BohrReport::PropertyResult submultiplicativity_suite(Rng& rng, double r,
                                                     std::size_t count);
/// Pairs r1 = u r <= r2 = r.
BohrReport::PropertyResult monotonicity_suite(Rng& rng, double r, std::size_t count);
/// Random factor pairs phi_a, phi_b with |a|, |b| <= 0.9.
BohrReport::PropertyResult lipschitz_suite(Rng& rng, double r, std::size_t count);

/// Certified upper bound on ||phi_a - phi_b||_inf: grid bound of the
/// truncated difference at `order` plus both analytic factor tails.
double factor_difference_norm_bound(Complex a, Complex b, std::size_t order);

}  // namespace bohrkit
