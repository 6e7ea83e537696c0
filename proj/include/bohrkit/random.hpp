#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "bohrkit/blaschke.hpp"
#include "bohrkit/series.hpp"

namespace bohrkit {

/// Seeded generator for the random suites. Draws are built from raw 64-bit
/// mt19937_64 output so sequences do not depend on the standard library's
/// distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1) with 53 random bits.
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Uniform integer in [lo, hi].
  std::size_t integer(std::size_t lo, std::size_t hi);
  /// Uniform on the disk |z| <= max_modulus (by area).
  Complex in_disk(double max_modulus);
  Complex unimodular();

 private:
  std::mt19937_64 engine_;
};

/// 0..max_degree zeros with |z_k| <= max_modulus and a random front factor.
BlaschkeSpec random_blaschke(Rng& rng, std::size_t max_degree, double max_modulus);

/// 1..max_terms products, weights normalised to sum 1.
ConvexCombo random_combo(Rng& rng, std::size_t max_terms, std::size_t max_degree,
                         double max_modulus);

/// Polynomial of order 0..max_order with coefficients in the square
/// [-1,1]^2; bound is sum |a_n|, which is certified for polynomials.
TruncatedSeries random_polynomial(Rng& rng, std::size_t max_order);

}  // namespace bohrkit
