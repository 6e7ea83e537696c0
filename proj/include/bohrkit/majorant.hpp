#pragma once

#include "bohrkit/flags.hpp"
#include "bohrkit/series.hpp"

namespace bohrkit {

/// Closed interval [lo, hi] certified to contain an exact real quantity.
struct Enclosure {
  double lo = 0.0;
  double hi = 0.0;

  Enclosure() = default;
  /// Throws std::invalid_argument unless lo <= hi and neither is NaN.
  Enclosure(double lo, double hi);

  double width() const { return hi - lo; }
  bool contains(double x) const { return lo <= x && x <= hi; }
};

Enclosure operator+(const Enclosure& a, const Enclosure& b);
/// Product of enclosures of non-negative quantities.
Enclosure operator*(const Enclosure& a, const Enclosure& b);
/// Scaling by a non-negative factor.
Enclosure operator*(double s, const Enclosure& a);

/// How the unknown tail sum_{n>N} |a_n| r^n is bounded.
enum class TailModel {
  /// C r^{N+1} / (1 - r), from |a_n| <= C.
  Cauchy,
  /// min of the above and sqrt(C^2 - sum_{n<=N} |a_n|^2) r^{N+1}/sqrt(1-r^2),
  /// from Cauchy-Schwarz and sum |a_n|^2 <= ||f||_2^2 <= C^2. The deficit is
  /// accumulated in double-double with an explicit rounding allowance.
  Tightest,
};

struct MajorantEnclosure {
  Enclosure value;
  /// POLYNOMIAL-ONLY when the series has no bound (hi == lo, valid only if f
  /// is exactly the stored polynomial), ESTIMATED-NORM when the bound is a
  /// sample maximum.
  Flags flags;
};

/// Encloses M(f, r) = sum |a_n| r^n. lo is the stored partial sum. Throws
/// std::invalid_argument unless 0 <= r < 1.
MajorantEnclosure majorant_enclosure(const TruncatedSeries& f, double r,
                                     TailModel tail = TailModel::Cauchy);

/// M(phi_a, r) = (t + (1 - 2t^2) r) / (1 - t r) with t = |a| in [0, 1].
double factor_majorant_closed_form(double t, double r);

/// Outcome of one inequality lhs <= rhs checked on enclosures.
struct InequalityCheck {
  bool pass = false;
  /// rhs.hi - lhs.lo; negative means a certified violation beyond tolerance.
  double gap = 0.0;
  Enclosure lhs;
  Enclosure rhs;
  Flags flags;
};

/// Tolerance added to every right-hand side.
inline constexpr double kCheckTolerance = 1e-12;

/// M(alpha f + beta g, r) <= |alpha| M(f, r) + |beta| M(g, r).
InequalityCheck check_subadditivity(const TruncatedSeries& f,
                                    const TruncatedSeries& g, Complex alpha,
                                    Complex beta, double r);

/// M(fg, r) <= M(f, r) M(g, r).
InequalityCheck check_submultiplicativity(const TruncatedSeries& f,
                                          const TruncatedSeries& g, double r);

/// |M(f, r) - M(g, r)| <= K ||f - g||_inf with K = 3/2 for r <= 1/3. For
/// 1/3 < r < 1 the generic K = 1/(1 - r) is used and GENERIC is flagged.
/// `norm_difference` must be a certified upper bound on ||f - g||_inf. The
/// rhs includes the widths of both majorant enclosures as slack.
InequalityCheck check_lipschitz(const TruncatedSeries& f, const TruncatedSeries& g,
                                double r, double norm_difference);

/// M(f, r1) <= M(f, r2) for 0 <= r1 <= r2 < 1.
InequalityCheck monotone_in_r(const TruncatedSeries& f, double r1, double r2);

}  // namespace bohrkit
