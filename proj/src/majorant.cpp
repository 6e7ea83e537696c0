#include "bohrkit/majorant.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace bohrkit {

namespace {

constexpr double kUnitRoundoff = std::numeric_limits<double>::epsilon() / 2;

void require_radius(double r) {
  if (!(r >= 0.0 && r < 1.0)) {
    throw std::invalid_argument("radius must lie in [0,1)");
  }
}

// Error-free transforms for the Parseval deficit.
struct DoubleDouble {
  double hi = 0.0;
  double lo = 0.0;
};

DoubleDouble two_sum(double a, double b) {
  const double s = a + b;
  const double bb = s - a;
  return {s, (a - (s - bb)) + (b - bb)};
}

DoubleDouble add(DoubleDouble x, double y) {
  DoubleDouble s = two_sum(x.hi, y);
  s.lo += x.lo;
  return two_sum(s.hi, s.lo);
}

DoubleDouble add(DoubleDouble x, DoubleDouble y) {
  DoubleDouble s = add(x, y.hi);
  return add(s, y.lo);
}

DoubleDouble square(double a) {
  const double p = a * a;
  return {p, std::fma(a, a, -p)};
}

// sqrt(C^2 - sum |a_n|^2) r^{N+1} / sqrt(1 - r^2), rounded upward loosely.
double parseval_tail(const TruncatedSeries& f, double bound, double r) {
  DoubleDouble energy;
  for (const Complex& a : f.coeffs()) {
    energy = add(energy, square(a.real()));
    energy = add(energy, square(a.imag()));
  }
  const DoubleDouble c2 = square(bound);
  const DoubleDouble deficit = add(c2, DoubleDouble{-energy.hi, -energy.lo});
  const double terms = 2.0 * static_cast<double>(f.order() + 1) + 4.0;
  const double slack =
      4.0 * terms * kUnitRoundoff * kUnitRoundoff * (c2.hi + energy.hi) +
      std::numeric_limits<double>::denorm_min();
  const double d = std::max(0.0, deficit.hi + deficit.lo) + slack;
  const double power = std::pow(r, static_cast<double>(f.order() + 1));
  return std::sqrt(d) * power / std::sqrt((1.0 - r) * (1.0 + r)) *
         (1.0 + 16.0 * kUnitRoundoff);
}

}  // namespace

Enclosure::Enclosure(double lo_, double hi_) : lo(lo_), hi(hi_) {
  if (std::isnan(lo) || std::isnan(hi) || lo > hi) {
    throw std::invalid_argument("enclosure requires lo <= hi");
  }
}

Enclosure operator+(const Enclosure& a, const Enclosure& b) {
  return {a.lo + b.lo, a.hi + b.hi};
}

Enclosure operator*(const Enclosure& a, const Enclosure& b) {
  return {a.lo * b.lo, a.hi * b.hi};
}

Enclosure operator*(double s, const Enclosure& a) { return {s * a.lo, s * a.hi}; }

MajorantEnclosure majorant_enclosure(const TruncatedSeries& f, double r,
                                     TailModel tail) {
  require_radius(r);
  double lo = 0.0;
  double power = 1.0;
  for (const Complex& a : f.coeffs()) {
    lo += std::abs(a) * power;
    power *= r;
  }
  MajorantEnclosure out;
  if (!f.sup_norm_bound()) {
    out.value = {lo, lo};
    out.flags.set(Flag::PolynomialOnly);
    return out;
  }
  const double c = *f.sup_norm_bound();
  double tail_bound = c * std::pow(r, static_cast<double>(f.order() + 1)) / (1.0 - r);
  if (tail == TailModel::Tightest) {
    tail_bound = std::min(tail_bound, parseval_tail(f, c, r));
  }
  out.value = {lo, lo + tail_bound};
  if (f.sup_norm_is_estimate()) out.flags.set(Flag::EstimatedNorm);
  return out;
}

double factor_majorant_closed_form(double t, double r) {
  if (!(t >= 0.0 && t <= 1.0)) throw std::invalid_argument("t must lie in [0,1]");
  require_radius(r);
  if (!(t * r < 1.0)) throw std::invalid_argument("t*r must be < 1");
  return (t + (1.0 - 2.0 * t * t) * r) / (1.0 - t * r);
}

namespace {

InequalityCheck finish(Enclosure lhs, Enclosure rhs, Flags flags) {
  InequalityCheck out;
  out.lhs = lhs;
  out.rhs = rhs;
  out.gap = rhs.hi - lhs.lo;
  out.pass = lhs.lo <= rhs.hi + kCheckTolerance;
  out.flags = flags;
  return out;
}

}  // namespace

InequalityCheck check_subadditivity(const TruncatedSeries& f,
                                    const TruncatedSeries& g, Complex alpha,
                                    Complex beta, double r) {
  const std::size_t order = std::min(f.order(), g.order());
  const TruncatedSeries ft = f.truncated(order);
  const TruncatedSeries gt = g.truncated(order);
  const MajorantEnclosure lhs = majorant_enclosure(series_add(ft, gt, alpha, beta), r);
  const MajorantEnclosure mf = majorant_enclosure(ft, r);
  const MajorantEnclosure mg = majorant_enclosure(gt, r);
  Flags flags = lhs.flags;
  flags |= mf.flags;
  flags |= mg.flags;
  return finish(lhs.value,
                std::abs(alpha) * mf.value + std::abs(beta) * mg.value, flags);
}

InequalityCheck check_submultiplicativity(const TruncatedSeries& f,
                                          const TruncatedSeries& g, double r) {
  const std::size_t order = std::min(f.order(), g.order());
  const TruncatedSeries ft = f.truncated(order);
  const TruncatedSeries gt = g.truncated(order);
  const MajorantEnclosure lhs = majorant_enclosure(series_mul(ft, gt), r);
  const MajorantEnclosure mf = majorant_enclosure(ft, r);
  const MajorantEnclosure mg = majorant_enclosure(gt, r);
  Flags flags = lhs.flags;
  flags |= mf.flags;
  flags |= mg.flags;
  return finish(lhs.value, mf.value * mg.value, flags);
}

InequalityCheck check_lipschitz(const TruncatedSeries& f, const TruncatedSeries& g,
                                double r, double norm_difference) {
  require_radius(r);
  if (!(norm_difference >= 0.0)) {
    throw std::invalid_argument("norm bound must be non-negative");
  }
  Flags flags;
  double constant = 1.5;
  if (r > 1.0 / 3.0) {
    constant = 1.0 / (1.0 - r);
    flags.set(Flag::Generic);
  }
  const MajorantEnclosure mf = majorant_enclosure(f, r);
  const MajorantEnclosure mg = majorant_enclosure(g, r);
  flags |= mf.flags;
  flags |= mg.flags;
  const Enclosure& a = mf.value;
  const Enclosure& b = mg.value;
  const double upper = std::max(a.hi - b.lo, b.hi - a.lo);
  const double lower = std::max({0.0, a.lo - b.hi, b.lo - a.hi});
  const double rhs = constant * norm_difference + a.width() + b.width();
  // The outer (upper) end of |M(f,r) - M(g,r)| is what gets compared.
  InequalityCheck out = finish({lower, upper}, {rhs, rhs}, flags);
  out.gap = rhs - upper;
  out.pass = upper <= rhs + kCheckTolerance;
  return out;
}

InequalityCheck monotone_in_r(const TruncatedSeries& f, double r1, double r2) {
  require_radius(r1);
  require_radius(r2);
  if (r1 > r2) throw std::invalid_argument("monotone_in_r needs r1 <= r2");
  const MajorantEnclosure m1 = majorant_enclosure(f, r1);
  const MajorantEnclosure m2 = majorant_enclosure(f, r2);
  Flags flags = m1.flags;
  flags |= m2.flags;
  return finish(m1.value, m2.value, flags);
}

}  // namespace bohrkit
