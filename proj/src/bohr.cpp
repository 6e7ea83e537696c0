#include "bohrkit/bohr.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace bohrkit {

namespace {

constexpr double kOneThird = 1.0 / 3.0;
constexpr double kConstantTol = 1e-14;
constexpr std::size_t kMaxVerifyOrder = 4096;

bool is_constant(const TruncatedSeries& f) {
  for (std::size_t n = 1; n <= f.order(); ++n) {
    if (std::abs(f[n]) > kConstantTol) return false;
  }
  return true;
}

// Doubles within a few ulps of 1/3 are treated as 1/3 itself.
bool near_one_third(double r) {
  double lo = kOneThird;
  double hi = kOneThird;
  for (int i = 0; i < 4; ++i) {
    lo = std::nextafter(lo, 0.0);
    hi = std::nextafter(hi, 1.0);
  }
  return lo <= r && r <= hi;
}

enum class Side { Below, Above, Undecided };

Side classify(const Enclosure& m, double norm) {
  if (m.hi <= norm) return Side::Below;
  if (m.lo > norm) return Side::Above;
  return Side::Undecided;
}

}  // namespace

BohrRadiusResult bohr_radius(const SeriesSource& source,
                             const BohrRadiusOptions& options) {
  if (!(options.tol > 0.0)) throw std::invalid_argument("tol must be positive");
  BohrRadiusResult out;
  TruncatedSeries series = source(options.initial_order);

  if (options.norm) {
    out.norm_used = *options.norm;
  } else if (series.sup_norm_bound()) {
    out.norm_used = *series.sup_norm_bound();
    if (series.sup_norm_is_estimate()) out.flags.set(Flag::EstimatedNorm);
  } else {
    out.norm_used = sup_norm_upper_bound(series).value;
    out.flags.set(Flag::PolynomialOnly);
    out.flags.set(Flag::NormUpperBound);
  }
  out.order_used = series.order();

  if (is_constant(series)) {
    out.radius = {1.0, 1.0};
    out.flags.set(Flag::Constant);
    out.flags.set(Flag::Convention);
    return out;
  }

  const double norm = out.norm_used;
  bool order_capped = false;
  // Decides one radius, raising the order while the enclosure straddles norm.
  auto decide = [&](double r) {
    for (;;) {
      const MajorantEnclosure m = majorant_enclosure(series, r, TailModel::Tightest);
      const Side side = classify(m.value, norm);
      if (side != Side::Undecided || order_capped) return side;
      const std::size_t want = std::min(2 * series.order() + 2, options.max_order);
      if (want <= series.order()) {
        order_capped = true;
        return side;
      }
      TruncatedSeries next = source(want);
      if (next.order() <= series.order()) {
        order_capped = true;
        return side;
      }
      series = std::move(next);
      out.order_used = series.order();
    }
  };

  double lo = 0.0;
  double hi = 1.0;
  constexpr double kProbes[] = {0.5, 0.4, 0.6, 0.3, 0.7};
  while (hi - lo > options.tol && out.iterations < options.max_iterations) {
    ++out.iterations;
    bool moved = false;
    for (double frac : kProbes) {
      const double mid = lo + frac * (hi - lo);
      const Side side = decide(mid);
      if (side == Side::Below) {
        lo = mid;
      } else if (side == Side::Above) {
        hi = mid;
      } else {
        continue;
      }
      moved = true;
      break;
    }
    if (!moved) {
      out.flags.set(Flag::Indeterminate);
      break;
    }
  }

  if (hi == 1.0 && !out.flags.has(Flag::Indeterminate)) {
    out.radius = {1.0 - options.tol, 1.0};
    out.flags.set(Flag::AtBoundary);
  } else {
    out.radius = {lo, hi};
  }
  for (double r : {lo, hi}) {
    if (r > 0.0 && r < 1.0) {
      const MajorantEnclosure m = majorant_enclosure(series, r, TailModel::Tightest);
      const Side side = classify(m.value, norm);
      out.witnesses.push_back(
          {r, m.value, side == Side::Below ? "HOLDS"
                                           : side == Side::Above ? "VIOLATED"
                                                                 : "UNDECIDED"});
    }
  }
  return out;
}

BohrRadiusResult bohr_radius(const TruncatedSeries& f,
                             const BohrRadiusOptions& options) {
  BohrRadiusOptions fixed = options;
  fixed.initial_order = f.order();
  return bohr_radius([&f](std::size_t order) { return f.truncated(order); }, fixed);
}

double factor_bohr_radius_closed_form(double t) {
  if (!(t >= 0.0 && t <= 1.0)) throw std::invalid_argument("t must lie in [0,1]");
  return 1.0 / (1.0 + 2.0 * t);
}

double boundary_derivative(double r) {
  if (!(r >= 0.0 && r < 1.0)) {
    throw std::invalid_argument("radius must lie in [0,1)");
  }
  // 1 - 3r is computed with one rounding, so its sign is exact.
  return std::fma(-3.0, r, 1.0) / (1.0 - r);
}

SharpnessResult sharpness_search(double r) {
  if (!(r < 1.0)) throw std::invalid_argument("sharpness search needs r < 1");
  if (near_one_third(r)) {
    return {1.0, 1.0, {Flag::Degenerate}};
  }
  if (!(r > kOneThird)) {
    throw std::invalid_argument(
        "sharpness search needs r > 1/3; the inequality holds for r <= 1/3");
  }
  // Smaller root of 2r^2 t^2 - 4rt + (1 + r^2), written without cancellation:
  // t = (1 + r^2) / (r (2 + sqrt(2 (1 - r^2)))).
  const double disc = std::sqrt(2.0 * (1.0 - r) * (1.0 + r));
  SharpnessResult out;
  out.t_star = (1.0 + r * r) / (r * (2.0 + disc));
  out.m_star = factor_majorant_closed_form(out.t_star, r);
  return out;
}

std::vector<double> default_sharpness_radii() { return {0.34, 0.4, 0.5, 0.75, 0.9}; }

bool BohrReport::pass() const {
  auto ok = [](const auto& rows) {
    return std::all_of(rows.begin(), rows.end(), [](const auto& x) { return x.pass; });
  };
  return ok(inputs) && ok(sharpness) && ok(derivative_checks) && ok(properties) &&
         ok(expected_violations);
}

BohrReport verify_theorem(const std::vector<FunctionSpec>& inputs,
                          const std::vector<double>& r_grid,
                          const VerifyOptions& options) {
  for (double r : r_grid) {
    if (!(r >= 0.0 && r < 1.0)) throw std::invalid_argument("radius must lie in [0,1)");
  }
  std::size_t order = options.order;
  for (double r : r_grid) order = std::max(order, default_order(r));
  order = std::min(order, kMaxVerifyOrder);

  BohrReport report;
  std::vector<std::size_t> violations(r_grid.size(), 0);
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    BohrReport::InputResult row;
    row.index = i;
    try {
      row.label = describe(inputs[i]);
      const NormInfo norm = norm_of(inputs[i]);
      const TruncatedSeries series = expand(inputs[i], order);
      row.norm_used = norm.value;
      row.order = series.order();
      row.flags = norm.flags;
      for (std::size_t k = 0; k < r_grid.size(); ++k) {
        const double r = r_grid[k];
        const MajorantEnclosure m = majorant_enclosure(series, r, TailModel::Tightest);
        row.flags |= m.flags;
        Witness w{r, m.value, {}};
        if (r <= kOneThird) {
          const bool ok = m.value.hi <= norm.value + options.tolerance;
          w.status = ok ? "PASS" : "FAIL";
          row.pass = row.pass && ok;
        } else {
          const Side side = classify(m.value, norm.value);
          w.status = side == Side::Below ? "HOLDS"
                     : side == Side::Above ? "VIOLATED"
                                           : "UNDECIDED";
          if (side == Side::Above) ++violations[k];
        }
        row.witnesses.push_back(std::move(w));
      }
    } catch (const std::exception& e) {
      row.pass = false;
      row.error = e.what();
    }
    report.inputs.push_back(std::move(row));
  }

  if (options.expect_violation) {
    for (std::size_t k = 0; k < r_grid.size(); ++k) {
      if (r_grid[k] <= kOneThird) continue;
      report.expected_violations.push_back(
          {r_grid[k], violations[k], violations[k] > 0});
    }
  }

  for (double r : default_sharpness_radii()) {
    BohrReport::SharpnessRow row;
    row.r = r;
    row.result = sharpness_search(r);
    row.derivative_at_one = boundary_derivative(r);
    row.pass = row.result.t_star > 0.0 && row.result.t_star < 1.0 &&
               row.result.m_star > 1.0 && row.derivative_at_one < 0.0;
    report.sharpness.push_back(row);
  }

  const struct {
    double r;
    int sign;
  } derivative_cases[] = {{0.3, 1}, {kOneThird, 0}, {0.35, -1}};
  for (const auto& c : derivative_cases) {
    BohrReport::DerivativeCheck check;
    check.r = c.r;
    check.value = boundary_derivative(c.r);
    check.expected_sign = c.sign;
    if (c.sign == 0) {
      check.pass = std::abs(check.value) <= 1e-12;
    } else {
      check.pass = (check.value > 0.0 ? 1 : check.value < 0.0 ? -1 : 0) == c.sign;
    }
    report.derivative_checks.push_back(check);
  }
  return report;
}

}  // namespace bohrkit
