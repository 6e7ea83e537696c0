#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bohrkit/flags.hpp"
#include "bohrkit/function_spec.hpp"
#include "bohrkit/majorant.hpp"
#include "bohrkit/series.hpp"

namespace bohrkit {

/// Supplies the expansion of one fixed function to a requested order. May
/// return a lower order when no more coefficients exist.
using SeriesSource = std::function<TruncatedSeries(std::size_t order)>;

struct Witness {
  double r = 0.0;
  Enclosure majorant;
  /// PASS/FAIL for r <= 1/3; VIOLATED/HOLDS/UNDECIDED beyond 1/3.
  std::string status;
};

struct BohrRadiusOptions {
  double tol = 1e-9;
  std::size_t max_iterations = 200;
  std::size_t initial_order = 32;
  std::size_t max_order = 1u << 14;
  /// Threshold compared against M(f, r); defaults to the series bound.
  std::optional<double> norm;
};

struct BohrRadiusResult {
  /// Contains sup{r in [0,1) : M(f, r) <= norm}.
  Enclosure radius;
  double norm_used = 0.0;
  std::size_t order_used = 0;
  std::size_t iterations = 0;
  /// Majorant enclosures at the final bracket ends (when inside (0,1)).
  std::vector<Witness> witnesses;
  Flags flags;
};

/// Bisection on M(f, r) - norm over [0, 1). A midpoint moves the lower end
/// only when the enclosure's hi is <= norm and the upper end only when its lo
/// is > norm. Straddling enclosures raise the expansion order; at the cap the
/// bisection tries off-centre points before giving up with INDETERMINATE.
///
/// Constant inputs (|a_n| <= 1e-14 for n >= 1) return [1, 1] flagged
/// CONSTANT and CONVENTION. If no violation is ever certified the result is
/// [1 - tol, 1] flagged AT-BOUNDARY. Throws std::invalid_argument if
/// tol <= 0.
BohrRadiusResult bohr_radius(const SeriesSource& source,
                             const BohrRadiusOptions& options = {});
BohrRadiusResult bohr_radius(const TruncatedSeries& f,
                             const BohrRadiusOptions& options = {});

/// Root of M(phi_t, r) = 1, namely 1/(1 + 2t), for t in [0, 1].
double factor_bohr_radius_closed_form(double t);

/// d/dt M(phi_t, r) at t = 1, which equals (1 - 3r)/(1 - r). The numerator
/// is formed with a single rounding so its sign is exact for every double r.
double boundary_derivative(double r);

struct SharpnessResult {
  double t_star = 1.0;
  double m_star = 1.0;
  Flags flags;
};

/// Interior maximiser of t -> M(phi_t, r) for 1/3 < r < 1, the smaller root
/// of 2 r^2 t^2 - 4 r t + 1 + r^2. At the double nearest 1/3 (or within a
/// few ulps of it) returns t_star = m_star = 1 flagged DEGENERATE. Throws
/// std::invalid_argument for r below that or r >= 1.
SharpnessResult sharpness_search(double r);

struct BohrReport {
  struct InputResult {
    std::size_t index = 0;
    std::string label;
    double norm_used = 0.0;
    std::size_t order = 0;
    std::vector<Witness> witnesses;
    Flags flags;
    bool pass = true;
    std::string error;
  };
  struct SharpnessRow {
    double r = 0.0;
    SharpnessResult result;
    double derivative_at_one = 0.0;
    bool pass = false;
  };
  struct DerivativeCheck {
    double r = 0.0;
    double value = 0.0;
    int expected_sign = 0;
    bool pass = false;
  };
  struct PropertyResult {
    std::string name;
    double r = 0.0;
    std::size_t instances = 0;
    std::size_t failures = 0;
    /// Smallest signed gap seen (rhs.hi - lhs.lo or its Lipschitz analogue).
    double worst_gap = 0.0;
    bool pass = true;
  };
  struct ViolationCheck {
    double r = 0.0;
    std::size_t violations = 0;
    bool pass = false;
  };

  std::optional<BohrRadiusResult> radius;
  std::vector<InputResult> inputs;
  std::vector<SharpnessRow> sharpness;
  std::vector<DerivativeCheck> derivative_checks;
  std::vector<PropertyResult> properties;
  /// Present only when violations beyond 1/3 were requested.
  std::vector<ViolationCheck> expected_violations;

  bool pass() const;
};

struct VerifyOptions {
  /// Minimum expansion order; raised for large radii in the grid.
  std::size_t order = 64;
  /// For each grid radius above 1/3, require some input to violate the
  /// inequality there.
  bool expect_violation = false;
  /// Tolerance on M(f, r).hi <= norm.
  double tolerance = 1e-9;
};

/// Checks M(f, r) <= ||f||_inf for every input and every grid radius <= 1/3,
/// records the status of radii beyond 1/3, and appends the sharpness and
/// boundary-derivative sections. Failures (including exceptions from a
/// single input) are recorded per input; the batch never aborts.
BohrReport verify_theorem(const std::vector<FunctionSpec>& inputs,
                          const std::vector<double>& r_grid,
                          const VerifyOptions& options = {});

/// Radii used by the sharpness section of verify_theorem.
std::vector<double> default_sharpness_radii();

}  // namespace bohrkit
