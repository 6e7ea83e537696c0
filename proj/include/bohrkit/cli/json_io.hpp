#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "bohrkit/bohr.hpp"
#include "bohrkit/function_spec.hpp"
#include "bohrkit/majorant.hpp"
#include "bohrkit/series.hpp"
#include "bohrkit/verification.hpp"

namespace bohrkit::cli {

/// Malformed input. The message starts with a JSON path such as
/// "$.terms[1].spec.zeros[0]: ".
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// {"coeffs": [[re, im], ...], "sup_norm_bound": number | null}
nlohmann::json series_to_json(const TruncatedSeries& f);
TruncatedSeries series_from_json(const nlohmann::json& j);

/// Accepted forms:
///   {"type": "coefficients", "coeffs": [...], "sup_norm_bound": x | null}
///   {"type": "blaschke", "zeros": [[re, im], ...], "front": [re, im]}
///   {"type": "combo", "terms": [{"w": 0.5, "spec": {...blaschke...}}, ...]}
/// Complex numbers are [re, im] pairs or plain reals. The result is
/// canonicalized.
FunctionSpec parse_function_spec(const nlohmann::json& j,
                                 const std::string& path = "$");
nlohmann::json function_spec_to_json(const FunctionSpec& spec);

/// A decimal ("0.25") or a ratio of integers ("1/3"). Ratios that are not
/// representable resolve to the nearest double below the exact value.
double parse_radius(std::string_view text);
/// Number or string, as above.
double parse_radius_json(const nlohmann::json& j, const std::string& path = "$");

/// {"inputs": [...], "r_grid": [...], "seed": n, "counts": {...},
///  "expect": "violation" | "none", "order": n}. Absent fields keep the
/// values of default_verify_config(); unknown fields are rejected.
VerifyConfig parse_verify_config(const nlohmann::json& j);

nlohmann::json enclosure_to_json(const Enclosure& e);
nlohmann::json radius_to_json(const BohrRadiusResult& r);
nlohmann::json report_to_json(const BohrReport& report);

}  // namespace bohrkit::cli
