#include "bohrkit/cli/json_io.hpp"

#include <charconv>
#include <cmath>
#include <set>

namespace bohrkit::cli {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ParseError(path + ": " + what);
}

std::string at(const std::string& path, std::string_view key) {
  return path + "." + std::string(key);
}

std::string at(const std::string& path, std::size_t index) {
  return path + "[" + std::to_string(index) + "]";
}

double parse_real(const json& j, const std::string& path) {
  if (!j.is_number()) fail(path, "expected a number");
  const double x = j.get<double>();
  if (!std::isfinite(x)) fail(path, "expected a finite number");
  return x;
}

Complex parse_complex(const json& j, const std::string& path) {
  if (j.is_number()) return parse_real(j, path);
  if (!j.is_array() || j.size() != 2) fail(path, "expected [re, im] or a number");
  return {parse_real(j[0], at(path, 0)), parse_real(j[1], at(path, 1))};
}

std::vector<Complex> parse_complex_list(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  std::vector<Complex> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(parse_complex(j[i], at(path, i)));
  return out;
}

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

void reject_unknown(const json& j, const std::string& path,
                    std::initializer_list<std::string_view> known) {
  if (!j.is_object()) fail(path, "expected an object");
  for (const auto& item : j.items()) {
    bool found = false;
    for (std::string_view k : known) found = found || item.key() == k;
    if (!found) fail(at(path, item.key()), "unknown field");
  }
}

const json& require(const json& j, const std::string& path, std::string_view key) {
  const auto it = j.find(std::string(key));
  if (it == j.end()) fail(path, "missing field \"" + std::string(key) + "\"");
  return *it;
}

BlaschkeSpec parse_blaschke(const json& j, const std::string& path) {
  reject_unknown(j, path, {"type", "zeros", "front"});
  const std::vector<Complex> zeros =
      parse_complex_list(require(j, path, "zeros"), at(path, "zeros"));
  for (std::size_t k = 0; k < zeros.size(); ++k) {
    if (!(std::abs(zeros[k]) < 1.0)) {
      fail(at(at(path, "zeros"), k), "zero must lie in the open unit disk");
    }
  }
  Complex front = 1.0;
  if (j.contains("front")) front = parse_complex(j["front"], at(path, "front"));
  try {
    return BlaschkeSpec(zeros, front);
  } catch (const std::invalid_argument& e) {
    fail(at(path, "front"), e.what());
  }
}

ConvexCombo parse_combo(const json& j, const std::string& path) {
  reject_unknown(j, path, {"type", "terms"});
  const json& terms = require(j, path, "terms");
  const std::string terms_path = at(path, "terms");
  if (!terms.is_array() || terms.empty()) fail(terms_path, "expected a non-empty array");
  std::vector<ConvexCombo::Term> out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string term_path = at(terms_path, i);
    const json& term = terms[i];
    reject_unknown(term, term_path, {"w", "spec"});
    const double w = parse_real(require(term, term_path, "w"), at(term_path, "w"));
    if (w < 0.0) fail(at(term_path, "w"), "weight must be non-negative");
    const json& spec = require(term, term_path, "spec");
    const std::string spec_path = at(term_path, "spec");
    if (!spec.is_object() || spec.value("type", "") != "blaschke") {
      fail(spec_path, "combination terms must be blaschke specs");
    }
    out.push_back({w, parse_blaschke(spec, spec_path)});
  }
  try {
    return ConvexCombo(std::move(out));
  } catch (const std::invalid_argument& e) {
    fail(terms_path, e.what());
  }
}

std::uint64_t parse_count(const json& j, const std::string& path) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
    fail(path, "expected a non-negative integer");
  }
  return j.get<std::uint64_t>();
}

json flags_to_json(const Flags& flags) { return flags.names(); }

json witness_to_json(const Witness& w) {
  return {{"r", w.r}, {"lo", w.majorant.lo}, {"hi", w.majorant.hi}, {"status", w.status}};
}

}  // namespace

json series_to_json(const TruncatedSeries& f) {
  json coeffs = json::array();
  for (const Complex& a : f.coeffs()) coeffs.push_back(complex_to_json(a));
  json out = {{"coeffs", coeffs}, {"sup_norm_bound", nullptr}};
  if (f.sup_norm_bound()) out["sup_norm_bound"] = *f.sup_norm_bound();
  if (f.sup_norm_is_estimate()) out["sup_norm_is_estimate"] = true;
  return out;
}

TruncatedSeries series_from_json(const json& j) {
  reject_unknown(j, "$", {"coeffs", "sup_norm_bound", "sup_norm_is_estimate"});
  std::vector<Complex> coeffs = parse_complex_list(require(j, "$", "coeffs"), "$.coeffs");
  if (coeffs.empty()) fail("$.coeffs", "expected at least one coefficient");
  std::optional<double> bound;
  if (j.contains("sup_norm_bound") && !j["sup_norm_bound"].is_null()) {
    bound = parse_real(j["sup_norm_bound"], "$.sup_norm_bound");
  }
  const bool estimate = j.value("sup_norm_is_estimate", false);
  try {
    return TruncatedSeries(std::move(coeffs), bound, estimate);
  } catch (const std::invalid_argument& e) {
    fail("$", e.what());
  }
}

FunctionSpec parse_function_spec(const json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  const json& type = require(j, path, "type");
  if (!type.is_string()) fail(at(path, "type"), "expected a string");
  const std::string kind = type.get<std::string>();
  if (kind == "blaschke") return parse_blaschke(j, path);
  if (kind == "combo") return canonicalize(parse_combo(j, path));
  if (kind == "coefficients") {
    reject_unknown(j, path, {"type", "coeffs", "sup_norm_bound"});
    CoefficientSpec spec;
    spec.coeffs = parse_complex_list(require(j, path, "coeffs"), at(path, "coeffs"));
    if (spec.coeffs.empty()) fail(at(path, "coeffs"), "expected at least one coefficient");
    if (j.contains("sup_norm_bound") && !j["sup_norm_bound"].is_null()) {
      spec.sup_norm_bound = parse_real(j["sup_norm_bound"], at(path, "sup_norm_bound"));
    }
    try {
      (void)TruncatedSeries(spec.coeffs, spec.sup_norm_bound);
    } catch (const std::invalid_argument& e) {
      fail(path, e.what());
    }
    return spec;
  }
  fail(at(path, "type"), "unknown type \"" + kind + "\"");
}

json function_spec_to_json(const FunctionSpec& spec) {
  auto blaschke = [](const BlaschkeSpec& b) {
    json zeros = json::array();
    for (const Complex& z : b.zeros()) zeros.push_back(complex_to_json(z));
    return json{{"type", "blaschke"}, {"zeros", zeros}, {"front", complex_to_json(b.front())}};
  };
  if (const auto* c = std::get_if<CoefficientSpec>(&spec)) {
    json coeffs = json::array();
    for (const Complex& a : c->coeffs) coeffs.push_back(complex_to_json(a));
    json out = {{"type", "coefficients"}, {"coeffs", coeffs}, {"sup_norm_bound", nullptr}};
    if (c->sup_norm_bound) out["sup_norm_bound"] = *c->sup_norm_bound;
    return out;
  }
  if (const auto* b = std::get_if<BlaschkeSpec>(&spec)) return blaschke(*b);
  const auto& combo = std::get<ConvexCombo>(spec);
  json terms = json::array();
  for (const auto& t : combo.terms()) terms.push_back({{"w", t.weight}, {"spec", blaschke(t.spec)}});
  return {{"type", "combo"}, {"terms", terms}};
}

double parse_radius(std::string_view text) {
  const auto trim = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  const auto parse_double = [&](std::string_view s) {
    double x = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
    if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(x)) {
      throw ParseError("invalid radius \"" + std::string(text) + "\"");
    }
    return x;
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return parse_double(text);

  const auto parse_int = [&](std::string_view s) {
    long long v = 0;
    s = trim(s);
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
      throw ParseError("invalid radius \"" + std::string(text) + "\"");
    }
    return v;
  };
  const long long num = parse_int(text.substr(0, slash));
  const long long den = parse_int(text.substr(slash + 1));
  if (den <= 0 || num < 0) {
    throw ParseError("radius ratio needs num >= 0 and den > 0");
  }
  if (num > (1LL << 53) || den > (1LL << 53)) {
    throw ParseError("radius ratio terms must be below 2^53");
  }
  const double p = static_cast<double>(num);
  const double q = static_cast<double>(den);
  double x = p / q;
  // x*q - p is exact under fma; step down if x overshoots p/q.
  if (std::fma(x, q, -p) > 0.0) x = std::nextafter(x, 0.0);
  return x;
}

double parse_radius_json(const json& j, const std::string& path) {
  if (j.is_number()) return parse_real(j, path);
  if (!j.is_string()) fail(path, "expected a number or a string such as \"1/3\"");
  try {
    return parse_radius(j.get<std::string>());
  } catch (const ParseError& e) {
    fail(path, e.what());
  }
}

VerifyConfig parse_verify_config(const json& j) {
  reject_unknown(j, "$", {"inputs", "r_grid", "seed", "counts", "expect", "order"});
  VerifyConfig config = default_verify_config();
  if (j.contains("inputs")) {
    const json& inputs = j["inputs"];
    if (!inputs.is_array()) fail("$.inputs", "expected an array");
    config.inputs.clear();
    for (std::size_t i = 0; i < inputs.size(); ++i) {
      config.inputs.push_back(parse_function_spec(inputs[i], at("$.inputs", i)));
    }
  }
  if (j.contains("r_grid")) {
    const json& grid = j["r_grid"];
    if (!grid.is_array()) fail("$.r_grid", "expected an array");
    config.r_grid.clear();
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const double r = parse_radius_json(grid[i], at("$.r_grid", i));
      if (!(r >= 0.0 && r < 1.0)) fail(at("$.r_grid", i), "radius must lie in [0,1)");
      config.r_grid.push_back(r);
    }
  }
  if (j.contains("seed")) config.seed = parse_count(j["seed"], "$.seed");
  if (j.contains("order")) config.order = parse_count(j["order"], "$.order");
  if (j.contains("expect")) {
    const json& e = j["expect"];
    if (e == "violation") {
      config.expect_violation = true;
    } else if (e == "none") {
      config.expect_violation = false;
    } else {
      fail("$.expect", "expected \"violation\" or \"none\"");
    }
  }
  if (j.contains("counts")) {
    const json& c = j["counts"];
    reject_unknown(c, "$.counts", {"factors", "products", "combos", "properties", "lipschitz"});
    SuiteCounts& counts = config.counts;
    if (c.contains("factors")) counts.factors = parse_count(c["factors"], "$.counts.factors");
    if (c.contains("products")) counts.products = parse_count(c["products"], "$.counts.products");
    if (c.contains("combos")) counts.combos = parse_count(c["combos"], "$.counts.combos");
    if (c.contains("properties")) {
      counts.properties = parse_count(c["properties"], "$.counts.properties");
    }
    if (c.contains("lipschitz")) counts.lipschitz = parse_count(c["lipschitz"], "$.counts.lipschitz");
  }
  return config;
}

json enclosure_to_json(const Enclosure& e) { return {{"lo", e.lo}, {"hi", e.hi}}; }

json radius_to_json(const BohrRadiusResult& r) {
  json witnesses = json::array();
  for (const Witness& w : r.witnesses) witnesses.push_back(witness_to_json(w));
  return {{"lo", r.radius.lo},         {"hi", r.radius.hi},
          {"norm_used", r.norm_used},  {"order", r.order_used},
          {"iterations", r.iterations}, {"flags", flags_to_json(r.flags)},
          {"witnesses", witnesses}};
}

json report_to_json(const BohrReport& report) {
  json out = {{"verdict", report.pass() ? "PASS" : "FAIL"}};
  if (report.radius) out["radius"] = radius_to_json(*report.radius);

  json inputs = json::array();
  for (const auto& in : report.inputs) {
    json witnesses = json::array();
    for (const Witness& w : in.witnesses) witnesses.push_back(witness_to_json(w));
    json row = {{"index", in.index},         {"label", in.label},
                {"norm_used", in.norm_used}, {"order", in.order},
                {"flags", flags_to_json(in.flags)}, {"pass", in.pass},
                {"witnesses", witnesses}};
    if (!in.error.empty()) row["error"] = in.error;
    inputs.push_back(std::move(row));
  }
  out["inputs"] = std::move(inputs);

  json sharpness = json::array();
  for (const auto& s : report.sharpness) {
    sharpness.push_back({{"r", s.r},
                         {"t_star", s.result.t_star},
                         {"m_star", s.result.m_star},
                         {"derivative_at_one", s.derivative_at_one},
                         {"flags", flags_to_json(s.result.flags)},
                         {"pass", s.pass}});
  }
  out["sharpness"] = std::move(sharpness);

  json derivative = json::array();
  for (const auto& d : report.derivative_checks) {
    derivative.push_back({{"r", d.r},
                          {"value", d.value},
                          {"expected_sign", d.expected_sign},
                          {"pass", d.pass}});
  }
  out["derivative_checks"] = std::move(derivative);

  json properties = json::array();
  for (const auto& p : report.properties) {
    json row = {{"name", p.name},           {"r", p.r},
                {"instances", p.instances}, {"failures", p.failures},
                {"worst_gap", nullptr},     {"pass", p.pass}};
    if (std::isfinite(p.worst_gap)) row["worst_gap"] = p.worst_gap;
    properties.push_back(std::move(row));
  }
  out["properties"] = std::move(properties);

  json violations = json::array();
  for (const auto& v : report.expected_violations) {
    violations.push_back({{"r", v.r}, {"violations", v.violations}, {"pass", v.pass}});
  }
  out["expected_violations"] = std::move(violations);
  return out;
}

}  // namespace bohrkit::cli
