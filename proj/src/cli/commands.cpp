#include "bohrkit/cli/commands.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "bohrkit/bohr.hpp"
#include "bohrkit/cli/json_io.hpp"
#include "bohrkit/function_spec.hpp"
#include "bohrkit/majorant.hpp"
#include "bohrkit/verification.hpp"

namespace bohrkit::cli {

namespace {

using nlohmann::json;

constexpr std::size_t kMaxOrder = 4096;

// Round-trip precision so printed numbers equal the library's doubles.
std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) out += (out.empty() ? "" : ",") + s;
  return out.empty() ? "-" : out;
}

json read_json_argument(const std::string& arg) {
  if (!arg.empty() && arg.front() == '{') return json::parse(arg);
  std::ifstream in(arg);
  if (!in) throw ParseError("cannot open \"" + arg + "\"");
  return json::parse(in);
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path);
  if (!f) throw ParseError("cannot write \"" + path + "\"");
  f << content;
}

void write_json(const std::optional<std::string>& path, const json& j) {
  if (path) write_file(*path, j.dump(2) + "\n");
}

struct Options {
  std::string spec;
  std::optional<std::size_t> order;
  std::string radius;
  double tol = 1e-9;
  std::vector<std::string> radii;
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> json_path;
  std::optional<std::string> csv_path;
};

int cmd_expand(const Options& opt, std::ostream& out, std::ostream& err) {
  const FunctionSpec spec = parse_function_spec(read_json_argument(opt.spec));
  std::size_t order = opt.order.value_or(default_order(1.0 / 3.0));
  if (const auto cap = max_order(spec); cap && order > *cap) {
    err << "warning: order " << order << " clamped to " << *cap
        << " (coefficient list is shorter)\n";
    order = *cap;
  }
  const TruncatedSeries series = expand(spec, order);
  const json j = series_to_json(series);
  out << "order " << series.order() << "\n";
  for (std::size_t n = 0; n <= series.order(); ++n) {
    out << "a[" << n << "] = (" << num(series[n].real()) << ", " << num(series[n].imag())
        << ")\n";
  }
  out << "sup_norm_bound "
      << (series.sup_norm_bound() ? num(*series.sup_norm_bound()) : std::string("null"))
      << "\n";
  write_json(opt.json_path, j);
  return kExitPass;
}

int cmd_majorant(const Options& opt, std::ostream& out, std::ostream&) {
  const double r = parse_radius(opt.radius);
  if (!(r >= 0.0 && r < 1.0)) throw ParseError("radius must lie in [0,1)");
  const FunctionSpec spec = parse_function_spec(read_json_argument(opt.spec));
  std::size_t order = opt.order.value_or(
      std::min(kMaxOrder, default_order(r, std::max(1.0, norm_of(spec).value))));
  if (const auto cap = max_order(spec)) order = std::min(order, *cap);
  const MajorantEnclosure m = majorant_enclosure(expand(spec, order), r);
  out << "M(f, " << num(r) << ") in [" << num(m.value.lo) << ", " << num(m.value.hi)
      << "]\n";
  out << "order " << order << "\n";
  out << "flags " << join(m.flags.names()) << "\n";
  write_json(opt.json_path, {{"r", r},
                             {"order", order},
                             {"lo", m.value.lo},
                             {"hi", m.value.hi},
                             {"flags", m.flags.names()}});
  return kExitPass;
}

int cmd_bohr_radius(const Options& opt, std::ostream& out, std::ostream&) {
  if (!(opt.tol > 0.0)) throw ParseError("--tol must be positive");
  const FunctionSpec spec = parse_function_spec(read_json_argument(opt.spec));
  const NormInfo norm = norm_of(spec);
  BohrRadiusOptions options;
  options.tol = opt.tol;
  options.norm = norm.value;
  if (const auto cap = max_order(spec)) {
    options.initial_order = *cap;
    options.max_order = *cap;
  }
  BohrReport report;
  report.radius = bohr_radius([&](std::size_t n) { return expand(spec, n); }, options);
  report.radius->flags |= norm.flags;
  const BohrRadiusResult& r = *report.radius;
  out << "bohr radius in [" << num(r.radius.lo) << ", " << num(r.radius.hi) << "]\n";
  out << "norm_used " << num(r.norm_used) << "\n";
  out << "order " << r.order_used << ", iterations " << r.iterations << "\n";
  out << "flags " << join(r.flags.names()) << "\n";
  write_json(opt.json_path, report_to_json(report));
  return r.flags.has(Flag::Indeterminate) ? kExitMathFail : kExitPass;
}

int cmd_sharpness(const Options& opt, std::ostream& out, std::ostream&) {
  std::vector<double> radii;
  for (const std::string& text : opt.radii) {
    const double r = parse_radius(text);
    if (!(r < 1.0)) throw ParseError("radius must lie in [0,1)");
    radii.push_back(r);
  }
  BohrReport report;
  for (double r : radii) {
    BohrReport::SharpnessRow row;
    row.r = r;
    try {
      row.result = sharpness_search(r);
    } catch (const std::invalid_argument&) {
      throw ParseError("sharpness needs r > 1/3 (got " + num(r) +
                       "); for r <= 1/3 the inequality itself holds");
    }
    row.derivative_at_one = boundary_derivative(r);
    row.pass = row.result.flags.has(Flag::Degenerate) ||
               (row.result.t_star > 0.0 && row.result.t_star < 1.0 &&
                row.result.m_star > 1.0);
    report.sharpness.push_back(row);
  }
  std::ostringstream csv;
  csv << "r,t_star,m_star,derivative_at_one,flags\n";
  out << "r t_star m_star derivative_at_one flags\n";
  for (const auto& row : report.sharpness) {
    const std::string line = num(row.r) + " " + num(row.result.t_star) + " " +
                             num(row.result.m_star) + " " + num(row.derivative_at_one) +
                             " " + join(row.result.flags.names());
    out << line << "\n";
    csv << num(row.r) << "," << num(row.result.t_star) << "," << num(row.result.m_star)
        << "," << num(row.derivative_at_one) << ","
        << (row.result.flags.empty() ? "" : join(row.result.flags.names())) << "\n";
  }
  if (opt.csv_path) write_file(*opt.csv_path, csv.str());
  write_json(opt.json_path, report_to_json(report));
  return report.pass() ? kExitPass : kExitMathFail;
}

void print_report(const BohrReport& report, std::ostream& out) {
  std::size_t failed = 0;
  for (const auto& in : report.inputs) {
    if (in.pass) continue;
    ++failed;
    out << "FAIL input " << in.index << " " << in.label;
    if (!in.error.empty()) out << ": " << in.error;
    out << "\n";
    for (const Witness& w : in.witnesses) {
      out << "  r=" << num(w.r) << " M in [" << num(w.majorant.lo) << ", "
          << num(w.majorant.hi) << "] norm " << num(in.norm_used) << " " << w.status
          << "\n";
    }
  }
  out << "inputs: " << report.inputs.size() << " checked, " << failed << " failed\n";
  for (const auto& v : report.expected_violations) {
    out << "expected violation at r=" << num(v.r) << ": " << v.violations << " found "
        << (v.pass ? "PASS" : "FAIL") << "\n";
  }
  out << "sharpness:\n";
  for (const auto& s : report.sharpness) {
    out << "  r=" << num(s.r) << " t_star=" << num(s.result.t_star)
        << " m_star=" << num(s.result.m_star) << " derivative=" << num(s.derivative_at_one)
        << " " << (s.pass ? "PASS" : "FAIL") << "\n";
  }
  out << "boundary derivative signs:\n";
  for (const auto& d : report.derivative_checks) {
    out << "  r=" << num(d.r) << " value=" << num(d.value) << " expected "
        << (d.expected_sign > 0 ? "+" : d.expected_sign < 0 ? "-" : "0") << " "
        << (d.pass ? "PASS" : "FAIL") << "\n";
  }
  if (!report.properties.empty()) out << "properties:\n";
  for (const auto& p : report.properties) {
    out << "  " << p.name << " r=" << num(p.r) << " " << p.instances << " instances, "
        << p.failures << " failures, worst gap " << num(p.worst_gap) << " "
        << (p.pass ? "PASS" : "FAIL") << "\n";
  }
  out << "verdict: " << (report.pass() ? "PASS" : "FAIL") << "\n";
}

int cmd_verify(const Options& opt, std::ostream& out, std::ostream&) {
  VerifyConfig config = opt.config.empty() ? default_verify_config()
                                           : parse_verify_config(read_json_argument(opt.config));
  if (opt.seed) config.seed = *opt.seed;
  const BohrReport report = run_verification(config);
  print_report(report, out);
  write_json(opt.json_path, report_to_json(report));
  return report.pass() ? kExitPass : kExitMathFail;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical verification of Bohr's inequality", "bohrkit"};
  app.require_subcommand(1);
  Options opt;

  auto* expand_cmd = app.add_subcommand("expand", "Print the Taylor coefficients of a function");
  expand_cmd->add_option("spec", opt.spec, "Function spec: inline JSON or a file path")->required();
  expand_cmd->add_option("--order", opt.order, "Truncation order (default 26)");
  expand_cmd->add_option("--json", opt.json_path, "Write the series as JSON");

  auto* majorant_cmd = app.add_subcommand("majorant", "Enclose M(f, r) = sum |a_n| r^n");
  majorant_cmd->add_option("spec", opt.spec, "Function spec: inline JSON or a file path")->required();
  majorant_cmd->add_option("--radius", opt.radius, "Radius in [0,1), e.g. 0.25 or 1/3")->required();
  majorant_cmd->add_option("--order", opt.order, "Truncation order (default: tail < 1e-12)");
  majorant_cmd->add_option("--json", opt.json_path, "Write the enclosure as JSON");

  auto* radius_cmd = app.add_subcommand("bohr-radius", "Bisect for the Bohr radius of a function");
  radius_cmd->add_option("spec", opt.spec, "Function spec: inline JSON or a file path")->required();
  radius_cmd->add_option("--tol", opt.tol, "Width of the returned interval (default 1e-9)");
  radius_cmd->add_option("--json", opt.json_path, "Write the report as JSON");

  auto* sharp_cmd = app.add_subcommand("sharpness", "Maximise M(phi_t, r) over t for r > 1/3");
  sharp_cmd->add_option("radii", opt.radii, "Radii in (1/3, 1); \"1/3\" gives the degenerate row")
      ->required();
  sharp_cmd->add_option("--csv", opt.csv_path, "Write the table as CSV");
  sharp_cmd->add_option("--json", opt.json_path, "Write the report as JSON");

  auto* verify_cmd = app.add_subcommand("verify", "Run the verification suite");
  verify_cmd->add_option("config", opt.config, "Config JSON (inline or path); default suite if absent");
  verify_cmd->add_option("--seed", opt.seed, "Seed for the random suites (default 0)");
  verify_cmd->add_option("--json", opt.json_path, "Write the report as JSON");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*expand_cmd) return cmd_expand(opt, out, err);
    if (*majorant_cmd) return cmd_majorant(opt, out, err);
    if (*radius_cmd) return cmd_bohr_radius(opt, out, err);
    if (*sharp_cmd) return cmd_sharpness(opt, out, err);
    if (*verify_cmd) return cmd_verify(opt, out, err);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const json::exception& e) {
    err << "error: malformed JSON: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace bohrkit::cli
