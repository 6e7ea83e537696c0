#include "bohrkit/flags.hpp"

#include <array>

namespace bohrkit {

namespace {

constexpr std::array kAllFlags = {
    Flag::PolynomialOnly, Flag::EstimatedNorm, Flag::Generic,
    Flag::AtBoundary,     Flag::Constant,      Flag::Convention,
    Flag::Degenerate,     Flag::Indeterminate, Flag::NormUpperBound,
};

}  // namespace

std::string_view flag_name(Flag f) {
  switch (f) {
    case Flag::PolynomialOnly: return "POLYNOMIAL-ONLY";
    case Flag::EstimatedNorm: return "ESTIMATED-NORM";
    case Flag::Generic: return "GENERIC";
    case Flag::AtBoundary: return "AT-BOUNDARY";
    case Flag::Constant: return "CONSTANT";
    case Flag::Convention: return "CONVENTION";
    case Flag::Degenerate: return "DEGENERATE";
    case Flag::Indeterminate: return "INDETERMINATE";
    case Flag::NormUpperBound: return "NORM-UPPER-BOUND";
  }
  return "UNKNOWN";
}

std::vector<std::string> Flags::names() const {
  std::vector<std::string> out;
  for (Flag f : kAllFlags) {
    if (has(f)) out.emplace_back(flag_name(f));
  }
  return out;
}

}  // namespace bohrkit
