#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace bohrkit {

/// Qualifiers attached to a computed result. A flag never changes a number;
/// it records the conditions under which that number is valid.
enum class Flag : std::uint32_t {
  PolynomialOnly = 1u << 0,  // no sup-norm bound: tail assumed zero
  EstimatedNorm = 1u << 1,   // sup-norm bound is a sample maximum, not certified
  Generic = 1u << 2,         // Lipschitz constant 1/(1-r) used instead of 3/2
  AtBoundary = 1u << 3,      // Bohr radius reached r = 1
  Constant = 1u << 4,        // constant input
  Convention = 1u << 5,      // value fixed by convention, not computed
  Degenerate = 1u << 6,      // sharpness search at r = 1/3
  Indeterminate = 1u << 7,   // enclosures straddled a threshold at the order cap
  NormUpperBound = 1u << 8,  // norm_used is an upper bound, not the exact norm
};

class Flags {
 public:
  Flags() = default;
  Flags(std::initializer_list<Flag> flags) {
    for (Flag f : flags) set(f);
  }

  void set(Flag f) { bits_ |= static_cast<std::uint32_t>(f); }
  bool has(Flag f) const { return (bits_ & static_cast<std::uint32_t>(f)) != 0; }
  bool empty() const { return bits_ == 0; }
  Flags& operator|=(Flags other) {
    bits_ |= other.bits_;
    return *this;
  }
  friend bool operator==(Flags, Flags) = default;

  /// Flag names in declaration order, e.g. {"POLYNOMIAL-ONLY", "GENERIC"}.
  std::vector<std::string> names() const;

 private:
  std::uint32_t bits_ = 0;
};

std::string_view flag_name(Flag f);

}  // namespace bohrkit
