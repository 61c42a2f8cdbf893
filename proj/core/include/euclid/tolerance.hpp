#pragma once

#include <algorithm>
#include <cmath>

#include "euclid/error.hpp"

namespace euclid {

// Absolute/relative equality band. Both components must be strictly positive.
class Tolerance {
 public:
  static constexpr double kDefaultAbs = 1e-9;
  static constexpr double kDefaultRel = 1e-9;

  constexpr Tolerance() = default;
  Tolerance(double abs_eps, double rel_eps) : abs_(abs_eps), rel_(rel_eps) {
    if (!(abs_eps > 0.0) || !(rel_eps > 0.0) || !std::isfinite(abs_eps) ||
        !std::isfinite(rel_eps)) {
      throw DomainError("tolerance components must be finite and > 0");
    }
  }

  constexpr double abs_eps() const { return abs_; }
  constexpr double rel_eps() const { return rel_; }

  // Band around a magnitude: max(abs, rel * |scale|).
  double band(double scale) const { return std::max(abs_, rel_ * std::abs(scale)); }

  bool equal(double a, double b) const {
    return std::abs(a - b) <= band(std::max(std::abs(a), std::abs(b)));
  }
  bool is_zero(double a) const { return std::abs(a) <= abs_; }

  // Same policy expressed in a length unit other than 1.
  Tolerance scaled(double unit) const {
    return Tolerance(abs_ * std::abs(unit), rel_);
  }

 private:
  double abs_ = kDefaultAbs;
  double rel_ = kDefaultRel;
};

// Default tolerance, overridable through EUCLID_TOLERANCE ("1e-8" or
// "abs,rel"). Malformed values raise DomainError.
Tolerance default_tolerance();

}  // namespace euclid
