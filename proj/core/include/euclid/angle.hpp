#pragma once

#include <numbers>

namespace euclid {

// Sexagesimal angle. `degrees` carries the sign; minutes and seconds are
// magnitudes with 0 <= minutes < 60 and 0 <= seconds < 60.
struct Dms {
  int degrees = 0;
  int minutes = 0;
  double seconds = 0.0;
  bool negative = false;
};

// Angle measure stored in radians.
class AngleMeasure {
 public:
  constexpr AngleMeasure() = default;
  constexpr explicit AngleMeasure(double radians) : radians_(radians) {}

  static constexpr AngleMeasure from_degrees(double deg) {
    return AngleMeasure(deg * std::numbers::pi / 180.0);
  }

  constexpr double radians() const { return radians_; }
  constexpr double degrees() const { return radians_ * 180.0 / std::numbers::pi; }

  friend constexpr auto operator<=>(AngleMeasure, AngleMeasure) = default;

 private:
  double radians_ = 0.0;
};

// Throws DomainError unless 0 <= m < 60 and 0 <= s < 60.
AngleMeasure dms_to_radians(int d, int m, double s);

// Inverse of dms_to_radians. Seconds are rounded to 1e-6 with carries
// propagated, so the result is always normalized.
Dms radians_to_dms(AngleMeasure a);

}  // namespace euclid
