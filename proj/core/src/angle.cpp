#include "euclid/angle.hpp"

#include <cmath>

#include "euclid/error.hpp"

namespace euclid {

AngleMeasure dms_to_radians(int d, int m, double s) {
  if (m < 0 || m >= 60) throw DomainError("minutes must lie in [0, 60)");
  if (!(s >= 0.0 && s < 60.0)) throw DomainError("seconds must lie in [0, 60)");
  const double magnitude = std::abs(d) + m / 60.0 + s / 3600.0;
  return AngleMeasure::from_degrees(d < 0 ? -magnitude : magnitude);
}

Dms radians_to_dms(AngleMeasure a) {
  const double deg = a.degrees();
  Dms out;
  out.negative = deg < 0.0;
  // Work in microseconds of arc so the carry is exact.
  const double total_us = std::round(std::abs(deg) * 3600.0 * 1e6);
  const double whole_sec = std::floor(total_us / 1e6);
  const double frac_us = total_us - whole_sec * 1e6;
  const auto secs = static_cast<long long>(whole_sec);
  out.degrees = static_cast<int>(secs / 3600);
  out.minutes = static_cast<int>((secs / 60) % 60);
  out.seconds = static_cast<double>(secs % 60) + frac_us / 1e6;
  if (out.negative) out.degrees = -out.degrees;
  return out;
}

}  // namespace euclid
