#include "euclid/scalar.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <ostream>
#include <string>
#include <string_view>

namespace euclid {

double scalar_sqrt(double x, const Tolerance& tol) {
  if (std::isnan(x)) throw DomainError("sqrt of NaN");
  if (x < 0.0) {
    if (x < -tol.abs_eps()) throw DomainError("sqrt of a negative value");
    return 0.0;
  }
  return std::sqrt(x);
}

Interval scalar_sqrt(Interval x, const Tolerance& tol) {
  return sqrt(x, tol.abs_eps());
}

std::ostream& operator<<(std::ostream& os, const Interval& x) {
  return os << '[' << x.lower() << ", " << x.upper() << ']';
}

namespace {

double parse_positive(std::string_view s) {
  double v = 0.0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end) {
    throw DomainError("EUCLID_TOLERANCE: cannot parse '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

Tolerance default_tolerance() {
  const char* env = std::getenv("EUCLID_TOLERANCE");
  if (env == nullptr || *env == '\0') return Tolerance{};
  std::string_view spec(env);
  const auto comma = spec.find(',');
  if (comma == std::string_view::npos) {
    const double eps = parse_positive(spec);
    return Tolerance(eps, eps);
  }
  return Tolerance(parse_positive(spec.substr(0, comma)),
                   parse_positive(spec.substr(comma + 1)));
}

}  // namespace euclid
