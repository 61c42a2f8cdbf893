#pragma once

#include <cmath>
#include <concepts>

#include "euclid/angle.hpp"
#include "euclid/interval.hpp"
#include "euclid/tolerance.hpp"

namespace euclid {

// A real number backend: plain double (best estimate) or Interval (certified
// enclosure). Formula templates in the library accept either.
template <typename T>
concept Scalar = std::same_as<T, double> || std::same_as<T, Interval>;

// Square root under the tolerance policy: a negative argument within the
// absolute band is treated as 0; anything more negative is a domain error.
double scalar_sqrt(double x, const Tolerance& tol = {});
Interval scalar_sqrt(Interval x, const Tolerance& tol = {});

inline double lower_bound(double x) { return x; }
inline double upper_bound(double x) { return x; }
inline double lower_bound(const Interval& x) { return x.lower(); }
inline double upper_bound(const Interval& x) { return x.upper(); }
inline double midpoint(double x) { return x; }
inline double midpoint(const Interval& x) { return x.mid(); }

}  // namespace euclid
