#pragma once

#include <cmath>
#include <iosfwd>
#include <limits>

#include "euclid/error.hpp"

namespace euclid {

// Closed interval [lower, upper] of doubles with outward rounding.
//
// Each arithmetic result is computed in round-to-nearest and then widened by
// one ULP on each side. IEEE +, -, *, / and sqrt are correctly rounded, so the
// widened interval always contains the exact real result.
class Interval {
 public:
  constexpr Interval() = default;
  constexpr Interval(double value) : lo_(value), hi_(value) {}  // NOLINT: implicit by intent
  Interval(double lower, double upper) : lo_(lower), hi_(upper) {
    if (!(lower <= upper)) throw DomainError("interval bounds out of order");
  }

  double lower() const { return lo_; }
  double upper() const { return hi_; }
  double mid() const { return lo_ + 0.5 * (hi_ - lo_); }
  double width() const { return hi_ - lo_; }
  bool contains(double x) const { return lo_ <= x && x <= hi_; }
  bool contains(long double x) const {
    return static_cast<long double>(lo_) <= x && x <= static_cast<long double>(hi_);
  }

  friend Interval operator+(Interval a, Interval b) {
    return widened(a.lo_ + b.lo_, a.hi_ + b.hi_);
  }
  friend Interval operator-(Interval a, Interval b) {
    return widened(a.lo_ - b.hi_, a.hi_ - b.lo_);
  }
  friend Interval operator-(Interval a) { return Interval(-a.hi_, -a.lo_); }
  friend Interval operator*(Interval a, Interval b) {
    const double p1 = a.lo_ * b.lo_;
    const double p2 = a.lo_ * b.hi_;
    const double p3 = a.hi_ * b.lo_;
    const double p4 = a.hi_ * b.hi_;
    return widened(std::fmin(std::fmin(p1, p2), std::fmin(p3, p4)),
                   std::fmax(std::fmax(p1, p2), std::fmax(p3, p4)));
  }
  friend Interval operator/(Interval a, Interval b) {
    if (b.lo_ <= 0.0 && b.hi_ >= 0.0) {
      throw DomainError("interval division by an interval containing zero");
    }
    const double q1 = a.lo_ / b.lo_;
    const double q2 = a.lo_ / b.hi_;
    const double q3 = a.hi_ / b.lo_;
    const double q4 = a.hi_ / b.hi_;
    return widened(std::fmin(std::fmin(q1, q2), std::fmin(q3, q4)),
                   std::fmax(std::fmax(q1, q2), std::fmax(q3, q4)));
  }

  Interval& operator+=(Interval o) { return *this = *this + o; }
  Interval& operator-=(Interval o) { return *this = *this - o; }
  Interval& operator*=(Interval o) { return *this = *this * o; }
  Interval& operator/=(Interval o) { return *this = *this / o; }

  // Certainly-less / certainly-greater comparisons.
  friend bool operator<(Interval a, Interval b) { return a.hi_ < b.lo_; }
  friend bool operator>(Interval a, Interval b) { return a.lo_ > b.hi_; }
  friend bool operator==(Interval a, Interval b) = default;

  // sqrt with the lower bound clamped to 0 when it is negative by no more
  // than `clamp_eps`; upper < 0 or lower < -clamp_eps is a domain error.
  friend Interval sqrt(Interval x, double clamp_eps);
  friend Interval sqrt(Interval x) { return sqrt(x, 0.0); }

 private:
  static Interval widened(double lo, double hi) {
    Interval r;
    r.lo_ = std::nextafter(lo, -std::numeric_limits<double>::infinity());
    r.hi_ = std::nextafter(hi, std::numeric_limits<double>::infinity());
    return r;
  }

  double lo_ = 0.0;
  double hi_ = 0.0;
};

inline Interval sqrt(Interval x, double clamp_eps) {
  double lo = x.lo_;
  if (x.hi_ < 0.0 || lo < -clamp_eps) {
    throw DomainError("sqrt of a negative interval");
  }
  if (lo < 0.0) lo = 0.0;
  Interval r = Interval::widened(std::sqrt(lo), std::sqrt(x.hi_));
  if (r.lo_ < 0.0) r.lo_ = 0.0;
  return r;
}

std::ostream& operator<<(std::ostream& os, const Interval& x);

}  // namespace euclid
