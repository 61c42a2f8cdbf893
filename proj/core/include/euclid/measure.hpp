#pragma once

#include <cstdint>
#include <vector>

namespace euclid {

// Simple continued fraction [a0; a1, a2, ...] of a ratio of lengths.
struct CFExpansion {
  std::vector<std::int64_t> quotients;
  bool terminated = false;
  // Last remainder, in the units of the inputs.
  double remainder_bound = 0.0;
};

struct Convergent {
  std::int64_t p = 0;
  std::int64_t q = 1;

  double value() const { return static_cast<double>(p) / static_cast<double>(q); }
  friend bool operator==(const Convergent&, const Convergent&) = default;
};

inline constexpr double kDefaultStopEps = 1e-12;

// Repeatedly lays the shorter length off along the longer one. Terminates when
// the remainder drops below stop_eps * max(a, b); otherwise stops after
// max_steps quotients with terminated = false. Throws DomainError unless
// a, b > 0 and max_steps >= 1.
CFExpansion euclid_on_lengths(double a, double b, int max_steps = 64,
                              double stop_eps = kDefaultStopEps);

// Expansion of a positive real x, i.e. of the pair (x, 1).
CFExpansion continued_fraction(double x, int max_steps = 64, double stop_eps = kDefaultStopEps);

// The first k convergents p/q. Throws DomainError if k exceeds the number of
// quotients or an entry overflows 64 bits.
std::vector<Convergent> convergents(const CFExpansion& cf, int k);
std::vector<Convergent> convergents(const CFExpansion& cf);

// Folds the quotients back into a value.
double evaluate(const CFExpansion& cf);

// Euclid's algorithm on the leg and base of the 36-degree isosceles triangle
// cut from an inscribed decagon (legs R, base a10), built with the
// construction machine. All quotients are 1. steps must lie in [1, 30].
CFExpansion golden_ratio_cf_demo(int steps);

}  // namespace euclid
