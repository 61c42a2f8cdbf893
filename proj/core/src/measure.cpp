#include "euclid/measure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "euclid/error.hpp"
#include "euclid/machine.hpp"

namespace euclid {

CFExpansion euclid_on_lengths(double a, double b, int max_steps, double stop_eps) {
  if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b)) {
    throw DomainError("euclid_on_lengths: lengths must be finite and > 0");
  }
  if (max_steps < 1) throw DomainError("euclid_on_lengths: max_steps must be >= 1");
  if (!(stop_eps > 0.0) || !(stop_eps < 1.0)) {
    throw DomainError("euclid_on_lengths: stop_eps must lie in (0, 1)");
  }
  const double floor_eps = stop_eps * std::max(a, b);
  CFExpansion cf;
  double x = a;
  double y = b;
  for (int step = 0; step < max_steps; ++step) {
    const double ratio = x / y;
    if (ratio > 9.0e18) throw DomainError("euclid_on_lengths: quotient exceeds 64 bits");
    double q = std::floor(ratio);
    double r = std::fma(-q, y, x);
    if (r < 0.0) {
      q -= 1.0;
      r += y;
    }
    // x fits (almost) exactly q+1 times: the gap is representation error.
    if (y - r < floor_eps || ratio - std::floor(ratio) > 1.0 - stop_eps) {
      cf.quotients.push_back(static_cast<std::int64_t>(q) + 1);
      cf.terminated = true;
      cf.remainder_bound = std::abs(y - r);
      return cf;
    }
    cf.quotients.push_back(static_cast<std::int64_t>(q));
    cf.remainder_bound = r;
    if (r < floor_eps) {
      cf.terminated = true;
      return cf;
    }
    x = y;
    y = r;
  }
  return cf;
}

CFExpansion continued_fraction(double x, int max_steps, double stop_eps) {
  return euclid_on_lengths(x, 1.0, max_steps, stop_eps);
}

namespace {

std::int64_t checked_step(std::int64_t a, std::int64_t x1, std::int64_t x2) {
  std::int64_t prod = 0;
  std::int64_t sum = 0;
  if (__builtin_mul_overflow(a, x1, &prod) || __builtin_add_overflow(prod, x2, &sum)) {
    throw DomainError("convergents: numerator or denominator overflows 64 bits");
  }
  return sum;
}

}  // namespace

std::vector<Convergent> convergents(const CFExpansion& cf, int k) {
  if (k < 0 || static_cast<std::size_t>(k) > cf.quotients.size()) {
    throw DomainError("convergents: k = " + std::to_string(k) + " exceeds the " +
                      std::to_string(cf.quotients.size()) + " available quotients");
  }
  std::vector<Convergent> out;
  out.reserve(static_cast<std::size_t>(k));
  std::int64_t p2 = 0, p1 = 1, q2 = 1, q1 = 0;
  for (int i = 0; i < k; ++i) {
    const std::int64_t a = cf.quotients[static_cast<std::size_t>(i)];
    const std::int64_t p = checked_step(a, p1, p2);
    const std::int64_t q = checked_step(a, q1, q2);
    out.push_back({p, q});
    p2 = p1;
    p1 = p;
    q2 = q1;
    q1 = q;
  }
  return out;
}

std::vector<Convergent> convergents(const CFExpansion& cf) {
  return convergents(cf, static_cast<int>(cf.quotients.size()));
}

double evaluate(const CFExpansion& cf) {
  if (cf.quotients.empty()) return 0.0;
  double v = static_cast<double>(cf.quotients.back());
  for (auto it = cf.quotients.rbegin() + 1; it != cf.quotients.rend(); ++it) {
    v = static_cast<double>(*it) + 1.0 / v;
  }
  return v;
}

CFExpansion golden_ratio_cf_demo(int steps) {
  if (steps < 1 || steps > 30) throw DomainError("golden_ratio_cf_demo: steps must lie in [1, 30]");
  const Workspace ws = run_script(
      "point O = (0, 0)\n"
      "point A = (1, 0)\n"
      "circle c = circle(O, A)\n"
      "macro V = inscribe_regular(10, c)\n");
  const double leg = distance(ws.point("O"), ws.point("V1"));
  const double base = distance(ws.point("V1"), ws.point("V2"));
  // The quotients are all ones until round-off in the figure surfaces, well past 30 steps.
  return euclid_on_lengths(leg, base, steps, std::numeric_limits<double>::epsilon());
}

}  // namespace euclid
