#include <cmath>
#include <cstdlib>
#include <numbers>
#include <random>

#include "doctest.h"
#include "euclid/error.hpp"
#include "euclid/scalar.hpp"

using namespace euclid;

TEST_CASE("dms to radians") {
  CHECK(dms_to_radians(20, 34, 12).degrees() == doctest::Approx(20.57).epsilon(1e-12));
  CHECK(dms_to_radians(90, 0, 0).radians() == doctest::Approx(std::numbers::pi / 2));
  CHECK(dms_to_radians(0, 0, 0).radians() == 0.0);
  CHECK_THROWS_AS(dms_to_radians(10, 60, 0), DomainError);
  CHECK_THROWS_AS(dms_to_radians(10, 0, 60), DomainError);
  CHECK_THROWS_AS(dms_to_radians(10, -1, 0), DomainError);
}

TEST_CASE("radians to dms") {
  const Dms one = radians_to_dms(AngleMeasure(1.0));
  CHECK(one.degrees == 57);
  CHECK(one.minutes == 17);
  CHECK(std::abs(one.seconds - 44.0) <= 1.0);

  const Dms half_turn = radians_to_dms(AngleMeasure(std::numbers::pi));
  CHECK(half_turn.degrees == 180);
  CHECK(half_turn.minutes == 0);
  CHECK(half_turn.seconds == doctest::Approx(0.0));
}

TEST_CASE("dms round trip") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> deg(0, 359), min(0, 59);
  std::uniform_real_distribution<double> sec(0.0, 59.999);
  for (int i = 0; i < 2000; ++i) {
    const int d = deg(rng), m = min(rng);
    const double s = sec(rng);
    const AngleMeasure a = dms_to_radians(d, m, s);
    const Dms back = radians_to_dms(a);
    const double total = back.degrees * 3600.0 + back.minutes * 60.0 + back.seconds;
    CHECK(std::abs(total - (d * 3600.0 + m * 60.0 + s)) <= 0.5);
    CHECK(back.minutes < 60);
    CHECK(back.seconds < 60.0);
  }
}

TEST_CASE("scalar sqrt") {
  CHECK(scalar_sqrt(25.0) == 5.0);
  CHECK(scalar_sqrt(2.0) * scalar_sqrt(2.0) == doctest::Approx(2.0));
  CHECK(scalar_sqrt(-1e-12) == 0.0);
  CHECK_THROWS_AS(scalar_sqrt(-1.0), DomainError);

  const Interval r = scalar_sqrt(Interval(2.0));
  CHECK(r.contains(std::sqrt(2.0L)));
  CHECK(r.width() < 1e-15);
  CHECK_THROWS_AS(scalar_sqrt(Interval(-2.0, -1.0)), DomainError);
}

TEST_CASE("tolerance") {
  const Tolerance t;
  CHECK(t.equal(1.0, 1.0 + 5e-10));
  CHECK_FALSE(t.equal(1.0, 1.0 + 5e-9));
  CHECK(t.equal(1e6, 1e6 * (1 + 5e-10)));
  CHECK(t.scaled(100.0).abs_eps() == doctest::Approx(1e-7));
  CHECK_THROWS_AS(Tolerance(0.0, 1e-9), DomainError);
  CHECK_THROWS_AS(Tolerance(1e-9, -1.0), DomainError);
}

TEST_CASE("tolerance from environment") {
  ::setenv("EUCLID_TOLERANCE", "1e-6", 1);
  CHECK(default_tolerance().abs_eps() == 1e-6);
  ::setenv("EUCLID_TOLERANCE", "1e-7,1e-5", 1);
  CHECK(default_tolerance().abs_eps() == 1e-7);
  CHECK(default_tolerance().rel_eps() == 1e-5);
  ::setenv("EUCLID_TOLERANCE", "nonsense", 1);
  CHECK_THROWS_AS(default_tolerance(), DomainError);
  ::unsetenv("EUCLID_TOLERANCE");
  CHECK(default_tolerance().abs_eps() == Tolerance::kDefaultAbs);
}

namespace {

// Random expression tree evaluated three ways: double, Interval and long
// double. The interval must contain the double result, and, being an
// enclosure of the exact value, must also contain the long double result up
// to that format's own rounding.
struct Eval {
  double d;
  Interval iv;
  long double ld;
};

Eval random_tree(std::mt19937_64& rng, int depth) {
  std::uniform_real_distribution<double> leaf(0.1, 10.0);
  std::uniform_int_distribution<int> op(0, 4);
  if (depth == 0) {
    const double v = leaf(rng);
    return {v, Interval(v), static_cast<long double>(v)};
  }
  const Eval a = random_tree(rng, depth - 1);
  const Eval b = random_tree(rng, depth - 1);
  switch (op(rng)) {
    case 0: return {a.d + b.d, a.iv + b.iv, a.ld + b.ld};
    case 1: return {a.d - b.d, a.iv - b.iv, a.ld - b.ld};
    case 2: return {a.d * b.d, a.iv * b.iv, a.ld * b.ld};
    case 3:
      if (b.iv.contains(0.0)) return {a.d + b.d, a.iv + b.iv, a.ld + b.ld};
      return {a.d / b.d, a.iv / b.iv, a.ld / b.ld};
    default: {
      const double x = std::abs(a.d) + 1.0;
      const Interval xi = Interval(std::abs(a.d)) + Interval(1.0);
      return {std::sqrt(x), sqrt(xi), std::sqrt(std::abs(a.d) + 1.0L)};
    }
  }
}

}  // namespace

TEST_CASE("interval backend contains the double and long double results") {
  std::mt19937_64 rng(20240917);
  int misses_double = 0, misses_long = 0;
  for (int i = 0; i < 100000; ++i) {
    const Eval e = random_tree(rng, 4);
    if (!e.iv.contains(e.d)) ++misses_double;
    // Allow the long double result its own few ulps of rounding.
    const long double slack = std::abs(e.ld) * 64 * std::numeric_limits<long double>::epsilon();
    if (!(e.iv.lower() - slack <= e.ld && e.ld <= e.iv.upper() + slack)) ++misses_long;
  }
  CHECK(misses_double == 0);
  CHECK(misses_long == 0);
}

TEST_CASE("interval division by zero interval") {
  CHECK_THROWS_AS(Interval(1.0) / Interval(-1.0, 1.0), DomainError);
  CHECK_THROWS_AS(Interval(2.0, 1.0), DomainError);
}
