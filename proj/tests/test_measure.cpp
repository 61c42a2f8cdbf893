#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "euclid/error.hpp"
#include "euclid/measure.hpp"

using namespace euclid;

TEST_CASE("euclid on integer lengths") {
  const CFExpansion cf = euclid_on_lengths(31, 9);
  CHECK(cf.quotients == std::vector<std::int64_t>{3, 2, 4});
  CHECK(cf.terminated);
  CHECK(convergents(cf).back() == Convergent{31, 9});

  const CFExpansion same = euclid_on_lengths(2.5, 2.5);
  CHECK(same.quotients == std::vector<std::int64_t>{1});
  CHECK(same.terminated);

  const CFExpansion smaller = euclid_on_lengths(9, 31);
  CHECK(smaller.quotients == std::vector<std::int64_t>{0, 3, 2, 4});

  CHECK_THROWS_AS(euclid_on_lengths(0, 1), DomainError);
  CHECK_THROWS_AS(euclid_on_lengths(1, -1), DomainError);
  CHECK_THROWS_AS(euclid_on_lengths(1, 1, 0), DomainError);
}

TEST_CASE("convergents of sqrt 2 and pi") {
  const auto c2 = convergents(continued_fraction(std::sqrt(2.0), 20), 4);
  CHECK(c2 == std::vector<Convergent>{{1, 1}, {3, 2}, {7, 5}, {17, 12}});

  const auto cpi = convergents(continued_fraction(std::numbers::pi, 20), 4);
  CHECK(cpi == std::vector<Convergent>{{3, 1}, {22, 7}, {333, 106}, {355, 113}});

  const CFExpansion short_cf = euclid_on_lengths(31, 9);
  CHECK_THROWS_AS(convergents(short_cf, 4), DomainError);
}

TEST_CASE("golden ratio expansion from the decagon") {
  const CFExpansion cf = golden_ratio_cf_demo(20);
  CHECK(cf.quotients.size() == 20);
  for (auto q : cf.quotients) CHECK(q == 1);
  CHECK_FALSE(cf.terminated);
  CHECK_THROWS_AS(golden_ratio_cf_demo(0), DomainError);
  CHECK_THROWS_AS(golden_ratio_cf_demo(31), DomainError);
}

TEST_CASE("convergents are best approximations") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.05, 20.0);
  for (int trial = 0; trial < 300; ++trial) {
    const double x = u(rng);
    const CFExpansion cf = continued_fraction(x, 12);
    for (const Convergent& c : convergents(cf)) {
      if (c.q > 12) break;
      const double err = std::abs(x - c.value());
      // No fraction with a smaller denominator comes closer.
      for (std::int64_t q = 1; q < c.q; ++q) {
        const auto p = static_cast<std::int64_t>(std::llround(x * static_cast<double>(q)));
        CHECK(std::abs(x - static_cast<double>(p) / static_cast<double>(q)) > err);
      }
    }
  }
}

TEST_CASE("expansions reconstruct their value") {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(0.01, 100.0);
  for (int trial = 0; trial < 1000; ++trial) {
    const double x = u(rng);
    const CFExpansion cf = continued_fraction(x, 64);
    CHECK(std::abs(evaluate(cf) - x) <= 1e-12 * std::max(1.0, x));
  }
}

TEST_CASE("convergent overflow is reported") {
  CFExpansion cf;
  cf.quotients.assign(200, 1000000);
  CHECK_THROWS_AS(convergents(cf), DomainError);
}
