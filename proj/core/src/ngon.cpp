#include "euclid/ngon.hpp"

#include <cmath>
#include <numbers>

#include "euclid/error.hpp"

namespace euclid {

bool is_constructible_ngon(long long n) {
  if (n < 3) throw DomainError("a polygon needs at least 3 sides");
  while (n % 2 == 0) n /= 2;
  for (long long p : kFermatPrimes) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return false;  // repeated Fermat factor
    }
  }
  return n == 1;
}

bool has_inscribe_construction(long long n) {
  if (n < 3) return false;
  long long odd = n;
  while (odd % 2 == 0) odd /= 2;
  if (odd == 1) return n >= 4;
  return odd == 3 || odd == 5 || odd == 15;
}

double regular_side(long long n, double r) {
  if (n < 3) throw DomainError("a polygon needs at least 3 sides");
  return 2.0 * r * std::sin(std::numbers::pi / static_cast<double>(n));
}

std::optional<double> regular_side_radical(long long n, double r) {
  const double s3 = std::sqrt(3.0);
  const double s5 = std::sqrt(5.0);
  switch (n) {
    case 3: return r * s3;
    case 4: return r * std::sqrt(2.0);
    case 5: return r * std::sqrt(10.0 - 2.0 * s5) / 2.0;
    case 6: return r;
    case 10: return r * (s5 - 1.0) / 2.0;
    case 12: return r * std::sqrt(2.0 - s3);
    default: return std::nullopt;
  }
}

}  // namespace euclid
