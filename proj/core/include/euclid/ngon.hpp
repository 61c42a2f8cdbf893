#pragma once

#include <array>
#include <optional>
#include <vector>

namespace euclid {

// Fermat primes known to exist: 2^(2^k) + 1 for k = 0..4.
inline constexpr std::array<long long, 5> kFermatPrimes = {3, 5, 17, 257, 65537};

// True iff a regular n-gon can be built with ruler and compass, i.e.
// n = 2^k * (product of distinct Fermat primes). Throws DomainError for n < 3.
bool is_constructible_ngon(long long n);

// Polygon sizes the inscribe_regular macro builds: 2^k * m for m in
// {1 (n >= 4), 3, 5, 15}.
bool has_inscribe_construction(long long n);

// Side of the regular n-gon inscribed in a circle of radius r: 2 r sin(pi/n).
double regular_side(long long n, double r);

// Radical forms for n in {3, 4, 5, 6, 10, 12}; nullopt otherwise.
std::optional<double> regular_side_radical(long long n, double r);

}  // namespace euclid
