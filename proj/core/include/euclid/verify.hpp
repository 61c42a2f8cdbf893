#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace euclid {

struct InvariantResult {
  std::string name;
  std::size_t samples = 0;
  double max_residual = 0.0;
  double limit = 0.0;
  std::size_t failures = 0;  // samples that threw or exceeded the limit

  bool pass() const { return failures == 0 && max_residual <= limit; }
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<InvariantResult> invariants;

  bool pass() const;
};

inline constexpr std::uint64_t kDefaultSeed = 20240917;
inline constexpr std::size_t kDefaultSamples = 10000;

std::vector<std::string_view> verify_suite_names();

// Runs the randomized property suite `name`; deterministic for a given seed.
// Throws DomainError for an unknown name.
SuiteReport run_verify_suite(std::string_view name, std::uint64_t seed = kDefaultSeed,
                             std::size_t samples = kDefaultSamples);

}  // namespace euclid
