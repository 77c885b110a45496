#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qent/aep.hpp"
#include "qent/functional.hpp"

namespace qent {

enum class Suite {
  Ordering,
  AlphaMonotone,
  Additivity,
  Isometry,
  DataProcessing,
  Duality,
  HalfBound,
  Jensen,
  OpJensen,
  SfMonotone,
  Smoothing,
  Theorem2,
  LemmaIv,
  Theorem3,
};

Suite suite_from_name(std::string_view name);
std::string suite_name(Suite s);
std::vector<std::string> suite_names();

struct VerifySuiteConfig {
  Suite suite = Suite::Ordering;
  int trials = 200;
  std::uint64_t seed = 0;
  std::vector<std::pair<int, int>> dims = {{2, 2}, {2, 3}, {3, 2}};
  // 0 picks the suite default: 1e-5 for the optimization-backed
  // inequalities (ordering, half-bound), 1e-7 for the rest.
  double tolerance = 0.0;
};

struct SuiteReport {
  std::string name;
  int trials = 0;
  int violations = 0;
  double worst_slack = 0.0;     // smallest margin seen (negative = violated)
  std::uint64_t worst_seed = 0; // per-trial seed of the worst margin
  double tolerance = 0.0;
  std::vector<std::string> lines;  // violation details, capped

  bool passed() const { return violations == 0; }
};

SuiteReport run_suite(const VerifySuiteConfig& config);

// Deterministic per-trial seed stream (splitmix64 step).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace qent
