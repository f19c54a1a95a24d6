#pragma once

// Suite configuration and the machine-readable check reports.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace qwb::cli {

struct RunConfig {
  mpq_class hbar = 1;
  std::uint64_t seed = 20240611;
  /// Overrides the tolerance of every floating-point check when set.
  std::optional<double> tolerance;
  int cutoff = 10;
  int grid_points = 181;
  double grid_half_width = 9;
  int sphere_resolution = 16;
  std::uint64_t zeta_cutoff = 1000000;
  std::uint32_t zeta_primes = 100000;
  int random_samples = 200;
  bool fast = false;
  bool timings = false;

  /// Reduced resolutions and looser tolerances.
  static RunConfig fast_defaults();
  double tol(double pinned) const { return tolerance.value_or(pinned); }
  nlohmann::json to_json() const;
};

struct CheckRecord {
  std::string id;
  std::string name;
  /// The identity being verified, or "plumbing".
  std::string anchor;
  bool passed = false;
  nlohmann::json witness;
  /// Absolute tolerance; nullopt for exact checks.
  std::optional<double> tolerance;
  double runtime_ms = 0;
};

struct SuiteReport {
  std::string name;
  std::vector<CheckRecord> checks;
  bool passed() const;
};

struct RunReport {
  std::string suite;
  RunConfig config;
  std::vector<SuiteReport> suites;
  bool passed() const;
  /// Sorted keys; runtimes only when config.timings is set.
  nlohmann::json to_json() const;
  std::string serialize() const;
};

}  // namespace qwb::cli
