#pragma once

// Seeded generators of random test data for the property checks.

#include <cstdint>
#include <random>

#include "qwb/poly.hpp"

namespace qwb {

/// Deterministic across platforms: only raw mt19937_64 output is consumed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  long uniform(long lo, long hi);
  /// Uniform double in [0, 1).
  double unit();
  double uniform_real(double lo, double hi) { return lo + (hi - lo) * unit(); }

 private:
  std::mt19937_64 engine_;
};

struct RandomPolyOptions {
  int max_degree = 4;
  int max_terms = 5;
  long coefficient_bound = 5;
  /// Real rational coefficients only (a real observable on the canonical chart).
  bool real = true;
  /// Allow hbar^1 factors on some terms.
  bool with_hbar = false;
};

PhasePoly random_poly(const TablePtr& table, Rng& rng, const RandomPolyOptions& options = {});

}  // namespace qwb
