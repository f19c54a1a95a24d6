#pragma once

// Prime Fock space: the state |n> carries occupation n_i on the mode of the
// prime p_i when n = prod p_i^n_i. N and H = ln N are diagonal, and
// tr exp(-beta H) is the Riemann zeta function.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace qwb::zeta {

/// Largest integer factored by trial division.
inline constexpr unsigned long kFactorLimit = 1000000000UL;

class FockInteger {
 public:
  using Occupation = std::vector<std::pair<mpz_class, unsigned>>;

  /// Throws std::invalid_argument for n < 1 and std::domain_error above kFactorLimit.
  explicit FockInteger(const mpz_class& n);
  /// Inverse of occupation(); every key must be prime.
  static FockInteger from_occupation(const std::map<mpz_class, unsigned>& occ);

  const mpz_class& value() const { return n_; }
  /// (prime, occupation) in increasing prime order; empty for the vacuum |1>.
  const Occupation& occupation() const { return occ_; }
  unsigned particle_number() const;
  /// prod p^(a*_p a_p) evaluated from the occupations.
  mpz_class number_operator() const;
  /// sum n_i ln p_i
  double energy() const;
  /// prod n_i!, the normalization of (a*)^n |1>.
  mpz_class normalization() const;

 private:
  FockInteger(mpz_class n, Occupation occ) : n_(std::move(n)), occ_(std::move(occ)) {}
  mpz_class n_;
  Occupation occ_;
};

std::vector<std::uint32_t> primes_up_to(std::uint32_t limit);

struct Bracket {
  double value;  // partial sum or partial product
  double lower;
  double upper;
  bool contains(double x) const { return lower <= x && x <= upper; }
};

/// sum_{n <= M} n^-beta with the integral tail bounds
/// (M+1)^(1-beta)/(beta-1) <= tail <= M^(1-beta)/(beta-1); throws for beta <= 1.
Bracket partition_function(double beta, std::uint64_t cutoff);
/// prod_{p <= P} (1 - p^-beta)^-1, bracketed above by exp(P^(1-beta)/((beta-1)(1-P^-beta))).
Bracket euler_product(double beta, std::uint32_t prime_cutoff);
bool brackets_overlap(const Bracket& a, const Bracket& b);

/// prod_{p <= P} sum_{e <= K} p^(-e beta), exact.
mpq_class euler_product_exact(unsigned beta, std::uint32_t prime_cutoff, unsigned max_exponent);
/// sum of n^-beta over n whose prime factors are <= P with exponents <= K, exact.
mpq_class smooth_sum_exact(unsigned beta, std::uint32_t prime_cutoff, unsigned max_exponent);
/// (1 - p^-beta)^-1, exact.
mpq_class euler_factor(unsigned long p, unsigned beta);

}  // namespace qwb::zeta
