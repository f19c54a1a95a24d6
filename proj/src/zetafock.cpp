#include "qwb/zetafock.hpp"

#include <cmath>
#include <stdexcept>

namespace qwb::zeta {

namespace {

bool is_prime(const mpz_class& p) {
  if (p < 2) return false;
  for (mpz_class d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

void require_beta(double beta, const char* where) {
  if (!(beta > 1)) throw std::invalid_argument(std::string(where) + ": beta must exceed 1 (the sum diverges)");
}

mpq_class inverse_power(const mpz_class& base, unsigned e) {
  mpz_class d;
  mpz_pow_ui(d.get_mpz_t(), base.get_mpz_t(), e);
  return mpq_class(1, d);
}

}  // namespace

FockInteger::FockInteger(const mpz_class& n) : n_(n) {
  if (n < 1) throw std::invalid_argument("FockInteger: n must be positive");
  if (n > kFactorLimit) throw std::domain_error("FockInteger: n exceeds the trial-division limit 10^9");
  unsigned long m = n.get_ui();
  auto take = [&](unsigned long p) {
    unsigned e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e > 0) occ_.emplace_back(mpz_class(p), e);
  };
  take(2);
  take(3);
  // 6k +- 1 wheel
  for (unsigned long p = 5; p * p <= m; p += 6) {
    take(p);
    take(p + 2);
  }
  if (m > 1) occ_.emplace_back(mpz_class(m), 1);
}

FockInteger FockInteger::from_occupation(const std::map<mpz_class, unsigned>& occ) {
  mpz_class n = 1;
  Occupation list;
  for (const auto& [p, e] : occ) {
    if (!is_prime(p)) throw std::invalid_argument("FockInteger: occupation key " + p.get_str() + " is not prime");
    if (e == 0) continue;
    mpz_class pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
    n *= pe;
    list.emplace_back(p, e);
  }
  return FockInteger(n, list);
}

unsigned FockInteger::particle_number() const {
  unsigned s = 0;
  for (const auto& [p, e] : occ_) s += e;
  return s;
}

mpz_class FockInteger::number_operator() const {
  mpz_class r = 1;
  for (const auto& [p, e] : occ_) {
    mpz_class pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
    r *= pe;
  }
  return r;
}

double FockInteger::energy() const {
  double s = 0;
  for (const auto& [p, e] : occ_) s += e * std::log(p.get_d());
  return s;
}

mpz_class FockInteger::normalization() const {
  mpz_class r = 1;
  for (const auto& [p, e] : occ_) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), e);
    r *= f;
  }
  return r;
}

std::vector<std::uint32_t> primes_up_to(std::uint32_t limit) {
  std::vector<std::uint32_t> out;
  if (limit < 2) return out;
  std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
  for (std::uint64_t k = 2; k <= limit; ++k) {
    if (composite[k]) continue;
    out.push_back(static_cast<std::uint32_t>(k));
    for (std::uint64_t j = k * k; j <= limit; j += k) composite[j] = true;
  }
  return out;
}

// Smallest terms first; the rounding slack covers M additions at relative 2^-53.
Bracket partition_function(double beta, std::uint64_t cutoff) {
  require_beta(beta, "partition_function");
  if (cutoff < 1) throw std::invalid_argument("partition_function: cutoff must be positive");
  double s = 0;
  for (std::uint64_t n = cutoff; n >= 1; --n) s += std::pow(static_cast<double>(n), -beta);
  const double M = static_cast<double>(cutoff);
  const double slack = 2 * M * 0x1.0p-53 * s;
  return {s, s + std::pow(M + 1, 1 - beta) / (beta - 1) - slack, s + std::pow(M, 1 - beta) / (beta - 1) + slack};
}

Bracket euler_product(double beta, std::uint32_t prime_cutoff) {
  require_beta(beta, "euler_product");
  if (prime_cutoff < 2) throw std::invalid_argument("euler_product: prime cutoff must be at least 2");
  const std::vector<std::uint32_t> primes = primes_up_to(prime_cutoff);
  double log_prod = 0;
  for (auto it = primes.rbegin(); it != primes.rend(); ++it) log_prod -= std::log1p(-std::pow(*it, -beta));
  const double prod = std::exp(log_prod);
  const double P = prime_cutoff;
  const double tail = std::pow(P, 1 - beta) / ((beta - 1) * (1 - std::pow(P, -beta)));
  const double slack = 4 * static_cast<double>(primes.size()) * 0x1.0p-53 * prod;
  return {prod, prod - slack, prod * std::exp(tail) + slack};
}

bool brackets_overlap(const Bracket& a, const Bracket& b) { return a.lower <= b.upper && b.lower <= a.upper; }

mpq_class euler_factor(unsigned long p, unsigned beta) {
  if (p < 2 || beta == 0) throw std::invalid_argument("euler_factor: need p >= 2 and beta >= 1");
  const mpq_class x = inverse_power(mpz_class(p), beta);
  return 1 / (1 - x);
}

mpq_class euler_product_exact(unsigned beta, std::uint32_t prime_cutoff, unsigned max_exponent) {
  mpq_class prod = 1;
  for (std::uint32_t p : primes_up_to(prime_cutoff)) {
    mpq_class s = 0;
    for (unsigned e = 0; e <= max_exponent; ++e) s += inverse_power(mpz_class(p), e * beta);
    prod *= s;
  }
  return prod;
}

mpq_class smooth_sum_exact(unsigned beta, std::uint32_t prime_cutoff, unsigned max_exponent) {
  const std::vector<std::uint32_t> primes = primes_up_to(prime_cutoff);
  mpq_class total = 0;
  std::vector<unsigned> e(primes.size(), 0);
  while (true) {
    mpz_class n = 1;
    for (std::size_t k = 0; k < primes.size(); ++k) {
      mpz_class pe;
      mpz_ui_pow_ui(pe.get_mpz_t(), primes[k], e[k]);
      n *= pe;
    }
    total += inverse_power(n, beta);
    std::size_t k = 0;
    while (k < e.size() && e[k] == max_exponent) e[k++] = 0;
    if (k == e.size()) break;
    ++e[k];
  }
  return total;
}

}  // namespace qwb::zeta
