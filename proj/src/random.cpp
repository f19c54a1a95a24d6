#include "qwb/random.hpp"

#include <stdexcept>

namespace qwb {

long Rng::uniform(long lo, long hi) {
  if (hi < lo) throw std::invalid_argument("Rng::uniform: empty range");
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  // Rejection sampling keeps the draw unbiased.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t x = engine_();
  while (x >= limit) x = engine_();
  return lo + static_cast<long>(x % span);
}

double Rng::unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

namespace {

QiScalar random_rational(Rng& rng, long bound) {
  long num = 0;
  while (num == 0) num = rng.uniform(-bound, bound);
  const long den = rng.uniform(1, 3);
  return QiScalar::rational(num, den);
}

}  // namespace

PhasePoly random_poly(const TablePtr& table, Rng& rng, const RandomPolyOptions& options) {
  PhasePoly f(table);
  const long terms = rng.uniform(1, options.max_terms);
  for (long t = 0; t < terms; ++t) {
    const int degree = static_cast<int>(rng.uniform(0, options.max_degree));
    Monomial m(table->size(), 0);
    for (int d = 0; d < degree; ++d) {
      m[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(table->size()) - 1))] += 1;
    }
    QiScalar c = random_rational(rng, options.coefficient_bound);
    if (!options.real && rng.uniform(0, 1) == 1) c += random_rational(rng, options.coefficient_bound) * QiScalar::i();
    const int hbar = options.with_hbar ? static_cast<int>(rng.uniform(0, 1)) : 0;
    f.add_term(m, HbarScalar::monomial(c, hbar));
  }
  return f;
}

}  // namespace qwb
