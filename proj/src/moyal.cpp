#include "qwb/moyal.hpp"

#include <stdexcept>

namespace qwb {

namespace {

struct Pairing {
  std::size_t j;
  std::size_t k;
  QiScalar weight;
};

std::vector<Pairing> nonzero_pairings(const PoissonStructure& P) {
  std::vector<Pairing> out;
  for (std::size_t j = 0; j < P.size(); ++j) {
    for (std::size_t k = 0; k < P.size(); ++k) {
      if (!P.entry(j, k).is_zero()) out.push_back({j, k, P.entry(j, k)});
    }
  }
  return out;
}

QiScalar power(const QiScalar& x, int n) {
  QiScalar r = 1;
  for (int t = 0; t < n; ++t) r *= x;
  return r;
}

mpz_class factorial(int n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

// Sums over counts c (one per pairing) with |c| = n of
//   prod(P_jk^c / c!) d^alpha f d^beta g.
// The multinomial from expanding the n-th power cancels the 1/n!.
void accumulate(const std::vector<Pairing>& pairs, std::size_t idx, int remaining, QiScalar weight,
                Monomial& alpha, Monomial& beta, const PhasePoly& f, const PhasePoly& g, PhasePoly& out) {
  if (idx + 1 == pairs.size() || remaining == 0) {
    const int c = remaining;
    if (c > 0) {
      const Pairing& pr = pairs[idx];
      weight *= power(pr.weight, c) / QiScalar(mpq_class(factorial(c)));
      alpha[pr.j] += c;
      beta[pr.k] += c;
    }
    const PhasePoly df = apply_partial(f, alpha);
    if (!df.is_zero()) {
      const PhasePoly dg = apply_partial(g, beta);
      if (!dg.is_zero()) out += (df * dg) * HbarScalar(weight);
    }
    if (c > 0) {
      alpha[pairs[idx].j] -= c;
      beta[pairs[idx].k] -= c;
    }
    return;
  }
  const Pairing& pr = pairs[idx];
  QiScalar w = weight;
  for (int c = 0; c <= remaining; ++c) {
    if (c > 0) {
      w *= pr.weight / QiScalar(c);
      alpha[pr.j] += 1;
      beta[pr.k] += 1;
    }
    accumulate(pairs, idx + 1, remaining - c, w, alpha, beta, f, g, out);
  }
  alpha[pr.j] -= remaining;
  beta[pr.k] -= remaining;
}

}  // namespace

PhasePoly bidifferential_term(int n, const PhasePoly& f, const PhasePoly& g, const StarContext& ctx) {
  require_same_table(f.table_ptr(), g.table_ptr(), "star product");
  require_same_table(f.table_ptr(), ctx.table_ptr(), "star product");
  if (n < 0) throw std::invalid_argument("bidifferential_term: negative order");
  if (n == 0) return f * g;
  PhasePoly out(f.table_ptr());
  if (f.degree() < n || g.degree() < n) return out;
  const auto pairs = nonzero_pairings(ctx.poisson);
  if (pairs.empty()) return out;
  const std::size_t dim = f.table().size();
  Monomial alpha(dim, 0);
  Monomial beta(dim, 0);
  accumulate(pairs, 0, n, 1, alpha, beta, f, g, out);
  QiScalar c = QiScalar::rational(1, 2);
  if (ctx.convention == StarConvention::physics) c *= QiScalar::i();
  return out * HbarScalar(power(c, n));
}

PhasePoly star_product(const PhasePoly& f, const PhasePoly& g, const StarContext& ctx) {
  PhasePoly out = bidifferential_term(0, f, g, ctx);
  const int top = std::min(f.degree(), g.degree());
  for (int n = 1; n <= top; ++n) out += bidifferential_term(n, f, g, ctx).times_hbar(n);
  return out;
}

PhasePoly moyal_bracket(const PhasePoly& f, const PhasePoly& g, const StarContext& ctx) {
  const PhasePoly diff = star_product(f, g, ctx) - star_product(g, f, ctx);
  QiScalar divisor = ctx.convention == StarConvention::physics ? QiScalar::i() : QiScalar(1);
  return diff.times_hbar(-1) * HbarScalar(QiScalar(1) / divisor);
}

PhasePoly bracket_witness(const PhasePoly& f, const PhasePoly& g, const StarContext& ctx) {
  return moyal_bracket(f, g, ctx) - poisson_bracket(f, g, ctx.poisson);
}

PhasePoly groenewold_witness(const StarContext& ctx) {
  const VariableTable& t = *ctx.table_ptr();
  if (t.chart() != Chart::canonical || t.dof() != 1) {
    throw std::invalid_argument("groenewold_witness: needs a single canonical pair");
  }
  const PhasePoly q = PhasePoly::variable(ctx.table_ptr(), t.q_index(0));
  const PhasePoly p = PhasePoly::variable(ctx.table_ptr(), t.p_index(0));
  return bracket_witness(q * q * q, p * p * p, ctx);
}

PhasePoly hochschild_cocycle_defect(const PhasePoly& f, const PhasePoly& g, const PhasePoly& h,
                                    const PoissonStructure& P, const QiScalar& multiple) {
  auto B1 = [&](const PhasePoly& a, const PhasePoly& b) { return poisson_bracket(a, b, P) * HbarScalar(multiple); };
  return f * B1(g, h) - B1(f * g, h) + B1(f, g * h) - B1(f, g) * h;
}

CanonicalOperator weyl_homomorphism_defect(const PhasePoly& f, const PhasePoly& g) {
  const StarContext ctx = StarContext::canonical(f.table_ptr());
  return weyl_map(star_product(f, g, ctx)) - weyl_map(f) * weyl_map(g);
}

Bidifferential moyal_bidifferential(const StarContext& ctx) {
  return [ctx](int n, const PhasePoly& f, const PhasePoly& g) { return bidifferential_term(n, f, g, ctx); };
}

std::vector<PhasePoly> gauge_equivalence_defects(const Bidifferential& B, const Bidifferential& B_prime,
                                                 const std::vector<DiffOperator>& gauge, const PhasePoly& f,
                                                 const PhasePoly& g, int order) {
  require_same_table(f.table_ptr(), g.table_ptr(), "gauge_equivalence_defects");
  auto G = [&](int m, const PhasePoly& x) {
    if (m == 0) return x;
    if (static_cast<std::size_t>(m) > gauge.size()) return PhasePoly(x.table_ptr());
    return gauge[static_cast<std::size_t>(m - 1)].apply(x);
  };
  std::vector<PhasePoly> Gf;
  std::vector<PhasePoly> Gg;
  for (int m = 0; m <= order; ++m) {
    Gf.push_back(G(m, f));
    Gg.push_back(G(m, g));
  }
  std::vector<PhasePoly> defects;
  for (int n = 1; n <= order; ++n) {
    PhasePoly d(f.table_ptr());
    for (int l = 0; l <= n; ++l) {
      for (int j = 0; j + l <= n; ++j) d += B(l, Gf[static_cast<std::size_t>(j)], Gg[static_cast<std::size_t>(n - l - j)]);
      d -= G(n - l, B_prime(l, f, g));
    }
    defects.push_back(std::move(d));
  }
  return defects;
}

}  // namespace qwb
