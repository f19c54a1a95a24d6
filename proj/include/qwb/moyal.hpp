#pragma once

// Groenewold-Moyal star product on polynomials (a terminating series),
// the Moyal bracket, and verifiers for the cocycle, Weyl-homomorphism and
// gauge-equivalence identities.

#include <functional>
#include <vector>

#include "qwb/diffop.hpp"
#include "qwb/opalg.hpp"
#include "qwb/poly.hpp"

namespace qwb {

enum class StarConvention {
  physics,       // B_n carries (i/2)^n; f*g - g*f = i hbar {f,g} + ...
  mathematical,  // B_n carries (1/2)^n; the formal parameter stands for i hbar
};

struct StarContext {
  PoissonStructure poisson;
  StarConvention convention = StarConvention::physics;

  static StarContext canonical(TablePtr table, StarConvention convention = StarConvention::physics) {
    return {PoissonStructure::canonical(std::move(table)), convention};
  }
  const TablePtr& table_ptr() const { return poisson.table_ptr(); }
};

/// B_n(f, g) = (1/n!) (c P^{jk} d_j (x) d_k)^n f g with c = i/2 or 1/2. B_0 is fg.
PhasePoly bidifferential_term(int n, const PhasePoly& f, const PhasePoly& g, const StarContext& ctx);
/// f*g = sum_n hbar^n B_n(f, g), summed until it terminates.
PhasePoly star_product(const PhasePoly& f, const PhasePoly& g, const StarContext& ctx);
/// (f*g - g*f)/(i hbar), or /hbar in the mathematical convention.
PhasePoly moyal_bracket(const PhasePoly& f, const PhasePoly& g, const StarContext& ctx);

/// moyal_bracket(f, g) - {f, g}
PhasePoly bracket_witness(const PhasePoly& f, const PhasePoly& g, const StarContext& ctx);
/// bracket_witness(q^3, p^3); needs one canonical pair.
PhasePoly groenewold_witness(const StarContext& ctx);

/// f B1(g,h) - B1(fg,h) + B1(f,gh) - B1(f,g) h with B1 = multiple * {.,.}.
PhasePoly hochschild_cocycle_defect(const PhasePoly& f, const PhasePoly& g, const PhasePoly& h,
                                    const PoissonStructure& P, const QiScalar& multiple = QiScalar::rational(1, 2) * QiScalar::i());

/// W(f*g) - W(f) W(g) for the physics Moyal product on the canonical chart.
CanonicalOperator weyl_homomorphism_defect(const PhasePoly& f, const PhasePoly& g);

/// (n, f, g) -> B_n(f, g)
using Bidifferential = std::function<PhasePoly(int, const PhasePoly&, const PhasePoly&)>;

Bidifferential moyal_bidifferential(const StarContext& ctx);

/// For n = 1..order, returns
///   sum_{j+k+l=n} B_l(G_j f, G_k g) - sum_{l+m=n} G_m(B'_l(f, g))
/// where gauge[m-1] is G_m (missing orders are zero) and G_0 = 1.
std::vector<PhasePoly> gauge_equivalence_defects(const Bidifferential& B, const Bidifferential& B_prime,
                                                 const std::vector<DiffOperator>& gauge, const PhasePoly& f,
                                                 const PhasePoly& g, int order);

}  // namespace qwb
