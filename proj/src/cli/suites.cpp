#include "qwb/cli/suites.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <stdexcept>

#include "qwb/fock.hpp"
#include "qwb/kgeom.hpp"
#include "qwb/moyal.hpp"
#include "qwb/numlab.hpp"
#include "qwb/opalg.hpp"
#include "qwb/prequant.hpp"
#include "qwb/random.hpp"
#include "qwb/zetafock.hpp"

namespace qwb::cli {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct Outcome {
  bool passed;
  nlohmann::json witness;
};

class Suite {
 public:
  explicit Suite(std::string name) { report_.name = std::move(name); }

  void check(const std::string& name, const std::string& anchor, std::optional<double> tolerance,
             const std::function<Outcome()>& body) {
    char id[16];
    std::snprintf(id, sizeof id, ".%02zu", report_.checks.size() + 1);
    CheckRecord rec{report_.name + id, name, anchor, false, nullptr, tolerance, 0};
    const auto start = std::chrono::steady_clock::now();
    try {
      Outcome o = body();
      rec.passed = o.passed;
      rec.witness = std::move(o.witness);
    } catch (const std::exception& e) {
      rec.passed = false;
      rec.witness = std::string("exception: ") + e.what();
    }
    rec.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    report_.checks.push_back(std::move(rec));
  }

  void rename_last(const std::string& name) {
    report_.checks.back().name = name;
    report_.checks.back().anchor = name;
  }

  SuiteReport take() { return std::move(report_); }

 private:
  SuiteReport report_;
};

Outcome exact(const PhasePoly& defect) { return {defect.is_zero(), defect.to_string()}; }

// Runs `samples` randomized trials; the witness is the first failing defect.
Outcome sampled(int samples, const std::function<std::optional<std::string>(int)>& trial) {
  for (int k = 0; k < samples; ++k) {
    if (auto bad = trial(k)) return {false, {{"sample", k}, {"defect", *bad}}};
  }
  return {true, {{"samples", samples}}};
}

TablePtr table_for(int k) { return VariableTable::canonical(k % 2 == 0 ? 1 : 2); }

HbarScalar ih() { return HbarScalar::monomial(QiScalar::i(), 1); }

// ---------------------------------------------------------------------------

SuiteReport moyal_suite(const RunConfig& cfg) {
  Suite s("moyal");
  const std::size_t one = 1;
  const auto Q = CanonicalOperator::q(one);
  const auto P = CanonicalOperator::p(one);
  const auto t1 = VariableTable::canonical(1);
  const auto q = PhasePoly::variable(t1, "q");
  const auto p = PhasePoly::variable(t1, "p");
  const StarContext ctx1 = StarContext::canonical(t1);

  s.check("canonical commutator", "[q,p] = i hbar", std::nullopt, [&]() -> Outcome {
    const auto d = commutator(Q, P) - CanonicalOperator::scalar(one, ih());
    return {d.is_zero(), d.to_string()};
  });
  s.check("quadratic commutator", "(1/2)[q^2,p^2] = i hbar (qp + pq)", std::nullopt, [&]() -> Outcome {
    const auto d = commutator(Q * Q, P * P) * HbarScalar(QiScalar::rational(1, 2)) - (Q * P + P * Q) * ih();
    return {d.is_zero(), d.to_string()};
  });
  s.check("star commutator", "q*p - p*q = i hbar", std::nullopt, [&] {
    return exact(star_product(q, p, ctx1) - star_product(p, q, ctx1) - PhasePoly::constant(t1, ih()));
  });
  s.check("symmetrized star product", "(1/2)(q*p + p*q) = qp", std::nullopt, [&] {
    return exact((star_product(q, p, ctx1) + star_product(p, q, ctx1)) * HbarScalar(QiScalar::rational(1, 2)) -
                 q * p);
  });

  RandomPolyOptions deg5;
  deg5.max_degree = 5;
  deg5.with_hbar = true;
  RandomPolyOptions deg4;
  deg4.max_degree = 4;
  deg4.max_terms = 4;
  const int n_pairs = cfg.random_samples;
  const int n_triples = std::max(1, cfg.random_samples / 2);

  s.check("weyl map is a homomorphism", "W(f*g) = W(f) W(g)", std::nullopt, [&] {
    Rng rng(cfg.seed);
    return sampled(n_pairs, [&](int k) -> std::optional<std::string> {
      const auto t = table_for(k);
      const auto d = weyl_homomorphism_defect(random_poly(t, rng, deg5), random_poly(t, rng, deg5));
      if (d.is_zero()) return std::nullopt;
      return d.to_string();
    });
  });
  s.check("wigner map inverts the weyl map", "wigner(W(f)) = f", std::nullopt, [&] {
    Rng rng(cfg.seed + 1);
    return sampled(n_pairs, [&](int k) -> std::optional<std::string> {
      const auto f = random_poly(table_for(k), rng, deg5);
      const auto d = wigner_map(weyl_map(f)) - f;
      if (d.is_zero()) return std::nullopt;
      return d.to_string();
    });
  });
  s.check("star associativity", "(f*g)*h = f*(g*h)", std::nullopt, [&] {
    Rng rng(cfg.seed + 2);
    return sampled(n_triples, [&](int k) -> std::optional<std::string> {
      const auto t = table_for(k);
      const auto ctx = StarContext::canonical(t);
      const auto f = random_poly(t, rng, deg4);
      const auto g = random_poly(t, rng, deg4);
      const auto h = random_poly(t, rng, deg4);
      const auto d = star_product(star_product(f, g, ctx), h, ctx) - star_product(f, star_product(g, h, ctx), ctx);
      if (d.is_zero()) return std::nullopt;
      return d.to_string();
    });
  });
  s.check("moyal bracket jacobi identity", "{{{f,g}},h}} + cyclic = 0", std::nullopt, [&] {
    Rng rng(cfg.seed + 3);
    return sampled(n_triples, [&](int k) -> std::optional<std::string> {
      const auto t = table_for(k);
      const auto ctx = StarContext::canonical(t);
      const auto f = random_poly(t, rng, deg4);
      const auto g = random_poly(t, rng, deg4);
      const auto h = random_poly(t, rng, deg4);
      const auto d = moyal_bracket(moyal_bracket(f, g, ctx), h, ctx) + moyal_bracket(moyal_bracket(g, h, ctx), f, ctx) +
                     moyal_bracket(moyal_bracket(h, f, ctx), g, ctx);
      if (d.is_zero()) return std::nullopt;
      return d.to_string();
    });
  });
  s.check("groenewold witness", "{{q^3,p^3}} - {q^3,p^3} = -(3/2) hbar^2", std::nullopt, [&]() -> Outcome {
    const auto w = groenewold_witness(ctx1);
    return {w == PhasePoly::constant(t1, HbarScalar::monomial(QiScalar::rational(-3, 2), 2)), w.to_string()};
  });
  s.check("quadratic bracket witness", "{{q^2,p^2}} - {q^2,p^2} = 0", std::nullopt, [&] {
    return exact(bracket_witness(q * q, p * p, ctx1));
  });
  return s.take();
}

// ---------------------------------------------------------------------------

PhaseDiffOp random_vector_field(const TablePtr& t, Rng& rng) {
  RandomPolyOptions o;
  o.max_degree = 3;
  o.max_terms = 3;
  std::vector<PhasePoly> a;
  for (std::size_t i = 0; i < t->size(); ++i) a.push_back(rng.uniform(0, 3) ? random_poly(t, rng, o) : PhasePoly(t));
  return PhaseDiffOp::vector_field(std::move(a));
}

SuiteReport prequant_suite(const RunConfig& cfg) {
  Suite s("prequant");
  RandomPolyOptions deg4;
  deg4.max_degree = 4;
  const int n = cfg.random_samples;

  s.check("prequantization bracket law", "[P(f),P(g)] = i hbar P({f,g})", std::nullopt, [&] {
    Rng rng(cfg.seed + 10);
    return sampled(n, [&](int k) -> std::optional<std::string> {
      const auto t = table_for(k);
      const auto f = random_poly(t, rng, deg4);
      const auto g = random_poly(t, rng, deg4);
      const auto d = diffop_commutator(prequantize(f), prequantize(g)) -
                     prequantize(poisson_bracket(f, g, PoissonStructure::canonical(t))) * ih();
      if (d.is_zero()) return std::nullopt;
      return d.to_string();
    });
  });
  s.check("prequantum operators are symmetric", "P(f)^+ = P(f) for real f", std::nullopt, [&] {
    Rng rng(cfg.seed + 11);
    return sampled(n, [&](int k) -> std::optional<std::string> {
      const auto op = prequantize(random_poly(table_for(k), rng, deg4));
      const auto d = formal_adjoint(op) - op;
      if (d.is_zero()) return std::nullopt;
      return d.to_string();
    });
  });
  s.check("connection curvature", "R(X,Y) = omega(X,Y)/hbar", std::nullopt, [&] {
    Rng rng(cfg.seed + 12);
    return sampled(std::max(1, n / 2), [&](int k) -> std::optional<std::string> {
      const auto t = table_for(k);
      const auto theta = ContactForm::canonical(t);
      const auto X = random_vector_field(t, rng);
      const auto Y = random_vector_field(t, rng);
      const auto d = connection_curvature(X, Y, theta) - theta.omega(X, Y).times_hbar(-1);
      if (d.is_zero()) return std::nullopt;
      return d.to_string();
    });
  });
  s.check("bargmann polarization", "[a, Dbar] = 0", std::nullopt, [&]() -> Outcome {
    const auto c = bargmann_polarization_check();
    return {c.is_zero(), c.to_string()};
  });
  s.check("circle prequantization spectra", "P_lambda e^{in phi} = hbar (n + lambda) e^{in phi}, disjoint in lambda",
          std::nullopt, [&]() -> Outcome {
            const int K = 50;
            const std::vector<mpq_class> lambdas{0, mpq_class(1, 3), mpq_class(1, 2)};
            std::vector<std::vector<HbarScalar>> spectra;
            for (const auto& l : lambdas) {
              const auto op = circle_prequantize(l, K);
              if (!op.is_diagonal()) return {false, "not diagonal at lambda = " + rational_string(l)};
              for (int m = -K; m <= K; ++m) {
                if (!(op.eigenvalue(m) == HbarScalar::monomial(QiScalar(m + l), 1))) {
                  return {false, {{"lambda", rational_string(l)}, {"mode", m}, {"eigenvalue", op.eigenvalue(m).to_string()}}};
                }
              }
              spectra.push_back(op.spectrum());
            }
            for (std::size_t a = 0; a < spectra.size(); ++a) {
              for (std::size_t b = a + 1; b < spectra.size(); ++b) {
                for (const auto& x : spectra[a]) {
                  for (const auto& y : spectra[b]) {
                    if (x == y) return {false, {{"shared_eigenvalue", x.to_string()}}};
                  }
                }
              }
            }
            return {true, {{"modes", 2 * K + 1}, {"lambdas", {"0", "1/3", "1/2"}}}};
          });
  s.check("kinetic energy defect", "P(p^2/2) != P(p)^2/2", std::nullopt, [&]() -> Outcome {
    const auto d = prequant_defect_kinetic();
    return {!d.is_zero(), d.to_string()};
  });
  return s.take();
}

// ---------------------------------------------------------------------------

bool columns_vanish(const ExactMatrix& m, const std::vector<std::size_t>& cols) {
  for (std::size_t c : cols) {
    if (!m.column(c).empty()) return false;
  }
  return true;
}

bool is_eigenvector(const ExactMatrix& m, std::size_t k, const HbarScalar& lambda) {
  const auto col = m.column(k);
  if (lambda.is_zero()) return col.empty();
  return col.size() == 1 && col.begin()->first == k && col.begin()->second == lambda;
}

SuiteReport fock_suite(const RunConfig& cfg) {
  Suite s("fock");
  const int D = cfg.cutoff;
  const BargmannBasis b1(1, D, cfg.hbar);
  const BargmannBasis b2(2, D, cfg.hbar);
  const HbarScalar h = b2.hbar();
  const int nmax = std::min(8, D - 2);

  s.check("canonical commutation below the boundary", "[a_i, a_j*] = hbar delta_ij", std::nullopt, [&]() -> Outcome {
    for (const BargmannBasis* b : {&b1, &b2}) {
      const auto inner = b->interior();
      for (std::size_t i = 0; i < b->modes(); ++i) {
        for (std::size_t j = 0; j < b->modes(); ++j) {
          if (!columns_vanish(ccr_defect(*b, i, j), inner)) return {false, {{"modes", b->modes()}, {"i", i}, {"j", j}}};
        }
      }
    }
    return {true, {{"cutoff", D}, {"interior_states", b2.interior().size()}}};
  });
  s.check("creation is the gram adjoint of annihilation", "a^+ = a* with respect to the Gram matrix", std::nullopt,
          [&]() -> Outcome {
            for (const BargmannBasis* b : {&b1, &b2}) {
              for (std::size_t i = 0; i < b->modes(); ++i) {
                const auto d = adjoint_defect(*b, i);
                if (!d.is_zero()) return {false, to_json(d)};
              }
            }
            return {true, {{"cutoff", D}}};
          });
  s.check("oscillator spectrum", "H0 z^alpha = (N + n/2) hbar z^alpha, multiplicity N + 1", std::nullopt,
          [&]() -> Outcome {
            const auto H = oscillator_hamiltonian(b2);
            for (int N = 0; N <= nmax; ++N) {
              const auto block = b2.of_degree(N);
              if (block.size() != static_cast<std::size_t>(N + 1)) return {false, {{"degree", N}, {"multiplicity", block.size()}}};
              for (std::size_t k : block) {
                if (!is_eigenvector(H, k, h * HbarScalar(N + 1))) return {false, {{"degree", N}, {"state", k}}};
              }
            }
            return {true, {{"max_degree", nmax}}};
          });
  const Su2Matrices su2 = schwinger_su2(b2);
  s.check("su(2) commutation relations", "[M_j, M_k] = i hbar eps_jkl M_l", std::nullopt, [&]() -> Outcome {
    const HbarScalar ihv = h * HbarScalar(QiScalar::i());
    const std::vector<std::pair<std::string, ExactMatrix>> defects{
        {"[M1,M2]", commutator(su2.M1, su2.M2) - su2.M3 * ihv},
        {"[M2,M3]", commutator(su2.M2, su2.M3) - su2.M1 * ihv},
        {"[M3,M1]", commutator(su2.M3, su2.M1) - su2.M2 * ihv},
        {"[M3,M+]", commutator(su2.M3, su2.M_plus) - su2.M_plus * h},
        {"[M3,M-]", commutator(su2.M3, su2.M_minus) + su2.M_minus * h},
        {"[M+,M-]", commutator(su2.M_plus, su2.M_minus) - su2.M3 * (h * HbarScalar(2))}};
    for (int N = 0; N <= nmax; ++N) {
      const auto block = b2.of_degree(N);
      for (const auto& [name, d] : defects) {
        if (!columns_vanish(d, block)) return {false, {{"relation", name}, {"degree", N}}};
      }
    }
    return {true, {{"max_degree", nmax}}};
  });
  s.check("su(2) weight spectrum", "M3 spectrum {-j, ..., j} hbar", std::nullopt, [&]() -> Outcome {
    for (int N = 0; N <= nmax; ++N) {
      const mpq_class j = mpq_class(N) / 2;
      for (std::size_t k : b2.of_degree(N)) {
        const HbarScalar m = h * HbarScalar(QiScalar(mpq_class(b2.state(k)[0]) - j));
        if (!is_eigenvector(su2.M3, k, m)) return {false, {{"degree", N}, {"state", k}}};
      }
    }
    return {true, {{"max_degree", nmax}}};
  });
  s.check("su(2) casimir", "(M^2 - j(j+1) hbar^2) v = 0", std::nullopt, [&]() -> Outcome {
    const auto direct = su2.M1 * su2.M1 + su2.M2 * su2.M2 + su2.M3 * su2.M3;
    for (int N = 0; N <= nmax; ++N) {
      const mpq_class j = mpq_class(N) / 2;
      const HbarScalar c = h * h * HbarScalar(QiScalar(j * (j + 1)));
      for (std::size_t k : b2.of_degree(N)) {
        if (!is_eigenvector(su2.casimir, k, c) || !is_eigenvector(direct, k, c)) {
          return {false, {{"degree", N}, {"state", k}}};
        }
      }
    }
    return {true, {{"max_degree", nmax}}};
  });
  s.check("canonical anticommutation relations", "{a_i, a_j*} = delta_ij, {a_i, a_j} = 0", std::nullopt,
          [&]() -> Outcome {
            for (int m = 1; m <= 6; ++m) {
              const CarAlgebra car = car_matrices(m);
              const std::size_t dim = std::size_t{1} << m;
              for (int i = 0; i < m; ++i) {
                for (int j = 0; j < m; ++j) {
                  const auto ac = anticommutator(car.a[i], car.a_star[j]);
                  const bool ok = (i == j ? ac == ExactMatrix::identity(dim) : ac.is_zero()) &&
                                  anticommutator(car.a[i], car.a[j]).is_zero() &&
                                  anticommutator(car.a_star[i], car.a_star[j]).is_zero();
                  if (!ok) return {false, {{"modes", m}, {"i", i}, {"j", j}}};
                }
              }
            }
            return {true, {{"max_modes", 6}}};
          });
  return s.take();
}

// ---------------------------------------------------------------------------

SuiteReport kgeom_suite(const RunConfig& cfg) {
  Suite s("kgeom");
  Rng rng(cfg.seed + 20);
  using Group = std::vector<kgeom::Check> (*)(Rng&, int);
  const std::vector<std::pair<Group, int>> groups{
      {kgeom::quaternion_reps_check, 20}, {kgeom::zero_divisor_check, 20}, {kgeom::holomorphic_coordinates_check, 50}};
  for (const auto& [group, samples] : groups) {
    // The group is evaluated inside its first check so that the runtime is recorded there.
    std::vector<kgeom::Check> checks;
    std::size_t k = 0;
    do {
      const auto run = [&, k]() -> Outcome {
        if (k == 0) checks = group(rng, samples);
        return {checks.at(k).passed, checks.at(k).witness};
      };
      const std::string name = k == 0 ? std::string() : checks.at(k).name;
      s.check(name, name, std::nullopt, run);
      s.rename_last(checks.empty() ? "kgeom group" : checks.at(k).name);
      ++k;
    } while (k < checks.size());
  }
  return s.take();
}

// ---------------------------------------------------------------------------

SuiteReport numlab_suite(const RunConfig& cfg) {
  using namespace numlab;
  Suite s("numlab");
  const double tol6 = cfg.tol(1e-6);
  const double hbar = cfg.hbar.get_d();
  const Grid2D grid = Grid2D::square(cfg.grid_half_width * std::sqrt(hbar), cfg.grid_points);
  const WaveFunction1D psi0 = hermite_wavefunction(0, hbar);
  const WaveFunction1D psi1 = hermite_wavefunction(1, hbar);

  s.check("ground state wigner peak", "F_0(0,0) = 1/(pi hbar)", tol6, [&]() -> Outcome {
    const double v = wigner_value(psi0, 0, 0, hbar);
    return {std::abs(v - 1 / (kPi * hbar)) <= tol6, v};
  });
  s.check("first excited wigner dip", "F_1(0,0) = -1/(pi hbar)", tol6, [&]() -> Outcome {
    const double v = wigner_value(psi1, 0, 0, hbar);
    return {std::abs(v + 1 / (kPi * hbar)) <= tol6, v};
  });
  for (const WaveFunction1D* psi : {&psi0, &psi1}) {
    const std::string n = std::to_string(psi->index());
    s.check("wigner marginals, n = " + n, "int F dp = |psi(x)|^2, int F dx = |phi(p)|^2, int int F = 1", tol6,
            [&, psi]() -> Outcome {
              const WignerField F = wigner_transform(*psi, grid, hbar);
              const MarginalReport r = marginal_check(F, *psi);
              const bool ok = r.position_deviation <= tol6 && r.momentum_deviation <= tol6 &&
                              std::abs(r.total_mass - 1) <= tol6 && F.max_abs() <= 1 / (kPi * hbar) + 1e-12;
              return {ok,
                      {{"position_deviation", r.position_deviation},
                       {"momentum_deviation", r.momentum_deviation},
                       {"total_mass", r.total_mass},
                       {"max_abs", F.max_abs()},
                       {"truncation_error", F.truncation_error}}};
            });
  }
  s.check("stora row sums", "sum_b F(a,b) = <a|rho|a>", cfg.tol(1e-10), [&]() -> Outcome {
    Sampler sm(cfg.seed + 30);
    const int reps = std::max(1, cfg.random_samples / 20);
    double worst = 0;
    for (int d = 1; d <= 6; ++d) {
      for (int r = 0; r < reps; ++r) {
        const DensityMatrix rho = sm.random_density(d);
        const CMatrix A = sm.random_basis(d);
        const CMatrix B = sm.random_basis(d);
        const Eigen::MatrixXd F = stora_distribution(rho, A, B);
        for (int a = 0; a < d; ++a) {
          const double diag = std::real(A.col(a).dot(rho.matrix() * A.col(a)));
          worst = std::max(worst, std::abs(F.row(a).sum() - diag));
        }
      }
    }
    return {worst <= cfg.tol(1e-10), {{"max_deviation", worst}, {"samples_per_dimension", reps}}};
  });
  s.check("stora negativity", "F(a,b) < 0 for some pure state", std::nullopt, [&]() -> Outcome {
    const NegativityWitness w = stora_negativity_scan(cfg.fast ? 12 : 36);
    return {w.value < 0, {{"value", w.value}, {"theta", w.theta}, {"phi", w.phi}, {"row", w.row}, {"col", w.col}}};
  });
  s.check("sphere residue integral", "int Res(omega_3)/(4 pi hbar) = N", tol6, [&]() -> Outcome {
    nlohmann::json values = nlohmann::json::array();
    bool ok = true;
    double ratio0 = 0;
    for (int N = 1; N <= 5; ++N) {
      const SphereResult r = sphere_residue_integral(N, hbar, cfg.sphere_resolution, cfg.tol(1e-9));
      ok = ok && std::abs(r.value - N) <= tol6;
      if (N == 1) ratio0 = r.value;
      ok = ok && std::abs(r.value / N - ratio0) <= cfg.tol(1e-8);
      values.push_back({{"N", N}, {"value", r.value}, {"restriction", r.restriction}});
    }
    return {ok, values};
  });
  s.check("loop integral of the angle form", "int eta_1 = 2 pi * winding", cfg.tol(1e-8), [&]() -> Outcome {
    auto circle = [](int points, int turns, double cx) {
      std::vector<std::array<double, 2>> pts;
      for (int k = 0; k < points * turns; ++k) {
        const double a = 2 * kPi * k / points;
        pts.push_back({cx + std::cos(a), std::sin(a)});
      }
      return pts;
    };
    const double once = loop_integral_eta1(circle(256, 1, 0));
    const double twice = loop_integral_eta1(circle(256, 2, 0));
    const double outside = loop_integral_eta1(circle(256, 1, 3));
    const double t = cfg.tol(1e-8);
    const bool ok = std::abs(once - 2 * kPi) <= t && std::abs(twice - 4 * kPi) <= t && std::abs(outside) <= t;
    return {ok, {{"unit_circle", once}, {"twice", twice}, {"not_enclosing", outside}}};
  });
  return s.take();
}

// ---------------------------------------------------------------------------

SuiteReport zeta_suite(const RunConfig& cfg) {
  using namespace zeta;
  Suite s("zeta");
  const double zeta2 = kPi * kPi / 6;
  s.check("prime occupations", "n = prod p_i^n_i", std::nullopt, [&]() -> Outcome {
    const FockInteger one(1), four(4), six(6), thirty(30), p97(97);
    const bool ok = one.occupation().empty() && four.particle_number() == 2 && four.occupation().size() == 1 &&
                    six.particle_number() == 2 && six.occupation().size() == 2 && thirty.number_operator() == 30 &&
                    p97.number_operator() == 97 && one.number_operator() == 1;
    return {ok, {{"N|30>", thirty.number_operator().get_str()}, {"particles(6)", six.particle_number()}}};
  });
  s.check("logarithmic hamiltonian is additive", "H(mn) = H(m) + H(n), gcd(m,n) = 1", 1e-12, [&]() -> Outcome {
    double worst = 0;
    for (unsigned long m = 1; m <= 40; ++m) {
      for (unsigned long n = 1; n <= 40; ++n) {
        if (std::gcd(m, n) != 1) continue;
        worst = std::max(worst, std::abs(FockInteger(mpz_class(m * n)).energy() - FockInteger(mpz_class(m)).energy() -
                                         FockInteger(mpz_class(n)).energy()));
      }
    }
    return {worst <= 1e-12, worst};
  });
  Bracket z{};
  s.check("zeta partition function", "Z(2) = sum n^-2 = pi^2/6", cfg.tol(1e-6), [&]() -> Outcome {
    z = partition_function(2, cfg.zeta_cutoff);
    const bool ok = z.contains(zeta2) && z.upper - z.lower <= cfg.tol(1e-6);
    return {ok, {{"value", z.value}, {"lower", z.lower}, {"upper", z.upper}, {"cutoff", cfg.zeta_cutoff}}};
  });
  s.check("euler product", "Z(2) = prod (1 - p^-2)^-1", cfg.tol(1e-4), [&]() -> Outcome {
    const Bracket e = euler_product(2, cfg.zeta_primes);
    const bool ok = brackets_overlap(z, e) && e.contains(zeta2) && std::abs(z.value - e.value) <= cfg.tol(1e-4);
    return {ok, {{"value", e.value}, {"lower", e.lower}, {"upper", e.upper}, {"prime_cutoff", cfg.zeta_primes}}};
  });
  s.check("exact euler product over p <= 10", "prod_{p<=10} = sum over 10-smooth n", std::nullopt, [&]() -> Outcome {
    const mpq_class a = euler_product_exact(2, 10, 2);
    const mpq_class b = smooth_sum_exact(2, 10, 2);
    return {a == b && euler_factor(2, 2) == mpq_class(4, 3), rational_string(a)};
  });
  return s.take();
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"moyal", "prequant", "fock", "numlab", "kgeom", "zeta"};
  return names;
}

SuiteReport run_single_suite(const std::string& name, const RunConfig& config) {
  if (name == "moyal") return moyal_suite(config);
  if (name == "prequant") return prequant_suite(config);
  if (name == "fock") return fock_suite(config);
  if (name == "numlab") return numlab_suite(config);
  if (name == "kgeom") return kgeom_suite(config);
  if (name == "zeta") return zeta_suite(config);
  throw std::invalid_argument("unknown suite '" + name + "'");
}

RunReport run_suite(const std::string& name, const RunConfig& config) {
  RunReport r{name, config, {}};
  if (name == "all") {
    for (const auto& n : suite_names()) r.suites.push_back(run_single_suite(n, config));
  } else {
    r.suites.push_back(run_single_suite(name, config));
  }
  return r;
}

}  // namespace qwb::cli
