#include <cmath>
#include <functional>

#include "doctest.h"
#include "qwb/numlab.hpp"

using namespace qwb::numlab;

namespace {

constexpr double kPi = 3.14159265358979323846;

// Physicists' Hermite polynomial from its explicit sum.
double hermite_sum(int n, double u) {
  double s = 0;
  for (int m = 0; m <= n / 2; ++m) {
    s += std::pow(-1.0, m) * std::tgamma(n + 1.0) / (std::tgamma(m + 1.0) * std::tgamma(n - 2.0 * m + 1)) *
         std::pow(2 * u, n - 2 * m);
  }
  return s;
}

double hermite_closed(int n, double x, double hbar) {
  const double u = x / std::sqrt(hbar);
  return std::pow(kPi * hbar, -0.25) / std::sqrt(std::pow(2.0, n) * std::tgamma(n + 1.0)) * hermite_sum(n, u) *
         std::exp(-0.5 * u * u);
}

double simpson(const std::function<double(double)>& f, double a, double b, int n) {
  const double h = (b - a) / n;
  double s = f(a) + f(b);
  for (int k = 1; k < n; ++k) s += (k % 2 ? 4 : 2) * f(a + k * h);
  return s * h / 3;
}

}  // namespace

TEST_CASE("gauss-legendre rule integrates polynomials exactly") {
  const GaussLegendre& g = GaussLegendre(8);
  double w = 0;
  for (double x : g.weights) w += x;
  CHECK(w == doctest::Approx(2.0).epsilon(1e-15));
  for (int k = 0; k <= 15; ++k) {
    const double exact = k % 2 ? 0.0 : 2.0 / (k + 1);
    CHECK(integrate([&](double x) { return std::pow(x, k); }, -1, 1, 1) == doctest::Approx(exact).epsilon(1e-14));
  }
  CHECK(integrate([](double x) { return std::sin(x); }, 0, kPi, 4) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("hermite wave functions") {
  for (double hbar : {1.0, 0.5, 2.0}) {
    for (int n = 0; n <= 20; ++n) {
      const WaveFunction1D psi = hermite_wavefunction(n, hbar);
      for (double x : {-2.3, -0.7, 0.0, 0.4, 1.9, 3.5}) {
        const double ref = hermite_closed(n, x, hbar);
        CHECK(std::abs(psi(x) - ref) < 1e-9 * std::max(1.0, std::abs(ref)));
      }
      const double R = psi.support_radius();
      const double norm = simpson([&](double x) { return psi(x) * psi(x); }, -R, R, 20000);
      CHECK(std::abs(norm - 1) < 1e-10);
    }
  }
  const WaveFunction1D psi0 = hermite_wavefunction(0);
  const WaveFunction1D psi1 = hermite_wavefunction(1);
  CHECK(psi1(0.0) == 0.0);
  CHECK(std::abs(simpson([&](double x) { return psi0(x) * psi1(x); }, -12, 12, 4000)) < 1e-10);
  CHECK_THROWS_AS(hermite_wavefunction(21), std::invalid_argument);
  CHECK_THROWS_AS(hermite_wavefunction(-1), std::invalid_argument);

  // -hbar^2/2 psi'' + x^2/2 psi = hbar (n + 1/2) psi, checked by central differences.
  for (int n : {0, 3, 7}) {
    const double hbar = 0.8;
    const WaveFunction1D psi = hermite_wavefunction(n, hbar);
    const double h = 1e-3;
    for (double x : {-1.1, 0.3, 1.7}) {
      const double d2 = (psi(x + h) - 2 * psi(x) + psi(x - h)) / (h * h);
      const double residual = -0.5 * hbar * hbar * d2 + 0.5 * x * x * psi(x) - hbar * (n + 0.5) * psi(x);
      CHECK(std::abs(residual) < 1e-5);
    }
  }
}

TEST_CASE("momentum density matches the scaled hermite function") {
  // The oscillator eigenfunction is its own Fourier transform up to a phase.
  for (double hbar : {1.0, 0.6}) {
    for (int n : {0, 1, 4, 9}) {
      const WaveFunction1D psi = hermite_wavefunction(n, hbar);
      for (double p : {0.0, 0.5, -1.3, 2.2}) {
        const double ref = hermite_closed(n, p, hbar);
        CHECK(std::abs(psi.momentum_density(p) - ref * ref) < 1e-12);
      }
    }
  }
}

TEST_CASE("wigner values of low states") {
  const WaveFunction1D psi0 = hermite_wavefunction(0);
  const WaveFunction1D psi1 = hermite_wavefunction(1);
  CHECK(std::abs(wigner_value(psi0, 0, 0, 1) - 1 / kPi) < 1e-6);
  CHECK(std::abs(wigner_value(psi1, 0, 0, 1) + 1 / kPi) < 1e-6);
  CHECK(std::abs(wigner_value(psi0, 9, 0, 1)) < 1e-8);
  CHECK(std::abs(wigner_value(psi0, 6, 2, 1)) < 1e-8);

  // Independent oracle: brute-force Simpson over the full line.
  for (double hbar : {1.0, 0.5}) {
    for (int n : {0, 2, 5}) {
      const WaveFunction1D psi = hermite_wavefunction(n, hbar);
      for (auto [x, p] : {std::pair{0.3, -0.4}, std::pair{-1.0, 1.2}, std::pair{0.8, 0.0}}) {
        const double ref = simpson([&](double y) { return psi(x + y) * psi(x - y) * std::cos(2 * p * y / hbar); },
                                   -14, 14, 20000) /
                           (kPi * hbar);
        CHECK(std::abs(wigner_value(psi, x, p, hbar) - ref) < 1e-10);
      }
    }
  }
  CHECK_THROWS_AS(wigner_value(psi0, 0, 0, 0.0), std::invalid_argument);
}

TEST_CASE("wigner fields, bounds and marginals") {
  for (int n : {0, 1, 3}) {
    const double hbar = 1;
    const WaveFunction1D psi = hermite_wavefunction(n, hbar);
    const WignerField F = wigner_transform(psi, Grid2D::square(9, 181), hbar);
    CHECK(F.values.size() == 181u * 181u);
    CHECK(F.max_abs() <= 1 / (kPi * hbar) + 1e-12);
    CHECK(F.truncation_error < 1e-10);
    const MarginalReport r = marginal_check(F, psi);
    CHECK(r.position_deviation <= 1e-6);
    CHECK(r.momentum_deviation <= 1e-6);
    CHECK(std::abs(r.total_mass - 1) <= 1e-6);
  }
  {
    const WaveFunction1D psi = hermite_wavefunction(2, 0.5);
    const WignerField F = wigner_transform(psi, Grid2D::square(7, 141), 0.5);
    CHECK(F.max_abs() <= 1 / (kPi * 0.5) + 1e-12);
    const MarginalReport r = marginal_check(F, psi);
    CHECK(r.position_deviation <= 1e-6);
    CHECK(r.momentum_deviation <= 1e-6);
  }
  const WaveFunction1D psi0 = hermite_wavefunction(0);
  const WignerField narrow = wigner_transform(psi0, Grid2D::square(2, 41), 1);
  CHECK_THROWS_AS(marginal_check(narrow, psi0), std::domain_error);
}

TEST_CASE("stora distribution on spin one half") {
  const CMatrix A = spin_z_basis();
  const CMatrix B = spin_x_basis();
  const DensityMatrix up = DensityMatrix::pure(bloch_state(0, 0));
  const Eigen::MatrixXd F = stora_distribution(up, A, B);
  CHECK(std::abs(F(0, 0) - 0.5) < 1e-12);
  CHECK(std::abs(F(0, 1) - 0.5) < 1e-12);
  CHECK(std::abs(F.row(0).sum() - 1) < 1e-12);
  CHECK(std::abs(F.row(1).sum()) < 1e-12);

  const Eigen::MatrixXd M = stora_distribution(DensityMatrix::maximally_mixed(2), A, B);
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) CHECK(std::abs(M(a, b) - 0.25) < 1e-12);
  }

  const NegativityWitness w = stora_negativity_scan(24);
  CHECK(w.value < -0.05);
  const Eigen::MatrixXd G = stora_distribution(DensityMatrix::pure(bloch_state(w.theta, w.phi)), A, B);
  CHECK(G(w.row, w.col) == doctest::Approx(w.value));

  CMatrix bad = CMatrix::Identity(2, 2);
  bad(0, 1) = 1e-6;
  CHECK_THROWS_AS(stora_distribution(up, bad, B), std::invalid_argument);
  CMatrix notdm = CMatrix::Identity(2, 2);
  CHECK_THROWS_AS(DensityMatrix{notdm}, std::invalid_argument);
}

TEST_CASE("stora row and column sums for random states") {
  Sampler s(20240611);
  for (int d = 1; d <= 6; ++d) {
    for (int rep = 0; rep < 10; ++rep) {
      const DensityMatrix rho = s.random_density(d);
      const CMatrix A = s.random_basis(d);
      const CMatrix B = s.random_basis(d);
      const Eigen::MatrixXd F = stora_distribution(rho, A, B);
      for (int a = 0; a < d; ++a) {
        const double diag = std::real(A.col(a).dot(rho.matrix() * A.col(a)));
        CHECK(std::abs(F.row(a).sum() - diag) < 1e-10);
      }
      for (int b = 0; b < d; ++b) {
        const double diag = std::real(B.col(b).dot(rho.matrix() * B.col(b)));
        CHECK(std::abs(F.col(b).sum() - diag) < 1e-10);
      }
      // Maximally mixed state: |<a|b>|^2 / d.
      const Eigen::MatrixXd M = stora_distribution(DensityMatrix::maximally_mixed(d), A, B);
      for (int a = 0; a < d; ++a) {
        for (int b = 0; b < d; ++b) {
          CHECK(std::abs(M(a, b) - std::norm(A.col(a).dot(B.col(b))) / d) < 1e-12);
          CHECK(M(a, b) >= -1e-15);
        }
      }
    }
  }
}

TEST_CASE("sphere residue integral") {
  // Solid angle.
  const double area = integrate(
      [](double t) { return integrate([&](double) { return std::sin(t); }, 0, 2 * kPi, 8); }, 0, kPi, 8);
  CHECK(std::abs(area / (4 * kPi) - 1) < 1e-9);

  for (double hbar : {1.0, 0.25}) {
    for (int N = 1; N <= 5; ++N) {
      const SphereResult r = sphere_residue_integral(N, hbar);
      CHECK(std::abs(r.value - N) < 1e-6);
      CHECK(std::abs(r.value / N - 1) < 1e-8);
      CHECK(std::abs(std::abs(r.restriction) - 0.5 * N) < 1e-6);
      CHECK(r.error <= 1e-9);
    }
  }
  for (double t : {0.3, 1.1, 2.0, 2.9}) {
    for (double f : {0.0, 0.8, 2.5, 4.4}) CHECK(residue_density(3, 0.5, t, f) == doctest::Approx(1.5 * std::sin(t)));
  }
  CHECK_THROWS_AS(sphere_residue_integral(0), std::invalid_argument);
  CHECK_THROWS_AS(sphere_residue_integral(3, 1.0, 1, 1e-15), std::domain_error);
}

TEST_CASE("loop integrals of the angle form") {
  auto circle = [](int n, int turns, double r, double cx, double cy) {
    std::vector<std::array<double, 2>> pts;
    for (int k = 0; k < n * turns; ++k) {
      const double a = 2 * kPi * k / n;
      pts.push_back({cx + r * std::cos(a), cy + r * std::sin(a)});
    }
    return pts;
  };
  // Oracle: Gauss-Legendre quadrature of (x dy - y dx)/(x^2+y^2) along each segment.
  auto quadrature = [](std::vector<std::array<double, 2>> pts) {
    pts.push_back(pts.front());
    double s = 0;
    for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
      const auto a = pts[k];
      const auto b = pts[k + 1];
      s += integrate(
          [&](double t) {
            const double x = a[0] + t * (b[0] - a[0]);
            const double y = a[1] + t * (b[1] - a[1]);
            return (x * (b[1] - a[1]) - y * (b[0] - a[0])) / (x * x + y * y);
          },
          0, 1, 64);
    }
    return s;
  };
  const auto unit = circle(400, 1, 1, 0, 0);
  CHECK(std::abs(loop_integral_eta1(unit) - 2 * kPi) < 1e-9);
  CHECK(std::abs(loop_integral_eta1(unit) - quadrature(unit)) < 1e-9);
  const auto twice = circle(400, 2, 1, 0, 0);
  CHECK(std::abs(loop_integral_eta1(twice) - 4 * kPi) < 1e-8);
  const auto off = circle(50, 1, 1, 3, 1);
  CHECK(std::abs(loop_integral_eta1(off)) < 1e-9);
  CHECK(std::abs(quadrature(off)) < 1e-9);
  const std::vector<std::array<double, 2>> square{{2, 2}, {3, 2}, {3, 3}, {2, 3}};
  CHECK(std::abs(loop_integral_eta1(square)) < 1e-9);
  std::vector<std::array<double, 2>> reversed(unit.rbegin(), unit.rend());
  CHECK(std::abs(loop_integral_eta1(reversed) + 2 * kPi) < 1e-9);
  const std::vector<std::array<double, 2>> skew{{0.2, -0.1}, {3, 0.5}, {-1, 2}, {-0.5, -1.5}};
  CHECK(std::abs(loop_integral_eta1(skew) - quadrature(skew)) < 1e-8);
  CHECK(std::abs(loop_integral_eta1(skew) - 2 * kPi) < 1e-9);

  const std::vector<std::array<double, 2>> through{{-1, 0}, {1, 0}, {0, 1}};
  CHECK_THROWS_AS(loop_integral_eta1(through), std::domain_error);
  CHECK_THROWS_AS(loop_integral_eta1({{1, 1}}), std::invalid_argument);
}
