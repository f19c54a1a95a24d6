#include "qwb/numlab.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>

namespace qwb::numlab {

namespace {

constexpr double kPi = 3.14159265358979323846;

double legendre(int n, double x, double* derivative) {
  double p0 = 1;
  double p1 = x;
  if (n == 0) {
    *derivative = 0;
    return 1;
  }
  for (int k = 2; k <= n; ++k) {
    const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  *derivative = n * (x * p1 - p0) / (x * x - 1);
  return p1;
}

}  // namespace

GaussLegendre::GaussLegendre(int order) {
  if (order < 1) throw std::invalid_argument("GaussLegendre: order must be positive");
  nodes.resize(static_cast<std::size_t>(order));
  weights.resize(static_cast<std::size_t>(order));
  for (int i = 0; i < order; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (order + 0.5));
    double d = 0;
    for (int it = 0; it < 100; ++it) {
      const double p = legendre(order, x, &d);
      const double dx = p / d;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    legendre(order, x, &d);
    nodes[static_cast<std::size_t>(i)] = x;
    weights[static_cast<std::size_t>(i)] = 2 / ((1 - x * x) * d * d);
  }
}

const GaussLegendre& gauss_legendre_8() {
  static const GaussLegendre rule(8);
  return rule;
}

// ---------------------------------------------------------------------------
// Wave functions

WaveFunction1D::WaveFunction1D(int n, double hbar) : n_(n), hbar_(hbar) {
  if (n < 0 || n > 20) throw std::invalid_argument("hermite_wavefunction: index must be in [0, 20]");
  if (!(hbar > 0)) throw std::invalid_argument("hermite_wavefunction: hbar must be positive");
}

WaveFunction1D hermite_wavefunction(int n, double hbar) { return WaveFunction1D(n, hbar); }

double WaveFunction1D::operator()(double x) const {
  const double u = x / std::sqrt(hbar_);
  double prev = 0;
  double cur = std::pow(kPi * hbar_, -0.25) * std::exp(-0.5 * u * u);
  for (int k = 0; k < n_; ++k) {
    const double next = std::sqrt(2.0 / (k + 1)) * u * cur - std::sqrt(static_cast<double>(k) / (k + 1)) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

std::vector<double> WaveFunction1D::sample(const std::vector<double>& xs) const {
  std::vector<double> out;
  out.reserve(xs.size());
  for (double x : xs) out.push_back((*this)(x));
  return out;
}

double WaveFunction1D::support_radius() const { return std::sqrt(hbar_) * (std::sqrt(2.0 * n_ + 1) + 8.5); }

double WaveFunction1D::momentum_density(double p) const {
  const double R = support_radius();
  auto transform = [&](int panels) {
    const double re = integrate([&](double x) { return (*this)(x) * std::cos(p * x / hbar_); }, -R, R, panels);
    const double im = integrate([&](double x) { return (*this)(x) * std::sin(p * x / hbar_); }, -R, R, panels);
    return (re * re + im * im) / (2 * kPi * hbar_);
  };
  int panels = 16;
  double last = transform(panels);
  while (panels < 8192) {
    panels *= 2;
    const double next = transform(panels);
    if (std::abs(next - last) < 1e-15) return next;
    last = next;
  }
  return last;
}

// ---------------------------------------------------------------------------
// Wigner functions

Grid2D Grid2D::square(double half_width, int points) {
  if (points < 2) throw std::invalid_argument("Grid2D: need at least two points per axis");
  return {-half_width, half_width, points, -half_width, half_width, points};
}

double WignerField::max_abs() const {
  double m = 0;
  for (double v : values) m = std::max(m, std::abs(v));
  return m;
}

double WignerField::boundary_max() const {
  double m = 0;
  for (int i = 0; i < grid.nx; ++i) {
    for (int j = 0; j < grid.np; ++j) {
      if (i == 0 || j == 0 || i == grid.nx - 1 || j == grid.np - 1) m = std::max(m, std::abs(at(i, j)));
    }
  }
  return m;
}

namespace {

// Nodes and weights of the y-rule on [0, Y] for a given panel count.
void y_rule(double Y, int panels, std::vector<double>& ys, std::vector<double>& ws) {
  const GaussLegendre& gl = gauss_legendre_8();
  ys.clear();
  ws.clear();
  const double h = Y / panels;
  for (int k = 0; k < panels; ++k) {
    const double mid = (k + 0.5) * h;
    for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
      ys.push_back(mid + 0.5 * h * gl.nodes[i]);
      ws.push_back(0.5 * h * gl.weights[i]);
    }
  }
}

// The integrand is even in y, so F = (2/(pi hbar)) int_0^Y psi(x+y) psi(x-y) cos(2py/hbar) dy.
double wigner_point(const WaveFunction1D& psi, double x, double p, double hbar, int panels) {
  const double Y = psi.support_radius() - std::abs(x);
  if (Y <= 0) return 0;
  std::vector<double> ys;
  std::vector<double> ws;
  y_rule(Y, panels, ys, ws);
  double s = 0;
  for (std::size_t k = 0; k < ys.size(); ++k) s += ws[k] * psi(x + ys[k]) * psi(x - ys[k]) * std::cos(2 * p * ys[k] / hbar);
  return 2 * s / (kPi * hbar);
}

struct PanelChoice {
  int panels;
  double error;
};

// Doubles the panel count until the probes agree to 1e-13.
PanelChoice choose_panels(const WaveFunction1D& psi, double p_extent, double hbar) {
  const std::array<std::array<double, 2>, 4> probes{{{0, 0}, {0, p_extent}, {0.5, 0.5 * p_extent}, {1, p_extent}}};
  auto eval = [&](int panels) {
    std::array<double, 4> out{};
    for (std::size_t k = 0; k < probes.size(); ++k) out[k] = wigner_point(psi, probes[k][0], probes[k][1], hbar, panels);
    return out;
  };
  int panels = 8;
  auto last = eval(panels);
  double diff = std::numeric_limits<double>::infinity();
  while (panels < 4096) {
    const auto next = eval(panels * 2);
    diff = 0;
    for (std::size_t k = 0; k < probes.size(); ++k) diff = std::max(diff, std::abs(next[k] - last[k]));
    panels *= 2;
    last = next;
    if (diff < 1e-13) break;
  }
  return {panels, diff};
}

}  // namespace

double wigner_value(const WaveFunction1D& psi, double x, double p, double hbar, int panels) {
  if (!(hbar > 0)) throw std::invalid_argument("wigner_transform: hbar must be positive");
  if (panels <= 0) panels = choose_panels(psi, std::max(1.0, std::abs(p)), hbar).panels;
  return wigner_point(psi, x, p, hbar, panels);
}

WignerField wigner_transform(const WaveFunction1D& psi, const Grid2D& grid, double hbar) {
  if (!(hbar > 0)) throw std::invalid_argument("wigner_transform: hbar must be positive");
  if (grid.nx < 1 || grid.np < 1) throw std::invalid_argument("wigner_transform: empty grid");
  const double p_extent = std::max({1.0, std::abs(grid.p_min), std::abs(grid.p_max)});
  const PanelChoice choice = choose_panels(psi, p_extent, hbar);
  WignerField F{grid, hbar, std::vector<double>(static_cast<std::size_t>(grid.nx) * grid.np, 0.0), 0, choice.panels};
  // Tail of psi(x+y) psi(x-y) beyond the support radius is below 1e-15.
  F.truncation_error = choice.error + 1e-15;
  std::vector<double> ys;
  std::vector<double> ws;
  std::vector<double> g;
  for (int i = 0; i < grid.nx; ++i) {
    const double x = grid.x(i);
    const double Y = psi.support_radius() - std::abs(x);
    if (Y <= 0) continue;
    y_rule(Y, choice.panels, ys, ws);
    g.resize(ys.size());
    for (std::size_t k = 0; k < ys.size(); ++k) g[k] = ws[k] * psi(x + ys[k]) * psi(x - ys[k]);
    for (int j = 0; j < grid.np; ++j) {
      const double p = grid.p(j);
      double s = 0;
      for (std::size_t k = 0; k < ys.size(); ++k) s += g[k] * std::cos(2 * p * ys[k] / hbar);
      F.values[static_cast<std::size_t>(i) * grid.np + j] = 2 * s / (kPi * hbar);
    }
  }
  return F;
}

MarginalReport marginal_check(const WignerField& F, const WaveFunction1D& psi, double tail) {
  const Grid2D& g = F.grid;
  if (g.nx < 3 || g.np < 3) throw std::invalid_argument("marginal_check: grid too small");
  MarginalReport r{0, 0, 0, F.boundary_max()};
  if (r.boundary > tail) {
    throw std::domain_error("marginal_check: grid too narrow, |F| on the boundary is " + std::to_string(r.boundary));
  }
  auto trap = [](int k, int n) { return (k == 0 || k == n - 1) ? 0.5 : 1.0; };
  for (int i = 0; i < g.nx; ++i) {
    double s = 0;
    for (int j = 0; j < g.np; ++j) s += trap(j, g.np) * F.at(i, j);
    s *= g.dp();
    const double rho = psi(g.x(i)) * psi(g.x(i));
    r.position_deviation = std::max(r.position_deviation, std::abs(s - rho));
    r.total_mass += trap(i, g.nx) * s * g.dx();
  }
  for (int j = 0; j < g.np; ++j) {
    double s = 0;
    for (int i = 0; i < g.nx; ++i) s += trap(i, g.nx) * F.at(i, j);
    s *= g.dx();
    r.momentum_deviation = std::max(r.momentum_deviation, std::abs(s - psi.momentum_density(g.p(j))));
  }
  return r;
}

// ---------------------------------------------------------------------------
// Density matrices and the Stora distribution

DensityMatrix::DensityMatrix(CMatrix rho, double tolerance) : rho_(std::move(rho)) {
  if (rho_.rows() == 0 || rho_.rows() != rho_.cols()) throw std::invalid_argument("DensityMatrix: must be square");
  if ((rho_ - rho_.adjoint()).norm() > tolerance) throw std::invalid_argument("DensityMatrix: not hermitian");
  if (std::abs(rho_.trace() - 1.0) > tolerance) throw std::invalid_argument("DensityMatrix: trace is not one");
  Eigen::SelfAdjointEigenSolver<CMatrix> es(rho_);
  if (es.eigenvalues().minCoeff() < -tolerance) throw std::invalid_argument("DensityMatrix: not positive");
}

DensityMatrix DensityMatrix::pure(const Eigen::VectorXcd& psi) {
  const Eigen::VectorXcd v = psi / psi.norm();
  return DensityMatrix(v * v.adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed(int d) {
  return DensityMatrix(CMatrix::Identity(d, d) / static_cast<double>(d));
}

Eigen::MatrixXd stora_distribution(const DensityMatrix& rho, const CMatrix& basis_a, const CMatrix& basis_b,
                                   double tolerance) {
  const int d = rho.dimension();
  for (const CMatrix* B : {&basis_a, &basis_b}) {
    if (B->rows() != d || B->cols() != d) throw std::invalid_argument("stora_distribution: basis has the wrong shape");
    if ((B->adjoint() * *B - CMatrix::Identity(d, d)).cwiseAbs().maxCoeff() > tolerance) {
      throw std::invalid_argument("stora_distribution: basis is not orthonormal");
    }
  }
  const CMatrix overlap = basis_a.adjoint() * basis_b;                     // <a|b>
  const CMatrix middle = basis_b.adjoint() * rho.matrix() * basis_a;       // <b|rho|a>
  Eigen::MatrixXd F(d, d);
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) F(a, b) = std::real(overlap(a, b) * middle(b, a));
  }
  return F;
}

Sampler::Sampler(std::uint64_t seed) : engine_(seed) {}

double Sampler::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double Sampler::normal() {
  double u = uniform();
  while (u == 0) u = uniform();
  const double v = uniform();
  return std::sqrt(-2 * std::log(u)) * std::cos(2 * kPi * v);
}

CMatrix Sampler::gaussian_matrix(int rows, int cols) {
  CMatrix m(rows, cols);
  for (int j = 0; j < cols; ++j) {
    for (int i = 0; i < rows; ++i) {
      const double re = normal();
      const double im = normal();
      m(i, j) = {re, im};
    }
  }
  return m;
}

DensityMatrix Sampler::random_density(int d) {
  const CMatrix A = gaussian_matrix(d, d);
  CMatrix rho = A * A.adjoint();
  rho /= rho.trace().real();
  rho = 0.5 * (rho + rho.adjoint());
  return DensityMatrix(rho);
}

CMatrix Sampler::random_basis(int d) {
  Eigen::HouseholderQR<CMatrix> qr(gaussian_matrix(d, d));
  return qr.householderQ() * CMatrix::Identity(d, d);
}

CMatrix spin_z_basis() { return CMatrix::Identity(2, 2); }

CMatrix spin_x_basis() {
  CMatrix b(2, 2);
  const double s = 1 / std::sqrt(2.0);
  b << s, s, s, -s;
  return b;
}

Eigen::VectorXcd bloch_state(double theta, double phi) {
  Eigen::VectorXcd v(2);
  v << std::cos(theta / 2), std::polar(std::sin(theta / 2), phi);
  return v;
}

NegativityWitness stora_negativity_scan(int steps) {
  if (steps < 2) throw std::invalid_argument("stora_negativity_scan: need at least two steps");
  NegativityWitness best{std::numeric_limits<double>::infinity(), 0, 0, 0, 0};
  const CMatrix A = spin_z_basis();
  const CMatrix B = spin_x_basis();
  for (int i = 0; i <= steps; ++i) {
    const double theta = kPi * i / steps;
    for (int k = 0; k < 2 * steps; ++k) {
      const double phi = kPi * k / steps;
      const Eigen::MatrixXd F = stora_distribution(DensityMatrix::pure(bloch_state(theta, phi)), A, B);
      Eigen::Index r = 0;
      Eigen::Index c = 0;
      const double m = F.minCoeff(&r, &c);
      if (m < best.value) best = {m, theta, phi, static_cast<int>(r), static_cast<int>(c)};
    }
  }
  return best;
}

// ---------------------------------------------------------------------------
// Sphere

double residue_density(int N, double hbar, double theta, double phi) {
  const double R = hbar * N;
  const double st = std::sin(theta);
  const double ct = std::cos(theta);
  const double sp = std::sin(phi);
  const double cp = std::cos(phi);
  const std::array<double, 3> xi{R * st * cp, R * st * sp, R * ct};
  const std::array<double, 3> dt{R * ct * cp, R * ct * sp, -R * st};
  const std::array<double, 3> df{-R * st * sp, R * st * cp, 0};
  // Res = (-1)^j dxi_a ^ dxi_b / (df/dxi_j), {a, b} the other two indices, using
  // the chart j where |xi_j| is largest; df/dxi_j = xi_j.
  std::size_t j = 0;
  for (std::size_t k = 1; k < 3; ++k) {
    if (std::abs(xi[k]) > std::abs(xi[j])) j = k;
  }
  const std::size_t a = j == 0 ? 1 : 0;
  const std::size_t b = j == 2 ? 1 : 2;
  const double wedge = dt[a] * df[b] - dt[b] * df[a];
  const double sign = j % 2 ? -1.0 : 1.0;
  return sign * wedge / xi[j];
}

namespace {

// omega = i dz ^ dzb on C^2 pulled back along the section
// z1 = sqrt(hbar N) cos(t/2) e^{i f/2}, z2 = sqrt(hbar N) sin(t/2) e^{-i f/2},
// which satisfies 2 z1 conj(z2) = xi1 + i xi2 and |z1|^2 - |z2|^2 = xi3.
double restriction_density(int N, double hbar, double theta, double phi) {
  using C = std::complex<double>;
  const double s = std::sqrt(hbar * N);
  const C e1 = std::polar(1.0, phi / 2);
  const C e2 = std::polar(1.0, -phi / 2);
  const std::array<C, 2> z{s * std::cos(theta / 2) * e1, s * std::sin(theta / 2) * e2};
  const std::array<C, 2> u{-0.5 * s * std::sin(theta / 2) * e1, 0.5 * s * std::cos(theta / 2) * e2};
  const std::array<C, 2> v{C(0, 0.5) * z[0], C(0, -0.5) * z[1]};
  C w = 0;
  for (std::size_t k = 0; k < 2; ++k) w += u[k] * std::conj(v[k]) - v[k] * std::conj(u[k]);
  return std::real(C(0, 1) * w);
}

double sphere_integral(double (*density)(int, double, double, double), int N, double hbar, int resolution) {
  return integrate(
      [&](double theta) {
        return integrate([&](double phi) { return density(N, hbar, theta, phi); }, 0, 2 * kPi, resolution);
      },
      0, kPi, resolution);
}

}  // namespace

SphereResult sphere_residue_integral(int N, double hbar, int resolution, double tolerance) {
  if (N < 1) throw std::invalid_argument("sphere_residue_integral: N must be positive");
  if (!(hbar > 0)) throw std::invalid_argument("sphere_residue_integral: hbar must be positive");
  if (resolution < 1) throw std::invalid_argument("sphere_residue_integral: resolution must be positive");
  const double norm = 4 * kPi * hbar;
  const double coarse = sphere_integral(residue_density, N, hbar, resolution) / norm;
  const double fine = sphere_integral(residue_density, N, hbar, 2 * resolution) / norm;
  const double error = std::abs(fine - coarse);
  if (error > tolerance) {
    throw std::domain_error("sphere_residue_integral: resolution too coarse (estimated error " +
                            std::to_string(error) + ")");
  }
  const double restriction = sphere_integral(restriction_density, N, hbar, 2 * resolution) / norm;
  return {fine, restriction, error, resolution};
}

// ---------------------------------------------------------------------------
// Loop integrals

// Along a straight segment the angle form integrates to the signed angle the
// segment subtends at the origin.
double loop_integral_eta1(const std::vector<std::array<double, 2>>& path, double margin) {
  if (path.size() < 2) throw std::invalid_argument("loop_integral_eta1: need at least two points");
  std::vector<std::array<double, 2>> pts = path;
  if (pts.front() != pts.back()) pts.push_back(pts.front());
  double total = 0;
  for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
    const auto& a = pts[k];
    const auto& b = pts[k + 1];
    const double ex = b[0] - a[0];
    const double ey = b[1] - a[1];
    const double len2 = ex * ex + ey * ey;
    double t = len2 > 0 ? -(a[0] * ex + a[1] * ey) / len2 : 0;
    t = std::clamp(t, 0.0, 1.0);
    const double dist = std::hypot(a[0] + t * ex, a[1] + t * ey);
    if (dist < margin) throw std::domain_error("loop_integral_eta1: path passes too close to the origin");
    const double cross = a[0] * b[1] - a[1] * b[0];
    const double dot = a[0] * b[0] + a[1] * b[1];
    total += std::atan2(cross, dot);
  }
  return total;
}

}  // namespace qwb::numlab
