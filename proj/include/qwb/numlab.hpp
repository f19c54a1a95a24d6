#pragma once

// Floating-point laboratory: oscillator eigenfunctions, Wigner functions on
// grids and their marginals, the Stora quasi-distribution, the residue
// integral over the sphere, and loop integrals of the angle form.

#include <Eigen/Dense>

#include <array>
#include <cstdint>
#include <random>
#include <vector>

namespace qwb::numlab {

/// Fixed Gauss-Legendre rule on [-1, 1].
struct GaussLegendre {
  explicit GaussLegendre(int order);
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// sum over `panels` equal panels of [a, b] of an order-8 Gauss-Legendre rule.
template <class F>
double integrate(F&& f, double a, double b, int panels);

/// Normalized oscillator eigenfunction psi_n with unit mass and frequency:
/// (pi hbar)^(-1/4) (2^n n!)^(-1/2) H_n(x/sqrt(hbar)) exp(-x^2/(2 hbar)).
class WaveFunction1D {
 public:
  WaveFunction1D(int n, double hbar = 1.0);

  int index() const { return n_; }
  double hbar() const { return hbar_; }
  double operator()(double x) const;
  std::vector<double> sample(const std::vector<double>& xs) const;
  /// |x| beyond which |psi| < 1e-16 times its peak scale.
  double support_radius() const;
  /// |phi(p)|^2 from a direct Fourier quadrature of psi.
  double momentum_density(double p) const;

 private:
  int n_;
  double hbar_;
};

WaveFunction1D hermite_wavefunction(int n, double hbar = 1.0);

struct Grid2D {
  double x_min, x_max;
  int nx;
  double p_min, p_max;
  int np;

  double x(int i) const { return nx == 1 ? x_min : x_min + (x_max - x_min) * i / (nx - 1); }
  double p(int j) const { return np == 1 ? p_min : p_min + (p_max - p_min) * j / (np - 1); }
  double dx() const { return (x_max - x_min) / (nx - 1); }
  double dp() const { return (p_max - p_min) / (np - 1); }
  /// Symmetric square grid of the given half-width.
  static Grid2D square(double half_width, int points);
};

struct WignerField {
  Grid2D grid;
  double hbar;
  /// Row-major: values[i * np + j] = F(x_i, p_j).
  std::vector<double> values;
  /// Estimated quadrature error of the y-integral (resolution self-check plus tail bound).
  double truncation_error = 0;
  int panels = 0;

  double at(int i, int j) const { return values[static_cast<std::size_t>(i) * grid.np + j]; }
  double max_abs() const;
  /// Largest |F| on the outer frame of the grid.
  double boundary_max() const;
};

/// F(x,p) = (1/(pi hbar)) int psi(x+y) psi(x-y) cos(2py/hbar) dy on the grid.
WignerField wigner_transform(const WaveFunction1D& psi, const Grid2D& grid, double hbar);
/// Single-point evaluation with the same quadrature.
double wigner_value(const WaveFunction1D& psi, double x, double p, double hbar, int panels = 0);

struct MarginalReport {
  double position_deviation;  // max_x |int F dp - |psi(x)|^2|
  double momentum_deviation;  // max_p |int F dx - |phi(p)|^2|
  double total_mass;          // int int F dx dp
  double boundary;            // max |F| on the grid frame
};

/// Throws std::domain_error if the grid frame carries |F| above `tail`.
MarginalReport marginal_check(const WignerField& F, const WaveFunction1D& psi, double tail = 1e-10);

using CMatrix = Eigen::MatrixXcd;

/// Hermitian, unit trace, positive semidefinite within tolerance.
class DensityMatrix {
 public:
  explicit DensityMatrix(CMatrix rho, double tolerance = 1e-10);
  static DensityMatrix pure(const Eigen::VectorXcd& psi);
  static DensityMatrix maximally_mixed(int d);

  const CMatrix& matrix() const { return rho_; }
  int dimension() const { return static_cast<int>(rho_.rows()); }

 private:
  CMatrix rho_;
};

/// F(a, b) = Re(<a|b><b|rho|a>) with |a>, |b> the columns of the two bases.
Eigen::MatrixXd stora_distribution(const DensityMatrix& rho, const CMatrix& basis_a, const CMatrix& basis_b,
                                   double tolerance = 1e-12);

/// Deterministic sampler for the property checks (Box-Muller over raw mt19937_64 output).
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed);
  double uniform();
  double normal();
  CMatrix gaussian_matrix(int rows, int cols);
  /// rho = A A^H / tr(A A^H)
  DensityMatrix random_density(int d);
  /// Orthonormal columns from the QR factorization of a Gaussian matrix.
  CMatrix random_basis(int d);

 private:
  std::mt19937_64 engine_;
};

/// Eigenbases of sigma_z and sigma_x (columns ordered up/down and +/-).
CMatrix spin_z_basis();
CMatrix spin_x_basis();
/// cos(t/2)|up> + e^{i f} sin(t/2)|down>
Eigen::VectorXcd bloch_state(double theta, double phi);

struct NegativityWitness {
  double value;
  double theta;
  double phi;
  int row;
  int col;
};

/// Scans pure spin-1/2 states on a (steps x 2 steps) Bloch grid for the smallest
/// Stora value with respect to the sigma_z and sigma_x eigenbases.
NegativityWitness stora_negativity_scan(int steps);

struct SphereResult {
  double value;        // int Res(omega_3) / (4 pi hbar)
  double restriction;  // int omega|_sphere / (4 pi hbar), omega = i dz ^ dzb, same chart
  double error;        // |value(n) - value(2n)|
  int resolution;
};

/// Residue of omega_3 = dxi1 dxi2 dxi3 / f, f = (|xi|^2 - (hbar N)^2)/2, pulled
/// back by xi = hbar N (sin t cos f, sin t sin f, cos t) and integrated.
SphereResult sphere_residue_integral(int N, double hbar = 1.0, int resolution = 16, double tolerance = 1e-9);

/// Coefficient of Res(omega_3) on dt ^ df at a point of the sphere of radius hbar N.
double residue_density(int N, double hbar, double theta, double phi);

/// Integral of (x dy - y dx)/(x^2 + y^2) along a closed polyline.
/// The path is closed automatically if the last point differs from the first.
double loop_integral_eta1(const std::vector<std::array<double, 2>>& path, double margin = 1e-9);

}  // namespace qwb::numlab

#include "qwb/numlab_impl.hpp"
