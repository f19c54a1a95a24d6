#pragma once

// First-order differential operators on phase space, prequantization,
// the prequantum connection and its curvature, the circle family P_lambda,
// and the Bargmann polarization check.

#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "qwb/diffop.hpp"
#include "qwb/poly.hpp"

namespace qwb {

/// A^i d_i + B with polynomial coefficients.
class PhaseDiffOp {
 public:
  explicit PhaseDiffOp(TablePtr table);
  PhaseDiffOp(std::vector<PhasePoly> vector_part, PhasePoly scalar_part);

  static PhaseDiffOp multiplication(const PhasePoly& f);
  static PhaseDiffOp vector_field(std::vector<PhasePoly> components);
  static PhaseDiffOp partial(TablePtr table, std::size_t var);
  /// Throws if the operator has order above one.
  static PhaseDiffOp from_diffop(const DiffOperator& op);

  const TablePtr& table_ptr() const { return table_; }
  const std::vector<PhasePoly>& vector_part() const { return a_; }
  const PhasePoly& scalar_part() const { return b_; }
  const PhasePoly& component(std::size_t i) const { return a_.at(i); }
  bool is_zero() const;
  bool is_vector_field() const { return b_.is_zero(); }

  PhasePoly apply(const PhasePoly& f) const;
  DiffOperator to_diffop() const;

  PhaseDiffOp operator-() const;
  PhaseDiffOp& operator+=(const PhaseDiffOp& o);
  PhaseDiffOp& operator-=(const PhaseDiffOp& o);
  PhaseDiffOp& operator*=(const HbarScalar& c);
  friend PhaseDiffOp operator+(PhaseDiffOp a, const PhaseDiffOp& b) { return a += b; }
  friend PhaseDiffOp operator-(PhaseDiffOp a, const PhaseDiffOp& b) { return a -= b; }
  friend PhaseDiffOp operator*(PhaseDiffOp a, const HbarScalar& c) { return a *= c; }
  friend PhaseDiffOp operator*(const HbarScalar& c, PhaseDiffOp a) { return a *= c; }
  friend bool operator==(const PhaseDiffOp& a, const PhaseDiffOp& b);

  std::string to_string() const { return to_diffop().to_string(); }

 private:
  TablePtr table_;
  std::vector<PhasePoly> a_;
  PhasePoly b_;
};

/// theta = theta_i dx^i
struct ContactForm {
  std::vector<PhasePoly> coeffs;

  /// sum_j p_j dq_j on the canonical chart.
  static ContactForm canonical(const TablePtr& table);
  /// sum_j (i/2)(z_j dzb_j - zb_j dz_j) on the complex chart.
  static ContactForm kahler(const TablePtr& table);

  const TablePtr& table_ptr() const { return coeffs.at(0).table_ptr(); }
  /// theta(X) for the vector part of X.
  PhasePoly contract(const PhaseDiffOp& X) const;
  /// omega = d theta evaluated on the vector parts of X, Y.
  PhasePoly omega(const PhaseDiffOp& X, const PhaseDiffOp& Y) const;
};

/// X_f with X_f g = {f, g}.
PhaseDiffOp hamiltonian_vector_field(const PhasePoly& f, const PoissonStructure& P);

/// i hbar X_f + f + theta(X_f)
PhaseDiffOp prequantize(const PhasePoly& f, const ContactForm& theta, const PoissonStructure& P);
/// Canonical Poisson structure and the standard contact form of the chart.
PhaseDiffOp prequantize(const PhasePoly& f);

/// Exact commutator; the second-order parts cancel.
PhaseDiffOp diffop_commutator(const PhaseDiffOp& a, const PhaseDiffOp& b);

/// Adjoint for the Liouville measure: (A^i d_i + B)^+ = -d_i' o conj(A^i) + conj(B),
/// where i' is the conjugate variable of i.
PhaseDiffOp formal_adjoint(const PhaseDiffOp& op);

/// D_X = X - (i/hbar) theta(X)
PhaseDiffOp covariant_derivative(const PhaseDiffOp& X, const ContactForm& theta);
/// R(X, Y) = i([D_X, D_Y] - D_[X,Y]); X and Y must be vector fields.
PhasePoly connection_curvature(const PhaseDiffOp& X, const PhaseDiffOp& Y, const ContactForm& theta);

/// P(p^2/2m) - (1/2m) P(p) P(p) on one canonical pair (an order-2 operator).
DiffOperator prequant_defect_kinetic(const mpq_class& mass = 1);

/// Banded operator on Fourier modes e^{i n phi}, |n| <= K.
/// Band s maps mode n to mode n + s with weight band(s)[n + K].
class CircleModeOp {
 public:
  explicit CircleModeOp(int window);

  static CircleModeOp identity(int window);
  /// -i hbar d/dphi, eigenvalue n hbar on mode n.
  static CircleModeOp momentum(int window);
  /// Multiplication by e^{i s phi}; modes leaving the window are dropped.
  static CircleModeOp shift(int window, int s);

  int window() const { return window_; }
  const std::map<int, std::vector<HbarScalar>>& bands() const { return bands_; }
  HbarScalar entry(int row, int col) const;
  void set_entry(int row, int col, const HbarScalar& v);
  bool is_diagonal() const;
  /// Diagonal entry on mode n.
  HbarScalar eigenvalue(int n) const;
  std::vector<HbarScalar> spectrum() const;

  CircleModeOp& operator+=(const CircleModeOp& o);
  CircleModeOp& operator*=(const HbarScalar& c);
  friend CircleModeOp operator+(CircleModeOp a, const CircleModeOp& b) { return a += b; }
  friend CircleModeOp operator*(CircleModeOp a, const HbarScalar& c) { return a *= c; }
  friend CircleModeOp operator*(const CircleModeOp& a, const CircleModeOp& b);
  friend bool operator==(const CircleModeOp& a, const CircleModeOp& b);

 private:
  void prune();
  int window_;
  std::map<int, std::vector<HbarScalar>> bands_;
};

/// P_lambda(p) = hbar lambda - i hbar d/dphi, lambda in [0, 1).
CircleModeOp circle_prequantize(const mpq_class& lambda, int window);

/// a = P(zb) = hbar d_z + zb/2 with the Kahler contact form.
PhaseDiffOp bargmann_annihilation(const TablePtr& complex_table);
/// Dbar = D_{d_zb} = d_zb + z/(2 hbar)
PhaseDiffOp bargmann_dbar(const TablePtr& complex_table);
/// [a, Dbar] on one complex mode.
PhaseDiffOp bargmann_polarization_check();

nlohmann::json to_json(const PhaseDiffOp& op);
nlohmann::json to_json(const CircleModeOp& op);

}  // namespace qwb
