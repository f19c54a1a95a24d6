#pragma once

// Truncated Bargmann-Fock representations in the monomial basis: ladder
// operators, Gram matrix, oscillator Hamiltonian, the Schwinger SU(2) model
// and Jordan-Wigner CAR matrices. All entries are exact.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "qwb/poly.hpp"

namespace qwb {

/// Exact matrix over HbarScalar, stored by rows (only nonzero entries kept).
class ExactMatrix {
 public:
  using Row = std::map<std::size_t, HbarScalar>;

  ExactMatrix(std::size_t rows, std::size_t cols);
  static ExactMatrix identity(std::size_t n);
  static ExactMatrix diagonal(const std::vector<HbarScalar>& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Row& row(std::size_t i) const { return data_.at(i); }
  HbarScalar get(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, const HbarScalar& v);
  void add(std::size_t i, std::size_t j, const HbarScalar& v);
  std::size_t nonzeros() const;
  bool is_zero() const { return nonzeros() == 0; }
  bool is_diagonal() const;

  ExactMatrix transpose() const;
  /// Transpose with conjugated entries (hbar treated as real).
  ExactMatrix adjoint() const;
  ExactMatrix substitute_hbar(const mpq_class& value) const;
  /// Rows and columns restricted to the given index list (in that order).
  ExactMatrix block(const std::vector<std::size_t>& indices) const;
  /// Column j as a sparse vector.
  Row column(std::size_t j) const;

  ExactMatrix operator-() const;
  ExactMatrix& operator+=(const ExactMatrix& o);
  ExactMatrix& operator-=(const ExactMatrix& o);
  ExactMatrix& operator*=(const HbarScalar& c);
  friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) { return a += b; }
  friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) { return a -= b; }
  friend ExactMatrix operator*(ExactMatrix a, const HbarScalar& c) { return a *= c; }
  friend ExactMatrix operator*(const HbarScalar& c, ExactMatrix a) { return a *= c; }
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Row> data_;
};

ExactMatrix commutator(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix anticommutator(const ExactMatrix& a, const ExactMatrix& b);

/// [{row, col, value}] with value in canonical text.
nlohmann::json to_json(const ExactMatrix& m);

/// Monomials z^alpha with every alpha_i < cutoff, ordered by total degree and
/// then graded-lexicographically.
class BargmannBasis {
 public:
  /// hbar is substituted by the given positive rational; nullopt keeps it formal.
  BargmannBasis(std::size_t modes, int cutoff, std::optional<mpq_class> hbar = mpq_class(1));

  std::size_t modes() const { return modes_; }
  int cutoff() const { return cutoff_; }
  const std::optional<mpq_class>& hbar_value() const { return hbar_; }
  /// hbar as a scalar: the rational value, or the formal generator.
  HbarScalar hbar() const;
  std::size_t size() const { return states_.size(); }
  const Monomial& state(std::size_t k) const { return states_.at(k); }
  std::optional<std::size_t> index(const Monomial& alpha) const;

  /// No exponent at the cutoff boundary (every alpha_i < cutoff - 1).
  bool is_interior(std::size_t k) const;
  std::vector<std::size_t> interior() const;
  std::vector<std::size_t> of_degree(int degree) const;

 private:
  std::size_t modes_;
  int cutoff_;
  std::optional<mpq_class> hbar_;
  std::vector<Monomial> states_;
  std::map<Monomial, std::size_t> index_;
};

struct LadderMatrices {
  std::vector<ExactMatrix> a;       // hbar d/dz_i
  std::vector<ExactMatrix> a_star;  // multiplication by z_i, truncated at the cutoff
};

LadderMatrices ladder_matrices(const BargmannBasis& basis);
/// diag(prod alpha_i! hbar^alpha_i)
ExactMatrix gram_matrix(const BargmannBasis& basis);

/// (a_i*)^H G - G a_i for mode i; zero exactly when a_i is the G-adjoint of a_i*.
ExactMatrix adjoint_defect(const BargmannBasis& basis, std::size_t mode);
/// [a_i, a_j*] - hbar delta_ij Id
ExactMatrix ccr_defect(const BargmannBasis& basis, std::size_t i, std::size_t j);

/// H0 = sum_i (a_i* a_i + a_i a_i*)/2
ExactMatrix oscillator_hamiltonian(const BargmannBasis& basis);

struct Su2Matrices {
  ExactMatrix M1, M2, M3, M_plus, M_minus, casimir;
};

/// M_j = a* sigma_j a / 2 on two modes; casimir = M3^2 + (M+ M- + M- M+)/2.
Su2Matrices schwinger_su2(const BargmannBasis& basis);

struct CarAlgebra {
  int modes;
  std::vector<ExactMatrix> a;
  std::vector<ExactMatrix> a_star;
  ExactMatrix number_operator() const;
};

/// Jordan-Wigner matrices of size 2^m, 1 <= m <= 12.
CarAlgebra car_matrices(int modes);

}  // namespace qwb
