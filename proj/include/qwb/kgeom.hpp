#pragma once

// Exact 4x4 matrix checks of the quaternionic structure of R^4 and the
// complex symplectic form Omega = omega_J + i omega_K on C^2.

#include <array>
#include <string>
#include <vector>

#include "qwb/random.hpp"
#include "qwb/scalar.hpp"

namespace qwb::kgeom {

using Matrix2 = std::array<QiScalar, 4>;
using Vector4 = std::array<QiScalar, 4>;

class Matrix4 {
 public:
  Matrix4() = default;
  static Matrix4 identity();
  /// Kronecker product: block (r, c) of the result is a(r, c) * b.
  static Matrix4 kron(const Matrix2& a, const Matrix2& b);

  const QiScalar& operator()(int r, int c) const { return data_[static_cast<std::size_t>(4 * r + c)]; }
  QiScalar& operator()(int r, int c) { return data_[static_cast<std::size_t>(4 * r + c)]; }

  bool is_zero() const;
  Matrix4 transpose() const;
  Matrix4 operator-() const;
  friend Matrix4 operator+(const Matrix4& a, const Matrix4& b);
  friend Matrix4 operator-(const Matrix4& a, const Matrix4& b);
  friend Matrix4 operator*(const Matrix4& a, const Matrix4& b);
  friend Matrix4 operator*(const QiScalar& s, const Matrix4& a);
  friend Vector4 operator*(const Matrix4& a, const Vector4& v);
  friend bool operator==(const Matrix4& a, const Matrix4& b) { return a.data_ == b.data_; }

  /// Rows as "[a, b, c, d]" joined by "; ".
  std::string to_string() const;

 private:
  std::array<QiScalar, 16> data_{};
};

Matrix2 epsilon();  // [[0, 1], [-1, 0]]
Matrix2 sigma1();
Matrix2 sigma3();
Matrix2 unit2();

/// Left multiplication by I, J, K on q = q0 + q1 I + q2 J + q3 K in the basis (q0..q3).
Matrix4 left_i();  // -1 (x) eps
Matrix4 left_j();  // -eps (x) sigma3
Matrix4 left_k();  // -eps (x) sigma1
/// q0 + q1 I_L + q2 J_L + q3 K_L
Matrix4 left_quaternion(const Vector4& q);

/// Coefficient matrices of omega_J and omega_K in the basis (dz1, dz2, dzb1, dzb2).
Matrix4 form_j();  // sigma3 (x) eps
Matrix4 form_k();  // eps (x) 1
/// Complex structure for which Omega is of type (2,0) in the same basis: J K = sigma1 (x) eps.
Matrix4 form_i();

/// Omega(X, Y) = X^T (J + i K) Y
QiScalar omega(const Vector4& x, const Vector4& y);
/// (dw ^ dz)(X, Y), w = z1 - i zb2, z = z2 + i zb1
QiScalar omega_wz(const Vector4& x, const Vector4& y);

struct Check {
  std::string name;
  bool passed;
  std::string witness;
};

std::vector<Check> quaternion_reps_check(Rng& rng, int samples = 20);
/// The product (J + i K)(1 + i I).
Matrix4 zero_divisor_product();
std::vector<Check> zero_divisor_check(Rng& rng, int samples = 20);
/// sum |Omega(X,Y) - (dw ^ dz)(X,Y)|^2 over random real tangent vectors; exactly 0.
mpq_class holomorphic_coordinates_defect(Rng& rng, int samples = 50);
std::vector<Check> holomorphic_coordinates_check(Rng& rng, int samples = 50);

/// A real tangent vector in the (z, zb) basis: components (a, b, conj(a), conj(b)).
Vector4 random_real_tangent(Rng& rng, long bound = 6);

}  // namespace qwb::kgeom
