#include "qwb/kgeom.hpp"

namespace qwb::kgeom {

Matrix4 Matrix4::identity() {
  Matrix4 m;
  for (int k = 0; k < 4; ++k) m(k, k) = 1;
  return m;
}

Matrix4 Matrix4::kron(const Matrix2& a, const Matrix2& b) {
  Matrix4 m;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) m(r, c) = a[static_cast<std::size_t>(2 * (r / 2) + c / 2)] * b[static_cast<std::size_t>(2 * (r % 2) + c % 2)];
  }
  return m;
}

bool Matrix4::is_zero() const {
  for (const auto& x : data_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Matrix4 Matrix4::transpose() const {
  Matrix4 m;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) m(r, c) = (*this)(c, r);
  }
  return m;
}

Matrix4 Matrix4::operator-() const { return QiScalar(-1) * *this; }

Matrix4 operator+(const Matrix4& a, const Matrix4& b) {
  Matrix4 m;
  for (std::size_t k = 0; k < 16; ++k) m.data_[k] = a.data_[k] + b.data_[k];
  return m;
}

Matrix4 operator-(const Matrix4& a, const Matrix4& b) { return a + -b; }

Matrix4 operator*(const Matrix4& a, const Matrix4& b) {
  Matrix4 m;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      QiScalar s;
      for (int k = 0; k < 4; ++k) s += a(r, k) * b(k, c);
      m(r, c) = s;
    }
  }
  return m;
}

Matrix4 operator*(const QiScalar& s, const Matrix4& a) {
  Matrix4 m;
  for (std::size_t k = 0; k < 16; ++k) m.data_[k] = s * a.data_[k];
  return m;
}

Vector4 operator*(const Matrix4& a, const Vector4& v) {
  Vector4 out{};
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) out[static_cast<std::size_t>(r)] += a(r, c) * v[static_cast<std::size_t>(c)];
  }
  return out;
}

std::string Matrix4::to_string() const {
  std::string out;
  for (int r = 0; r < 4; ++r) {
    if (r > 0) out += "; ";
    out += "[";
    for (int c = 0; c < 4; ++c) {
      if (c > 0) out += ", ";
      out += (*this)(r, c).to_string();
    }
    out += "]";
  }
  return out;
}

Matrix2 epsilon() { return {0, 1, -1, 0}; }
Matrix2 sigma1() { return {0, 1, 1, 0}; }
Matrix2 sigma3() { return {1, 0, 0, -1}; }
Matrix2 unit2() { return {1, 0, 0, 1}; }

Matrix4 left_i() { return -Matrix4::kron(unit2(), epsilon()); }
Matrix4 left_j() { return -Matrix4::kron(epsilon(), sigma3()); }
Matrix4 left_k() { return -Matrix4::kron(epsilon(), sigma1()); }

Matrix4 left_quaternion(const Vector4& q) {
  return q[0] * Matrix4::identity() + q[1] * left_i() + q[2] * left_j() + q[3] * left_k();
}

Matrix4 form_j() { return Matrix4::kron(sigma3(), epsilon()); }
Matrix4 form_k() { return Matrix4::kron(epsilon(), unit2()); }
Matrix4 form_i() { return form_j() * form_k(); }

namespace {

QiScalar bilinear(const Vector4& x, const Matrix4& m, const Vector4& y) {
  const Vector4 my = m * y;
  QiScalar s;
  for (std::size_t k = 0; k < 4; ++k) s += x[k] * my[k];
  return s;
}

QiScalar dot(const Vector4& a, const Vector4& b) {
  QiScalar s;
  for (std::size_t k = 0; k < 4; ++k) s += a[k] * b[k];
  return s;
}

Check make_check(std::string name, bool passed, std::string witness) {
  return {std::move(name), passed, std::move(witness)};
}

Vector4 random_rational_vector(Rng& rng, long bound) {
  Vector4 v{};
  for (auto& x : v) x = QiScalar::rational(rng.uniform(-bound, bound), rng.uniform(1, 3));
  return v;
}

}  // namespace

QiScalar omega(const Vector4& x, const Vector4& y) {
  return bilinear(x, form_j() + QiScalar::i() * form_k(), y);
}

QiScalar omega_wz(const Vector4& x, const Vector4& y) {
  const QiScalar i = QiScalar::i();
  const Vector4 dw{1, 0, 0, -i};
  const Vector4 dz{0, 1, i, 0};
  return dot(dw, x) * dot(dz, y) - dot(dw, y) * dot(dz, x);
}

Vector4 random_real_tangent(Rng& rng, long bound) {
  const QiScalar a(mpq_class(rng.uniform(-bound, bound), rng.uniform(1, 3)),
                   mpq_class(rng.uniform(-bound, bound), rng.uniform(1, 3)));
  const QiScalar b(mpq_class(rng.uniform(-bound, bound), rng.uniform(1, 3)),
                   mpq_class(rng.uniform(-bound, bound), rng.uniform(1, 3)));
  return {a, b, a.conj(), b.conj()};
}

std::vector<Check> quaternion_reps_check(Rng& rng, int samples) {
  const Matrix4 one = Matrix4::identity();
  const Matrix4 I = left_i(), J = left_j(), K = left_k();
  std::vector<Check> out;
  out.push_back(make_check("I_L^2 = -1", I * I == -one, (I * I).to_string()));
  out.push_back(make_check("J_L^2 = -1", J * J == -one, (J * J).to_string()));
  out.push_back(make_check("K_L^2 = -1", K * K == -one, (K * K).to_string()));
  out.push_back(make_check("I_L J_L K_L = -1", I * J * K == -one, (I * J * K).to_string()));
  out.push_back(make_check("I_L J_L = K_L", I * J == K, (I * J).to_string()));
  out.push_back(make_check("[I_L, J_L] = 2 K_L", I * J - J * I == QiScalar(2) * K, (I * J - J * I).to_string()));
  out.push_back(make_check("[J_L, K_L] = 2 I_L", J * K - K * J == QiScalar(2) * I, (J * K - K * J).to_string()));
  out.push_back(make_check("[K_L, I_L] = 2 J_L", K * I - I * K == QiScalar(2) * J, (K * I - I * K).to_string()));
  bool norm_ok = true;
  std::string witness = "ok";
  for (int s = 0; s < samples; ++s) {
    const Vector4 q = random_rational_vector(rng, 7);
    const Vector4 qs{q[0], -q[1], -q[2], -q[3]};
    QiScalar n2;
    for (const auto& x : q) n2 += x * x;
    const Matrix4 lhs = left_quaternion(q) * left_quaternion(qs);
    const Matrix4 rhs = left_quaternion(qs) * left_quaternion(q);
    if (!(lhs == n2 * one && rhs == n2 * one)) {
      norm_ok = false;
      witness = lhs.to_string();
      break;
    }
  }
  out.push_back(make_check("q q* = q* q = |q|^2", norm_ok, witness));
  return out;
}

Matrix4 zero_divisor_product() {
  const QiScalar i = QiScalar::i();
  return (form_j() + i * form_k()) * (Matrix4::identity() + i * form_i());
}

std::vector<Check> zero_divisor_check(Rng& rng, int samples) {
  const QiScalar i = QiScalar::i();
  const Matrix4 one = Matrix4::identity();
  const Matrix4 J = form_j(), K = form_k(), I = form_i();
  std::vector<Check> out;
  out.push_back(make_check("J^2 = K^2 = I^2 = -1", J * J == -one && K * K == -one && I * I == -one,
                           (J * J).to_string()));
  out.push_back(make_check("omega_J, omega_K antisymmetric", J.transpose() == -J && K.transpose() == -K,
                           J.to_string() + " | " + K.to_string()));
  const Matrix4 prod = zero_divisor_product();
  out.push_back(make_check("(J + iK)(1 + iI) = 0", prod.is_zero(), prod.to_string()));
  const Matrix4 left = J + i * K;
  const Matrix4 right = one + i * I;
  out.push_back(make_check("J + iK != 0 and 1 + iI != 0", !left.is_zero() && !right.is_zero(), left.to_string()));
  bool hol = true;
  std::string witness = "0";
  for (int s = 0; s < samples; ++s) {
    const Vector4 x = random_real_tangent(rng);
    const Vector4 y = random_real_tangent(rng);
    const QiScalar v = omega(x, right * y);
    if (!v.is_zero()) {
      hol = false;
      witness = v.to_string();
      break;
    }
  }
  out.push_back(make_check("Omega(X, (1 + iI)Y) = 0", hol, witness));
  return out;
}

mpq_class holomorphic_coordinates_defect(Rng& rng, int samples) {
  mpq_class defect = 0;
  for (int s = 0; s < samples; ++s) {
    const Vector4 x = random_real_tangent(rng);
    const Vector4 y = random_real_tangent(rng);
    defect += (omega(x, y) - omega_wz(x, y)).norm();
  }
  // Basis pairs, including complex (non-real) ones.
  for (std::size_t a = 0; a < 4; ++a) {
    for (std::size_t b = 0; b < 4; ++b) {
      Vector4 x{};
      Vector4 y{};
      x[a] = 1;
      y[b] = 1;
      defect += (omega(x, y) - omega_wz(x, y)).norm();
    }
  }
  return defect;
}

std::vector<Check> holomorphic_coordinates_check(Rng& rng, int samples) {
  std::vector<Check> out;
  const mpq_class d = holomorphic_coordinates_defect(rng, samples);
  out.push_back(make_check("Omega = dw ^ dz", d == 0, rational_string(d)));
  bool anti = true;
  bool diag = true;
  for (int s = 0; s < samples; ++s) {
    const Vector4 x = random_real_tangent(rng);
    const Vector4 y = random_real_tangent(rng);
    anti = anti && omega(x, y) == -omega(y, x);
    diag = diag && omega(x, x).is_zero();
  }
  out.push_back(make_check("Omega(X, Y) = -Omega(Y, X)", anti, anti ? "ok" : "fail"));
  out.push_back(make_check("Omega(X, X) = 0", diag, diag ? "ok" : "fail"));
  return out;
}

}  // namespace qwb::kgeom
