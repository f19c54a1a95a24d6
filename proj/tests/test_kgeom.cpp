#include "doctest.h"
#include "qwb/kgeom.hpp"

using namespace qwb;
using namespace qwb::kgeom;

namespace {

// Hamilton product on coefficient vectors (q0, q1, q2, q3).
Vector4 hamilton(const Vector4& a, const Vector4& b) {
  return {a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
          a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
          a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
          a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0]};
}

Matrix4 from_rows(std::initializer_list<long> v) {
  Matrix4 m;
  int k = 0;
  for (long x : v) {
    m(k / 4, k % 4) = x;
    ++k;
  }
  return m;
}

// e_a ^ e_b (X, Y) = X_a Y_b - X_b Y_a
QiScalar wedge(int a, int b, const Vector4& x, const Vector4& y) {
  return x[static_cast<std::size_t>(a)] * y[static_cast<std::size_t>(b)] -
         x[static_cast<std::size_t>(b)] * y[static_cast<std::size_t>(a)];
}

}  // namespace

TEST_CASE("left multiplication matrices") {
  CHECK(left_i() == from_rows({0, -1, 0, 0, 1, 0, 0, 0, 0, 0, 0, -1, 0, 0, 1, 0}));
  CHECK(left_j() == from_rows({0, 0, -1, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, -1, 0, 0}));
  CHECK(left_k() == from_rows({0, 0, 0, -1, 0, 0, -1, 0, 0, 1, 0, 0, 1, 0, 0, 0}));
  Rng rng(11);
  const std::array<Matrix4, 3> units{left_i(), left_j(), left_k()};
  for (int s = 0; s < 30; ++s) {
    Vector4 q{};
    for (auto& x : q) x = QiScalar::rational(rng.uniform(-9, 9), rng.uniform(1, 4));
    for (std::size_t u = 0; u < 3; ++u) {
      Vector4 e{};
      e[u + 1] = 1;
      CHECK(units[u] * q == hamilton(e, q));
    }
    Vector4 r{};
    for (auto& x : r) x = QiScalar::rational(rng.uniform(-9, 9), rng.uniform(1, 4));
    CHECK(left_quaternion(q) * r == hamilton(q, r));
    CHECK(left_quaternion(q) * left_quaternion(r) == left_quaternion(hamilton(q, r)));
  }
}

TEST_CASE("quaternion relations") {
  const Matrix4 one = Matrix4::identity();
  CHECK(left_i() * left_i() == -one);
  CHECK(left_i() * left_j() == left_k());
  CHECK(left_i() * left_j() - left_j() * left_i() == QiScalar(2) * left_k());
  Rng rng(3);
  for (const Check& c : quaternion_reps_check(rng)) {
    INFO(c.name << ": " << c.witness);
    CHECK(c.passed);
  }
}

TEST_CASE("form matrices match the wedge expansions") {
  Rng rng(5);
  const QiScalar i = QiScalar::i();
  for (int s = 0; s < 40; ++s) {
    const Vector4 x = random_real_tangent(rng);
    const Vector4 y = random_real_tangent(rng);
    // basis order dz1, dz2, dzb1, dzb2
    const QiScalar wj = wedge(0, 1, x, y) - wedge(2, 3, x, y);
    const QiScalar wk = wedge(0, 2, x, y) + wedge(1, 3, x, y);
    CHECK(omega(x, y) == wj + i * wk);
    CHECK(omega_wz(x, y) == wj + i * wk);
    CHECK(x[2] == x[0].conj());
  }
  CHECK(form_j() == from_rows({0, 1, 0, 0, -1, 0, 0, 0, 0, 0, 0, -1, 0, 0, 1, 0}));
  CHECK(form_k() == from_rows({0, 0, 1, 0, 0, 0, 0, 1, -1, 0, 0, 0, 0, -1, 0, 0}));
  CHECK(form_i() == Matrix4::kron(sigma1(), epsilon()));
}

TEST_CASE("zero divisor") {
  CHECK(zero_divisor_product().is_zero());
  const QiScalar i = QiScalar::i();
  CHECK_FALSE((form_j() + i * form_k()).is_zero());
  CHECK_FALSE((Matrix4::identity() + i * form_i()).is_zero());
  // The left-multiplication unit I_L does not annihilate J + iK in this basis.
  CHECK_FALSE(((form_j() + i * form_k()) * (Matrix4::identity() + i * left_i())).is_zero());
  Rng rng(9);
  for (const Check& c : zero_divisor_check(rng)) {
    INFO(c.name << ": " << c.witness);
    CHECK(c.passed);
  }
}

TEST_CASE("holomorphic coordinates") {
  Rng rng(13);
  CHECK(holomorphic_coordinates_defect(rng) == 0);
  for (const Check& c : holomorphic_coordinates_check(rng)) {
    INFO(c.name << ": " << c.witness);
    CHECK(c.passed);
  }
  // The coefficient vectors of dw and dz are -i eigenvectors of I.
  const QiScalar i = QiScalar::i();
  const Vector4 dw{1, 0, 0, -i};
  const Vector4 dz{0, 1, i, 0};
  for (const Vector4& f : {dw, dz}) {
    const Vector4 g = form_i() * f;
    for (std::size_t k = 0; k < 4; ++k) CHECK(g[k] == -i * f[k]);
  }
}
