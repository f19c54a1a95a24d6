#pragma once

// Exact scalars: Gaussian rationals and Laurent polynomials in hbar.

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>

namespace qwb {

/// Complex number re + i*im with arbitrary-precision rational parts.
class QiScalar {
 public:
  QiScalar() = default;
  QiScalar(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
  QiScalar(mpq_class re, mpq_class im = 0);

  static QiScalar i() { return {0, 1}; }
  static QiScalar rational(long num, long den);

  /// Parses "a", "a/b" for each part.
  static QiScalar parse(const std::string& re, const std::string& im = "0");

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

  QiScalar conj() const { return {re_, -im_}; }
  /// |z|^2, exact.
  mpq_class norm() const { return re_ * re_ + im_ * im_; }

  QiScalar operator-() const { return {-re_, -im_}; }
  QiScalar& operator+=(const QiScalar& o);
  QiScalar& operator-=(const QiScalar& o);
  QiScalar& operator*=(const QiScalar& o);
  QiScalar& operator/=(const QiScalar& o);

  friend QiScalar operator+(QiScalar a, const QiScalar& b) { return a += b; }
  friend QiScalar operator-(QiScalar a, const QiScalar& b) { return a -= b; }
  friend QiScalar operator*(QiScalar a, const QiScalar& b) { return a *= b; }
  friend QiScalar operator/(QiScalar a, const QiScalar& b) { return a /= b; }
  friend bool operator==(const QiScalar& a, const QiScalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// Canonical text, e.g. "3/2", "-i", "1/2*i", "(1+2*i)".
  std::string to_string() const;

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

/// Canonical "a" or "a/b" text of a rational (lowest terms, positive denominator).
std::string rational_string(const mpq_class& q);
mpq_class parse_rational(const std::string& text);

/// Finite Laurent polynomial sum_k c_k hbar^k with QiScalar coefficients.
/// hbar is a formal central generator; zero coefficients are never stored.
class HbarScalar {
 public:
  using TermMap = std::map<int, QiScalar>;

  HbarScalar() = default;
  HbarScalar(const QiScalar& c);  // NOLINT(google-explicit-constructor)
  HbarScalar(long c) : HbarScalar(QiScalar(c)) {}  // NOLINT(google-explicit-constructor)

  /// c * hbar^k
  static HbarScalar monomial(const QiScalar& c, int k);
  static HbarScalar hbar(int k = 1) { return monomial(1, k); }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Single hbar power (or zero).
  bool is_monomial() const { return terms_.size() <= 1; }
  QiScalar coefficient(int k) const;
  std::optional<int> min_power() const;
  std::optional<int> max_power() const;

  HbarScalar conj() const;
  /// Multiplies by hbar^k.
  HbarScalar shifted(int k) const;
  /// Evaluates at a rational hbar value. Negative powers need a nonzero value.
  QiScalar substitute(const mpq_class& hbar_value) const;
  /// Inverse of a nonzero single-power scalar.
  HbarScalar inverse() const;

  HbarScalar operator-() const;
  HbarScalar& operator+=(const HbarScalar& o);
  HbarScalar& operator-=(const HbarScalar& o);
  HbarScalar& operator*=(const HbarScalar& o);
  HbarScalar& operator*=(const QiScalar& o);

  friend HbarScalar operator+(HbarScalar a, const HbarScalar& b) { return a += b; }
  friend HbarScalar operator-(HbarScalar a, const HbarScalar& b) { return a -= b; }
  friend HbarScalar operator*(const HbarScalar& a, const HbarScalar& b);
  friend HbarScalar operator*(HbarScalar a, const QiScalar& b) { return a *= b; }
  friend HbarScalar operator*(const QiScalar& b, HbarScalar a) { return a *= b; }
  friend bool operator==(const HbarScalar& a, const HbarScalar& b) {
    return a.terms_ == b.terms_;
  }

  std::string to_string() const;

 private:
  void add_term(int k, const QiScalar& c);
  TermMap terms_;
};

}  // namespace qwb
