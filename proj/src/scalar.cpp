#include "qwb/scalar.hpp"

#include <stdexcept>

namespace qwb {

QiScalar::QiScalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

QiScalar QiScalar::rational(long num, long den) {
  if (den == 0) throw std::domain_error("QiScalar: zero denominator");
  return QiScalar(mpq_class(num, den));
}

QiScalar QiScalar::parse(const std::string& re, const std::string& im) {
  return {parse_rational(re), parse_rational(im)};
}

QiScalar& QiScalar::operator+=(const QiScalar& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

QiScalar& QiScalar::operator-=(const QiScalar& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

QiScalar& QiScalar::operator*=(const QiScalar& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

QiScalar& QiScalar::operator/=(const QiScalar& o) {
  if (o.is_zero()) throw std::domain_error("QiScalar: division by zero");
  const mpq_class n = o.norm();
  *this *= o.conj();
  re_ /= n;
  im_ /= n;
  return *this;
}

std::string rational_string(const mpq_class& q) { return q.get_str(); }

mpq_class parse_rational(const std::string& text) {
  mpq_class q;
  if (text.empty() || q.set_str(text, 10) != 0) {
    throw std::invalid_argument("malformed rational literal '" + text + "'");
  }
  if (sgn(q.get_den()) == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

std::string QiScalar::to_string() const {
  if (is_zero()) return "0";
  if (sgn(im_) == 0) return rational_string(re_);
  std::string imag;
  if (im_ == 1) {
    imag = "i";
  } else if (im_ == -1) {
    imag = "-i";
  } else {
    imag = rational_string(im_) + "*i";
  }
  if (sgn(re_) == 0) return imag;
  return "(" + rational_string(re_) + (sgn(im_) > 0 ? "+" : "") + imag + ")";
}

HbarScalar::HbarScalar(const QiScalar& c) {
  if (!c.is_zero()) terms_.emplace(0, c);
}

HbarScalar HbarScalar::monomial(const QiScalar& c, int k) {
  HbarScalar h;
  if (!c.is_zero()) h.terms_.emplace(k, c);
  return h;
}

QiScalar HbarScalar::coefficient(int k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? QiScalar() : it->second;
}

std::optional<int> HbarScalar::min_power() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first;
}

std::optional<int> HbarScalar::max_power() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.rbegin()->first;
}

HbarScalar HbarScalar::conj() const {
  HbarScalar h;
  for (const auto& [k, c] : terms_) h.terms_.emplace(k, c.conj());
  return h;
}

HbarScalar HbarScalar::shifted(int k) const {
  HbarScalar h;
  for (const auto& [e, c] : terms_) h.terms_.emplace(e + k, c);
  return h;
}

QiScalar HbarScalar::substitute(const mpq_class& hbar_value) const {
  QiScalar sum;
  for (const auto& [k, c] : terms_) {
    if (k < 0 && sgn(hbar_value) == 0) {
      throw std::domain_error("HbarScalar: negative hbar power evaluated at hbar = 0");
    }
    mpq_class power = 1;
    const mpq_class base = k >= 0 ? hbar_value : mpq_class(1) / hbar_value;
    for (int n = 0; n < (k >= 0 ? k : -k); ++n) power *= base;
    sum += c * QiScalar(power);
  }
  return sum;
}

HbarScalar HbarScalar::inverse() const {
  if (terms_.size() != 1) {
    throw std::domain_error("HbarScalar: only single-power scalars are invertible");
  }
  const auto& [k, c] = *terms_.begin();
  return monomial(QiScalar(1) / c, -k);
}

HbarScalar HbarScalar::operator-() const {
  HbarScalar h;
  for (const auto& [k, c] : terms_) h.terms_.emplace(k, -c);
  return h;
}

void HbarScalar::add_term(int k, const QiScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

HbarScalar& HbarScalar::operator+=(const HbarScalar& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

HbarScalar& HbarScalar::operator-=(const HbarScalar& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

HbarScalar operator*(const HbarScalar& a, const HbarScalar& b) {
  HbarScalar h;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) h.add_term(ka + kb, ca * cb);
  }
  return h;
}

HbarScalar& HbarScalar::operator*=(const HbarScalar& o) { return *this = *this * o; }

HbarScalar& HbarScalar::operator*=(const QiScalar& o) {
  if (o.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, c] : terms_) c *= o;
  return *this;
}

std::string HbarScalar::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    std::string piece;
    const std::string h = k == 0 ? "" : (k == 1 ? "hbar" : "hbar^" + std::to_string(k));
    bool negative = c.is_real() ? sgn(c.re()) < 0 : (sgn(c.re()) == 0 && sgn(c.im()) < 0);
    const QiScalar mag = negative ? -c : c;
    if (h.empty()) {
      piece = mag.to_string();
    } else if (mag.is_one()) {
      piece = h;
    } else {
      piece = mag.to_string() + "*" + h;
    }
    if (first) {
      out = negative ? "-" + piece : piece;
    } else {
      out += negative ? " - " + piece : " + " + piece;
    }
    first = false;
  }
  return out;
}

}  // namespace qwb
