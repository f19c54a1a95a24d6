#include "qwb/cli/parse.hpp"

#include <cctype>
#include <functional>
#include <optional>

namespace qwb::cli {

ParseError::ParseError(std::size_t position, const std::string& message)
    : std::runtime_error("parse error at column " + std::to_string(position + 1) + ": " + message),
      position_(position) {}

namespace {

// One evaluation target: the commutative polynomial ring or the operator algebra.
template <class T>
struct Target {
  std::function<T(const HbarScalar&)> scalar;
  std::function<std::optional<T>(const std::string&)> variable;
};

template <class T>
class Parser {
 public:
  Parser(const std::string& text, Target<T> target) : s_(text), t_(std::move(target)) {}

  T parse() {
    T v = expr();
    skip();
    if (pos_ != s_.size()) throw ParseError(pos_, std::string("unexpected '") + s_[pos_] + "'");
    return v;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  T expr() {
    T v = term();
    while (true) {
      if (accept('+')) {
        v = v + term();
      } else if (accept('-')) {
        v = v - term();
      } else {
        return v;
      }
    }
  }

  T term() {
    T v = unary();
    while (accept('*')) v = v * unary();
    return v;
  }

  T unary() {
    if (accept('-')) return t_.scalar(HbarScalar(-1)) * unary();
    if (accept('+')) return unary();
    return power();
  }

  T power() {
    T base = atom();
    if (!accept('^')) return base;
    skip();
    const std::size_t at = pos_;
    const mpz_class e = integer();
    if (e > 64) throw ParseError(at, "exponent too large");
    T r = t_.scalar(HbarScalar(1));
    for (long k = 0; k < e.get_si(); ++k) r = r * base;
    return r;
  }

  mpz_class integer() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError(start, "expected an integer");
    return mpz_class(s_.substr(start, pos_ - start));
  }

  T atom() {
    skip();
    if (pos_ >= s_.size()) throw ParseError(pos_, "unexpected end of input");
    const std::size_t start = pos_;
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      T v = expr();
      if (!accept(')')) throw ParseError(pos_, "expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpq_class value(integer());
      if (accept('/')) {
        const std::size_t at = pos_;
        const mpz_class d = integer();
        if (d == 0) throw ParseError(at, "zero denominator");
        value /= mpq_class(d);
      }
      return t_.scalar(HbarScalar(QiScalar(value)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      const std::string name = s_.substr(start, pos_ - start);
      if (name == "i") return t_.scalar(HbarScalar(QiScalar::i()));
      if (name == "hbar") return t_.scalar(HbarScalar::hbar());
      if (auto v = t_.variable(name)) return *v;
      throw ParseError(start, "unknown variable '" + name + "'");
    }
    throw ParseError(start, std::string("unexpected '") + c + "'");
  }

  const std::string& s_;
  Target<T> t_;
  std::size_t pos_ = 0;
};

// Splits "q12" into ("q", 12); a bare stem has index 0.
std::pair<std::string, std::size_t> split_name(const std::string& name) {
  std::size_t k = name.size();
  while (k > 0 && std::isdigit(static_cast<unsigned char>(name[k - 1]))) --k;
  if (k == name.size()) return {name, 0};
  return {name.substr(0, k), static_cast<std::size_t>(std::stoul(name.substr(k)))};
}

}  // namespace

PhasePoly parse_expression(const std::string& text, const TablePtr& table) {
  Target<PhasePoly> t{
      [&](const HbarScalar& c) { return PhasePoly::constant(table, c); },
      [&](const std::string& name) -> std::optional<PhasePoly> {
        if (!table->find(name)) return std::nullopt;
        return PhasePoly::variable(table, name);
      }};
  return Parser<PhasePoly>(text, t).parse();
}

CanonicalOperator parse_operator(const std::string& text, std::size_t modes) {
  Target<CanonicalOperator> t{
      [&](const HbarScalar& c) { return CanonicalOperator::scalar(modes, c); },
      [&](const std::string& name) -> std::optional<CanonicalOperator> {
        auto [stem, index] = split_name(name);
        if (index == 0 && modes == 1) index = 1;
        if (index < 1 || index > modes) return std::nullopt;
        if (stem == "q" || stem == "Q") return CanonicalOperator::q(modes, index - 1);
        if (stem == "p" || stem == "P") return CanonicalOperator::p(modes, index - 1);
        return std::nullopt;
      }};
  return Parser<CanonicalOperator>(text, t).parse();
}

TablePtr infer_table(const std::vector<std::string>& texts, std::size_t min_dof) {
  bool complex = false;
  std::size_t dof = std::max<std::size_t>(min_dof, 1);
  for (const std::string& s : texts) {
    for (std::size_t k = 0; k < s.size();) {
      if (!std::isalpha(static_cast<unsigned char>(s[k]))) {
        ++k;
        continue;
      }
      std::size_t e = k;
      while (e < s.size() && (std::isalnum(static_cast<unsigned char>(s[e])) || s[e] == '_')) ++e;
      const auto [stem, index] = split_name(s.substr(k, e - k));
      if (stem == "z" || stem == "zb") complex = true;
      if (stem == "z" || stem == "zb" || stem == "q" || stem == "p") dof = std::max(dof, index);
      k = e;
    }
  }
  return complex ? VariableTable::complex(dof) : VariableTable::canonical(dof);
}

}  // namespace qwb::cli
