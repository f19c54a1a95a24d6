#pragma once

// Canonical operator algebra generated by Q_j, P_j with [Q_j, P_k] = i hbar delta_jk,
// stored in standard order (all Q left of all P), plus the Weyl
// (symmetrization) map and its Wigner inverse on polynomial symbols.

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "qwb/poly.hpp"

namespace qwb {

class CanonicalOperator {
 public:
  /// Exponents [a_1..a_n, b_1..b_n] of Q_1^a_1..Q_n^a_n P_1^b_1..P_n^b_n.
  using Word = Monomial;
  using TermMap = std::map<Word, HbarScalar, GradedLexGreater>;

  explicit CanonicalOperator(std::size_t modes);

  static CanonicalOperator scalar(std::size_t modes, const HbarScalar& c);
  static CanonicalOperator identity(std::size_t modes) { return scalar(modes, 1); }
  static CanonicalOperator word(std::size_t modes, Word w, const HbarScalar& c = 1);
  /// Position and momentum generators of mode j (0-based).
  static CanonicalOperator q(std::size_t modes, std::size_t j = 0);
  static CanonicalOperator p(std::size_t modes, std::size_t j = 0);

  std::size_t modes() const { return modes_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;
  HbarScalar coefficient(const Word& w) const;

  void add_term(const Word& w, const HbarScalar& c);

  CanonicalOperator operator-() const;
  CanonicalOperator& operator+=(const CanonicalOperator& o);
  CanonicalOperator& operator-=(const CanonicalOperator& o);
  CanonicalOperator& operator*=(const HbarScalar& c);
  friend CanonicalOperator operator+(CanonicalOperator a, const CanonicalOperator& b) { return a += b; }
  friend CanonicalOperator operator-(CanonicalOperator a, const CanonicalOperator& b) { return a -= b; }
  friend CanonicalOperator operator*(CanonicalOperator a, const HbarScalar& c) { return a *= c; }
  friend CanonicalOperator operator*(const HbarScalar& c, CanonicalOperator a) { return a *= c; }
  friend CanonicalOperator operator*(const CanonicalOperator& a, const CanonicalOperator& b);
  friend bool operator==(const CanonicalOperator& a, const CanonicalOperator& b) {
    return a.modes_ == b.modes_ && a.terms_ == b.terms_;
  }

  /// Hermitian adjoint: reversed words, conjugated coefficients (hbar real).
  CanonicalOperator adjoint() const;
  CanonicalOperator substitute_hbar(const mpq_class& value) const;

  /// e.g. "Q^2*P - i*hbar*Q"; multi-mode generators are Q1, P2, ...
  std::string to_string() const;

 private:
  std::size_t modes_;
  TermMap terms_;
};

CanonicalOperator op_mul(const CanonicalOperator& a, const CanonicalOperator& b);
CanonicalOperator commutator(const CanonicalOperator& a, const CanonicalOperator& b);

/// Symmetrized-ordering quantization of a polynomial on the canonical chart.
CanonicalOperator weyl_map(const PhasePoly& f);
/// Inverse of weyl_map; returns a polynomial on VariableTable::canonical(modes).
PhasePoly wigner_map(const CanonicalOperator& op);

/// [{re, im, hbar, word:{qexps, pexps}}]
nlohmann::json to_json(const CanonicalOperator& op);
CanonicalOperator canonical_operator_from_json(std::size_t modes, const nlohmann::json& j);

}  // namespace qwb
