#pragma once

// Linear differential operators sum_alpha c_alpha(x) d^alpha with polynomial
// coefficients, of arbitrary finite order.

#include <map>
#include <string>

#include "qwb/poly.hpp"

namespace qwb {

class DiffOperator {
 public:
  /// Multi-index alpha -> coefficient c_alpha; highest order first.
  using TermMap = std::map<Monomial, PhasePoly, GradedLexGreater>;

  explicit DiffOperator(TablePtr table);

  static DiffOperator identity(TablePtr table);
  static DiffOperator multiplication(const PhasePoly& f);
  /// d^alpha with unit coefficient.
  static DiffOperator partial(TablePtr table, const Monomial& alpha);
  static DiffOperator partial(TablePtr table, std::size_t var, int times = 1);

  const TablePtr& table_ptr() const { return table_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Highest derivative order present; -1 for the zero operator.
  int order() const;
  PhasePoly coefficient(const Monomial& alpha) const;

  void add_term(const Monomial& alpha, const PhasePoly& c);

  PhasePoly apply(const PhasePoly& f) const;

  DiffOperator operator-() const;
  DiffOperator& operator+=(const DiffOperator& o);
  DiffOperator& operator-=(const DiffOperator& o);
  DiffOperator& operator*=(const HbarScalar& c);
  friend DiffOperator operator+(DiffOperator a, const DiffOperator& b) { return a += b; }
  friend DiffOperator operator-(DiffOperator a, const DiffOperator& b) { return a -= b; }
  friend DiffOperator operator*(DiffOperator a, const HbarScalar& c) { return a *= c; }
  friend DiffOperator operator*(const HbarScalar& c, DiffOperator a) { return a *= c; }
  /// Composition (a after b).
  friend DiffOperator operator*(const DiffOperator& a, const DiffOperator& b);
  friend bool operator==(const DiffOperator& a, const DiffOperator& b);

  DiffOperator substitute_hbar(const mpq_class& value) const;

  /// e.g. "i*hbar*d_p + q" or "(q + p)*d_q^2".
  std::string to_string() const;

 private:
  TablePtr table_;
  TermMap terms_;
};

DiffOperator commutator(const DiffOperator& a, const DiffOperator& b);

/// [{alpha:[...], coeff:<PhasePoly JSON>}] highest order first.
nlohmann::json to_json(const DiffOperator& op);

/// d^alpha f
PhasePoly apply_partial(const PhasePoly& f, const Monomial& alpha);

}  // namespace qwb
