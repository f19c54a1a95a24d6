#pragma once

// Commutative phase-space polynomials over Laurent-in-hbar Gaussian rationals,
// and constant-coefficient Poisson structures acting on them.

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "qwb/scalar.hpp"

namespace qwb {

using Monomial = std::vector<int>;

int total_degree(const Monomial& m);

/// Graded lexicographic order, higher degree first; ties broken by the
/// exponent of the earliest variable (larger first).
struct GradedLexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

enum class Chart {
  canonical,  // q1..qn, p1..pn; every variable real
  complex,    // z1..zn, zb1..zbn; z_j <-> zb_j under conjugation
  custom,
};

class VariableTable;
using TablePtr = std::shared_ptr<const VariableTable>;

/// Ordered variable names with a conjugation involution.
class VariableTable {
 public:
  VariableTable(std::vector<std::string> names, std::vector<std::size_t> conjugate,
                Chart chart = Chart::custom);

  /// (q,p) chart with n degrees of freedom. For n == 1 the names are "q", "p".
  static TablePtr canonical(std::size_t dof);
  /// (z, zb) chart with n modes. For n == 1 the names are "z", "zb".
  static TablePtr complex(std::size_t modes);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  std::size_t conjugate(std::size_t i) const { return conjugate_.at(i); }
  Chart chart() const { return chart_; }
  /// Number of canonical pairs for the canonical and complex charts.
  std::size_t dof() const { return size() / 2; }

  /// Resolves a name, accepting "q"/"q1"-style aliases for single-pair charts.
  std::optional<std::size_t> find(std::string_view name) const;
  std::size_t index(std::string_view name) const;

  // Canonical chart accessors (0-based pair index).
  std::size_t q_index(std::size_t j) const;
  std::size_t p_index(std::size_t j) const;

  friend bool operator==(const VariableTable& a, const VariableTable& b) {
    return a.names_ == b.names_ && a.conjugate_ == b.conjugate_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<std::size_t> conjugate_;
  Chart chart_;
};

bool same_table(const TablePtr& a, const TablePtr& b);
void require_same_table(const TablePtr& a, const TablePtr& b, const char* where);

/// Polynomial in the table's variables with HbarScalar coefficients.
class PhasePoly {
 public:
  using TermMap = std::map<Monomial, HbarScalar, GradedLexGreater>;

  explicit PhasePoly(TablePtr table);

  static PhasePoly constant(TablePtr table, const HbarScalar& c);
  static PhasePoly variable(TablePtr table, std::string_view name);
  static PhasePoly variable(TablePtr table, std::size_t index);
  static PhasePoly monomial(TablePtr table, Monomial exps, const HbarScalar& c = 1);

  const VariableTable& table() const { return *table_; }
  const TablePtr& table_ptr() const { return table_; }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  /// Total degree in the phase-space variables; -1 for the zero polynomial.
  int degree() const;
  HbarScalar coefficient(const Monomial& m) const;
  /// True if no variables appear.
  bool is_constant() const;

  /// Accumulates c * x^m.
  void add_term(const Monomial& m, const HbarScalar& c);

  PhasePoly operator-() const;
  PhasePoly& operator+=(const PhasePoly& o);
  PhasePoly& operator-=(const PhasePoly& o);
  PhasePoly& operator*=(const PhasePoly& o);
  PhasePoly& operator*=(const HbarScalar& c);

  friend PhasePoly operator+(PhasePoly a, const PhasePoly& b) { return a += b; }
  friend PhasePoly operator-(PhasePoly a, const PhasePoly& b) { return a -= b; }
  friend PhasePoly operator*(const PhasePoly& a, const PhasePoly& b);
  friend PhasePoly operator*(PhasePoly a, const HbarScalar& c) { return a *= c; }
  friend PhasePoly operator*(const HbarScalar& c, PhasePoly a) { return a *= c; }
  friend bool operator==(const PhasePoly& a, const PhasePoly& b);

  PhasePoly derivative(std::size_t var) const;
  PhasePoly derivative(std::string_view var) const;
  /// i -> -i on coefficients, variables sent through the conjugation pairing.
  PhasePoly conj() const;
  bool is_real() const { return conj() == *this; }

  /// The polynomial multiplying hbar^k.
  PhasePoly hbar_part(int k) const;
  std::optional<int> min_hbar_power() const;
  std::optional<int> max_hbar_power() const;
  /// True if every term carries at least hbar^k.
  bool divisible_by_hbar(int k) const;
  PhasePoly times_hbar(int k) const;
  PhasePoly substitute_hbar(const mpq_class& value) const;

  /// Canonical text; parseable by parse_expression.
  std::string to_string() const;

 private:
  TablePtr table_;
  TermMap terms_;
};

PhasePoly derivative(const PhasePoly& f, std::string_view var);

/// Constant antisymmetric bivector P^{ij}; {f,g} = P^{ij} d_i f d_j g.
class PoissonStructure {
 public:
  PoissonStructure(TablePtr table, std::vector<QiScalar> matrix);

  /// {q_j, p_j} = 1 on the canonical chart, {z_j, zb_j} = i on the complex chart.
  static PoissonStructure canonical(TablePtr table);

  const TablePtr& table_ptr() const { return table_; }
  const QiScalar& entry(std::size_t i, std::size_t j) const;
  std::size_t size() const { return table_->size(); }

 private:
  TablePtr table_;
  std::vector<QiScalar> matrix_;
};

PhasePoly poisson_bracket(const PhasePoly& f, const PhasePoly& g, const PoissonStructure& P);

namespace detail {
/// One signed summand "coeff*hbar^k*tail" of a canonical text rendering.
std::string term_text(const QiScalar& coeff, int hbar_power, const std::string& tail, bool first);
}  // namespace detail

/// Canonical JSON: [{re, im, hbar, exps}] in canonical term order, hbar ascending.
nlohmann::json to_json(const PhasePoly& f);
PhasePoly phase_poly_from_json(TablePtr table, const nlohmann::json& j);

}  // namespace qwb
