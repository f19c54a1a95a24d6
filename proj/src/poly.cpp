#include "qwb/poly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qwb {

int total_degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0); }

bool GradedLexGreater::operator()(const Monomial& a, const Monomial& b) const {
  const int da = total_degree(a);
  const int db = total_degree(b);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

// ---------------------------------------------------------------------------
// VariableTable

VariableTable::VariableTable(std::vector<std::string> names, std::vector<std::size_t> conjugate,
                             Chart chart)
    : names_(std::move(names)), conjugate_(std::move(conjugate)), chart_(chart) {
  if (names_.size() != conjugate_.size()) {
    throw std::invalid_argument("VariableTable: pairing size mismatch");
  }
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (conjugate_[i] >= names_.size() || conjugate_[conjugate_[i]] != i) {
      throw std::invalid_argument("VariableTable: conjugation pairing is not an involution");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (names_[i] == names_[j]) {
        throw std::invalid_argument("VariableTable: duplicate variable '" + names_[i] + "'");
      }
    }
  }
}

TablePtr VariableTable::canonical(std::size_t dof) {
  if (dof == 0) throw std::invalid_argument("VariableTable: need at least one degree of freedom");
  std::vector<std::string> names;
  std::vector<std::size_t> pairing;
  for (const char* stem : {"q", "p"}) {
    for (std::size_t j = 1; j <= dof; ++j) {
      names.push_back(dof == 1 ? std::string(stem) : stem + std::to_string(j));
      pairing.push_back(pairing.size());
    }
  }
  return std::make_shared<const VariableTable>(std::move(names), std::move(pairing),
                                               Chart::canonical);
}

TablePtr VariableTable::complex(std::size_t modes) {
  if (modes == 0) throw std::invalid_argument("VariableTable: need at least one mode");
  std::vector<std::string> names;
  std::vector<std::size_t> pairing;
  for (const char* stem : {"z", "zb"}) {
    for (std::size_t j = 1; j <= modes; ++j) {
      names.push_back(modes == 1 ? std::string(stem) : stem + std::to_string(j));
    }
  }
  for (std::size_t j = 0; j < modes; ++j) pairing.push_back(j + modes);
  for (std::size_t j = 0; j < modes; ++j) pairing.push_back(j);
  return std::make_shared<const VariableTable>(std::move(names), std::move(pairing),
                                               Chart::complex);
}

std::optional<std::size_t> VariableTable::find(std::string_view name) const {
  auto lookup = [this](std::string_view n) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (names_[i] == n) return i;
    }
    return std::nullopt;
  };
  if (auto hit = lookup(name)) return hit;
  // Single-pair charts use bare names; accept the indexed spelling and vice versa.
  if (name.size() > 1 && name.back() == '1') {
    if (auto hit = lookup(name.substr(0, name.size() - 1))) return hit;
  }
  return lookup(std::string(name) + "1");
}

std::size_t VariableTable::index(std::string_view name) const {
  if (auto hit = find(name)) return *hit;
  throw std::invalid_argument("unknown variable '" + std::string(name) + "'");
}

std::size_t VariableTable::q_index(std::size_t j) const {
  if (chart_ != Chart::canonical || j >= dof()) {
    throw std::invalid_argument("VariableTable: not a canonical (q,p) chart index");
  }
  return j;
}

std::size_t VariableTable::p_index(std::size_t j) const { return q_index(j) + dof(); }

bool same_table(const TablePtr& a, const TablePtr& b) { return a == b || *a == *b; }

void require_same_table(const TablePtr& a, const TablePtr& b, const char* where) {
  if (!same_table(a, b)) {
    throw std::invalid_argument(std::string(where) + ": variable table mismatch");
  }
}

// ---------------------------------------------------------------------------
// PhasePoly

PhasePoly::PhasePoly(TablePtr table) : table_(std::move(table)) {
  if (!table_) throw std::invalid_argument("PhasePoly: null variable table");
}

PhasePoly PhasePoly::constant(TablePtr table, const HbarScalar& c) {
  PhasePoly f(std::move(table));
  f.add_term(Monomial(f.table_->size(), 0), c);
  return f;
}

PhasePoly PhasePoly::variable(TablePtr table, std::string_view name) {
  const std::size_t idx = table->index(name);
  return variable(std::move(table), idx);
}

PhasePoly PhasePoly::variable(TablePtr table, std::size_t index) {
  Monomial m(table->size(), 0);
  m.at(index) = 1;
  return monomial(std::move(table), std::move(m));
}

PhasePoly PhasePoly::monomial(TablePtr table, Monomial exps, const HbarScalar& c) {
  PhasePoly f(std::move(table));
  if (exps.size() != f.table_->size()) {
    throw std::invalid_argument("PhasePoly: exponent vector length mismatch");
  }
  for (int e : exps) {
    if (e < 0) throw std::invalid_argument("PhasePoly: negative exponent");
  }
  f.add_term(exps, c);
  return f;
}

int PhasePoly::degree() const {
  // Graded order keeps the highest degree first.
  return terms_.empty() ? -1 : total_degree(terms_.begin()->first);
}

HbarScalar PhasePoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? HbarScalar() : it->second;
}

bool PhasePoly::is_constant() const { return degree() <= 0; }

void PhasePoly::add_term(const Monomial& m, const HbarScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

PhasePoly PhasePoly::operator-() const {
  PhasePoly r(table_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

PhasePoly& PhasePoly::operator+=(const PhasePoly& o) {
  require_same_table(table_, o.table_, "PhasePoly::+");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

PhasePoly& PhasePoly::operator-=(const PhasePoly& o) {
  require_same_table(table_, o.table_, "PhasePoly::-");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

PhasePoly operator*(const PhasePoly& a, const PhasePoly& b) {
  require_same_table(a.table_, b.table_, "PhasePoly::*");
  PhasePoly r(a.table_);
  Monomial m(a.table_->size());
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      for (std::size_t k = 0; k < m.size(); ++k) m[k] = ma[k] + mb[k];
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

PhasePoly& PhasePoly::operator*=(const PhasePoly& o) { return *this = *this * o; }

PhasePoly& PhasePoly::operator*=(const HbarScalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= c;
    it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
  }
  return *this;
}

bool operator==(const PhasePoly& a, const PhasePoly& b) {
  return same_table(a.table_, b.table_) && a.terms_ == b.terms_;
}

PhasePoly PhasePoly::derivative(std::size_t var) const {
  if (var >= table_->size()) throw std::invalid_argument("PhasePoly::derivative: bad variable");
  PhasePoly r(table_);
  for (const auto& [m, c] : terms_) {
    if (m[var] == 0) continue;
    Monomial d = m;
    d[var] -= 1;
    r.add_term(d, c * QiScalar(m[var]));
  }
  return r;
}

PhasePoly PhasePoly::derivative(std::string_view var) const {
  return derivative(table_->index(var));
}

PhasePoly derivative(const PhasePoly& f, std::string_view var) { return f.derivative(var); }

PhasePoly PhasePoly::conj() const {
  PhasePoly r(table_);
  Monomial m(table_->size());
  for (const auto& [src, c] : terms_) {
    for (std::size_t k = 0; k < m.size(); ++k) m[table_->conjugate(k)] = src[k];
    r.add_term(m, c.conj());
  }
  return r;
}

PhasePoly PhasePoly::hbar_part(int k) const {
  PhasePoly r(table_);
  for (const auto& [m, c] : terms_) r.add_term(m, c.coefficient(k));
  return r;
}

std::optional<int> PhasePoly::min_hbar_power() const {
  std::optional<int> lo;
  for (const auto& [m, c] : terms_) {
    const int k = *c.min_power();
    if (!lo || k < *lo) lo = k;
  }
  return lo;
}

std::optional<int> PhasePoly::max_hbar_power() const {
  std::optional<int> hi;
  for (const auto& [m, c] : terms_) {
    const int k = *c.max_power();
    if (!hi || k > *hi) hi = k;
  }
  return hi;
}

bool PhasePoly::divisible_by_hbar(int k) const {
  auto lo = min_hbar_power();
  return !lo || *lo >= k;
}

PhasePoly PhasePoly::times_hbar(int k) const {
  PhasePoly r(table_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, c.shifted(k));
  return r;
}

PhasePoly PhasePoly::substitute_hbar(const mpq_class& value) const {
  PhasePoly r(table_);
  for (const auto& [m, c] : terms_) r.add_term(m, HbarScalar(c.substitute(value)));
  return r;
}

namespace {

bool is_negative(const QiScalar& c) {
  return c.is_real() ? sgn(c.re()) < 0 : (sgn(c.re()) == 0 && sgn(c.im()) < 0);
}

std::string monomial_text(const VariableTable& table, const Monomial& m) {
  std::string out;
  for (std::size_t k = 0; k < m.size(); ++k) {
    if (m[k] == 0) continue;
    if (!out.empty()) out += "*";
    out += table.name(k);
    if (m[k] > 1) out += "^" + std::to_string(m[k]);
  }
  return out;
}

}  // namespace

namespace detail {

std::string term_text(const QiScalar& coeff, int hbar_power, const std::string& tail,
                      bool first) {
  const bool negative = is_negative(coeff);
  const QiScalar mag = negative ? -coeff : coeff;
  std::vector<std::string> factors;
  if (!mag.is_one()) factors.push_back(mag.to_string());
  if (hbar_power == 1) {
    factors.emplace_back("hbar");
  } else if (hbar_power != 0) {
    factors.push_back("hbar^" + std::to_string(hbar_power));
  }
  if (!tail.empty()) factors.push_back(tail);
  if (factors.empty()) factors.emplace_back("1");
  std::string body;
  for (std::size_t k = 0; k < factors.size(); ++k) body += (k ? "*" : "") + factors[k];
  if (first) return negative ? "-" + body : body;
  return (negative ? " - " : " + ") + body;
}

}  // namespace detail

std::string PhasePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const std::string mono = monomial_text(*table_, m);
    for (const auto& [k, coeff] : c.terms()) {
      out += detail::term_text(coeff, k, mono, first);
      first = false;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// PoissonStructure

PoissonStructure::PoissonStructure(TablePtr table, std::vector<QiScalar> matrix)
    : table_(std::move(table)), matrix_(std::move(matrix)) {
  const std::size_t n = table_->size();
  if (matrix_.size() != n * n) throw std::invalid_argument("PoissonStructure: size mismatch");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!(matrix_[i * n + j] == -matrix_[j * n + i])) {
        throw std::invalid_argument("PoissonStructure: bivector is not antisymmetric");
      }
    }
  }
}

PoissonStructure PoissonStructure::canonical(TablePtr table) {
  const std::size_t n = table->size();
  const std::size_t d = table->dof();
  std::vector<QiScalar> m(n * n);
  QiScalar unit;
  switch (table->chart()) {
    case Chart::canonical:
      unit = 1;
      break;
    case Chart::complex:
      unit = QiScalar::i();
      break;
    case Chart::custom:
      throw std::invalid_argument("PoissonStructure::canonical: custom chart has no default");
  }
  for (std::size_t j = 0; j < d; ++j) {
    m[j * n + (j + d)] = unit;
    m[(j + d) * n + j] = -unit;
  }
  return {std::move(table), std::move(m)};
}

const QiScalar& PoissonStructure::entry(std::size_t i, std::size_t j) const {
  const std::size_t n = table_->size();
  if (i >= n || j >= n) throw std::out_of_range("PoissonStructure::entry");
  return matrix_[i * n + j];
}

PhasePoly poisson_bracket(const PhasePoly& f, const PhasePoly& g, const PoissonStructure& P) {
  require_same_table(f.table_ptr(), g.table_ptr(), "poisson_bracket");
  require_same_table(f.table_ptr(), P.table_ptr(), "poisson_bracket");
  const std::size_t n = P.size();
  std::vector<PhasePoly> df;
  std::vector<PhasePoly> dg;
  df.reserve(n);
  dg.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    df.push_back(f.derivative(k));
    dg.push_back(g.derivative(k));
  }
  PhasePoly r(f.table_ptr());
  for (std::size_t i = 0; i < n; ++i) {
    if (df[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      const QiScalar& pij = P.entry(i, j);
      if (pij.is_zero() || dg[j].is_zero()) continue;
      r += (df[i] * dg[j]) * HbarScalar(pij);
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// JSON

nlohmann::json to_json(const PhasePoly& f) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, c] : f.terms()) {
    for (const auto& [k, coeff] : c.terms()) {
      terms.push_back({{"re", rational_string(coeff.re())},
                       {"im", rational_string(coeff.im())},
                       {"hbar", k},
                       {"exps", m}});
    }
  }
  return terms;
}

PhasePoly phase_poly_from_json(TablePtr table, const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("PhasePoly JSON: expected an array of terms");
  PhasePoly f(table);
  for (const auto& t : j) {
    Monomial m = t.at("exps").get<Monomial>();
    if (m.size() != table->size()) throw std::invalid_argument("PhasePoly JSON: bad exps length");
    const QiScalar c = QiScalar::parse(t.at("re").get<std::string>(), t.at("im").get<std::string>());
    f.add_term(m, HbarScalar::monomial(c, t.at("hbar").get<int>()));
  }
  return f;
}

}  // namespace qwb
