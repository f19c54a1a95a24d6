#include "qwb/diffop.hpp"

#include <stdexcept>

namespace qwb {

namespace {

mpz_class binomial(int n, int k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

// Iterates gamma over 0 <= gamma <= alpha componentwise.
bool next_sub_index(Monomial& gamma, const Monomial& alpha) {
  for (std::size_t k = 0; k < gamma.size(); ++k) {
    if (gamma[k] < alpha[k]) {
      ++gamma[k];
      return true;
    }
    gamma[k] = 0;
  }
  return false;
}

}  // namespace

PhasePoly apply_partial(const PhasePoly& f, const Monomial& alpha) {
  PhasePoly r = f;
  for (std::size_t k = 0; k < alpha.size(); ++k) {
    for (int t = 0; t < alpha[k] && !r.is_zero(); ++t) r = r.derivative(k);
  }
  return r;
}

DiffOperator::DiffOperator(TablePtr table) : table_(std::move(table)) {}

DiffOperator DiffOperator::identity(TablePtr table) {
  return multiplication(PhasePoly::constant(table, 1));
}

DiffOperator DiffOperator::multiplication(const PhasePoly& f) {
  DiffOperator op(f.table_ptr());
  op.add_term(Monomial(f.table().size(), 0), f);
  return op;
}

DiffOperator DiffOperator::partial(TablePtr table, const Monomial& alpha) {
  DiffOperator op(table);
  op.add_term(alpha, PhasePoly::constant(table, 1));
  return op;
}

DiffOperator DiffOperator::partial(TablePtr table, std::size_t var, int times) {
  Monomial alpha(table->size(), 0);
  alpha.at(var) = times;
  return partial(std::move(table), alpha);
}

int DiffOperator::order() const {
  return terms_.empty() ? -1 : total_degree(terms_.begin()->first);
}

PhasePoly DiffOperator::coefficient(const Monomial& alpha) const {
  auto it = terms_.find(alpha);
  return it == terms_.end() ? PhasePoly(table_) : it->second;
}

void DiffOperator::add_term(const Monomial& alpha, const PhasePoly& c) {
  require_same_table(table_, c.table_ptr(), "DiffOperator");
  if (alpha.size() != table_->size()) throw std::invalid_argument("DiffOperator: bad multi-index");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(alpha, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

PhasePoly DiffOperator::apply(const PhasePoly& f) const {
  require_same_table(table_, f.table_ptr(), "DiffOperator::apply");
  PhasePoly r(table_);
  for (const auto& [alpha, c] : terms_) r += c * apply_partial(f, alpha);
  return r;
}

DiffOperator DiffOperator::operator-() const {
  DiffOperator r(table_);
  for (const auto& [alpha, c] : terms_) r.terms_.emplace(alpha, -c);
  return r;
}

DiffOperator& DiffOperator::operator+=(const DiffOperator& o) {
  for (const auto& [alpha, c] : o.terms_) add_term(alpha, c);
  return *this;
}

DiffOperator& DiffOperator::operator-=(const DiffOperator& o) {
  for (const auto& [alpha, c] : o.terms_) add_term(alpha, -c);
  return *this;
}

DiffOperator& DiffOperator::operator*=(const HbarScalar& c) {
  DiffOperator r(table_);
  for (const auto& [alpha, coeff] : terms_) r.add_term(alpha, coeff * c);
  return *this = std::move(r);
}

// (a d^alpha) o (b d^beta) = sum_{gamma <= alpha} C(alpha, gamma) a (d^gamma b) d^{alpha-gamma+beta}
DiffOperator operator*(const DiffOperator& a, const DiffOperator& b) {
  require_same_table(a.table_, b.table_, "DiffOperator composition");
  DiffOperator r(a.table_);
  const std::size_t n = a.table_->size();
  for (const auto& [alpha, ca] : a.terms_) {
    for (const auto& [beta, cb] : b.terms_) {
      Monomial gamma(n, 0);
      do {
        PhasePoly db = apply_partial(cb, gamma);
        if (db.is_zero()) continue;
        mpz_class mult = 1;
        Monomial target(n);
        for (std::size_t k = 0; k < n; ++k) {
          mult *= binomial(alpha[k], gamma[k]);
          target[k] = alpha[k] - gamma[k] + beta[k];
        }
        r.add_term(target, (ca * db) * HbarScalar(QiScalar(mpq_class(mult))));
      } while (next_sub_index(gamma, alpha));
    }
  }
  return r;
}

bool operator==(const DiffOperator& a, const DiffOperator& b) {
  return same_table(a.table_, b.table_) && a.terms_ == b.terms_;
}

DiffOperator DiffOperator::substitute_hbar(const mpq_class& value) const {
  DiffOperator r(table_);
  for (const auto& [alpha, c] : terms_) r.add_term(alpha, c.substitute_hbar(value));
  return r;
}

DiffOperator commutator(const DiffOperator& a, const DiffOperator& b) { return a * b - b * a; }

std::string DiffOperator::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [alpha, c] : terms_) {
    std::string partials;
    for (std::size_t k = 0; k < alpha.size(); ++k) {
      if (alpha[k] == 0) continue;
      if (!partials.empty()) partials += "*";
      partials += "d_" + table_->name(k);
      if (alpha[k] > 1) partials += "^" + std::to_string(alpha[k]);
    }
    if (partials.empty()) {
      // Zeroth-order part is printed term by term.
      std::string body = c.to_string();
      if (first) {
        out += body;
      } else if (body.front() == '-') {
        out += " - " + body.substr(1);
      } else {
        out += " + " + body;
      }
      first = false;
      continue;
    }
    // Single-term coefficients fold their sign into the operator term.
    if (c.terms().size() == 1 && c.terms().begin()->second.terms().size() == 1) {
      const auto& [m, h] = *c.terms().begin();
      const auto& [k, coeff] = *h.terms().begin();
      std::string mono;
      for (std::size_t v = 0; v < m.size(); ++v) {
        if (m[v] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += table_->name(v);
        if (m[v] > 1) mono += "^" + std::to_string(m[v]);
      }
      out += detail::term_text(coeff, k, mono.empty() ? partials : mono + "*" + partials, first);
    } else {
      out += (first ? "(" : " + (") + c.to_string() + ")*" + partials;
    }
    first = false;
  }
  return out;
}

nlohmann::json to_json(const DiffOperator& op) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [alpha, c] : op.terms()) terms.push_back({{"alpha", alpha}, {"coeff", to_json(c)}});
  return terms;
}

}  // namespace qwb
