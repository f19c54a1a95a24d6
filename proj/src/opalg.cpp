#include "qwb/opalg.hpp"

#include <stdexcept>
#include <utility>

namespace qwb {

namespace {

mpz_class binomial(int n, int k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

mpz_class factorial(int n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

// (-i)^k
QiScalar minus_i_power(int k) {
  switch (k % 4) {
    case 0: return 1;
    case 1: return -QiScalar::i();
    case 2: return -1;
    default: return QiScalar::i();
  }
}

void require_modes(const CanonicalOperator& a, const CanonicalOperator& b, const char* where) {
  if (a.modes() != b.modes()) throw std::invalid_argument(std::string(where) + ": mode-count mismatch");
}

}  // namespace

CanonicalOperator::CanonicalOperator(std::size_t modes) : modes_(modes) {
  if (modes == 0) throw std::invalid_argument("CanonicalOperator: need at least one mode");
}

CanonicalOperator CanonicalOperator::scalar(std::size_t modes, const HbarScalar& c) {
  return word(modes, Word(2 * modes, 0), c);
}

CanonicalOperator CanonicalOperator::word(std::size_t modes, Word w, const HbarScalar& c) {
  CanonicalOperator op(modes);
  if (w.size() != 2 * modes) throw std::invalid_argument("CanonicalOperator: bad word length");
  for (int e : w) {
    if (e < 0) throw std::invalid_argument("CanonicalOperator: negative exponent");
  }
  op.add_term(w, c);
  return op;
}

CanonicalOperator CanonicalOperator::q(std::size_t modes, std::size_t j) {
  Word w(2 * modes, 0);
  w.at(j) = 1;
  return word(modes, std::move(w));
}

CanonicalOperator CanonicalOperator::p(std::size_t modes, std::size_t j) {
  if (j >= modes) throw std::out_of_range("CanonicalOperator::p");
  Word w(2 * modes, 0);
  w[modes + j] = 1;
  return word(modes, std::move(w));
}

int CanonicalOperator::degree() const {
  return terms_.empty() ? -1 : total_degree(terms_.begin()->first);
}

HbarScalar CanonicalOperator::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? HbarScalar() : it->second;
}

void CanonicalOperator::add_term(const Word& w, const HbarScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

CanonicalOperator CanonicalOperator::operator-() const {
  CanonicalOperator r(modes_);
  for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
  return r;
}

CanonicalOperator& CanonicalOperator::operator+=(const CanonicalOperator& o) {
  require_modes(*this, o, "CanonicalOperator::+");
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

CanonicalOperator& CanonicalOperator::operator-=(const CanonicalOperator& o) {
  require_modes(*this, o, "CanonicalOperator::-");
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

CanonicalOperator& CanonicalOperator::operator*=(const HbarScalar& c) {
  CanonicalOperator r(modes_);
  for (const auto& [w, coeff] : terms_) r.add_term(w, coeff * c);
  return *this = std::move(r);
}

// Per mode, (Q^a P^b)(Q^c P^d) = sum_k k! C(b,k) C(c,k) (-i hbar)^k Q^{a+c-k} P^{b+d-k};
// distinct modes commute, so the product factorizes.
CanonicalOperator operator*(const CanonicalOperator& a, const CanonicalOperator& b) {
  require_modes(a, b, "op_mul");
  const std::size_t n = a.modes_;
  CanonicalOperator r(n);
  std::vector<std::pair<CanonicalOperator::Word, HbarScalar>> partial;
  std::vector<std::pair<CanonicalOperator::Word, HbarScalar>> next;
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) {
      partial.assign(1, {CanonicalOperator::Word(2 * n, 0), ca * cb});
      for (std::size_t j = 0; j < n; ++j) {
        const int qa = wa[j], pa = wa[n + j], qb = wb[j], pb = wb[n + j];
        const int kmax = std::min(pa, qb);
        next.clear();
        for (const auto& [w, c] : partial) {
          for (int k = 0; k <= kmax; ++k) {
            const mpz_class mult = factorial(k) * binomial(pa, k) * binomial(qb, k);
            auto word = w;
            word[j] = qa + qb - k;
            word[n + j] = pa + pb - k;
            next.emplace_back(std::move(word),
                              c * HbarScalar::monomial(minus_i_power(k) * QiScalar(mpq_class(mult)), k));
          }
        }
        partial.swap(next);
      }
      for (const auto& [w, c] : partial) r.add_term(w, c);
    }
  }
  return r;
}

CanonicalOperator op_mul(const CanonicalOperator& a, const CanonicalOperator& b) { return a * b; }

CanonicalOperator commutator(const CanonicalOperator& a, const CanonicalOperator& b) {
  return a * b - b * a;
}

namespace {

// Q^a (per mode list) or P^b as standalone operators.
CanonicalOperator q_power(std::size_t modes, std::size_t j, int a) {
  CanonicalOperator::Word w(2 * modes, 0);
  w[j] = a;
  return CanonicalOperator::word(modes, std::move(w));
}

CanonicalOperator p_power(std::size_t modes, std::size_t j, int b) {
  CanonicalOperator::Word w(2 * modes, 0);
  w[modes + j] = b;
  return CanonicalOperator::word(modes, std::move(w));
}

// McCoy: W(q^a p^b) = 2^{-a} sum_k C(a,k) Q^k P^b Q^{a-k}
CanonicalOperator weyl_single(std::size_t modes, std::size_t j, int a, int b) {
  CanonicalOperator r(modes);
  const CanonicalOperator pb = p_power(modes, j, b);
  const mpq_class scale = mpq_class(1) / mpq_class(mpz_class(1) << a);
  for (int k = 0; k <= a; ++k) {
    CanonicalOperator term = q_power(modes, j, k) * pb * q_power(modes, j, a - k);
    r += term * HbarScalar(QiScalar(scale * mpq_class(binomial(a, k))));
  }
  return r;
}

CanonicalOperator weyl_monomial(std::size_t modes, const Monomial& m) {
  CanonicalOperator r = CanonicalOperator::identity(modes);
  for (std::size_t j = 0; j < modes; ++j) {
    if (m[j] == 0 && m[modes + j] == 0) continue;
    r = r * weyl_single(modes, j, m[j], m[modes + j]);
  }
  return r;
}

}  // namespace

CanonicalOperator weyl_map(const PhasePoly& f) {
  if (f.table().chart() != Chart::canonical) {
    throw std::invalid_argument("weyl_map: polynomial must be over the canonical (q,p) chart");
  }
  const std::size_t n = f.table().dof();
  CanonicalOperator r(n);
  for (const auto& [m, c] : f.terms()) r += weyl_monomial(n, m) * c;
  return r;
}

// W(x^w) = Q^a P^b + lower degree terms, so peeling off leading terms inverts W.
PhasePoly wigner_map(const CanonicalOperator& op) {
  const std::size_t n = op.modes();
  const TablePtr table = VariableTable::canonical(n);
  PhasePoly result(table);
  std::map<Monomial, CanonicalOperator, GradedLexGreater> cache;
  CanonicalOperator rest = op;
  while (!rest.is_zero()) {
    const auto [w, c] = *rest.terms().begin();
    auto it = cache.find(w);
    if (it == cache.end()) it = cache.emplace(w, weyl_monomial(n, w)).first;
    result.add_term(w, c);
    rest -= it->second * c;
  }
  return result;
}

CanonicalOperator CanonicalOperator::adjoint() const {
  CanonicalOperator r(modes_);
  for (const auto& [w, c] : terms_) {
    CanonicalOperator ps = identity(modes_);
    CanonicalOperator qs = identity(modes_);
    for (std::size_t j = 0; j < modes_; ++j) {
      if (w[modes_ + j] != 0) ps = ps * p_power(modes_, j, w[modes_ + j]);
      if (w[j] != 0) qs = qs * q_power(modes_, j, w[j]);
    }
    r += (ps * qs) * c.conj();
  }
  return r;
}

CanonicalOperator CanonicalOperator::substitute_hbar(const mpq_class& value) const {
  CanonicalOperator r(modes_);
  for (const auto& [w, c] : terms_) r.add_term(w, HbarScalar(c.substitute(value)));
  return r;
}

std::string CanonicalOperator::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    std::string word;
    auto append = [&](const char* stem, std::size_t j, int e) {
      if (e == 0) return;
      if (!word.empty()) word += "*";
      word += stem;
      if (modes_ > 1) word += std::to_string(j + 1);
      if (e > 1) word += "^" + std::to_string(e);
    };
    for (std::size_t j = 0; j < modes_; ++j) append("Q", j, w[j]);
    for (std::size_t j = 0; j < modes_; ++j) append("P", j, w[modes_ + j]);
    for (const auto& [k, coeff] : c.terms()) {
      out += detail::term_text(coeff, k, word, first);
      first = false;
    }
  }
  return out;
}

nlohmann::json to_json(const CanonicalOperator& op) {
  nlohmann::json terms = nlohmann::json::array();
  const std::size_t n = op.modes();
  for (const auto& [w, c] : op.terms()) {
    const std::vector<int> qs(w.begin(), w.begin() + static_cast<long>(n));
    const std::vector<int> ps(w.begin() + static_cast<long>(n), w.end());
    for (const auto& [k, coeff] : c.terms()) {
      terms.push_back({{"re", rational_string(coeff.re())},
                       {"im", rational_string(coeff.im())},
                       {"hbar", k},
                       {"word", {{"qexps", qs}, {"pexps", ps}}}});
    }
  }
  return terms;
}

CanonicalOperator canonical_operator_from_json(std::size_t modes, const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("operator JSON: expected an array of terms");
  CanonicalOperator op(modes);
  for (const auto& t : j) {
    auto qs = t.at("word").at("qexps").get<std::vector<int>>();
    auto ps = t.at("word").at("pexps").get<std::vector<int>>();
    if (qs.size() != modes || ps.size() != modes) throw std::invalid_argument("operator JSON: bad word");
    CanonicalOperator::Word w = qs;
    w.insert(w.end(), ps.begin(), ps.end());
    const QiScalar c = QiScalar::parse(t.at("re").get<std::string>(), t.at("im").get<std::string>());
    op.add_term(w, HbarScalar::monomial(c, t.at("hbar").get<int>()));
  }
  return op;
}

}  // namespace qwb
