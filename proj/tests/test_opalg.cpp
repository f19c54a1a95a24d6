#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "doctest.h"
#include "qwb/opalg.hpp"
#include "qwb/random.hpp"
#include "support.hpp"

using namespace qwb;
using namespace qwb::test;

namespace {

// A letter is (kind, mode) with kind 0 = Q, 1 = P. Normal order sorts by (kind, mode).
using Letter = std::pair<int, int>;
using Word = std::vector<Letter>;
using WordSum = std::map<Word, HbarScalar>;

// Rewrites to standard order one adjacent swap at a time; the position is drawn
// at random so that independence of rewrite order is exercised.
CanonicalOperator brute_normal_order(WordSum sum, std::size_t modes, Rng& rng) {
  CanonicalOperator out(modes);
  while (!sum.empty()) {
    auto node = sum.extract(sum.begin());
    Word w = node.key();
    HbarScalar c = node.mapped();
    std::vector<std::size_t> bad;
    for (std::size_t k = 0; k + 1 < w.size(); ++k) {
      if (w[k + 1] < w[k]) bad.push_back(k);
    }
    if (bad.empty()) {
      CanonicalOperator::Word exps(2 * modes, 0);
      for (auto [kind, mode] : w) exps[static_cast<std::size_t>(kind) * modes + static_cast<std::size_t>(mode)] += 1;
      out.add_term(exps, c);
      continue;
    }
    const std::size_t k = bad[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(bad.size()) - 1))];
    auto add = [&](const Word& x, const HbarScalar& v) {
      auto [it, fresh] = sum.emplace(x, v);
      if (!fresh) it->second += v;
      if (it->second.is_zero()) sum.erase(it);
    };
    Word swapped = w;
    std::swap(swapped[k], swapped[k + 1]);
    add(swapped, c);
    if (w[k].first == 1 && w[k + 1].first == 0 && w[k].second == w[k + 1].second) {
      // P Q = Q P - i hbar
      Word shorter = w;
      shorter.erase(shorter.begin() + static_cast<long>(k), shorter.begin() + static_cast<long>(k) + 2);
      add(shorter, c * hb(-I()));
    }
  }
  return out;
}

Word letters_of(const CanonicalOperator::Word& exps, std::size_t modes) {
  Word w;
  for (std::size_t v = 0; v < exps.size(); ++v) {
    for (int e = 0; e < exps[v]; ++e) w.emplace_back(static_cast<int>(v / modes), static_cast<int>(v % modes));
  }
  return w;
}

WordSum concat(const CanonicalOperator& a, const CanonicalOperator& b) {
  WordSum s;
  for (const auto& [wa, ca] : a.terms()) {
    for (const auto& [wb, cb] : b.terms()) {
      Word w = letters_of(wa, a.modes());
      Word tail = letters_of(wb, b.modes());
      w.insert(w.end(), tail.begin(), tail.end());
      auto [it, fresh] = s.emplace(w, ca * cb);
      if (!fresh) it->second += ca * cb;
    }
  }
  return s;
}

// Average over every distinct arrangement of the letters of x^m.
CanonicalOperator brute_weyl(const PhasePoly& f, Rng& rng) {
  const std::size_t modes = f.table().dof();
  CanonicalOperator out(modes);
  for (const auto& [m, c] : f.terms()) {
    Word w = letters_of(m, modes);
    std::sort(w.begin(), w.end());
    WordSum all;
    long count = 0;
    do {
      all[w] += 1;
      ++count;
    } while (std::next_permutation(w.begin(), w.end()));
    out += brute_normal_order(all, modes, rng) * (c * QiScalar::rational(1, count));
  }
  return out;
}

CanonicalOperator random_operator(std::size_t modes, Rng& rng, int max_degree) {
  CanonicalOperator op(modes);
  const long terms = rng.uniform(1, 3);
  for (long t = 0; t < terms; ++t) {
    CanonicalOperator::Word w(2 * modes, 0);
    const long d = rng.uniform(0, max_degree);
    for (long k = 0; k < d; ++k) w[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(2 * modes) - 1))] += 1;
    op.add_term(w, hb(QiScalar(rng.uniform(-3, 3), rng.uniform(-2, 2)), static_cast<int>(rng.uniform(0, 1))));
  }
  return op;
}

// exp((i hbar / 2) sum_j d_qj d_pj) applied to the standard-order symbol.
PhasePoly weyl_symbol_oracle(const CanonicalOperator& op) {
  const std::size_t n = op.modes();
  auto t = VariableTable::canonical(n);
  PhasePoly term(t);
  for (const auto& [w, c] : op.terms()) term.add_term(w, c);
  PhasePoly acc = term;
  for (int k = 1; !term.is_zero(); ++k) {
    PhasePoly next(t);
    for (std::size_t j = 0; j < n; ++j) next += term.derivative(t->q_index(j)).derivative(t->p_index(j));
    term = next * hb(I() * rat(1, 2 * k));
    acc += term;
  }
  return acc;
}

const CanonicalOperator Q = CanonicalOperator::q(1);
const CanonicalOperator P = CanonicalOperator::p(1);

}  // namespace

TEST_CASE("normal ordering of products") {
  CHECK(P * Q == Q * P + CanonicalOperator::scalar(1, hb(-I())));
  const CanonicalOperator A = Q * Q * P + P;
  CHECK(A * CanonicalOperator::identity(1) == A);
  CHECK((Q * P) * Q == Q * Q * P + Q * hb(-I()));
  CHECK_THROWS_AS(Q * CanonicalOperator::q(2), std::invalid_argument);
}

TEST_CASE("commutators") {
  CHECK(commutator(Q, P) == CanonicalOperator::scalar(1, hb(I())));
  const CanonicalOperator half = commutator(Q * Q, P * P) * HbarScalar(rat(1, 2));
  CHECK(half == (Q * P + P * Q) * hb(I()));
  CHECK(half == Q * P * hb(I() * 2) + CanonicalOperator::scalar(1, hb(1, 2)));
  const CanonicalOperator A = Q * P * P + Q;
  CHECK(commutator(A, A).is_zero());
  auto Q2 = CanonicalOperator::q(2, 1);
  auto P1 = CanonicalOperator::p(2, 0);
  CHECK(commutator(Q2, P1).is_zero());
}

TEST_CASE("products agree with a randomized brute-force rewriter") {
  Rng rng(11);
  for (std::size_t modes : {1, 2}) {
    for (int k = 0; k < 60; ++k) {
      const auto a = random_operator(modes, rng, 3);
      const auto b = random_operator(modes, rng, 3);
      CHECK(a * b == brute_normal_order(concat(a, b), modes, rng));
    }
  }
}

TEST_CASE("products are associative") {
  Rng rng(12);
  for (std::size_t modes : {1, 2}) {
    for (int k = 0; k < 40; ++k) {
      const auto a = random_operator(modes, rng, 2);
      const auto b = random_operator(modes, rng, 2);
      const auto c = random_operator(modes, rng, 2);
      CHECK((a * b) * c == a * (b * c));
    }
  }
}

TEST_CASE("weyl map examples") {
  Canon c;
  CHECK(weyl_map(pow(c.q, 2)) == Q * Q);
  CHECK(weyl_map(pow(c.p, 3)) == P * P * P);
  CHECK(weyl_map(c.q * c.p) == Q * P + CanonicalOperator::scalar(1, hb(-I() * rat(1, 2))));
  CHECK(weyl_map(pow(c.q, 2) * c.p) == Q * Q * P + Q * hb(-I()));
  CHECK_THROWS_AS(weyl_map(PhasePoly::variable(VariableTable::complex(1), "z")), std::invalid_argument);
}

TEST_CASE("weyl map matches the all-orderings average up to degree 6") {
  Rng rng(13);
  Canon c;
  for (int a = 0; a <= 6; ++a) {
    for (int b = 0; a + b <= 6; ++b) {
      const PhasePoly m = pow(c.q, a) * pow(c.p, b);
      CHECK(weyl_map(m) == brute_weyl(m, rng));
    }
  }
  auto t = VariableTable::canonical(2);
  RandomPolyOptions o;
  o.max_degree = 5;
  o.max_terms = 3;
  for (int k = 0; k < 20; ++k) {
    const PhasePoly f = random_poly(t, rng, o);
    CHECK(weyl_map(f) == brute_weyl(f, rng));
  }
}

TEST_CASE("wigner map examples") {
  Canon c;
  CHECK(wigner_map(Q * P) == c.q * c.p + c.c(hb(I() * rat(1, 2))));
  const PhasePoly f = pow(c.q, 3) * pow(c.p, 2);
  CHECK(wigner_map(weyl_map(f)) == f);
  CHECK(wigner_map(CanonicalOperator::identity(1)) == c.one());
}

TEST_CASE("wigner map agrees with the exponential symbol formula") {
  Rng rng(14);
  for (std::size_t modes : {1, 2}) {
    for (int k = 0; k < 30; ++k) {
      const auto op = random_operator(modes, rng, 5);
      CHECK(wigner_map(op) == weyl_symbol_oracle(op));
    }
  }
}

TEST_CASE("weyl and wigner are mutually inverse up to degree 8") {
  Rng rng(15);
  for (std::size_t modes : {1, 2}) {
    auto t = VariableTable::canonical(modes);
    RandomPolyOptions o;
    o.max_degree = 8;
    o.real = false;
    o.with_hbar = true;
    for (int k = 0; k < 25; ++k) {
      const PhasePoly f = random_poly(t, rng, o);
      CHECK(wigner_map(weyl_map(f)) == f);
      const auto op = random_operator(modes, rng, 8);
      CHECK(weyl_map(wigner_map(op)) == op);
    }
  }
}

TEST_CASE("quadratic observables close under commutation") {
  Rng rng(16);
  for (std::size_t modes : {1, 2}) {
    auto t = VariableTable::canonical(modes);
    const auto Pb = PoissonStructure::canonical(t);
    RandomPolyOptions o;
    o.max_degree = 2;
    for (int k = 0; k < 40; ++k) {
      const PhasePoly f = random_poly(t, rng, o);
      const PhasePoly g = random_poly(t, rng, o);
      CHECK(commutator(weyl_map(f), weyl_map(g)) == weyl_map(poisson_bracket(f, g, Pb)) * hb(I()));
    }
  }
}

TEST_CASE("cubic observables do not close") {
  Canon c;
  const auto Pb = PoissonStructure::canonical(c.t);
  const PhasePoly f = pow(c.q, 3);
  const PhasePoly g = pow(c.p, 3);
  const auto lhs = commutator(weyl_map(f), weyl_map(g));
  const auto rhs = weyl_map(poisson_bracket(f, g, Pb)) * hb(I());
  CHECK_FALSE(lhs == rhs);
  // The discrepancy is the constant -(3/2) i hbar^3.
  CHECK(lhs - rhs == CanonicalOperator::scalar(1, hb(I() * rat(-3, 2), 3)));
}

TEST_CASE("adjoint") {
  CHECK((Q * P).adjoint() == P * Q);
  CHECK((Q * hb(I())).adjoint() == Q * hb(-I()));
  Rng rng(17);
  auto t = VariableTable::canonical(2);
  RandomPolyOptions o;
  o.real = false;
  o.max_degree = 5;
  for (int k = 0; k < 25; ++k) {
    const PhasePoly f = random_poly(t, rng, o);
    CHECK(weyl_map(f.conj()) == weyl_map(f).adjoint());
    const auto a = random_operator(2, rng, 3);
    const auto b = random_operator(2, rng, 3);
    CHECK((a * b).adjoint() == b.adjoint() * a.adjoint());
  }
}

TEST_CASE("operator text and json") {
  CHECK((Q * Q * P + Q * hb(-I())).to_string() == "Q^2*P - i*hbar*Q");
  CHECK(CanonicalOperator::p(2, 1).to_string() == "P2");
  Rng rng(18);
  for (int k = 0; k < 20; ++k) {
    const auto op = random_operator(2, rng, 4);
    const auto j = to_json(op);
    CHECK(canonical_operator_from_json(2, j) == op);
  }
}
