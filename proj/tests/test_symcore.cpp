#include "doctest.h"
#include "qwb/random.hpp"
#include "support.hpp"

using namespace qwb;
using namespace qwb::test;

TEST_CASE("gaussian rationals stay in lowest terms") {
  QiScalar a(mpq_class(6, 4), mpq_class(-2, -8));
  CHECK(a.re() == mpq_class(3, 2));
  CHECK(a.im().get_den() == 4);
  CHECK(a.im() == mpq_class(1, 4));
  CHECK(I() * I() == QiScalar(-1));
  CHECK((QiScalar(1) / (QiScalar(1) + I())) == QiScalar(mpq_class(1, 2), mpq_class(-1, 2)));
  CHECK_THROWS_AS(QiScalar(1) / QiScalar(0), std::domain_error);
  CHECK(rat(3, 2).to_string() == "3/2");
  CHECK(I().to_string() == "i");
  CHECK((-I()).to_string() == "-i");
  CHECK(QiScalar(1, 2).to_string() == "(1+2*i)");
}

TEST_CASE("hbar scalars are Laurent polynomials") {
  HbarScalar h = HbarScalar::hbar();
  HbarScalar x = h * HbarScalar::hbar(-1);
  CHECK(x == HbarScalar(1));
  CHECK((h - h).is_zero());
  CHECK((h + 1).terms().size() == 2);
  CHECK(HbarScalar::monomial(2, -2).inverse() == HbarScalar::monomial(rat(1, 2), 2));
  CHECK(HbarScalar::monomial(3, -1).substitute(mpq_class(1, 2)) == QiScalar(6));
  CHECK_THROWS(HbarScalar::hbar(-1).substitute(0));
}

TEST_CASE("ring operations") {
  Canon c;
  CHECK((c.q + c.p) * (c.q - c.p) == pow(c.q, 2) - pow(c.p, 2));
  CHECK((c.q + c.p) * (c.q - c.p) + PhasePoly(c.t) == pow(c.q, 2) - pow(c.p, 2));
  const PhasePoly f = (c.q * c.p) * HbarScalar::hbar(-1);
  REQUIRE(f.terms().size() == 1);
  CHECK(f.terms().begin()->second.min_power() == -1);
  CHECK(f.to_string() == "hbar^-1*q*p");
  CHECK_THROWS_AS(c.q + PhasePoly::variable(VariableTable::complex(1), "z"), std::invalid_argument);
}

TEST_CASE("canonical text") {
  Canon c;
  CHECK((pow(c.q, 2) - pow(c.p, 2)).to_string() == "q^2 - p^2");
  CHECK((c.q * c.p + c.c(hb(rat(1, 2) * I()))).to_string() == "q*p + 1/2*i*hbar");
  CHECK(PhasePoly(c.t).to_string() == "0");
}

TEST_CASE("partial derivatives") {
  Canon c;
  CHECK(derivative(pow(c.q, 2) * c.p, "q") == c.q * c.p * HbarScalar(2));
  CHECK(derivative(pow(c.q, 2), "p").is_zero());
  auto t = VariableTable::complex(1);
  auto z = PhasePoly::variable(t, "z");
  auto zb = PhasePoly::variable(t, "zb");
  CHECK(derivative(pow(z, 3) * zb, "z") == pow(z, 2) * zb * HbarScalar(3));
  CHECK_THROWS_AS(derivative(c.q, "x"), std::invalid_argument);
}

TEST_CASE("poisson bracket examples") {
  Canon c;
  const auto P = PoissonStructure::canonical(c.t);
  CHECK(poisson_bracket(c.q, c.p, P) == c.one());
  const PhasePoly f = pow(c.q, 3) + c.q * c.p;
  CHECK(poisson_bracket(f, f, P).is_zero());

  auto t = VariableTable::complex(1);
  auto z = PhasePoly::variable(t, "z");
  auto zb = PhasePoly::variable(t, "zb");
  const auto Pz = PoissonStructure::canonical(t);
  CHECK(poisson_bracket(z, zb, Pz) == PhasePoly::constant(t, I()));
  // Leibniz by hand: {z zb, z} = z {zb, z} = -i z
  CHECK(poisson_bracket(z * zb, z, Pz) == z * HbarScalar(-I()));
}

TEST_CASE("poisson structures must be antisymmetric") {
  auto t = VariableTable::canonical(1);
  CHECK_THROWS_AS(PoissonStructure(t, {0, 1, 1, 0}), std::invalid_argument);
  CHECK_NOTHROW(PoissonStructure(t, {0, 2, -2, 0}));
}

TEST_CASE("conjugation") {
  Canon c;
  CHECK((c.q * HbarScalar(I())).conj() == c.q * HbarScalar(-I()));
  auto t = VariableTable::complex(2);
  auto z1 = PhasePoly::variable(t, "z1");
  CHECK(z1.conj() == PhasePoly::variable(t, "zb1"));
  Rng rng(7);
  RandomPolyOptions o;
  o.real = false;
  o.with_hbar = true;
  for (int k = 0; k < 50; ++k) {
    const PhasePoly f = random_poly(t, rng, o);
    const PhasePoly g = random_poly(t, rng, o);
    CHECK(f.conj().conj() == f);
    CHECK((f * g).conj() == f.conj() * g.conj());
    CHECK((f + g).conj() == f.conj() + g.conj());
  }
  CHECK((c.q * c.p).is_real());
}

TEST_CASE("variable tables") {
  CHECK_THROWS_AS(VariableTable({"a", "b"}, {1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(VariableTable({"a", "a"}, {0, 1}), std::invalid_argument);
  auto t = VariableTable::canonical(1);
  CHECK(t->index("q1") == t->index("q"));
  auto t2 = VariableTable::canonical(2);
  CHECK(t2->names() == std::vector<std::string>{"q1", "q2", "p1", "p2"});
  CHECK(t2->p_index(1) == 3);
}

TEST_CASE("bracket identities on random polynomials") {
  for (std::size_t dof : {1, 2}) {
    auto t = VariableTable::canonical(dof);
    const auto P = PoissonStructure::canonical(t);
    Rng rng(100 + dof);
    RandomPolyOptions o;
    o.max_degree = 5;
    o.max_terms = 4;
    for (int k = 0; k < 40; ++k) {
      const PhasePoly f = random_poly(t, rng, o);
      const PhasePoly g = random_poly(t, rng, o);
      const PhasePoly h = random_poly(t, rng, o);
      const HbarScalar a = rat(2, 3);
      CHECK(poisson_bracket(f, g, P) == -poisson_bracket(g, f, P));
      CHECK(poisson_bracket(f * a + h, g, P) == poisson_bracket(f, g, P) * a + poisson_bracket(h, g, P));
      CHECK(poisson_bracket(f, g * h, P) == poisson_bracket(f, g, P) * h + g * poisson_bracket(f, h, P));
      const PhasePoly jacobi = poisson_bracket(f, poisson_bracket(g, h, P), P) +
                               poisson_bracket(g, poisson_bracket(h, f, P), P) +
                               poisson_bracket(h, poisson_bracket(f, g, P), P);
      CHECK(jacobi.is_zero());
    }
  }
}

TEST_CASE("json round trip is bit exact") {
  auto t = VariableTable::complex(2);
  Rng rng(3);
  RandomPolyOptions o;
  o.real = false;
  o.with_hbar = true;
  for (int k = 0; k < 30; ++k) {
    const PhasePoly f = random_poly(t, rng, o) * HbarScalar::hbar(-1);
    const auto j = to_json(f);
    const PhasePoly back = phase_poly_from_json(t, j);
    CHECK(back == f);
    CHECK(to_json(back).dump() == j.dump());
  }
  Canon c;
  const auto j = to_json(c.q * HbarScalar(rat(3, 1)));
  CHECK(j.dump() == R"([{"exps":[1,0],"hbar":0,"im":"0","re":"3"}])");
}
