#pragma once

#include "qwb/poly.hpp"

namespace qwb::test {

inline QiScalar I() { return QiScalar::i(); }
inline QiScalar rat(long n, long d = 1) { return QiScalar::rational(n, d); }
inline HbarScalar hb(const QiScalar& c, int k = 1) { return HbarScalar::monomial(c, k); }

struct Canon {
  TablePtr t = VariableTable::canonical(1);
  PhasePoly q = PhasePoly::variable(t, "q");
  PhasePoly p = PhasePoly::variable(t, "p");
  PhasePoly c(const HbarScalar& v) const { return PhasePoly::constant(t, v); }
  PhasePoly one() const { return c(1); }
};

inline PhasePoly pow(PhasePoly x, int n) {
  PhasePoly r = PhasePoly::constant(x.table_ptr(), 1);
  for (int k = 0; k < n; ++k) r *= x;
  return r;
}

}  // namespace qwb::test
