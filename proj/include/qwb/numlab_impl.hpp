#pragma once

namespace qwb::numlab {

const GaussLegendre& gauss_legendre_8();

template <class F>
double integrate(F&& f, double a, double b, int panels) {
  const GaussLegendre& gl = gauss_legendre_8();
  const double h = (b - a) / panels;
  double total = 0;
  for (int k = 0; k < panels; ++k) {
    const double mid = a + (k + 0.5) * h;
    double s = 0;
    for (std::size_t i = 0; i < gl.nodes.size(); ++i) s += gl.weights[i] * f(mid + 0.5 * h * gl.nodes[i]);
    total += 0.5 * h * s;
  }
  return total;
}

}  // namespace qwb::numlab
