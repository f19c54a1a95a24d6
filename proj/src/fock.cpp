#include "qwb/fock.hpp"

#include <algorithm>
#include <stdexcept>

namespace qwb {

// ---------------------------------------------------------------------------
// ExactMatrix

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows) {}

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

ExactMatrix ExactMatrix::diagonal(const std::vector<HbarScalar>& d) {
  ExactMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m.set(i, i, d[i]);
  return m;
}

HbarScalar ExactMatrix::get(std::size_t i, std::size_t j) const {
  if (j >= cols_) throw std::out_of_range("ExactMatrix::get");
  const Row& r = data_.at(i);
  auto it = r.find(j);
  return it == r.end() ? HbarScalar() : it->second;
}

void ExactMatrix::set(std::size_t i, std::size_t j, const HbarScalar& v) {
  if (i >= rows_ || j >= cols_) throw std::out_of_range("ExactMatrix::set");
  if (v.is_zero()) {
    data_[i].erase(j);
  } else {
    data_[i][j] = v;
  }
}

void ExactMatrix::add(std::size_t i, std::size_t j, const HbarScalar& v) {
  if (i >= rows_ || j >= cols_) throw std::out_of_range("ExactMatrix::add");
  if (v.is_zero()) return;
  auto [it, fresh] = data_[i].emplace(j, v);
  if (!fresh) {
    it->second += v;
    if (it->second.is_zero()) data_[i].erase(it);
  }
}

std::size_t ExactMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : data_) n += r.size();
  return n;
}

bool ExactMatrix::is_diagonal() const {
  for (std::size_t i = 0; i < rows_; ++i) {
    for (const auto& [j, v] : data_[i]) {
      if (j != i) return false;
    }
  }
  return true;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (const auto& [j, v] : data_[i]) t.data_[j].emplace(i, v);
  }
  return t;
}

ExactMatrix ExactMatrix::adjoint() const {
  ExactMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (const auto& [j, v] : data_[i]) t.data_[j].emplace(i, v.conj());
  }
  return t;
}

ExactMatrix ExactMatrix::substitute_hbar(const mpq_class& value) const {
  ExactMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (const auto& [j, v] : data_[i]) r.set(i, j, HbarScalar(v.substitute(value)));
  }
  return r;
}

ExactMatrix ExactMatrix::block(const std::vector<std::size_t>& indices) const {
  std::map<std::size_t, std::size_t> position;
  for (std::size_t k = 0; k < indices.size(); ++k) position[indices[k]] = k;
  ExactMatrix b(indices.size(), indices.size());
  for (std::size_t k = 0; k < indices.size(); ++k) {
    for (const auto& [j, v] : data_.at(indices[k])) {
      auto it = position.find(j);
      if (it != position.end()) b.data_[k].emplace(it->second, v);
    }
  }
  return b;
}

ExactMatrix::Row ExactMatrix::column(std::size_t j) const {
  Row c;
  for (std::size_t i = 0; i < rows_; ++i) {
    auto it = data_[i].find(j);
    if (it != data_[i].end()) c.emplace(i, it->second);
  }
  return c;
}

ExactMatrix ExactMatrix::operator-() const {
  ExactMatrix r = *this;
  for (auto& row : r.data_) {
    for (auto& [j, v] : row) v = -v;
  }
  return r;
}

ExactMatrix& ExactMatrix::operator+=(const ExactMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("ExactMatrix: shape mismatch");
  for (std::size_t i = 0; i < rows_; ++i) {
    for (const auto& [j, v] : o.data_[i]) add(i, j, v);
  }
  return *this;
}

ExactMatrix& ExactMatrix::operator-=(const ExactMatrix& o) { return *this += -o; }

ExactMatrix& ExactMatrix::operator*=(const HbarScalar& c) {
  for (auto& row : data_) {
    for (auto it = row.begin(); it != row.end();) {
      it->second *= c;
      it = it->second.is_zero() ? row.erase(it) : std::next(it);
    }
  }
  return *this;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("ExactMatrix: shape mismatch in product");
  ExactMatrix r(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (const auto& [k, av] : a.data_[i]) {
      for (const auto& [j, bv] : b.data_[k]) r.add(i, j, av * bv);
    }
  }
  return r;
}

ExactMatrix commutator(const ExactMatrix& a, const ExactMatrix& b) { return a * b - b * a; }
ExactMatrix anticommutator(const ExactMatrix& a, const ExactMatrix& b) { return a * b + b * a; }

nlohmann::json to_json(const ExactMatrix& m) {
  nlohmann::json entries = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (const auto& [j, v] : m.row(i)) entries.push_back({{"row", i}, {"col", j}, {"value", v.to_string()}});
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

// ---------------------------------------------------------------------------
// BargmannBasis

BargmannBasis::BargmannBasis(std::size_t modes, int cutoff, std::optional<mpq_class> hbar)
    : modes_(modes), cutoff_(cutoff), hbar_(std::move(hbar)) {
  if (modes == 0) throw std::invalid_argument("BargmannBasis: need at least one mode");
  if (cutoff < 2) throw std::invalid_argument("BargmannBasis: cutoff must be at least 2");
  if (hbar_ && sgn(*hbar_) <= 0) throw std::invalid_argument("BargmannBasis: hbar must be positive");
  Monomial alpha(modes, 0);
  while (true) {
    states_.push_back(alpha);
    std::size_t k = 0;
    while (k < modes && ++alpha[k] == cutoff) alpha[k++] = 0;
    if (k == modes) break;
  }
  std::stable_sort(states_.begin(), states_.end(), [](const Monomial& x, const Monomial& y) {
    const int dx = total_degree(x);
    const int dy = total_degree(y);
    if (dx != dy) return dx < dy;
    return GradedLexGreater{}(x, y);
  });
  for (std::size_t k = 0; k < states_.size(); ++k) index_.emplace(states_[k], k);
}

HbarScalar BargmannBasis::hbar() const {
  return hbar_ ? HbarScalar(QiScalar(*hbar_)) : HbarScalar::hbar();
}

std::optional<std::size_t> BargmannBasis::index(const Monomial& alpha) const {
  auto it = index_.find(alpha);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool BargmannBasis::is_interior(std::size_t k) const {
  for (int e : states_.at(k)) {
    if (e >= cutoff_ - 1) return false;
  }
  return true;
}

std::vector<std::size_t> BargmannBasis::interior() const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < states_.size(); ++k) {
    if (is_interior(k)) out.push_back(k);
  }
  return out;
}

std::vector<std::size_t> BargmannBasis::of_degree(int degree) const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < states_.size(); ++k) {
    if (total_degree(states_[k]) == degree) out.push_back(k);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Bosonic operators

LadderMatrices ladder_matrices(const BargmannBasis& basis) {
  const std::size_t n = basis.size();
  const HbarScalar h = basis.hbar();
  LadderMatrices L;
  for (std::size_t i = 0; i < basis.modes(); ++i) {
    ExactMatrix a(n, n);
    ExactMatrix as(n, n);
    for (std::size_t k = 0; k < n; ++k) {
      Monomial alpha = basis.state(k);
      if (alpha[i] > 0) {
        Monomial lower = alpha;
        --lower[i];
        a.set(*basis.index(lower), k, h * HbarScalar(alpha[i]));
      }
      Monomial upper = alpha;
      ++upper[i];
      if (auto target = basis.index(upper)) as.set(*target, k, 1);
    }
    L.a.push_back(std::move(a));
    L.a_star.push_back(std::move(as));
  }
  return L;
}

ExactMatrix gram_matrix(const BargmannBasis& basis) {
  std::vector<HbarScalar> d;
  const HbarScalar h = basis.hbar();
  for (std::size_t k = 0; k < basis.size(); ++k) {
    HbarScalar v = 1;
    for (int e : basis.state(k)) {
      for (int t = 1; t <= e; ++t) v = v * (h * HbarScalar(t));
    }
    d.push_back(v);
  }
  return ExactMatrix::diagonal(d);
}

ExactMatrix adjoint_defect(const BargmannBasis& basis, std::size_t mode) {
  const LadderMatrices L = ladder_matrices(basis);
  const ExactMatrix G = gram_matrix(basis);
  return L.a_star.at(mode).adjoint() * G - G * L.a.at(mode);
}

ExactMatrix ccr_defect(const BargmannBasis& basis, std::size_t i, std::size_t j) {
  const LadderMatrices L = ladder_matrices(basis);
  ExactMatrix d = commutator(L.a.at(i), L.a_star.at(j));
  if (i == j) d -= ExactMatrix::identity(basis.size()) * basis.hbar();
  return d;
}

ExactMatrix oscillator_hamiltonian(const BargmannBasis& basis) {
  const LadderMatrices L = ladder_matrices(basis);
  ExactMatrix H(basis.size(), basis.size());
  for (std::size_t i = 0; i < basis.modes(); ++i) {
    H += L.a_star[i] * L.a[i] + L.a[i] * L.a_star[i];
  }
  return H * HbarScalar(QiScalar::rational(1, 2));
}

Su2Matrices schwinger_su2(const BargmannBasis& basis) {
  if (basis.modes() != 2) throw std::invalid_argument("schwinger_su2: needs exactly two modes");
  const LadderMatrices L = ladder_matrices(basis);
  const HbarScalar half(QiScalar::rational(1, 2));
  const ExactMatrix up = L.a_star[0] * L.a[1];
  const ExactMatrix down = L.a_star[1] * L.a[0];
  const ExactMatrix M3 = (L.a_star[0] * L.a[0] - L.a_star[1] * L.a[1]) * half;
  Su2Matrices s{(up + down) * half,
                (up - down) * HbarScalar(QiScalar::rational(1, 2) * -QiScalar::i()),
                M3,
                up,
                down,
                ExactMatrix(0, 0)};
  s.casimir = M3 * M3 + (up * down + down * up) * half;
  return s;
}

// ---------------------------------------------------------------------------
// Fermions

ExactMatrix CarAlgebra::number_operator() const {
  ExactMatrix N(a.at(0).rows(), a.at(0).cols());
  for (std::size_t i = 0; i < a.size(); ++i) N += a_star[i] * a[i];
  return N;
}

// Basis state s encodes occupations n_k as bit k; a_i picks up (-1)^{n_0+..+n_{i-1}}.
CarAlgebra car_matrices(int modes) {
  if (modes < 1 || modes > 12) throw std::invalid_argument("car_matrices: mode count must be in [1, 12]");
  const std::size_t dim = std::size_t{1} << modes;
  CarAlgebra car{modes, {}, {}};
  for (int i = 0; i < modes; ++i) {
    ExactMatrix a(dim, dim);
    const std::size_t bit = std::size_t{1} << i;
    for (std::size_t s = 0; s < dim; ++s) {
      if (!(s & bit)) continue;
      const int parity = __builtin_popcountll(s & (bit - 1)) % 2;
      a.set(s ^ bit, s, parity ? -1 : 1);
    }
    car.a_star.push_back(a.transpose());
    car.a.push_back(std::move(a));
  }
  return car;
}

}  // namespace qwb
