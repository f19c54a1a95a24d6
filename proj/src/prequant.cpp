#include "qwb/prequant.hpp"

#include <stdexcept>

namespace qwb {

// ---------------------------------------------------------------------------
// PhaseDiffOp

PhaseDiffOp::PhaseDiffOp(TablePtr table) : table_(std::move(table)), b_(table_) {
  a_.assign(table_->size(), PhasePoly(table_));
}

PhaseDiffOp::PhaseDiffOp(std::vector<PhasePoly> vector_part, PhasePoly scalar_part)
    : table_(scalar_part.table_ptr()), a_(std::move(vector_part)), b_(std::move(scalar_part)) {
  if (a_.size() != table_->size()) throw std::invalid_argument("PhaseDiffOp: one component per variable");
  for (const auto& c : a_) require_same_table(table_, c.table_ptr(), "PhaseDiffOp");
}

PhaseDiffOp PhaseDiffOp::multiplication(const PhasePoly& f) {
  PhaseDiffOp op(f.table_ptr());
  op.b_ = f;
  return op;
}

PhaseDiffOp PhaseDiffOp::vector_field(std::vector<PhasePoly> components) {
  if (components.empty()) throw std::invalid_argument("PhaseDiffOp: empty vector field");
  PhasePoly zero(components.front().table_ptr());
  return {std::move(components), std::move(zero)};
}

PhaseDiffOp PhaseDiffOp::partial(TablePtr table, std::size_t var) {
  PhaseDiffOp op(table);
  op.a_.at(var) = PhasePoly::constant(table, 1);
  return op;
}

PhaseDiffOp PhaseDiffOp::from_diffop(const DiffOperator& d) {
  if (d.order() > 1) throw std::invalid_argument("PhaseDiffOp: operator has order above one");
  PhaseDiffOp op(d.table_ptr());
  const std::size_t n = d.table_ptr()->size();
  for (std::size_t i = 0; i < n; ++i) {
    Monomial e(n, 0);
    e[i] = 1;
    op.a_[i] = d.coefficient(e);
  }
  op.b_ = d.coefficient(Monomial(n, 0));
  return op;
}

bool PhaseDiffOp::is_zero() const {
  for (const auto& c : a_) {
    if (!c.is_zero()) return false;
  }
  return b_.is_zero();
}

PhasePoly PhaseDiffOp::apply(const PhasePoly& f) const {
  require_same_table(table_, f.table_ptr(), "PhaseDiffOp::apply");
  PhasePoly r = b_ * f;
  for (std::size_t i = 0; i < a_.size(); ++i) {
    if (!a_[i].is_zero()) r += a_[i] * f.derivative(i);
  }
  return r;
}

DiffOperator PhaseDiffOp::to_diffop() const {
  DiffOperator d(table_);
  const std::size_t n = table_->size();
  for (std::size_t i = 0; i < n; ++i) {
    Monomial e(n, 0);
    e[i] = 1;
    d.add_term(e, a_[i]);
  }
  d.add_term(Monomial(n, 0), b_);
  return d;
}

PhaseDiffOp PhaseDiffOp::operator-() const {
  PhaseDiffOp r = *this;
  for (auto& c : r.a_) c = -c;
  r.b_ = -r.b_;
  return r;
}

PhaseDiffOp& PhaseDiffOp::operator+=(const PhaseDiffOp& o) {
  require_same_table(table_, o.table_, "PhaseDiffOp::+");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  b_ += o.b_;
  return *this;
}

PhaseDiffOp& PhaseDiffOp::operator-=(const PhaseDiffOp& o) { return *this += -o; }

PhaseDiffOp& PhaseDiffOp::operator*=(const HbarScalar& c) {
  for (auto& x : a_) x *= c;
  b_ *= c;
  return *this;
}

bool operator==(const PhaseDiffOp& a, const PhaseDiffOp& b) {
  return same_table(a.table_, b.table_) && a.a_ == b.a_ && a.b_ == b.b_;
}

// ---------------------------------------------------------------------------
// Contact forms

ContactForm ContactForm::canonical(const TablePtr& table) {
  if (table->chart() != Chart::canonical) throw std::invalid_argument("ContactForm: needs the canonical chart");
  ContactForm theta;
  theta.coeffs.assign(table->size(), PhasePoly(table));
  for (std::size_t j = 0; j < table->dof(); ++j) {
    theta.coeffs[table->q_index(j)] = PhasePoly::variable(table, table->p_index(j));
  }
  return theta;
}

ContactForm ContactForm::kahler(const TablePtr& table) {
  if (table->chart() != Chart::complex) throw std::invalid_argument("ContactForm: needs the complex chart");
  ContactForm theta;
  theta.coeffs.assign(table->size(), PhasePoly(table));
  const QiScalar half_i = QiScalar::rational(1, 2) * QiScalar::i();
  for (std::size_t j = 0; j < table->dof(); ++j) {
    const std::size_t z = j;
    const std::size_t zb = table->conjugate(j);
    theta.coeffs[z] = PhasePoly::variable(table, zb) * HbarScalar(-half_i);
    theta.coeffs[zb] = PhasePoly::variable(table, z) * HbarScalar(half_i);
  }
  return theta;
}

PhasePoly ContactForm::contract(const PhaseDiffOp& X) const {
  require_same_table(table_ptr(), X.table_ptr(), "ContactForm::contract");
  PhasePoly r(table_ptr());
  for (std::size_t i = 0; i < coeffs.size(); ++i) r += coeffs[i] * X.component(i);
  return r;
}

PhasePoly ContactForm::omega(const PhaseDiffOp& X, const PhaseDiffOp& Y) const {
  require_same_table(table_ptr(), X.table_ptr(), "ContactForm::omega");
  require_same_table(table_ptr(), Y.table_ptr(), "ContactForm::omega");
  PhasePoly r(table_ptr());
  const std::size_t n = coeffs.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const PhasePoly w = coeffs[j].derivative(i) - coeffs[i].derivative(j);
      if (!w.is_zero()) r += w * X.component(i) * Y.component(j);
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Prequantization

PhaseDiffOp hamiltonian_vector_field(const PhasePoly& f, const PoissonStructure& P) {
  require_same_table(f.table_ptr(), P.table_ptr(), "hamiltonian_vector_field");
  const std::size_t n = P.size();
  std::vector<PhasePoly> a(n, PhasePoly(f.table_ptr()));
  for (std::size_t i = 0; i < n; ++i) {
    const PhasePoly df = f.derivative(i);
    if (df.is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (!P.entry(i, j).is_zero()) a[j] += df * HbarScalar(P.entry(i, j));
    }
  }
  return PhaseDiffOp::vector_field(std::move(a));
}

PhaseDiffOp prequantize(const PhasePoly& f, const ContactForm& theta, const PoissonStructure& P) {
  const PhaseDiffOp X = hamiltonian_vector_field(f, P);
  return X * HbarScalar::monomial(QiScalar::i(), 1) + PhaseDiffOp::multiplication(f + theta.contract(X));
}

PhaseDiffOp prequantize(const PhasePoly& f) {
  const TablePtr& t = f.table_ptr();
  const ContactForm theta = t->chart() == Chart::complex ? ContactForm::kahler(t) : ContactForm::canonical(t);
  return prequantize(f, theta, PoissonStructure::canonical(t));
}

PhaseDiffOp diffop_commutator(const PhaseDiffOp& a, const PhaseDiffOp& b) {
  return PhaseDiffOp::from_diffop(commutator(a.to_diffop(), b.to_diffop()));
}

PhaseDiffOp formal_adjoint(const PhaseDiffOp& op) {
  const TablePtr& t = op.table_ptr();
  std::vector<PhasePoly> a(t->size(), PhasePoly(t));
  PhasePoly b = op.scalar_part().conj();
  for (std::size_t i = 0; i < t->size(); ++i) {
    const PhasePoly c = op.component(i).conj();
    if (c.is_zero()) continue;
    const std::size_t k = t->conjugate(i);
    a[k] -= c;
    b -= c.derivative(k);
  }
  return {std::move(a), std::move(b)};
}

PhaseDiffOp covariant_derivative(const PhaseDiffOp& X, const ContactForm& theta) {
  const HbarScalar minus_i_over_hbar = HbarScalar::monomial(-QiScalar::i(), -1);
  return X + PhaseDiffOp::multiplication(theta.contract(X) * minus_i_over_hbar);
}

PhasePoly connection_curvature(const PhaseDiffOp& X, const PhaseDiffOp& Y, const ContactForm& theta) {
  if (!X.is_vector_field() || !Y.is_vector_field()) {
    throw std::invalid_argument("connection_curvature: arguments must be vector fields");
  }
  const PhaseDiffOp bracket = diffop_commutator(X, Y);
  const PhaseDiffOp R = (diffop_commutator(covariant_derivative(X, theta), covariant_derivative(Y, theta)) -
                         covariant_derivative(bracket, theta)) *
                        HbarScalar(QiScalar::i());
  for (const auto& c : R.vector_part()) {
    if (!c.is_zero()) throw std::logic_error("connection_curvature: non-scalar curvature");
  }
  return R.scalar_part();
}

DiffOperator prequant_defect_kinetic(const mpq_class& mass) {
  if (sgn(mass) <= 0) throw std::invalid_argument("prequant_defect_kinetic: mass must be positive");
  const TablePtr t = VariableTable::canonical(1);
  const PhasePoly p = PhasePoly::variable(t, "p");
  const HbarScalar inv2m(QiScalar(mpq_class(1) / (2 * mass)));
  const DiffOperator Pp = prequantize(p).to_diffop();
  return prequantize(p * p * inv2m).to_diffop() - (Pp * Pp) * inv2m;
}

// ---------------------------------------------------------------------------
// Circle

CircleModeOp::CircleModeOp(int window) : window_(window) {
  if (window < 1) throw std::invalid_argument("CircleModeOp: window must be at least 1");
}

CircleModeOp CircleModeOp::identity(int window) {
  CircleModeOp op(window);
  for (int n = -window; n <= window; ++n) op.set_entry(n, n, 1);
  return op;
}

CircleModeOp CircleModeOp::momentum(int window) {
  CircleModeOp op(window);
  for (int n = -window; n <= window; ++n) op.set_entry(n, n, HbarScalar::monomial(n, 1));
  return op;
}

CircleModeOp CircleModeOp::shift(int window, int s) {
  CircleModeOp op(window);
  for (int n = -window; n <= window; ++n) {
    if (n + s >= -window && n + s <= window) op.set_entry(n + s, n, 1);
  }
  return op;
}

HbarScalar CircleModeOp::entry(int row, int col) const {
  auto it = bands_.find(row - col);
  if (it == bands_.end() || col < -window_ || col > window_) return {};
  return it->second[static_cast<std::size_t>(col + window_)];
}

void CircleModeOp::set_entry(int row, int col, const HbarScalar& v) {
  if (row < -window_ || row > window_ || col < -window_ || col > window_) {
    throw std::out_of_range("CircleModeOp: mode outside the window");
  }
  auto& band = bands_[row - col];
  band.resize(static_cast<std::size_t>(2 * window_ + 1));
  band[static_cast<std::size_t>(col + window_)] = v;
  prune();
}

void CircleModeOp::prune() {
  for (auto it = bands_.begin(); it != bands_.end();) {
    bool empty = true;
    for (const auto& v : it->second) empty = empty && v.is_zero();
    it = empty ? bands_.erase(it) : std::next(it);
  }
}

bool CircleModeOp::is_diagonal() const { return bands_.empty() || (bands_.size() == 1 && bands_.count(0)); }

HbarScalar CircleModeOp::eigenvalue(int n) const {
  if (!is_diagonal()) throw std::logic_error("CircleModeOp: not diagonal");
  return entry(n, n);
}

std::vector<HbarScalar> CircleModeOp::spectrum() const {
  std::vector<HbarScalar> out;
  for (int n = -window_; n <= window_; ++n) out.push_back(eigenvalue(n));
  return out;
}

CircleModeOp& CircleModeOp::operator+=(const CircleModeOp& o) {
  if (o.window_ != window_) throw std::invalid_argument("CircleModeOp: window mismatch");
  for (const auto& [s, band] : o.bands_) {
    auto& mine = bands_[s];
    mine.resize(band.size());
    for (std::size_t k = 0; k < band.size(); ++k) mine[k] += band[k];
  }
  prune();
  return *this;
}

CircleModeOp& CircleModeOp::operator*=(const HbarScalar& c) {
  for (auto& [s, band] : bands_) {
    for (auto& v : band) v *= c;
  }
  prune();
  return *this;
}

CircleModeOp operator*(const CircleModeOp& a, const CircleModeOp& b) {
  if (a.window_ != b.window_) throw std::invalid_argument("CircleModeOp: window mismatch");
  CircleModeOp r(a.window_);
  const int K = a.window_;
  for (int col = -K; col <= K; ++col) {
    for (const auto& [sb, bandb] : b.bands_) {
      const int mid = col + sb;
      if (mid < -K || mid > K) continue;
      const HbarScalar& vb = bandb[static_cast<std::size_t>(col + K)];
      if (vb.is_zero()) continue;
      for (const auto& [sa, banda] : a.bands_) {
        const int row = mid + sa;
        if (row < -K || row > K) continue;
        const HbarScalar& va = banda[static_cast<std::size_t>(mid + K)];
        if (!va.is_zero()) r.set_entry(row, col, r.entry(row, col) + va * vb);
      }
    }
  }
  return r;
}

bool operator==(const CircleModeOp& a, const CircleModeOp& b) {
  return a.window_ == b.window_ && a.bands_ == b.bands_;
}

CircleModeOp circle_prequantize(const mpq_class& lambda, int window) {
  if (sgn(lambda) < 0 || lambda >= 1) throw std::invalid_argument("circle_prequantize: lambda must lie in [0, 1)");
  return CircleModeOp::identity(window) * HbarScalar::monomial(QiScalar(lambda), 1) + CircleModeOp::momentum(window);
}

// ---------------------------------------------------------------------------
// Bargmann

PhaseDiffOp bargmann_annihilation(const TablePtr& complex_table) {
  if (complex_table->chart() != Chart::complex || complex_table->dof() != 1) {
    throw std::invalid_argument("bargmann_annihilation: needs one complex mode");
  }
  return prequantize(PhasePoly::variable(complex_table, "zb"));
}

PhaseDiffOp bargmann_dbar(const TablePtr& complex_table) {
  if (complex_table->chart() != Chart::complex || complex_table->dof() != 1) {
    throw std::invalid_argument("bargmann_dbar: needs one complex mode");
  }
  return covariant_derivative(PhaseDiffOp::partial(complex_table, complex_table->index("zb")),
                              ContactForm::kahler(complex_table));
}

PhaseDiffOp bargmann_polarization_check() {
  const TablePtr t = VariableTable::complex(1);
  return diffop_commutator(bargmann_annihilation(t), bargmann_dbar(t));
}

nlohmann::json to_json(const PhaseDiffOp& op) {
  nlohmann::json vec = nlohmann::json::array();
  for (std::size_t i = 0; i < op.vector_part().size(); ++i) {
    vec.push_back({{"var", op.table_ptr()->name(i)}, {"coeff", to_json(op.component(i))}});
  }
  return {{"vector", vec}, {"scalar", to_json(op.scalar_part())}};
}

nlohmann::json to_json(const CircleModeOp& op) {
  nlohmann::json entries = nlohmann::json::array();
  for (int col = -op.window(); col <= op.window(); ++col) {
    for (const auto& [s, band] : op.bands()) {
      const HbarScalar& v = band[static_cast<std::size_t>(col + op.window())];
      if (v.is_zero()) continue;
      entries.push_back({{"row", col + s}, {"col", col}, {"value", v.to_string()}});
    }
  }
  return {{"window", op.window()}, {"entries", entries}};
}

}  // namespace qwb
