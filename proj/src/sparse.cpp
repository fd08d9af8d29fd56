#include "fuzzyd/sparse.hpp"

#include <algorithm>
#include <stdexcept>

#include <Eigen/SVD>

namespace fuzzyd {

using Trip = Eigen::Triplet<cd>;

SparseOperator::SparseOperator(std::size_t dim) : m_((Eigen::Index)dim, (Eigen::Index)dim) {}

SparseOperator::SparseOperator(Matrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) throw std::invalid_argument("SparseOperator must be square");
  prune();
}

void SparseOperator::prune() {
  m_.prune([](const Eigen::Index&, const Eigen::Index&, const cd& v) { return std::abs(v) >= drop_tol; });
  m_.makeCompressed();
}

SparseOperator SparseOperator::from_entries(std::size_t dim, const std::vector<Entry>& entries) {
  std::vector<Trip> t;
  t.reserve(entries.size());
  for (const auto& e : entries) {
    if (e.row >= dim || e.col >= dim) throw std::out_of_range("entry outside operator dimension");
    t.emplace_back((Eigen::Index)e.row, (Eigen::Index)e.col, e.value);
  }
  Matrix m((Eigen::Index)dim, (Eigen::Index)dim);
  m.setFromTriplets(t.begin(), t.end());
  return SparseOperator(std::move(m));
}

SparseOperator SparseOperator::identity(std::size_t dim) {
  Matrix m((Eigen::Index)dim, (Eigen::Index)dim);
  m.setIdentity();
  return SparseOperator(std::move(m));
}

SparseOperator SparseOperator::diagonal(const std::vector<cd>& diag) {
  std::vector<Entry> e;
  for (std::size_t i = 0; i < diag.size(); ++i) e.push_back({i, i, diag[i]});
  return from_entries(diag.size(), e);
}

SparseOperator SparseOperator::from_dense(const Eigen::MatrixXcd& d) {
  if (d.rows() != d.cols()) throw std::invalid_argument("from_dense: not square");
  Matrix m = d.sparseView();
  return SparseOperator(std::move(m));
}

std::vector<SparseOperator::Entry> SparseOperator::entries() const {
  std::vector<Entry> out;
  out.reserve(nnz());
  for (Eigen::Index r = 0; r < m_.outerSize(); ++r)
    for (Matrix::InnerIterator it(m_, r); it; ++it) out.push_back({(std::size_t)it.row(), (std::size_t)it.col(), it.value()});
  return out;
}

SparseOperator SparseOperator::adjoint() const { return SparseOperator(Matrix(m_.adjoint())); }

double SparseOperator::max_abs() const {
  double v = 0;
  for (Eigen::Index k = 0; k < m_.nonZeros(); ++k) v = std::max(v, std::abs(m_.valuePtr()[k]));
  return v;
}

SparseOperator SparseOperator::masked(const std::vector<bool>& rows, const std::vector<bool>& cols) const {
  std::vector<Entry> keep;
  for (const auto& e : entries())
    if (rows.at(e.row) && cols.at(e.col)) keep.push_back(e);
  return from_entries(dim(), keep);
}

SparseOperator& SparseOperator::operator+=(const SparseOperator& o) {
  m_ = m_ + o.m_;
  prune();
  return *this;
}

SparseOperator& SparseOperator::operator-=(const SparseOperator& o) {
  m_ = m_ - o.m_;
  prune();
  return *this;
}

SparseOperator& SparseOperator::operator*=(cd s) {
  m_ *= s;
  prune();
  return *this;
}

nlohmann::json SparseOperator::to_json() const {
  nlohmann::json j;
  j["dim"] = dim();
  nlohmann::json e = nlohmann::json::array();
  for (const auto& x : entries()) e.push_back({x.row, x.col, x.value.real(), x.value.imag()});
  j["entries"] = e;
  return j;
}

SparseOperator SparseOperator::from_json(const nlohmann::json& j) {
  std::size_t dim = j.at("dim").get<std::size_t>();
  std::vector<Entry> e;
  for (const auto& x : j.at("entries"))
    e.push_back({x.at(0).get<std::size_t>(), x.at(1).get<std::size_t>(), cd(x.at(2).get<double>(), x.at(3).get<double>())});
  return from_entries(dim, e);
}

SparseOperator operator+(const SparseOperator& a, const SparseOperator& b) {
  SparseOperator r = a;
  r += b;
  return r;
}

SparseOperator operator-(const SparseOperator& a, const SparseOperator& b) {
  SparseOperator r = a;
  r -= b;
  return r;
}

SparseOperator operator*(const SparseOperator& a, const SparseOperator& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("operator dimension mismatch");
  return SparseOperator(SparseOperator::Matrix(a.matrix() * b.matrix()));
}

SparseOperator operator*(cd s, const SparseOperator& a) {
  SparseOperator r = a;
  r *= s;
  return r;
}

SparseOperator operator*(const SparseOperator& a, cd s) { return s * a; }

Eigen::VectorXcd operator*(const SparseOperator& a, const Eigen::VectorXcd& v) { return a.matrix() * v; }

SparseOperator commutator(const SparseOperator& a, const SparseOperator& b) { return a * b - b * a; }

SparseOperator power(const SparseOperator& a, int n) {
  if (n < 0) throw std::invalid_argument("negative power");
  SparseOperator r = SparseOperator::identity(a.dim());
  for (int i = 0; i < n; ++i) r = r * a;
  return r;
}

// unpruned, so deviations below drop_tol are reported as they are
double max_abs_diff(const SparseOperator& a, const SparseOperator& b) {
  SparseOperator::Matrix d = a.matrix() - b.matrix();
  double v = 0;
  for (Eigen::Index r = 0; r < d.outerSize(); ++r)
    for (SparseOperator::Matrix::InnerIterator it(d, r); it; ++it) v = std::max(v, std::abs(it.value()));
  return v;
}

double op_norm(const SparseOperator& a) {
  if (a.dim() == 0 || a.nnz() == 0) return 0.0;
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(a.dense());
  return svd.singularValues()(0);
}

bool operator==(const SparseOperator& a, const SparseOperator& b) {
  if (a.dim() != b.dim()) return false;
  auto x = a.entries(), y = b.entries();
  if (x.size() != y.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i].row != y[i].row || x[i].col != y[i].col || x[i].value != y[i].value) return false;
  return true;
}

}  // namespace fuzzyd
