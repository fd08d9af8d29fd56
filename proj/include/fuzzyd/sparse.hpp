#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <json.hpp>

namespace fuzzyd {

using cd = std::complex<double>;

// Complex square operator on the chain basis. Entries with |v| < 1e-15 are
// dropped after every construction and arithmetic step.
class SparseOperator {
 public:
  using Matrix = Eigen::SparseMatrix<cd, Eigen::RowMajor>;

  struct Entry {
    std::size_t row, col;
    cd value;
  };

  static constexpr double drop_tol = 1e-15;

  SparseOperator() = default;
  explicit SparseOperator(std::size_t dim);
  explicit SparseOperator(Matrix m);

  // duplicates are summed
  static SparseOperator from_entries(std::size_t dim, const std::vector<Entry>& entries);
  static SparseOperator identity(std::size_t dim);
  static SparseOperator diagonal(const std::vector<cd>& diag);
  static SparseOperator from_dense(const Eigen::MatrixXcd& m);

  std::size_t dim() const { return (std::size_t)m_.rows(); }
  std::size_t nnz() const { return (std::size_t)m_.nonZeros(); }
  const Matrix& matrix() const { return m_; }
  Eigen::MatrixXcd dense() const { return Eigen::MatrixXcd(m_); }

  // sorted by (row, col)
  std::vector<Entry> entries() const;
  cd at(std::size_t r, std::size_t c) const { return m_.coeff((Eigen::Index)r, (Eigen::Index)c); }

  SparseOperator adjoint() const;
  double max_abs() const;
  // zero out every entry whose row or column fails the mask
  SparseOperator masked(const std::vector<bool>& rows, const std::vector<bool>& cols) const;

  SparseOperator& operator+=(const SparseOperator& o);
  SparseOperator& operator-=(const SparseOperator& o);
  SparseOperator& operator*=(cd s);

  nlohmann::json to_json() const;
  static SparseOperator from_json(const nlohmann::json& j);

 private:
  void prune();
  Matrix m_;
};

SparseOperator operator+(const SparseOperator& a, const SparseOperator& b);
SparseOperator operator-(const SparseOperator& a, const SparseOperator& b);
SparseOperator operator*(const SparseOperator& a, const SparseOperator& b);
SparseOperator operator*(cd s, const SparseOperator& a);
SparseOperator operator*(const SparseOperator& a, cd s);
Eigen::VectorXcd operator*(const SparseOperator& a, const Eigen::VectorXcd& v);

SparseOperator commutator(const SparseOperator& a, const SparseOperator& b);
SparseOperator power(const SparseOperator& a, int n);
double max_abs_diff(const SparseOperator& a, const SparseOperator& b);
// exact spectral norm of the finite matrix
double op_norm(const SparseOperator& a);
bool operator==(const SparseOperator& a, const SparseOperator& b);

}  // namespace fuzzyd
