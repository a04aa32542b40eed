#pragma once

// Exact dense linear algebra over Eigen matrices with an exact scalar.
//
// Eigen's decompositions pivot on magnitudes against a floating epsilon, which
// is meaningless for exact fields. The routines below pivot on the first
// nonzero entry instead and never round.

#include "kmcat/rational.hpp"

#include <Eigen/Core>

#include <map>
#include <optional>
#include <vector>

namespace kmcat {

template <typename Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using MatrixQ = Mat<Rational>;
using VectorQ = Vec<Rational>;

template <typename Scalar>
struct RowEchelon {
  Mat<Scalar> reduced;        // reduced row echelon form, zero rows at the bottom
  std::vector<int> pivots;    // pivot column of each nonzero row
  [[nodiscard]] int rank() const { return static_cast<int>(pivots.size()); }
};

/// Reduced row echelon form by Gauss-Jordan elimination.
template <typename Derived>
RowEchelon<typename Derived::Scalar> rref(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  RowEchelon<Scalar> out;
  out.reduced = m;
  Mat<Scalar>& a = out.reduced;
  const Eigen::Index rows = a.rows(), cols = a.cols();
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index p = r;
    while (p < rows && a(p, c) == Scalar(0)) ++p;
    if (p == rows) continue;
    if (p != r) a.row(p).swap(a.row(r));
    const Scalar inv = Scalar(1) / a(r, c);
    for (Eigen::Index j = c; j < cols; ++j) a(r, j) *= inv;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || a(i, c) == Scalar(0)) continue;
      const Scalar f = a(i, c);
      for (Eigen::Index j = c; j < cols; ++j) a(i, j) -= f * a(r, j);
    }
    out.pivots.push_back(static_cast<int>(c));
    ++r;
  }
  return out;
}

template <typename Derived>
int rank(const Eigen::MatrixBase<Derived>& m) {
  return rref(m).rank();
}

/// Columns form a basis of {x : m x = 0}.
template <typename Derived>
Mat<typename Derived::Scalar> nullspace(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  const auto e = rref(m);
  const Eigen::Index cols = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (int p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<Eigen::Index> free_cols;
  for (Eigen::Index c = 0; c < cols; ++c)
    if (!is_pivot[static_cast<std::size_t>(c)]) free_cols.push_back(c);
  Mat<Scalar> basis = Mat<Scalar>::Zero(cols, static_cast<Eigen::Index>(free_cols.size()));
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const Eigen::Index f = free_cols[k];
    basis(f, static_cast<Eigen::Index>(k)) = Scalar(1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
      basis(e.pivots[r], static_cast<Eigen::Index>(k)) = -e.reduced(static_cast<Eigen::Index>(r), f);
  }
  return basis;
}

/// Some solution of a x = b, or nullopt if the system is inconsistent.
template <typename DerivedA, typename DerivedB>
std::optional<Vec<typename DerivedA::Scalar>> solve(const Eigen::MatrixBase<DerivedA>& a,
                                                    const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename DerivedA::Scalar;
  Mat<Scalar> aug(a.rows(), a.cols() + 1);
  aug << a, b;
  const auto e = rref(aug);
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) return std::nullopt;
  Vec<Scalar> x = Vec<Scalar>::Zero(a.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r)
    x(e.pivots[r]) = e.reduced(static_cast<Eigen::Index>(r), a.cols());
  return x;
}

template <typename Derived>
std::optional<Mat<typename Derived::Scalar>> inverse(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index n = m.rows();
  if (m.cols() != n) return std::nullopt;
  Mat<Scalar> aug(n, 2 * n);
  aug << m, Mat<Scalar>::Identity(n, n);
  const auto e = rref(aug);
  if (e.rank() < n || e.pivots[static_cast<std::size_t>(n - 1)] >= n) return std::nullopt;
  return Mat<Scalar>(e.reduced.rightCols(n));
}

template <typename Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  Mat<Scalar> a = m;
  const Eigen::Index n = a.rows();
  Scalar det(1);
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index p = c;
    while (p < n && a(p, c) == Scalar(0)) ++p;
    if (p == n) return Scalar(0);
    if (p != c) {
      a.row(p).swap(a.row(c));
      det = -det;
    }
    det *= a(c, c);
    for (Eigen::Index i = c + 1; i < n; ++i) {
      if (a(i, c) == Scalar(0)) continue;
      const Scalar f = a(i, c) / a(c, c);
      for (Eigen::Index j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

template <typename Derived>
bool is_zero(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (m(i, j) != Scalar(0)) return false;
  return true;
}

/// Matrix power by repeated squaring.
template <typename Derived>
Mat<typename Derived::Scalar> matrix_power(const Eigen::MatrixBase<Derived>& m, unsigned e) {
  using Scalar = typename Derived::Scalar;
  Mat<Scalar> result = Mat<Scalar>::Identity(m.rows(), m.cols());
  Mat<Scalar> base = m;
  while (e) {
    if (e & 1U) result = (result * base).eval();
    base = (base * base).eval();
    e >>= 1U;
  }
  return result;
}

/// Sparse vector over Q keyed by column index.
using SparseVectorQ = std::map<int, Rational>;

/// Incrementally built row-reduced basis of a subspace of Q^n, stored sparsely.
///
/// Every stored row has a leading entry 1 at its pivot, and no stored row has a
/// nonzero entry at another row's pivot column.
class SparseEchelon {
 public:
  /// Reduces v against the basis in place. Returns true if v was already in the span.
  bool reduce(SparseVectorQ& v) const;

  /// Adds v to the span; returns true if the rank grew.
  bool insert(SparseVectorQ v);

  [[nodiscard]] bool contains(SparseVectorQ v) const { return reduce(v); }
  [[nodiscard]] int rank() const { return static_cast<int>(rows_.size()); }
  [[nodiscard]] bool is_pivot(int col) const { return rows_.count(col) != 0; }
  [[nodiscard]] const std::map<int, SparseVectorQ>& rows() const { return rows_; }

 private:
  std::map<int, SparseVectorQ> rows_;  // pivot column -> row
};

}  // namespace kmcat
