#pragma once

#include <Eigen/Core>

#include <vector>

namespace cyclocover {

template <typename Scalar>
using DynMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using DynVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Basis of the right kernel of `a` over an exact field, by reduction to
/// row echelon form. Scalar needs is_zero() and inverse().
template <typename Scalar>
std::vector<DynVector<Scalar>> nullspace(DynMatrix<Scalar> a) {
  const Eigen::Index rows = a.rows(), cols = a.cols();
  std::vector<Eigen::Index> pivot_cols;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index p = r;
    while (p < rows && a(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r) a.row(p).swap(a.row(r));
    const Scalar inv = a(r, c).inverse();
    for (Eigen::Index k = c; k < cols; ++k) a(r, k) = a(r, k) * inv;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      const Scalar f = a(i, c);
      for (Eigen::Index k = c; k < cols; ++k) a(i, k) -= f * a(r, k);
    }
    pivot_cols.push_back(c);
    ++r;
  }

  std::vector<DynVector<Scalar>> basis;
  std::size_t next_pivot = 0;
  for (Eigen::Index free = 0; free < cols; ++free) {
    if (next_pivot < pivot_cols.size() && pivot_cols[next_pivot] == free) {
      ++next_pivot;
      continue;
    }
    DynVector<Scalar> v(cols);
    for (Eigen::Index k = 0; k < cols; ++k) v(k) = Scalar(0);
    v(free) = Scalar(1);
    for (std::size_t i = 0; i < pivot_cols.size(); ++i)
      if (pivot_cols[i] < free) v(pivot_cols[i]) = -a(static_cast<Eigen::Index>(i), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace cyclocover
