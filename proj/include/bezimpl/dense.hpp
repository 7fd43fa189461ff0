#ifndef BEZIMPL_DENSE_HPP
#define BEZIMPL_DENSE_HPP

#include <Eigen/Core>

namespace bezimpl {

template <typename S>
using MatrixX = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;

template <typename S>
using VectorX = Eigen::Matrix<S, Eigen::Dynamic, 1>;

template <typename S>
bool exact_equal(const MatrixX<S>& a, const MatrixX<S>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (!(a(i, j) == b(i, j))) return false;
  return true;
}

template <typename S>
bool exact_equal(const VectorX<S>& a, const VectorX<S>& b) {
  if (a.size() != b.size()) return false;
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (!(a[i] == b[i])) return false;
  return true;
}

}  // namespace bezimpl

#endif  // BEZIMPL_DENSE_HPP
