#ifndef BEZIMPL_BEZOUT_HPP
#define BEZIMPL_BEZOUT_HPP

#include <cmath>
#include <stdexcept>
#include <utility>

#include "bezimpl/dense.hpp"
#include "bezimpl/rational.hpp"

namespace bezimpl {

/// Bernstein-Bezout matrix of two coefficient lists sharing one
/// representation degree d (lists of length d+1, d >= 1). Column 1 first,
/// then the bottom row, then the interior column by column; each interior
/// entry (i,j+1) reads the already finished entry (i+1,j).
template <typename S>
MatrixX<S> bezout_matrix(const VectorX<S>& p, const VectorX<S>& q) {
  if (p.size() != q.size())
    throw std::invalid_argument("bezout_matrix: coefficient lists of different degrees");
  const int n = static_cast<int>(p.size()) - 1;
  if (n < 1) throw std::invalid_argument("bezout_matrix: degree must be at least 1");

  MatrixX<S> bs = MatrixX<S>::Zero(n, n);
  for (int i = 1; i <= n; ++i)
    bs(i - 1, 0) = (S(n) / S(i)) * (p[i] * q[0] - p[0] * q[i]);
  for (int j = 1; j <= n - 1; ++j)
    bs(n - 1, j) = (S(n) / S(n - j)) * (p[n] * q[j] - p[j] * q[n]);
  for (int j = 1; j <= n - 1; ++j)
    for (int i = 1; i <= n - 1; ++i)
      bs(i - 1, j) = (S(n) * S(n) / (S(i) * S(n - j))) * (p[i] * q[j] - p[j] * q[i]) +
                     (S(j) * S(n - i) / (S(i) * S(n - j))) * bs(i, j - 1);
  return bs;
}

namespace detail {

// Fraction-free Bareiss elimination; pivots by searching for an exact
// nonzero below the diagonal. Singular input yields 0.
template <typename S>
S determinant_bareiss(MatrixX<S> a) {
  const Eigen::Index n = a.rows();
  if (n == 0) return S(1);
  S prev(1);
  bool negate = false;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (a(k, k) == S(0)) {
      Eigen::Index r = k + 1;
      while (r < n && a(r, k) == S(0)) ++r;
      if (r == n) return S(0);
      a.row(k).swap(a.row(r));
      negate = !negate;
    }
    for (Eigen::Index i = k + 1; i < n; ++i)
      for (Eigen::Index j = k + 1; j < n; ++j)
        a(i, j) = (a(k, k) * a(i, j) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  const S det = a(n - 1, n - 1);
  return negate ? -det : det;
}

// Partially pivoted elimination for inexact scalars.
template <typename S>
S determinant_pivoted(MatrixX<S> a) {
  const Eigen::Index n = a.rows();
  if (n == 0) return S(1);
  S det(1);
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index best = k;
    for (Eigen::Index r = k + 1; r < n; ++r)
      if (std::abs(a(r, k)) > std::abs(a(best, k))) best = r;
    if (a(best, k) == S(0)) return S(0);
    if (best != k) {
      a.row(k).swap(a.row(best));
      det = -det;
    }
    det *= a(k, k);
    for (Eigen::Index i = k + 1; i < n; ++i) {
      const S m = a(i, k) / a(k, k);
      for (Eigen::Index j = k + 1; j < n; ++j) a(i, j) -= m * a(k, j);
    }
  }
  return det;
}

}  // namespace detail

/// Exact determinant (Bareiss) over exact scalars, partially pivoted
/// elimination over floats. Singular matrices return 0.
template <typename S>
S determinant(const MatrixX<S>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
  if constexpr (scalar_traits<S>::is_exact)
    return detail::determinant_bareiss<S>(m);
  else
    return detail::determinant_pivoted<S>(m);
}

}  // namespace bezimpl

#endif  // BEZIMPL_BEZOUT_HPP
