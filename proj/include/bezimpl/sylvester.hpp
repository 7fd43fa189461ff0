#ifndef BEZIMPL_SYLVESTER_HPP
#define BEZIMPL_SYLVESTER_HPP

#include <optional>
#include <stdexcept>

#include "bezimpl/bezout.hpp"
#include "bezimpl/dense.hpp"
#include "bezimpl/implicitize.hpp"
#include "bezimpl/rational.hpp"

// Cross-check machinery deliberately built from a different algorithm family
// than the main pipeline: Sylvester matrices over the power basis, a plain
// integer node grid, and dense elimination.

namespace bezimpl {

/// Sylvester matrix for ascending coefficient lists with prescribed formal
/// degrees: dq shifted copies of p over dp shifted copies of q. Leading
/// entries may be zero (formal degree above the true one).
template <typename S>
MatrixX<S> sylvester_matrix(const VectorX<S>& p, int dp, const VectorX<S>& q, int dq) {
  if (p.size() != dp + 1 || q.size() != dq + 1)
    throw std::invalid_argument("sylvester_matrix: list length must be formal degree + 1");
  const int n = dp + dq;
  MatrixX<S> m = MatrixX<S>::Zero(n, n);
  for (int r = 0; r < dq; ++r)
    for (int k = 0; k <= dp; ++k) m(r, r + k) = p[k];
  for (int r = 0; r < dp; ++r)
    for (int k = 0; k <= dq; ++k) m(dq + r, r + k) = q[k];
  return m;
}

/// Resultant as the Sylvester determinant of the true-degree lists; trailing
/// zeros are trimmed first, the zero polynomial is rejected.
template <typename S>
S sylvester_resultant(VectorX<S> p, VectorX<S> q) {
  const auto trim = [](VectorX<S>& v) {
    Eigen::Index n = v.size();
    while (n > 1 && v[n - 1] == S(0)) --n;
    v.conservativeResize(n);
    return !(n == 1 && v[0] == S(0));
  };
  if (!trim(p) || !trim(q))
    throw std::invalid_argument("sylvester_resultant: zero polynomial");
  const int dp = static_cast<int>(p.size()) - 1;
  const int dq = static_cast<int>(q.size()) - 1;
  return determinant<S>(sylvester_matrix<S>(p, dp, q, dq));
}

/// Dense Gaussian elimination solve; exact scalars pivot on the first nonzero,
/// floats partially pivot. Throws on a singular system.
template <typename S>
VectorX<S> solve_dense(MatrixX<S> a, VectorX<S> b) {
  const Eigen::Index n = a.rows();
  if (a.cols() != n || b.size() != n) throw std::invalid_argument("solve_dense: shape mismatch");
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index best = k;
    if constexpr (scalar_traits<S>::is_exact) {
      while (best < n && a(best, k) == S(0)) ++best;
      if (best == n) throw std::invalid_argument("solve_dense: singular matrix");
    } else {
      for (Eigen::Index r = k + 1; r < n; ++r)
        if (std::abs(a(r, k)) > std::abs(a(best, k))) best = r;
      if (a(best, k) == S(0)) throw std::invalid_argument("solve_dense: singular matrix");
    }
    if (best != k) {
      a.row(k).swap(a.row(best));
      std::swap(b[k], b[best]);
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      if (a(i, k) == S(0)) continue;
      const S m = a(i, k) / a(k, k);
      for (Eigen::Index j = k; j < n; ++j) a(i, j) -= m * a(k, j);
      b[i] -= m * b[k];
    }
  }
  VectorX<S> x(n);
  for (Eigen::Index i = n - 1; i >= 0; --i) {
    S acc = b[i];
    for (Eigen::Index j = i + 1; j < n; ++j) acc -= a(i, j) * x[j];
    x[i] = acc / a(i, i);
  }
  return x;
}

/// Bivariate polynomial in the power basis: coeffs(k,l) multiplies x^k y^l.
template <typename S>
struct BivariatePower {
  int deg_x = 0, deg_y = 0;
  MatrixX<S> coeffs;
};

/// Implicit polynomial in the power basis, up to nonzero scale, by evaluating
/// the Sylvester resultant on the integer grid {1..deg_x+1} x {1..deg_y+1}
/// and solving the Vandermonde-structured system densely. Test-scale only:
/// degrees are capped at 6.
template <typename S>
BivariatePower<S> resultant_curve_power(const RationalCurve<S>& curve) {
  const auto pr = detail::profile_curve(curve);
  if (pr.deg_x > 6 || pr.deg_y > 6)
    throw std::invalid_argument("resultant_curve_power: degree cap (6) exceeded");
  const int n = pr.deg_x, m = pr.deg_y;

  const VectorX<S> ax_num = to_power(curve.x_num), ax_den = to_power(curve.x_den);
  const VectorX<S> ay_num = to_power(curve.y_num), ay_den = to_power(curve.y_den);
  const int dp = pr.x_elim_degree, dq = pr.y_elim_degree;

  const auto elim_at = [](const VectorX<S>& num, const VectorX<S>& den, const S& v, int deg) {
    VectorX<S> out = VectorX<S>::Zero(deg + 1);
    for (int k = 0; k <= deg; ++k) {
      if (k < num.size()) out[k] += num[k];
      if (k < den.size()) out[k] -= v * den[k];
    }
    return out;
  };

  const Eigen::Index unknowns = (n + 1) * (m + 1);
  MatrixX<S> system(unknowns, unknowns);
  VectorX<S> values(unknowns);
  Eigen::Index row = 0;
  for (int i = 0; i <= n; ++i) {
    const S x = S(i + 1);
    for (int j = 0; j <= m; ++j) {
      const S y = S(j + 1);
      const VectorX<S> pv = elim_at(ax_num, ax_den, x, dp);
      const VectorX<S> qv = elim_at(ay_num, ay_den, y, dq);
      values[row] = determinant<S>(sylvester_matrix<S>(pv, dp, qv, dq));
      Eigen::Index col = 0;
      S xp(1);
      for (int k = 0; k <= n; ++k) {
        S yp(1);
        for (int l = 0; l <= m; ++l) {
          system(row, col++) = xp * yp;
          yp *= y;
        }
        xp *= x;
      }
      ++row;
    }
  }

  const VectorX<S> flat = solve_dense<S>(system, values);
  BivariatePower<S> result{n, m, MatrixX<S>(n + 1, m + 1)};
  Eigen::Index idx = 0;
  for (int k = 0; k <= n; ++k)
    for (int l = 0; l <= m; ++l) result.coeffs(k, l) = flat[idx++];
  return result;
}

/// Tensor-product Bernstein coefficients of a power-basis bivariate
/// polynomial: the per-axis inverse of to_power, c = M_x A M_y^T with
/// M(i,k) = C(i,k)/C(d,k).
template <typename S>
MatrixX<S> power_to_tensor_bernstein(const BivariatePower<S>& p) {
  const auto conversion = [](int d) {
    MatrixX<S> m = MatrixX<S>::Zero(d + 1, d + 1);
    for (int i = 0; i <= d; ++i)
      for (int k = 0; k <= i; ++k) m(i, k) = binomial<S>(i, k) / binomial<S>(d, k);
    return m;
  };
  const MatrixX<S> mx = conversion(p.deg_x);
  const MatrixX<S> my = conversion(p.deg_y);
  return mx * p.coeffs * my.transpose();
}

/// The scale lambda with a = lambda * b entrywise, if one exists. Exact
/// scalars compare exactly; floats use the trait tolerance.
template <typename S>
std::optional<S> compare_up_to_scale(const MatrixX<S>& a, const MatrixX<S>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("compare_up_to_scale: shape mismatch");
  std::optional<S> lambda;
  for (Eigen::Index i = 0; i < a.rows() && !lambda; ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      const bool az = a(i, j) == S(0), bz = b(i, j) == S(0);
      if (az && bz) continue;
      if (az != bz) return std::nullopt;
      lambda = a(i, j) / b(i, j);
      break;
    }
  if (!lambda) return S(1);  // both grids all zero
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (!scalar_traits<S>::equal(a(i, j), *lambda * b(i, j))) return std::nullopt;
  return lambda;
}

}  // namespace bezimpl

#endif  // BEZIMPL_SYLVESTER_HPP
