#ifndef BEZIMPL_BERNSTEIN_HPP
#define BEZIMPL_BERNSTEIN_HPP

#include <algorithm>
#include <cmath>
#include <deque>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "bezimpl/dense.hpp"
#include "bezimpl/rational.hpp"

namespace bezimpl {

/// Row n of Pascal's triangle as exact scalars, cached across calls.
/// Rows live in a deque so references stay valid while the cache grows.
template <typename S>
const std::vector<S>& binomial_row(int n) {
  if (n < 0) throw std::invalid_argument("binomial_row: negative degree");
  static std::deque<std::vector<S>> table;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  while (static_cast<int>(table.size()) <= n) {
    const int m = static_cast<int>(table.size());
    std::vector<S> row(m + 1, S(1));
    for (int k = 1; k < m; ++k) row[k] = table[m - 1][k - 1] + table[m - 1][k];
    table.push_back(std::move(row));
  }
  return table[n];
}

template <typename S>
S binomial(int n, int k) {
  if (k < 0 || k > n) return S(0);
  return binomial_row<S>(n)[k];
}

/// Univariate polynomial in Bernstein form. coeffs[i] multiplies the basis
/// function C(d,i) (1-t)^(d-i) t^i of the representation degree d; the true
/// power degree may be lower.
template <typename S>
struct BernsteinPoly {
  VectorX<S> coeffs;

  BernsteinPoly() : coeffs(VectorX<S>::Constant(1, S(0))) {}
  explicit BernsteinPoly(VectorX<S> c) : coeffs(std::move(c)) {
    if (coeffs.size() == 0) throw std::invalid_argument("BernsteinPoly: empty coefficient list");
  }
  BernsteinPoly(std::initializer_list<S> c) : coeffs(VectorX<S>(static_cast<Eigen::Index>(c.size()))) {
    if (c.size() == 0) throw std::invalid_argument("BernsteinPoly: empty coefficient list");
    Eigen::Index i = 0;
    for (const S& v : c) coeffs[i++] = v;
  }

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }

  bool is_zero() const {
    for (Eigen::Index i = 0; i < coeffs.size(); ++i)
      if (!(coeffs[i] == S(0))) return false;
    return true;
  }
};

/// All basis values (beta_0 .. beta_d) at t.
template <typename S>
VectorX<S> bernstein_basis(int degree, const S& t) {
  const S u = S(1) - t;
  VectorX<S> values(degree + 1);
  // powers accumulated left to right, binomials from the cached Pascal row
  S tp = S(1);
  for (int i = 0; i <= degree; ++i) {
    values[i] = binomial<S>(degree, i) * tp;
    tp *= t;
  }
  S up = S(1);
  for (int i = degree; i >= 0; --i) {
    values[i] *= up;
    up *= u;
  }
  return values;
}

/// de Casteljau evaluation; exact over exact scalars, valid for any t.
template <typename S>
S eval(const BernsteinPoly<S>& p, const S& t) {
  VectorX<S> b = p.coeffs;
  const S u = S(1) - t;
  for (int r = p.degree(); r >= 1; --r)
    for (int i = 0; i < r; ++i) b[i] = u * b[i] + t * b[i + 1];
  return b[0];
}

/// Power-basis coefficients a_0..a_d with
/// a_k = C(d,k) * sum_{i<=k} (-1)^(k-i) C(k,i) coeffs[i].
template <typename S>
VectorX<S> to_power(const BernsteinPoly<S>& p) {
  const int d = p.degree();
  VectorX<S> a(d + 1);
  for (int k = 0; k <= d; ++k) {
    S acc(0);
    for (int i = 0; i <= k; ++i) {
      const S term = binomial<S>(k, i) * p.coeffs[i];
      acc += ((k - i) % 2 == 0) ? term : -term;
    }
    a[k] = binomial<S>(d, k) * acc;
  }
  return a;
}

/// Largest k with a_k != 0 in the power basis; -1 for the zero polynomial.
/// Float scalars treat coefficients below a relative threshold as zero.
template <typename S>
int power_degree(const BernsteinPoly<S>& p) {
  const VectorX<S> a = to_power(p);
  if constexpr (scalar_traits<S>::is_exact) {
    for (int k = static_cast<int>(a.size()) - 1; k >= 0; --k)
      if (!(a[k] == S(0))) return k;
    return -1;
  } else {
    double scale = 0.0;
    for (Eigen::Index k = 0; k < a.size(); ++k) scale = std::max(scale, std::abs(a[k]));
    if (scale == 0.0) return -1;
    const double threshold = scale * scalar_traits<S>::default_tolerance;
    for (int k = static_cast<int>(a.size()) - 1; k >= 0; --k)
      if (std::abs(a[k]) > threshold) return k;
    return -1;
  }
}

/// Coefficient of t^d for representation degree d (zero signals a degree drop).
template <typename S>
S leading_power_coeff(const BernsteinPoly<S>& p) {
  const int d = p.degree();
  S acc(0);
  for (int i = 0; i <= d; ++i) {
    const S term = binomial<S>(d, i) * p.coeffs[i];
    acc += ((d - i) % 2 == 0) ? term : -term;
  }
  return acc;
}

/// Exact degree elevation by `raise`:
/// c'_i = sum_j c_j C(d,j) C(raise,i-j) / C(d+raise,i).
template <typename S>
BernsteinPoly<S> elevate(const BernsteinPoly<S>& p, int raise) {
  if (raise < 0) throw std::invalid_argument("elevate: negative raise");
  if (raise == 0) return p;
  const int d = p.degree();
  VectorX<S> out(d + raise + 1);
  for (int i = 0; i <= d + raise; ++i) {
    S acc(0);
    const int lo = std::max(0, i - raise);
    const int hi = std::min(d, i);
    for (int j = lo; j <= hi; ++j)
      acc += p.coeffs[j] * binomial<S>(d, j) * binomial<S>(raise, i - j);
    out[i] = acc / binomial<S>(d + raise, i);
  }
  return BernsteinPoly<S>(std::move(out));
}

/// Collocation matrix of the degree-d Bernstein basis at strictly increasing
/// nodes in (0,1): entry (i,j) = beta_j(nodes[i]). Strictly totally positive
/// for such nodes.
template <typename S>
struct CollocationMatrix {
  int degree = 0;
  VectorX<S> nodes;
  MatrixX<S> values;

  int order() const { return degree + 1; }
};

template <typename S>
CollocationMatrix<S> collocation(int degree, const VectorX<S>& nodes) {
  if (degree < 0) throw std::invalid_argument("collocation: negative degree");
  if (nodes.size() != degree + 1)
    throw std::invalid_argument("collocation: need degree+1 nodes");
  for (Eigen::Index i = 0; i < nodes.size(); ++i) {
    if (!(S(0) < nodes[i] && nodes[i] < S(1)))
      throw std::invalid_argument("collocation: node outside (0,1)");
    if (i > 0 && !(nodes[i - 1] < nodes[i]))
      throw std::invalid_argument("collocation: nodes not strictly increasing");
  }
  CollocationMatrix<S> m;
  m.degree = degree;
  m.nodes = nodes;
  m.values.resize(degree + 1, degree + 1);
  for (int i = 0; i <= degree; ++i) m.values.row(i) = bernstein_basis<S>(degree, nodes[i]).transpose();
  return m;
}

}  // namespace bezimpl

#endif  // BEZIMPL_BERNSTEIN_HPP
