#ifndef BEZIMPL_IMPLICITIZE_HPP
#define BEZIMPL_IMPLICITIZE_HPP

#include <optional>
#include <stdexcept>
#include <utility>

#include "bezimpl/bernstein.hpp"
#include "bezimpl/bezout.hpp"
#include "bezimpl/dense.hpp"
#include "bezimpl/rational.hpp"
#include "bezimpl/total_positivity.hpp"

namespace bezimpl {

class degenerate_curve_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class unsupported_curve_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Proper rational parametrization x(t) = x_num/x_den, y(t) = y_num/y_den in
/// Bernstein form. Within each coordinate numerator and denominator share one
/// representation degree (make_curve elevates on ingestion). Reducedness
/// (gcd(num, den) = 1) and properness are input contracts, not verified.
template <typename S>
struct RationalCurve {
  BernsteinPoly<S> x_num, x_den, y_num, y_den;
};

template <typename S>
RationalCurve<S> make_curve(BernsteinPoly<S> x_num, BernsteinPoly<S> x_den,
                            BernsteinPoly<S> y_num, BernsteinPoly<S> y_den) {
  if (x_den.is_zero() || y_den.is_zero())
    throw degenerate_curve_error("curve denominator is identically zero");
  const auto match = [](BernsteinPoly<S>& a, BernsteinPoly<S>& b) {
    if (a.degree() < b.degree()) a = elevate(a, b.degree() - a.degree());
    if (b.degree() < a.degree()) b = elevate(b, a.degree() - b.degree());
  };
  match(x_num, x_den);
  match(y_num, y_den);
  return RationalCurve<S>{std::move(x_num), std::move(x_den), std::move(y_num), std::move(y_den)};
}

/// Point of the parametrization at t, or nothing when t is a pole.
template <typename S>
struct ParametricPoint {
  S x, y;
};

template <typename S>
std::optional<ParametricPoint<S>> curve_point(const RationalCurve<S>& c, const S& t) {
  const S dx = eval(c.x_den, t);
  const S dy = eval(c.y_den, t);
  if (dx == S(0) || dy == S(0)) return std::nullopt;
  return ParametricPoint<S>{eval(c.x_num, t) / dx, eval(c.y_num, t) / dy};
}

struct ImplicitDegrees {
  int deg_x = 0;
  int deg_y = 0;
};

/// a + b*v, the shape of a leading power coefficient as a function of one
/// curve variable.
template <typename S>
struct LinearForm {
  S constant{0};
  S slope{0};
  S operator()(const S& v) const { return constant + slope * v; }
};

enum class CorrectionSide { None, XElimination, YElimination };

/// Interpolation grid plus the correction data the per-node determinants
/// need: which elimination polynomial leads, the degree gap, and its leading
/// power coefficient as a linear form in the matching variable.
template <typename S>
struct NodeGrid {
  VectorX<S> xs, ys;
  CorrectionSide side = CorrectionSide::None;
  int exponent = 0;
  LinearForm<S> correction;
};

namespace detail {

// Degree bookkeeping shared by the pipeline stages. The elimination
// polynomials are p = x_num - x*x_den and q = y_num - y*y_den; their generic
// power degrees equal deg_y(F) and deg_x(F) respectively.
template <typename S>
struct CurveProfile {
  int deg_x = 0, deg_y = 0;       // implicit degrees (n, m)
  int x_elim_degree = 0;          // generic power degree of p
  int y_elim_degree = 0;          // generic power degree of q
  int build_degree = 0;           // shared representation degree for the Bezout build
  LinearForm<S> lead_x, lead_y;   // leading power coefficients of p and q
};

template <typename S>
CurveProfile<S> profile_curve(const RationalCurve<S>& c) {
  CurveProfile<S> pr;
  const int px_num = power_degree(c.x_num), px_den = power_degree(c.x_den);
  const int py_num = power_degree(c.y_num), py_den = power_degree(c.y_den);
  pr.x_elim_degree = std::max(px_num, px_den);
  pr.y_elim_degree = std::max(py_num, py_den);
  pr.deg_y = pr.x_elim_degree;
  pr.deg_x = pr.y_elim_degree;
  if (pr.deg_x <= 0 && pr.deg_y <= 0)
    throw degenerate_curve_error("degenerate curve: both coordinates are constant");
  pr.build_degree = std::max(c.x_num.degree(), c.y_num.degree());

  const VectorX<S> ax_num = to_power(c.x_num), ax_den = to_power(c.x_den);
  const VectorX<S> ay_num = to_power(c.y_num), ay_den = to_power(c.y_den);
  pr.lead_x = LinearForm<S>{ax_num[pr.x_elim_degree], -ax_den[pr.x_elim_degree]};
  pr.lead_y = LinearForm<S>{ay_num[pr.y_elim_degree], -ay_den[pr.y_elim_degree]};
  return pr;
}

// Both elimination polynomials below the shared representation degree would
// make every Bezout determinant vanish identically.
template <typename S>
void reject_double_degree_drop(const CurveProfile<S>& pr) {
  if (std::max(pr.x_elim_degree, pr.y_elim_degree) < pr.build_degree)
    throw unsupported_curve_error(
        "unsupported curve: both elimination polynomials drop below the "
        "representation degree (double degree-drop)");
}

// Nodes (i+1)/(count+1) ... with the denominator bumped until no node is a
// root of the axis's leading coefficient.
template <typename S>
VectorX<S> axis_nodes(int count, const LinearForm<S>& lead) {
  std::optional<S> root;
  if (!(lead.slope == S(0))) root = -lead.constant / lead.slope;
  for (long denom = count + 1;; ++denom) {
    bool collision = false;
    VectorX<S> nodes(count);
    for (int i = 0; i < count; ++i) {
      nodes[i] = S(i + 1) / S(denom);
      if (root && *root == nodes[i]) collision = true;
    }
    if (!collision) return nodes;
  }
}

}  // namespace detail

/// Implicit degrees per the power-degree rule: deg_x(F) comes from the y(t)
/// data and deg_y(F) from the x(t) data. Errors when both coordinates are
/// constant.
template <typename S>
ImplicitDegrees implicit_degrees(const RationalCurve<S>& c) {
  const auto pr = detail::profile_curve(c);
  return ImplicitDegrees{pr.deg_x, pr.deg_y};
}

/// Default nodes x_i = (i+1)/(deg_x+2), y_j = (j+1)/(deg_y+2); an axis whose
/// leading coefficient vanishes at one of its nodes gets its denominator
/// bumped until the collision disappears. Also fixes the correction side and
/// exponent for the per-node determinants.
template <typename S>
NodeGrid<S> make_nodes(int deg_x, int deg_y, const RationalCurve<S>& curve) {
  const auto pr = detail::profile_curve(curve);
  NodeGrid<S> grid;
  grid.xs = detail::axis_nodes<S>(deg_x + 1, pr.lead_x);
  grid.ys = detail::axis_nodes<S>(deg_y + 1, pr.lead_y);
  if (pr.x_elim_degree > pr.y_elim_degree) {
    grid.side = CorrectionSide::XElimination;
    grid.exponent = pr.x_elim_degree - pr.y_elim_degree;
    grid.correction = pr.lead_x;
  } else if (pr.y_elim_degree > pr.x_elim_degree) {
    grid.side = CorrectionSide::YElimination;
    grid.exponent = pr.y_elim_degree - pr.x_elim_degree;
    grid.correction = pr.lead_y;
  } else {
    grid.side = CorrectionSide::None;
    grid.exponent = 0;
    grid.correction = pr.lead_x;
  }
  return grid;
}

/// One interpolation datum: evaluate the elimination polynomials at the node,
/// build the numeric Bernstein-Bezout matrix at the shared representation
/// degree (higher power degree first), take its determinant, and divide by
/// correction^exponent. Equals F(x0, y0) up to one scale shared by all nodes.
template <typename S>
S interpolation_datum(const RationalCurve<S>& curve, const S& x0, const S& y0,
                      const NodeGrid<S>& grid) {
  const int d = std::max(curve.x_num.degree(), curve.y_num.degree());
  BernsteinPoly<S> p(VectorX<S>(curve.x_num.coeffs - x0 * curve.x_den.coeffs));
  BernsteinPoly<S> q(VectorX<S>(curve.y_num.coeffs - y0 * curve.y_den.coeffs));
  p = elevate(p, d - p.degree());
  q = elevate(q, d - q.degree());

  S det = (grid.side == CorrectionSide::YElimination)
              ? determinant<S>(bezout_matrix<S>(q.coeffs, p.coeffs))
              : determinant<S>(bezout_matrix<S>(p.coeffs, q.coeffs));
  if (grid.exponent == 0) return det;

  const S factor = grid.correction(grid.side == CorrectionSide::YElimination ? y0 : x0);
  if (factor == S(0))
    throw unsupported_curve_error("correction factor vanishes at an interpolation node");
  for (int e = 0; e < grid.exponent; ++e) det /= factor;
  return det;
}

struct KroneckerStats {
  int factorizations = 0;
  int solves = 0;
  SolveStats ops;
};

/// Solves B_x C B_y^T = data without forming the Kronecker product: one
/// factorization per matrix, then data.cols() column solves against B_x and
/// data.rows() row solves against B_y.
template <typename S>
MatrixX<S> solve_kronecker(const CollocationMatrix<S>& bx, const CollocationMatrix<S>& by,
                           const MatrixX<S>& data, KroneckerStats* stats = nullptr) {
  if (data.rows() != bx.order() || data.cols() != by.order())
    throw std::invalid_argument("solve_kronecker: data grid does not match matrix orders");
  KroneckerStats local;

  const BidiagonalFactorization<S> fx = factorize<S>(bx.values);
  const BidiagonalFactorization<S> fy = factorize<S>(by.values);
  local.factorizations = 2;

  MatrixX<S> z(data.rows(), data.cols());
  for (Eigen::Index j = 0; j < data.cols(); ++j) {
    z.col(j) = solve<S>(fx, data.col(j), &local.ops);
    ++local.solves;
  }
  MatrixX<S> c(data.rows(), data.cols());
  for (Eigen::Index i = 0; i < data.rows(); ++i) {
    c.row(i) = solve<S>(fy, z.row(i).transpose(), &local.ops).transpose();
    ++local.solves;
  }

  if (stats) *stats = local;
  return c;
}

/// Implicit polynomial in the tensor-product Bernstein basis: coeffs(i,j)
/// multiplies beta_i^(deg_x)(x) * beta_j^(deg_y)(y). Flat listings are
/// i-major.
template <typename S>
struct ImplicitCurve {
  int deg_x = 0, deg_y = 0;
  MatrixX<S> coeffs;

  VectorX<S> flat() const {
    VectorX<S> out(coeffs.rows() * coeffs.cols());
    Eigen::Index k = 0;
    for (Eigen::Index i = 0; i < coeffs.rows(); ++i)
      for (Eigen::Index j = 0; j < coeffs.cols(); ++j) out[k++] = coeffs(i, j);
    return out;
  }
};

/// Full pipeline: degrees, node grid, per-node determinant data, Kronecker
/// solve. The result satisfies F(x(t), y(t)) = 0 and is kept at the raw
/// determinant-consistent scale (no content normalization).
template <typename S>
ImplicitCurve<S> implicitize(const RationalCurve<S>& curve) {
  const auto pr = detail::profile_curve(curve);
  if (pr.deg_x == 0 || pr.deg_y == 0)
    throw degenerate_curve_error("degenerate curve: a coordinate is constant");
  detail::reject_double_degree_drop(pr);

  const NodeGrid<S> grid = make_nodes(pr.deg_x, pr.deg_y, curve);
  MatrixX<S> data(pr.deg_x + 1, pr.deg_y + 1);
  for (int i = 0; i <= pr.deg_x; ++i)
    for (int j = 0; j <= pr.deg_y; ++j)
      data(i, j) = interpolation_datum(curve, grid.xs[i], grid.ys[j], grid);

  const CollocationMatrix<S> bx = collocation<S>(pr.deg_x, grid.xs);
  const CollocationMatrix<S> by = collocation<S>(pr.deg_y, grid.ys);
  ImplicitCurve<S> result{pr.deg_x, pr.deg_y, solve_kronecker<S>(bx, by, data)};

  bool all_zero = true;
  for (Eigen::Index i = 0; i < result.coeffs.size() && all_zero; ++i)
    if (!(result.coeffs(i) == S(0))) all_zero = false;
  if (all_zero)
    throw degenerate_curve_error(
        "implicitization produced the zero polynomial (parametrization not reduced?)");
  return result;
}

/// Nested univariate evaluation of the tensor-product form.
template <typename S>
S evaluate_implicit(const ImplicitCurve<S>& f, const S& x, const S& y) {
  VectorX<S> partial(f.coeffs.cols());
  for (Eigen::Index j = 0; j < f.coeffs.cols(); ++j)
    partial[j] = eval(BernsteinPoly<S>(VectorX<S>(f.coeffs.col(j))), x);
  return eval(BernsteinPoly<S>(std::move(partial)), y);
}

/// Canonical rescaling: exact mode divides by the rational content and makes
/// the first nonzero flat coefficient positive; float mode divides by the
/// first nonzero coefficient.
template <typename S>
ImplicitCurve<S> normalized(const ImplicitCurve<S>& f) {
  ImplicitCurve<S> out = f;
  if constexpr (scalar_traits<S>::is_exact) {
    mpz_class denom_lcm(1), numer_gcd(0);
    for (Eigen::Index i = 0; i < f.coeffs.size(); ++i)
      if (!(f.coeffs(i) == S(0))) denom_lcm = lcm(denom_lcm, f.coeffs(i).den());
    for (Eigen::Index i = 0; i < f.coeffs.size(); ++i)
      if (!(f.coeffs(i) == S(0)))
        numer_gcd = gcd(numer_gcd, mpz_class(f.coeffs(i).num() * (denom_lcm / f.coeffs(i).den())));
    if (numer_gcd == 0) return out;  // zero polynomial, nothing to scale
    S content = S(numer_gcd, denom_lcm);
    const VectorX<S> flat = f.flat();
    for (Eigen::Index i = 0; i < flat.size(); ++i) {
      if (flat[i] == S(0)) continue;
      if (flat[i] < S(0)) content = -content;
      break;
    }
    out.coeffs /= content;
  } else {
    const VectorX<S> flat = f.flat();
    for (Eigen::Index i = 0; i < flat.size(); ++i) {
      if (flat[i] == S(0)) continue;
      out.coeffs /= flat[i];
      break;
    }
  }
  return out;
}

}  // namespace bezimpl

#endif  // BEZIMPL_IMPLICITIZE_HPP
