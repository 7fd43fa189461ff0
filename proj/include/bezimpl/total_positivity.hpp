#ifndef BEZIMPL_TOTAL_POSITIVITY_HPP
#define BEZIMPL_TOTAL_POSITIVITY_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bezimpl/bezout.hpp"
#include "bezimpl/dense.hpp"
#include "bezimpl/rational.hpp"

namespace bezimpl {

class factorization_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bidiagonal factorization of the inverse of a matrix that admits complete
/// Neville elimination without exchanges:
///
///   A^{-1} = G_1 G_2 ... G_{k-1} D^{-1} F_{k-1} ... F_1
///
/// F_t is unit lower bidiagonal (lower[t-1][r] at entry (r+1, r)), G_t unit
/// upper bidiagonal (upper[t-1][r] at entry (r, r+1)), D the Neville pivots.
/// Only the nontrivial diagonals are stored, so a factorization costs O(k^2)
/// space and each application O(k).
template <typename S>
struct BidiagonalFactorization {
  int order = 0;
  std::vector<VectorX<S>> lower;
  VectorX<S> pivots;
  std::vector<VectorX<S>> upper;
};

/// Operation tally for a solve; the contract is O(k^2) per right-hand side.
struct SolveStats {
  long long multiplies = 0;
  long long additions = 0;
  long long divisions = 0;
  long long total() const { return multiplies + additions + divisions; }
};

enum class FactorizeMode {
  Direct,
  // Factor in exact rational arithmetic, then round the stored factors.
  // Meaningful for float scalars only; exact scalars ignore it.
  ExactThenRound,
};

namespace detail {

template <typename S>
struct NevilleResult {
  bool ok = false;
  std::string reason;
  bool multipliers_positive = true;
  bool pivots_positive = true;
  BidiagonalFactorization<S> fact;
};

// Complete Neville elimination: adjacent-row eliminations on A give U and the
// F factors; the same eliminations on U^T give D and the G factors.
template <typename S>
NevilleResult<S> neville_eliminate(const MatrixX<S>& a) {
  NevilleResult<S> res;
  const int k = static_cast<int>(a.rows());
  res.fact.order = k;
  if (k == 0) {
    res.ok = true;
    return res;
  }

  const auto run_stage = [&res, k](MatrixX<S>& m, std::vector<VectorX<S>>& factors) {
    for (int t = 0; t <= k - 2; ++t) {
      VectorX<S> diag = VectorX<S>::Zero(k - 1);
      for (int i = k - 1; i >= t + 1; --i) {
        if (m(i, t) == S(0)) {
          res.multipliers_positive = false;  // zero multiplier: not strictly TP
          continue;
        }
        if (m(i - 1, t) == S(0)) {
          res.reason = "Neville elimination breakdown (zero pivot above a nonzero entry)";
          return false;
        }
        const S mult = m(i, t) / m(i - 1, t);
        if (!(mult > S(0))) res.multipliers_positive = false;
        for (int j = t; j < k; ++j) m(i, j) -= mult * m(i - 1, j);
        diag[i - 1] = -mult;
      }
      factors.push_back(std::move(diag));
    }
    return true;
  };

  MatrixX<S> u = a;
  if (!run_stage(u, res.fact.lower)) return res;

  res.fact.pivots = u.diagonal();
  for (int i = 0; i < k; ++i) {
    if (res.fact.pivots[i] == S(0)) {
      res.reason = "Neville elimination breakdown (zero diagonal pivot)";
      return res;
    }
    if (!(res.fact.pivots[i] > S(0))) res.pivots_positive = false;
  }

  MatrixX<S> ut = u.transpose();
  if (!run_stage(ut, res.fact.upper)) return res;

  res.ok = true;
  return res;
}

template <typename S>
BidiagonalFactorization<S> round_factorization(const BidiagonalFactorization<Rational>& exact) {
  BidiagonalFactorization<S> out;
  out.order = exact.order;
  const auto round_vec = [](const VectorX<Rational>& v) {
    VectorX<S> r(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) r[i] = static_cast<S>(v[i].to_double());
    return r;
  };
  for (const auto& f : exact.lower) out.lower.push_back(round_vec(f));
  out.pivots = round_vec(exact.pivots);
  for (const auto& g : exact.upper) out.upper.push_back(round_vec(g));
  return out;
}

}  // namespace detail

/// Factors A^{-1} via complete Neville elimination (no exchanges). Throws
/// factorization_error when the elimination breaks down, which cannot happen
/// for strictly totally positive input.
template <typename S>
BidiagonalFactorization<S> factorize(const MatrixX<S>& a,
                                     FactorizeMode mode = FactorizeMode::Direct) {
  if (a.rows() != a.cols()) throw std::invalid_argument("factorize: matrix not square");
  if constexpr (!scalar_traits<S>::is_exact) {
    if (mode == FactorizeMode::ExactThenRound) {
      MatrixX<Rational> exact(a.rows(), a.cols());
      for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j) exact(i, j) = Rational(static_cast<double>(a(i, j)));
      auto res = detail::neville_eliminate<Rational>(exact);
      if (!res.ok) throw factorization_error("not strictly totally positive: " + res.reason);
      return detail::round_factorization<S>(res.fact);
    }
  }
  auto res = detail::neville_eliminate<S>(a);
  if (!res.ok) throw factorization_error("not strictly totally positive: " + res.reason);
  return res.fact;
}

/// Applies A^{-1} b = G_1 ... G_{k-1} D^{-1} F_{k-1} ... F_1 b.
/// O(k) per bidiagonal factor, O(k^2) per right-hand side overall.
template <typename S>
VectorX<S> solve(const BidiagonalFactorization<S>& fact, VectorX<S> b, SolveStats* stats = nullptr) {
  const int k = fact.order;
  if (b.size() != k) throw std::invalid_argument("solve: right-hand side has wrong length");
  SolveStats local;

  // F_1 b first, F_{k-1} last; descending row order keeps reads pristine.
  for (int t = 0; t <= k - 2; ++t) {
    const VectorX<S>& f = fact.lower[t];
    for (int r = k - 2; r >= t; --r) {
      b[r + 1] += f[r] * b[r];
      ++local.multiplies;
      ++local.additions;
    }
  }
  for (int i = 0; i < k; ++i) {
    b[i] /= fact.pivots[i];
    ++local.divisions;
  }
  // G_{k-1} first, G_1 last.
  for (int t = k - 2; t >= 0; --t) {
    const VectorX<S>& g = fact.upper[t];
    for (int r = t; r <= k - 2; ++r) {
      b[r] += g[r] * b[r + 1];
      ++local.multiplies;
      ++local.additions;
    }
  }

  if (stats) {
    stats->multiplies += local.multiplies;
    stats->additions += local.additions;
    stats->divisions += local.divisions;
  }
  return b;
}

/// Materialized F_t (1-based t), for reconstruction checks.
template <typename S>
MatrixX<S> lower_factor_matrix(const BidiagonalFactorization<S>& fact, int t) {
  MatrixX<S> m = MatrixX<S>::Identity(fact.order, fact.order);
  const VectorX<S>& f = fact.lower.at(t - 1);
  for (int r = t - 1; r <= fact.order - 2; ++r) m(r + 1, r) = f[r];
  return m;
}

/// Materialized G_t (1-based t).
template <typename S>
MatrixX<S> upper_factor_matrix(const BidiagonalFactorization<S>& fact, int t) {
  MatrixX<S> m = MatrixX<S>::Identity(fact.order, fact.order);
  const VectorX<S>& g = fact.upper.at(t - 1);
  for (int r = t - 1; r <= fact.order - 2; ++r) m(r, r + 1) = g[r];
  return m;
}

/// Dense G_1 ... G_{k-1} D^{-1} F_{k-1} ... F_1, i.e. the factored inverse.
template <typename S>
MatrixX<S> inverse_from_factorization(const BidiagonalFactorization<S>& fact) {
  const int k = fact.order;
  MatrixX<S> acc = MatrixX<S>::Identity(k, k);
  for (int t = 1; t <= k - 1; ++t) acc = acc * upper_factor_matrix(fact, t);
  MatrixX<S> dinv = MatrixX<S>::Zero(k, k);
  for (int i = 0; i < k; ++i) dinv(i, i) = S(1) / fact.pivots[i];
  acc = acc * dinv;
  for (int t = k - 1; t >= 1; --t) acc = acc * lower_factor_matrix(fact, t);
  return acc;
}

/// Certificate from the complete Neville elimination (Gasca-Pena criterion):
/// strict total positivity holds exactly when the elimination completes with
/// no exchanges and every multiplier and pivot is strictly positive.
template <typename S>
struct TotalPositivityCertificate {
  bool strictly_totally_positive = false;
  bool elimination_completed = false;
  bool multipliers_positive = false;
  bool pivots_positive = false;
  VectorX<S> pivots;
  std::string reason;

  explicit operator bool() const { return strictly_totally_positive; }
};

template <typename S>
TotalPositivityCertificate<S> is_strictly_totally_positive(const MatrixX<S>& a) {
  if (a.rows() != a.cols())
    throw std::invalid_argument("is_strictly_totally_positive: matrix not square");
  auto res = detail::neville_eliminate<S>(a);
  TotalPositivityCertificate<S> cert;
  cert.elimination_completed = res.ok;
  cert.multipliers_positive = res.ok && res.multipliers_positive;
  cert.pivots_positive = res.ok && res.pivots_positive;
  if (res.ok) cert.pivots = res.fact.pivots;
  cert.reason = res.reason;
  cert.strictly_totally_positive =
      cert.elimination_completed && cert.multipliers_positive && cert.pivots_positive;
  return cert;
}

/// Brute-force check of every minor; intended as a small-order test oracle.
template <typename S>
bool all_minors_strictly_positive(const MatrixX<S>& a) {
  const int k = static_cast<int>(a.rows());
  if (a.cols() != k) throw std::invalid_argument("all_minors_strictly_positive: matrix not square");
  if (k > 5) throw std::invalid_argument("all_minors_strictly_positive: order capped at 5");

  std::vector<int> rows, cols;
  const auto minors_of_size = [&](int size) {
    std::vector<std::vector<int>> subsets;
    std::vector<int> pick(size);
    const auto rec = [&](auto&& self, int start, int depth) -> void {
      if (depth == size) {
        subsets.push_back(pick);
        return;
      }
      for (int v = start; v < k; ++v) {
        pick[depth] = v;
        self(self, v + 1, depth + 1);
      }
    };
    rec(rec, 0, 0);
    return subsets;
  };

  for (int size = 1; size <= k; ++size) {
    const auto subsets = minors_of_size(size);
    for (const auto& r : subsets) {
      for (const auto& c : subsets) {
        MatrixX<S> minor(size, size);
        for (int i = 0; i < size; ++i)
          for (int j = 0; j < size; ++j) minor(i, j) = a(r[i], c[j]);
        if (!(determinant<S>(minor) > S(0))) return false;
      }
    }
  }
  return true;
}

}  // namespace bezimpl

#endif  // BEZIMPL_TOTAL_POSITIVITY_HPP
