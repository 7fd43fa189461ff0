#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "bezimpl/bezout.hpp"
#include "bezimpl/sylvester.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace bezimpl;
using test_support::bezout_resultant_constant;
using test_support::bpoly;
using test_support::rvec;

TEST_CASE("degree-1 matrix is the cross product of the coefficient pairs") {
  // p(t) = t, q(t) = 1 - 2t; the single entry equals q at the root of p
  const auto m = bezout_matrix<Rational>(rvec({0, 1}), rvec({1, -1}));
  CHECK(m.rows() == 1);
  CHECK(m(0, 0) == Rational(1));
}

TEST_CASE("identical polynomials give the zero matrix") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 10; ++trial) {
    const auto p = test_support::random_bernstein_poly(rng, 4);
    const auto m = bezout_matrix<Rational>(p.coeffs, p.coeffs);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) CHECK(m(i, j) == Rational(0));
    CHECK(determinant<Rational>(m) == Rational(0));
  }
}

TEST_CASE("swapping the arguments negates every entry") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 20; ++trial) {
    const int d = static_cast<int>(1 + rng() % 5);
    const auto p = test_support::random_bernstein_poly(rng, d);
    const auto q = test_support::random_bernstein_poly(rng, d);
    const MatrixX<Rational> a = bezout_matrix<Rational>(p.coeffs, q.coeffs);
    const MatrixX<Rational> b = bezout_matrix<Rational>(q.coeffs, p.coeffs);
    CHECK(exact_equal<Rational>(a, MatrixX<Rational>(-b)));
  }
}

TEST_CASE("builder refuses mismatched lengths and degree zero") {
  CHECK_THROWS_AS(bezout_matrix<Rational>(rvec({1, 2}), rvec({1, 2, 3})), std::invalid_argument);
  CHECK_THROWS_AS(bezout_matrix<Rational>(rvec({1}), rvec({2})), std::invalid_argument);
}

TEST_CASE("determinant basics") {
  CHECK(determinant<Rational>(MatrixX<Rational>::Identity(4, 4)) == Rational(1));

  MatrixX<Rational> m(2, 2);
  m << Rational(1), Rational(2), Rational(3), Rational(4);
  CHECK(determinant<Rational>(m) == Rational(-2));

  // singular: duplicated row
  MatrixX<Rational> s(3, 3);
  s << Rational(1), Rational(2), Rational(3), Rational(1), Rational(2), Rational(3), Rational(4),
      Rational(5), Rational(6);
  CHECK(determinant<Rational>(s) == Rational(0));

  // zero leading pivot exercises the row search
  MatrixX<Rational> z(2, 2);
  z << Rational(0), Rational(1), Rational(1), Rational(0);
  CHECK(determinant<Rational>(z) == Rational(-1));
}

TEST_CASE("determinant matches cofactor expansion on random matrices") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 20; ++trial) {
    MatrixX<Rational> m(5, 5);
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) m(i, j) = test_support::random_rational(rng);
    CHECK(determinant<Rational>(m) == test_support::cofactor_determinant<Rational>(m));
  }
}

TEST_CASE("float determinant stays close to the exact value") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 10; ++trial) {
    MatrixX<Rational> m(4, 4);
    MatrixX<double> md(4, 4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        m(i, j) = test_support::random_rational(rng);
        md(i, j) = m(i, j).to_double();
      }
    const double exact = determinant<Rational>(m).to_double();
    CHECK(determinant<double>(md) == doctest::Approx(exact).epsilon(1e-9));
  }
}

// det(bezout) = constant(dp, dq) * Res * lead(p)^(dp-dq); the constant is the
// Bernstein-basis change of the Bezoutian, fixed by the degrees alone.
TEST_CASE("determinant equals the resultant times the correction, up to the degree constant") {
  std::mt19937_64 rng(59);
  for (int gap = 0; gap <= 1; ++gap) {
    for (int trial = 0; trial < 20; ++trial) {
      const int dp = static_cast<int>(2 + rng() % 4);  // 2..5
      const int dq = dp - gap;
      const auto p = test_support::random_poly_of_power_degree(rng, dp, dp);
      const auto q = test_support::random_poly_of_power_degree(rng, dq, dp);

      const Rational det = determinant<Rational>(bezout_matrix<Rational>(p.coeffs, q.coeffs));
      VectorX<Rational> p_pow = to_power(p);
      VectorX<Rational> q_pow = to_power(q);
      q_pow.conservativeResize(dq + 1);
      const Rational res = sylvester_resultant<Rational>(p_pow, q_pow);

      Rational expected = bezout_resultant_constant(dp, dq) * res;
      if (gap == 1) expected *= leading_power_coeff(p);
      CHECK(det == expected);
    }
  }
}

TEST_CASE("worked example: determinant at a node carries the -2x+1 factor") {
  const auto curve = test_support::example_curve();
  const Rational x0(1, 5), y0(1, 6);
  VectorX<Rational> p = curve.x_num.coeffs - x0 * curve.x_den.coeffs;  // degree 4, full
  VectorX<Rational> q = curve.y_num.coeffs - y0 * curve.y_den.coeffs;  // degree 4 rep, power 3

  const Rational det = determinant<Rational>(bezout_matrix<Rational>(p, q));

  VectorX<Rational> p_pow = to_power(BernsteinPoly<Rational>(p));
  VectorX<Rational> q_pow = to_power(BernsteinPoly<Rational>(q));
  q_pow.conservativeResize(4);  // true power degree 3
  const Rational res = sylvester_resultant<Rational>(p_pow, q_pow);

  const Rational lead = Rational(1) - Rational(2) * x0;  // -2x+1 at x=1/5
  CHECK(det == bezout_resultant_constant(4, 3) * res * lead);
  CHECK(bezout_resultant_constant(4, 3) == Rational(1, 81));
}
