#ifndef BEZIMPL_RATIONAL_HPP
#define BEZIMPL_RATIONAL_HPP

#include <gmpxx.h>

#include <Eigen/Core>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bezimpl {

class parse_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class arithmetic_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact rational scalar over arbitrary-precision integers.
///
/// Values are always canonical: lowest terms, denominator positive. Division
/// by zero throws arithmetic_error instead of producing a non-value.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}
  Rational(long n) : v_(static_cast<signed long>(n)) {}
  Rational(const mpz_class& n) : v_(n) {}

  Rational(long num, long den) : v_(mpz_class(num), mpz_class(den)) {
    if (den == 0) throw arithmetic_error("rational with zero denominator");
    v_.canonicalize();
  }

  Rational(const mpz_class& num, const mpz_class& den) : v_(num, den) {
    if (sgn(den) == 0) throw arithmetic_error("rational with zero denominator");
    v_.canonicalize();
  }

  // Exact dyadic expansion of the double.
  explicit Rational(double d) {
    if (!std::isfinite(d)) throw arithmetic_error("rational from non-finite double");
    v_ = mpq_class(d);
  }

  /// Parses the fraction grammar `[-]digits[/digits]` (no whitespace,
  /// denominator nonzero) and canonicalizes.
  static Rational parse(std::string_view text);

  /// Canonical form: integers print with no slash, otherwise "num/den" in
  /// lowest terms with the sign on the numerator.
  std::string str() const { return v_.get_str(); }

  const mpz_class& num() const { return v_.get_num(); }
  const mpz_class& den() const { return v_.get_den(); }

  double to_double() const { return v_.get_d(); }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw arithmetic_error("division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { Rational r; r.v_ = -a.v_; return r; }
  friend Rational operator+(const Rational& a) { return a; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.v_; }

 private:
  mpq_class v_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

inline Rational Rational::parse(std::string_view text) {
  const auto fail = [&](const char* why) {
    throw parse_error("invalid fraction \"" + std::string(text) + "\": " + why);
  };
  std::size_t i = 0;
  if (i < text.size() && text[i] == '-') ++i;
  const std::size_t num_begin = i;
  while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
  if (i == num_begin) fail("expected digits");
  const std::size_t num_end = i;
  mpz_class num(std::string(text.substr(0, num_end)), 10);
  if (num_end == text.size()) return Rational(num, mpz_class(1));
  if (text[num_end] != '/') fail("unexpected character");
  const std::size_t den_begin = num_end + 1;
  i = den_begin;
  while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
  if (i == den_begin || i != text.size()) fail("malformed denominator");
  mpz_class den(std::string(text.substr(den_begin)), 10);
  if (sgn(den) == 0) fail("zero denominator");
  return Rational(num, den);
}

/// Fraction-string entry points used by the file formats.
inline Rational parse_scalar(std::string_view text) { return Rational::parse(text); }
inline std::string format_scalar(const Rational& v) { return v.str(); }

/// Per-scalar policy: exactness and the float-mode comparison tolerance.
template <typename S>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
  static constexpr bool is_exact = true;
  static bool equal(const Rational& a, const Rational& b, double = 0.0) { return a == b; }
  static Rational from_double(double d) { return Rational(d); }
  static double to_double(const Rational& v) { return v.to_double(); }
};

template <>
struct scalar_traits<double> {
  static constexpr bool is_exact = false;
  static constexpr double default_tolerance = 1e-9;  // relative
  static bool equal(double a, double b, double rel_tol = default_tolerance) {
    const double scale = std::max({1.0, std::abs(a), std::abs(b)});
    return std::abs(a - b) <= rel_tol * scale;
  }
  static double from_double(double d) { return d; }
  static double to_double(double v) { return v; }
};

}  // namespace bezimpl

namespace Eigen {

template <>
struct NumTraits<bezimpl::Rational> : GenericNumTraits<bezimpl::Rational> {
  typedef bezimpl::Rational Real;
  typedef bezimpl::Rational NonInteger;
  typedef bezimpl::Rational Nested;
  typedef bezimpl::Rational Literal;
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 60,
    MulCost = 40,
  };
};

}  // namespace Eigen

#endif  // BEZIMPL_RATIONAL_HPP
