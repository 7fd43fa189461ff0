#ifndef BEZIMPL_CURVE_IO_HPP
#define BEZIMPL_CURVE_IO_HPP

#include <string>
#include <vector>

#include "bezimpl/implicitize.hpp"
#include "bezimpl/rational.hpp"

namespace bezimpl {

/// Parsed form of the input document: per coordinate a numerator and
/// denominator as Bernstein coefficient lists (degree = length - 1), plus
/// optional run settings.
struct CurveDocument {
  std::vector<Rational> x_num, x_den, y_num, y_den;
  std::string mode = "exact";  // "exact" or "float"
  bool normalize = false;
};

/// Parses and validates the JSON curve document. Throws parse_error with a
/// message naming the offending entry (e.g. x.num[2]) or the JSON position.
CurveDocument parse_curve_document(const std::string& json_text);

RationalCurve<Rational> to_rational_curve(const CurveDocument& doc);
RationalCurve<double> to_double_curve(const CurveDocument& doc);

std::string format_coefficient(const Rational& v);
std::string format_coefficient(double v);

std::string render_json(const ImplicitCurve<Rational>& curve);
std::string render_json(const ImplicitCurve<double>& curve);
std::string render_csv(const ImplicitCurve<Rational>& curve);
std::string render_csv(const ImplicitCurve<double>& curve);

}  // namespace bezimpl

#endif  // BEZIMPL_CURVE_IO_HPP
