#include "bezimpl/curve_io.hpp"

#include <cstdio>

#include "json.hpp"

namespace bezimpl {

namespace {

using nlohmann::json;

std::vector<Rational> parse_coefficient_list(const json& node, const std::string& path) {
  if (!node.is_array() || node.empty())
    throw parse_error(path + ": expected a nonempty array of fraction strings");
  std::vector<Rational> out;
  out.reserve(node.size());
  for (std::size_t i = 0; i < node.size(); ++i) {
    const std::string entry_path = path + "[" + std::to_string(i) + "]";
    const json& e = node[i];
    try {
      if (e.is_string()) {
        out.push_back(Rational::parse(e.get<std::string>()));
      } else if (e.is_number_integer()) {
        out.push_back(Rational::parse(std::to_string(e.get<long long>())));
      } else {
        throw parse_error("expected a fraction string");
      }
    } catch (const parse_error& err) {
      throw parse_error(entry_path + ": " + err.what());
    }
  }
  return out;
}

std::pair<std::vector<Rational>, std::vector<Rational>> parse_coordinate(const json& doc,
                                                                         const std::string& key) {
  if (!doc.contains(key) || !doc[key].is_object())
    throw parse_error("missing coordinate object \"" + key + "\"");
  const json& coord = doc[key];
  if (!coord.contains("num")) throw parse_error(key + ".num: missing");
  if (!coord.contains("den")) throw parse_error(key + ".den: missing");
  auto num = parse_coefficient_list(coord["num"], key + ".num");
  auto den = parse_coefficient_list(coord["den"], key + ".den");
  bool all_zero = true;
  for (const Rational& c : den)
    if (!c.is_zero()) all_zero = false;
  if (all_zero) throw parse_error(key + ".den: denominator is identically zero");
  return {std::move(num), std::move(den)};
}

template <typename S>
BernsteinPoly<S> to_poly(const std::vector<Rational>& coeffs) {
  VectorX<S> v(static_cast<Eigen::Index>(coeffs.size()));
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if constexpr (scalar_traits<S>::is_exact)
      v[static_cast<Eigen::Index>(i)] = coeffs[i];
    else
      v[static_cast<Eigen::Index>(i)] = coeffs[i].to_double();
  }
  return BernsteinPoly<S>(std::move(v));
}

template <typename S>
json coefficients_json(const ImplicitCurve<S>& curve) {
  json coeffs = json::array();
  const VectorX<S> flat = curve.flat();
  for (Eigen::Index i = 0; i < flat.size(); ++i) coeffs.push_back(format_coefficient(flat[i]));
  return coeffs;
}

template <typename S>
std::string render_json_impl(const ImplicitCurve<S>& curve) {
  nlohmann::ordered_json doc;
  doc["deg_x"] = curve.deg_x;
  doc["deg_y"] = curve.deg_y;
  doc["ordering"] = "i-major";
  doc["coefficients"] = coefficients_json(curve);
  return doc.dump(2) + "\n";
}

template <typename S>
std::string render_csv_impl(const ImplicitCurve<S>& curve) {
  std::string out;
  for (int i = 0; i <= curve.deg_x; ++i)
    for (int j = 0; j <= curve.deg_y; ++j)
      out += std::to_string(i) + "," + std::to_string(j) + "," +
             format_coefficient(curve.coeffs(i, j)) + "\n";
  return out;
}

}  // namespace

CurveDocument parse_curve_document(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw parse_error(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw parse_error("top-level JSON value must be an object");

  CurveDocument out;
  auto [xn, xd] = parse_coordinate(doc, "x");
  auto [yn, yd] = parse_coordinate(doc, "y");
  out.x_num = std::move(xn);
  out.x_den = std::move(xd);
  out.y_num = std::move(yn);
  out.y_den = std::move(yd);

  if (doc.contains("mode")) {
    if (!doc["mode"].is_string()) throw parse_error("mode: expected \"exact\" or \"float\"");
    out.mode = doc["mode"].get<std::string>();
    if (out.mode != "exact" && out.mode != "float")
      throw parse_error("mode: expected \"exact\" or \"float\", got \"" + out.mode + "\"");
  }
  if (doc.contains("normalize")) {
    if (!doc["normalize"].is_boolean()) throw parse_error("normalize: expected a boolean");
    out.normalize = doc["normalize"].get<bool>();
  }
  return out;
}

RationalCurve<Rational> to_rational_curve(const CurveDocument& doc) {
  return make_curve(to_poly<Rational>(doc.x_num), to_poly<Rational>(doc.x_den),
                    to_poly<Rational>(doc.y_num), to_poly<Rational>(doc.y_den));
}

RationalCurve<double> to_double_curve(const CurveDocument& doc) {
  return make_curve(to_poly<double>(doc.x_num), to_poly<double>(doc.x_den),
                    to_poly<double>(doc.y_num), to_poly<double>(doc.y_den));
}

std::string format_coefficient(const Rational& v) { return v.str(); }

std::string format_coefficient(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string render_json(const ImplicitCurve<Rational>& curve) { return render_json_impl(curve); }
std::string render_json(const ImplicitCurve<double>& curve) { return render_json_impl(curve); }
std::string render_csv(const ImplicitCurve<Rational>& curve) { return render_csv_impl(curve); }
std::string render_csv(const ImplicitCurve<double>& curve) { return render_csv_impl(curve); }

}  // namespace bezimpl
