#include "bezimpl/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <utility>

#include "CLI11.hpp"
#include "bezimpl/curve_io.hpp"
#include "bezimpl/implicitize.hpp"
#include "bezimpl/sylvester.hpp"

namespace bezimpl {

namespace {

struct CliOptions {
  std::string input_path;
  int check_residual = 0;
  bool oracle = false;
  bool normalize = false;
  std::string mode;  // empty: take the document's setting
  std::string output = "json";
  std::uint64_t seed = 20240817ULL;
};

struct ResidualReport {
  int samples = 0;
  int zeros = 0;
};

// Random rational parameters in (0,1), distinct, poles skipped.
template <typename S>
ResidualReport residual_check(const RationalCurve<S>& curve, const ImplicitCurve<S>& f, int n,
                              std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::set<std::pair<long, long>> seen;
  ResidualReport rep;
  int attempts = 0;
  while (rep.samples < n && attempts < 400 * n + 1000) {
    ++attempts;
    const long den = 2 + static_cast<long>(rng() % 97);
    const long num = 1 + static_cast<long>(rng() % static_cast<std::uint64_t>(den - 1));
    const Rational t(num, den);
    if (!seen.insert({t.num().get_si(), t.den().get_si()}).second) continue;

    S ts;
    if constexpr (scalar_traits<S>::is_exact)
      ts = t;
    else
      ts = t.to_double();
    const auto pt = curve_point(curve, ts);
    if (!pt) continue;  // pole
    ++rep.samples;

    const S value = evaluate_implicit(f, pt->x, pt->y);
    if constexpr (scalar_traits<S>::is_exact) {
      if (value == S(0)) ++rep.zeros;
    } else {
      // scale-aware zero test: compare against sum |c_ij| |beta_i| |beta_j|
      const VectorX<S> bx = bernstein_basis<S>(f.deg_x, pt->x);
      const VectorX<S> by = bernstein_basis<S>(f.deg_y, pt->y);
      S bound(0);
      for (int i = 0; i <= f.deg_x; ++i)
        for (int j = 0; j <= f.deg_y; ++j)
          bound += std::abs(f.coeffs(i, j)) * std::abs(bx[i]) * std::abs(by[j]);
      if (std::abs(value) <= scalar_traits<S>::default_tolerance * std::max(S(1), bound))
        ++rep.zeros;
    }
  }
  return rep;
}

template <typename S>
RationalCurve<S> document_curve(const CurveDocument& doc) {
  if constexpr (scalar_traits<S>::is_exact)
    return to_rational_curve(doc);
  else
    return to_double_curve(doc);
}

template <typename S>
int run_pipeline(const CurveDocument& doc, const CliOptions& opt, bool normalize_out,
                 std::ostream& out, std::ostream& err) {
  ImplicitCurve<S> f;
  RationalCurve<S> curve = document_curve<S>(doc);
  try {
    f = implicitize(curve);
  } catch (const degenerate_curve_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const unsupported_curve_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  if (normalize_out) f = normalized(f);

  out << (opt.output == "csv" ? render_csv(f) : render_json(f));

  int status = 0;
  if (opt.check_residual > 0) {
    const ResidualReport rep = residual_check(curve, f, opt.check_residual, opt.seed);
    err << "residual check: " << rep.zeros << "/" << rep.samples << " residuals zero\n";
    if (rep.zeros != rep.samples || rep.samples != opt.check_residual) status = 3;
  }
  if (opt.oracle) {
    try {
      const MatrixX<S> reference = power_to_tensor_bernstein(resultant_curve_power(curve));
      const auto lambda = compare_up_to_scale<S>(f.coeffs, reference);
      if (lambda) {
        err << "oracle check: match, scale " << format_coefficient(*lambda) << "\n";
      } else {
        err << "oracle check: MISMATCH against the Sylvester-resultant reference\n";
        status = 3;
      }
    } catch (const std::invalid_argument& e) {
      err << "error: " << e.what() << "\n";
      return 2;
    }
  }
  return status;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Implicitize a rational plane curve given in Bernstein (Bezier) form"};
  CliOptions opt;
  app.add_option("input", opt.input_path, "curve document (JSON)")->required();
  app.add_option("--check-residual", opt.check_residual,
                 "evaluate F(x(t),y(t)) at N random rational parameters");
  app.add_flag("--oracle", opt.oracle, "cross-check against the Sylvester-resultant reference");
  app.add_flag("--normalize", opt.normalize,
               "divide by the rational content, first nonzero coefficient positive");
  app.add_option("--mode", opt.mode, "arithmetic mode (overrides the document)")
      ->check(CLI::IsMember({"exact", "float"}));
  app.add_option("--output", opt.output, "report format")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--seed", opt.seed, "seed for residual sampling");

  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  std::ifstream in(opt.input_path);
  if (!in) {
    err << "error: cannot open input file \"" << opt.input_path << "\"\n";
    return 1;
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();

  CurveDocument doc;
  try {
    doc = parse_curve_document(buffer.str());
  } catch (const parse_error& e) {
    err << "error: " << opt.input_path << ": " << e.what() << "\n";
    return 1;
  }

  const std::string mode = opt.mode.empty() ? doc.mode : opt.mode;
  const bool normalize_out = opt.normalize || doc.normalize;
  if (mode == "float")
    return run_pipeline<double>(doc, opt, normalize_out, out, err);
  return run_pipeline<Rational>(doc, opt, normalize_out, out, err);
}

}  // namespace bezimpl
