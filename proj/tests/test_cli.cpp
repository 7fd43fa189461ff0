#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include "bezimpl/cli.hpp"
#include "bezimpl/curve_io.hpp"
#include "doctest.h"
#include "json.hpp"
#include "test_support.hpp"

using namespace bezimpl;
using nlohmann::json;
using test_support::kGoldenCoefficients;

namespace {

const std::string kExampleFile = std::string(BEZIMPL_DATA_DIR) + "/example_curve.json";

struct CliResult {
  int status;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = run_cli(std::move(args), out, err);
  return {status, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& content) {
  const std::string path = "/tmp/bezimpl_test_" + name;
  std::ofstream f(path);
  f << content;
  return path;
}

}  // namespace

TEST_CASE("the shipped example file reproduces the reference coefficient list") {
  const auto r = run({kExampleFile});
  REQUIRE(r.status == 0);
  const json doc = json::parse(r.out);
  CHECK(doc["deg_x"] == 3);
  CHECK(doc["deg_y"] == 4);
  CHECK(doc["ordering"] == "i-major");
  REQUIRE(doc["coefficients"].size() == 20);
  for (int i = 0; i < 20; ++i)
    CHECK(doc["coefficients"][i].get<std::string>() == kGoldenCoefficients[i]);
}

TEST_CASE("output is byte-deterministic") {
  const auto a = run({kExampleFile, "--check-residual", "10", "--seed", "42"});
  const auto b = run({kExampleFile, "--check-residual", "10", "--seed", "42"});
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  CHECK(a.err == b.err);
}

TEST_CASE("malformed fractions are reported with the entry path, exit 1") {
  const std::string path = write_temp(
      "bad_fraction.json",
      R"({"x": {"num": ["4", "4", "3//4"], "den": ["1"]}, "y": {"num": ["0", "1"], "den": ["1"]}})");
  const auto r = run({path});
  CHECK(r.status == 1);
  CHECK(r.err.find("x.num[2]") != std::string::npos);
  CHECK(r.err.find("3//4") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("invalid JSON and missing files exit 1") {
  const std::string path = write_temp("truncated.json", R"({"x": {"num": ["1")");
  CHECK(run({path}).status == 1);
  std::remove(path.c_str());
  CHECK(run({"/nonexistent/curve.json"}).status == 1);

  const std::string missing_den = write_temp(
      "missing_den.json", R"({"x": {"num": ["0","1"]}, "y": {"num": ["0","1"], "den": ["1"]}})");
  const auto r = run({missing_den});
  CHECK(r.status == 1);
  CHECK(r.err.find("x.den") != std::string::npos);
  std::remove(missing_den.c_str());
}

TEST_CASE("degenerate curves exit 2") {
  const std::string path = write_temp(
      "degenerate.json", R"({"x": {"num": ["2"], "den": ["1"]}, "y": {"num": ["5"], "den": ["1"]}})");
  const auto r = run({path});
  CHECK(r.status == 2);
  CHECK(r.err.find("degenerate") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("double degree-drop exits 2") {
  // x = y = t hidden at representation degree 2: elimination degrees drop
  const std::string path = write_temp(
      "double_drop.json",
      R"({"x": {"num": ["0", "1/2", "1"], "den": ["1", "1", "1"]},
          "y": {"num": ["0", "1/2", "1"], "den": ["1", "1", "1"]}})");
  const auto r = run({path});
  CHECK(r.status == 2);
  CHECK(r.err.find("degree-drop") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("--check-residual reports a full pass on the example") {
  const auto r = run({kExampleFile, "--check-residual", "50"});
  CHECK(r.status == 0);
  CHECK(r.err.find("50/50 residuals zero") != std::string::npos);
}

TEST_CASE("--oracle reports the proportionality scale") {
  const auto r = run({kExampleFile, "--oracle"});
  CHECK(r.status == 0);
  CHECK(r.err.find("oracle check: match") != std::string::npos);
}

TEST_CASE("--output csv lists i,j,coefficient rows in i-major order") {
  const auto r = run({kExampleFile, "--output", "csv"});
  REQUIRE(r.status == 0);
  std::istringstream lines(r.out);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    if (count == 0) CHECK(line == std::string("0,0,") + kGoldenCoefficients[0]);
    if (count == 19) CHECK(line == std::string("3,4,") + kGoldenCoefficients[19]);
    ++count;
  }
  CHECK(count == 20);
}

TEST_CASE("re-parsed output evaluates identically to the in-memory curve") {
  const auto r = run({kExampleFile});
  REQUIRE(r.status == 0);
  const json doc = json::parse(r.out);

  ImplicitCurve<Rational> reparsed;
  reparsed.deg_x = doc["deg_x"].get<int>();
  reparsed.deg_y = doc["deg_y"].get<int>();
  reparsed.coeffs.resize(reparsed.deg_x + 1, reparsed.deg_y + 1);
  Eigen::Index k = 0;
  for (int i = 0; i <= reparsed.deg_x; ++i)
    for (int j = 0; j <= reparsed.deg_y; ++j)
      reparsed.coeffs(i, j) = parse_scalar(doc["coefficients"][k++].get<std::string>());

  const auto direct = implicitize(test_support::example_curve());
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 20; ++trial) {
    const Rational x = test_support::random_rational(rng, 9, 7);
    const Rational y = test_support::random_rational(rng, 9, 7);
    CHECK(evaluate_implicit(reparsed, x, y) == evaluate_implicit(direct, x, y));
  }
}

TEST_CASE("--normalize divides by the content") {
  const auto r = run({kExampleFile, "--normalize"});
  REQUIRE(r.status == 0);
  const json doc = json::parse(r.out);
  mpz_class g(0);
  for (const auto& entry : doc["coefficients"]) {
    const Rational v = parse_scalar(entry.get<std::string>());
    CHECK(v.den() == 1);
    g = gcd(g, v.num());
  }
  CHECK(g == 1);
  CHECK(parse_scalar(doc["coefficients"][0].get<std::string>()) > Rational(0));
}

TEST_CASE("float mode runs the same pipeline in doubles") {
  const auto r = run({kExampleFile, "--mode", "float", "--check-residual", "20"});
  CHECK(r.status == 0);
  CHECK(r.err.find("20/20 residuals zero") != std::string::npos);
  const json doc = json::parse(r.out);
  REQUIRE(doc["coefficients"].size() == 20);
  const double first = std::stod(doc["coefficients"][0].get<std::string>());
  CHECK(first == doctest::Approx(25264.0 / 27.0).epsilon(1e-9));
}

TEST_CASE("file-level mode setting is honored and flags override it") {
  const std::string path = write_temp(
      "float_doc.json",
      R"({"x": {"num": ["0", "1"], "den": ["1"]}, "y": {"num": ["0", "0", "1"], "den": ["1"]},
          "mode": "float"})");
  const auto floaty = run({path});
  REQUIRE(floaty.status == 0);
  CHECK(json::parse(floaty.out)["coefficients"][1].get<std::string>().find('/') ==
        std::string::npos);

  const auto exact = run({path, "--mode", "exact"});
  REQUIRE(exact.status == 0);
  // exact output is fraction strings; the parabola grid has a -1 entry
  bool saw_fraction_grammar = true;
  for (const auto& e : json::parse(exact.out)["coefficients"])
    (void)parse_scalar(e.get<std::string>());  // throws on non-fraction text
  CHECK(saw_fraction_grammar);
  std::remove(path.c_str());
}

TEST_CASE("unknown flags exit 1, --help exits 0") {
  CHECK(run({kExampleFile, "--bogus"}).status == 1);
  CHECK(run({"--help"}).status == 0);
}

TEST_CASE("an all-zero denominator is a validation failure, exit 1") {
  const std::string path = write_temp(
      "zero_den.json",
      R"({"x": {"num": ["0", "1"], "den": ["0", "0"]}, "y": {"num": ["0", "1"], "den": ["1"]}})");
  const auto r = run({path});
  CHECK(r.status == 1);
  CHECK(r.err.find("x.den") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("float mode supports --normalize and --oracle") {
  const auto r = run({kExampleFile, "--mode", "float", "--normalize", "--oracle"});
  CHECK(r.status == 0);
  CHECK(r.err.find("oracle check: match") != std::string::npos);
  const json doc = json::parse(r.out);
  CHECK(std::stod(doc["coefficients"][0].get<std::string>()) == doctest::Approx(1.0));
}
