#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>
#include <sstream>
#include <string>

#include <json.hpp>

#include "helpers.hpp"
#include "triphoton/interference.hpp"
#include "triphoton/io.hpp"
#include "triphoton/states.hpp"

using namespace triphoton;
using nlohmann::json;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("double formatting") {
  CHECK(format_double(0.0) == "0");
  CHECK(format_double(-0.0) == "0");
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(1.0) == "1");
  CHECK(format_double(-2.25) == "-2.25");
  // shortest round trip would need 16-17 digits; the cap keeps 15
  const std::string third = format_double(1.0 / 3.0);
  CHECK(third == "0.333333333333333");
  CHECK(format_double(kPi) == "3.14159265358979");
  // short representations stay short
  CHECK(format_double(1e-9) == "1e-09");
  CHECK(format_double(12345.0) == "12345");

  SUBCASE("values parse back within a 15-digit ulp") {
    test_helpers::Rng rng(81);
    for (int trial = 0; trial < 200; ++trial) {
      const double x = rng.uniform(-1e3, 1e3);
      const double back = std::stod(format_double(x));
      CHECK(std::fabs(back - x) <= 1e-14 * std::max(1.0, std::fabs(x)));
    }
  }
}

TEST_CASE("complex formatting") {
  CHECK(format_complex({1.0, 0.0}) == "1+0i");
  CHECK(format_complex({0.0, -1.0}) == "0-1i");
  CHECK(format_complex({-0.5, 0.25}) == "-0.5+0.25i");
  CHECK(format_complex({0.0, 0.0}) == "0+0i");
}

TEST_CASE("matrix rendering") {
  const Matrix3c v = transfer_matrix({kPi, kPi / 4.0, 0.0, 0.0});
  SUBCASE("text grid") {
    const std::string grid = matrix_grid(v);
    std::istringstream lines(grid);
    std::string line;
    int rows = 0;
    while (std::getline(lines, line)) ++rows;
    CHECK(rows == 3);
    CHECK(grid.find("-1+0i") != std::string::npos);
  }
  SUBCASE("json parses and round-trips entries") {
    const json j = json::parse(matrix_json(v));
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 3);
    for (int r = 0; r < 3; ++r) {
      REQUIRE(j[r].size() == 3);
      for (int c = 0; c < 3; ++c) {
        CHECK(j[r][c]["re"].get<double>() ==
              doctest::Approx(v(r, c).real()).epsilon(1e-14));
        CHECK(j[r][c]["im"].get<double>() ==
              doctest::Approx(v(r, c).imag()).epsilon(1e-14));
      }
    }
  }
}

TEST_CASE("output state json") {
  const OutputState state = evolve({kPi, kPi / 8.0, 0.0, 0.0}, Occupation(1, 1, 1));
  const json j = json::parse(output_state_json(state));
  CHECK(j["input"] == json::array({1, 1, 1}));
  REQUIRE(j["amplitudes"].size() == 10);
  // canonical basis order: first entry is (3,0,0)
  CHECK(j["amplitudes"][0]["occ"] == json::array({3, 0, 0}));
  CHECK(j["amplitudes"][9]["occ"] == json::array({0, 0, 3}));
  double norm = 0;
  for (const auto& a : j["amplitudes"]) {
    norm += a["re"].get<double>() * a["re"].get<double>() +
            a["im"].get<double>() * a["im"].get<double>();
  }
  CHECK(norm == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("contour csv") {
  auto pts = hom_contour_analytic(kPi);
  REQUIRE(!pts.empty());
  const std::string csv = contour_csv(pts);
  std::istringstream lines(csv);
  std::string header;
  std::getline(lines, header);
  CHECK(header == "G,theta,c111_abs,branch");
  std::string row;
  double prev_theta = -1e9;
  int rows = 0;
  while (std::getline(lines, row)) {
    ++rows;
    const auto first_comma = row.find(',');
    const auto second_comma = row.find(',', first_comma + 1);
    const double theta = std::stod(row.substr(first_comma + 1, second_comma - first_comma - 1));
    CHECK(theta > prev_theta);
    prev_theta = theta;
  }
  CHECK(rows == static_cast<int>(pts.size()));
}

TEST_CASE("landscape csv") {
  const Landscape l = coincidence_landscape(0.0, 2.0 * kPi, 0.0, kPi / 4.0, 3, 3);
  const std::string csv = landscape_csv(l);
  std::istringstream lines(csv);
  std::string header;
  std::getline(lines, header);
  CHECK(header.rfind("G,", 0) == 0);
  int commas = 0;
  for (char c : header) commas += (c == ',');
  CHECK(commas == 3);  // three theta columns
  int rows = 0;
  std::string row;
  while (std::getline(lines, row)) ++rows;
  CHECK(rows == 3);
  CHECK(csv.find("3.14159265358979,") != std::string::npos);  // the G = pi row label
}

TEST_CASE("verification report serialization") {
  const VerificationReport report = verify_fixtures({{0, 0, 0.0, 0.0}});
  SUBCASE("json") {
    const json j = json::parse(report_json(report));
    REQUIRE(j.size() == report.records.size());
    CHECK(j[0]["table"] == 1);
    CHECK(j[0]["column"] == 1);
    CHECK(j[0]["pass"] == true);
    CHECK(j[0]["params"]["m"] == 0);
    CHECK(j[0]["params"]["psi"] == 0.0);
    for (const auto& rec : j) CHECK(rec["max_dev"].get<double>() < 1e-10);
  }
  SUBCASE("text") {
    const std::string text = report_text(report);
    CHECK(text.find("FAIL") == std::string::npos);
    CHECK(text.find("47 checks, 0 failures") != std::string::npos);
  }
}
