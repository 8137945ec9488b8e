#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "helpers.hpp"
#include "triphoton/interference.hpp"

using namespace triphoton;

namespace {

constexpr double kPi = std::numbers::pi;

bool contains_theta(const std::vector<ContourPoint>& pts, double theta, double tol) {
  return std::any_of(pts.begin(), pts.end(),
                     [&](const ContourPoint& p) { return std::fabs(p.theta - theta) <= tol; });
}

}  // namespace

TEST_CASE("evolution of |1,1,1>") {
  SUBCASE("identity device") {
    const OutputState state = evolve({0.0, 0.7, 0.1, -0.2}, Occupation(1, 1, 1));
    CHECK(std::abs(state.amplitude(Occupation(1, 1, 1)) - 1.0) < 1e-15);
    CHECK(support(state, 1e-10).size() == 1);
  }
  SUBCASE("bipartite point") {
    const OutputState state = evolve({kPi, kPi / 8.0, 0.0, 0.0}, Occupation(1, 1, 1));
    const auto supp = support(state, 1e-10);
    REQUIRE(supp.size() == 2);
    CHECK(supp[0] == Occupation(2, 1, 0));
    CHECK(supp[1] == Occupation(0, 1, 2));
    CHECK(std::abs(state.amplitude(Occupation(2, 1, 0)) + 1.0 / std::sqrt(2.0)) < 1e-14);
    CHECK(std::abs(state.amplitude(Occupation(0, 1, 2)) - 1.0 / std::sqrt(2.0)) < 1e-14);
  }
  SUBCASE("physically decoupled outer mode") {
    const OutputState state = evolve({kPi / 4.0, 0.0, 0.0, 0.0}, Occupation(1, 1, 1));
    const auto supp = support(state, 1e-10);
    REQUIRE(supp.size() == 2);
    CHECK(supp[0] == Occupation(2, 0, 1));
    CHECK(supp[1] == Occupation(0, 2, 1));
    CHECK(std::abs(std::abs(state.amplitude(Occupation(2, 0, 1))) - 1.0 / std::sqrt(2.0)) < 1e-14);
    CHECK(std::abs(state.amplitude(Occupation(1, 1, 1))) < 1e-14);
  }
  SUBCASE("normalization") {
    test_helpers::Rng rng(12);
    for (int trial = 0; trial < 100; ++trial) {
      CHECK(std::fabs(evolve(rng.device(), Occupation(1, 1, 1)).norm_sq() - 1.0) <= 1e-12);
    }
  }
  SUBCASE("photon cap") {
    CHECK_THROWS_AS(evolve({1.0, 1.0, 0.0, 0.0}, Occupation(13, 0, 0)), std::invalid_argument);
    CHECK_NOTHROW(evolve({1.0, 1.0, 0.0, 0.0}, Occupation(4, 4, 4)));
  }
  SUBCASE("normalization holds at the 12-photon cap") {
    test_helpers::Rng rng(13);
    for (int trial = 0; trial < 3; ++trial) {
      CHECK(std::fabs(evolve(rng.device(), Occupation(4, 4, 4)).norm_sq() - 1.0) <= 1e-12);
    }
  }
}

TEST_CASE("multinomial expansion oracle") {
  SUBCASE("single photon picks out a matrix row") {
    test_helpers::Rng rng(23);
    const DeviceParams d = rng.device();
    const Matrix3c v = transfer_matrix(d);
    const OutputState state = evolve_multinomial(d, Occupation(1, 0, 0));
    CHECK(std::abs(state.amplitude(Occupation(1, 0, 0)) - v(0, 0)) < 1e-15);
    CHECK(std::abs(state.amplitude(Occupation(0, 1, 0)) - v(0, 1)) < 1e-15);
    CHECK(std::abs(state.amplitude(Occupation(0, 0, 1)) - v(0, 2)) < 1e-15);
  }
  SUBCASE("agrees with the permanent path") {
    test_helpers::Rng rng(34);
    const Occupation inputs[] = {Occupation(1, 1, 1), Occupation(2, 1, 0), Occupation(3, 0, 0),
                                 Occupation(2, 0, 1)};
    for (int trial = 0; trial < 50; ++trial) {
      const DeviceParams d = rng.device();
      for (const Occupation& input : inputs) {
        const OutputState via_permanent = evolve(d, input);
        const OutputState via_expansion = evolve_multinomial(d, input);
        for (std::size_t i = 0; i < via_permanent.basis().size(); ++i) {
          CHECK(std::abs(via_permanent.amplitudes()[i] - via_expansion.amplitudes()[i]) <= 1e-12);
        }
      }
    }
  }
  SUBCASE("photon cap") {
    CHECK_THROWS_AS(evolve_multinomial({1.0, 1.0, 0.0, 0.0}, Occupation(3, 3, 1)),
                    std::invalid_argument);
  }
}

TEST_CASE("coincidence amplitude") {
  CHECK(std::abs(coincidence_amplitude({0.0, 0.3, 0.0, 0.0}) - 1.0) < 1e-15);
  CHECK(std::abs(coincidence_amplitude({kPi, kPi / 8.0, 0.0, 0.0})) <= 1e-14);
  const cdouble via_oracle =
      evolve_multinomial({kPi / 2.0, kPi / 4.0, 0.0, 0.0}, Occupation(1, 1, 1))
          .amplitude(Occupation(1, 1, 1));
  CHECK(std::abs(coincidence_amplitude({kPi / 2.0, kPi / 4.0, 0.0, 0.0}) - via_oracle) < 1e-13);
}

TEST_CASE("analytic contour") {
  SUBCASE("G = pi carries the odd-eighth family") {
    const auto pts = hom_contour_analytic(kPi);
    CHECK(contains_theta(pts, kPi / 8.0, 1e-12));
    CHECK(contains_theta(pts, 3.0 * kPi / 8.0, 1e-12));
    CHECK(contains_theta(pts, -kPi / 8.0, 1e-12));
    CHECK(contains_theta(pts, kPi + kPi / 8.0, 1e-12));
    for (const ContourPoint& p : pts) {
      CHECK(p.c111_abs <= 1e-9);
      CHECK(p.branch.analytic);
      CHECK(p.G == kPi);
    }
  }
  SUBCASE("identity revival has no solution") {
    CHECK(hom_contour_analytic(2.0 * kPi).empty());
  }
  SUBCASE("G = 2 pi/3 contains arccot(sqrt 2)") {
    const auto pts = hom_contour_analytic(2.0 * kPi / 3.0);
    CHECK(contains_theta(pts, std::atan(1.0 / std::sqrt(2.0)), 1e-12));
    CHECK(contains_theta(pts, std::atan(std::sqrt(2.0)), 1e-12));
  }
  SUBCASE("branch labels") {
    const auto pts = hom_contour_analytic(kPi);
    REQUIRE(!pts.empty());
    const std::string label = pts.front().branch.label();
    CHECK(label.size() == 6);
    CHECK(label[0] == 'o');
    CHECK(label[2] == 'i');
    CHECK(label[4] == 'n');
  }
  SUBCASE("points are sorted and deduplicated") {
    test_helpers::Rng rng(45);
    for (int trial = 0; trial < 50; ++trial) {
      const auto pts = hom_contour_analytic(rng.uniform(0.0, 4.0 * kPi));
      for (std::size_t i = 1; i < pts.size(); ++i) {
        CHECK(pts[i].theta - pts[i - 1].theta > 1e-12);
      }
    }
  }
}

TEST_CASE("numeric contour tracer") {
  SUBCASE("finds the G = pi family inside [0, pi]") {
    const auto pts = hom_contour_numeric({kPi}, 0.0, kPi);
    CHECK(contains_theta(pts, kPi / 8.0, 1e-8));
    CHECK(contains_theta(pts, 3.0 * kPi / 8.0, 1e-8));
    CHECK(contains_theta(pts, 5.0 * kPi / 8.0, 1e-8));
    CHECK(contains_theta(pts, 7.0 * kPi / 8.0, 1e-8));
    for (const ContourPoint& p : pts) {
      CHECK(p.c111_abs <= 1e-9);
      CHECK_FALSE(p.branch.analytic);
      CHECK(p.branch.label() == "numeric");
    }
  }
  SUBCASE("near-identity device yields nothing") {
    CHECK(hom_contour_numeric({0.1}, 0.0, kPi).empty());
    // consistent with the closed form, which has no real branch there
    CHECK(hom_contour_analytic(0.1).empty());
  }
  SUBCASE("seven-term family coordinates") {
    const double g = 2.0 * std::atan(std::sqrt(5.0 + 2.0 * std::sqrt(3.0)));
    const double theta0 = std::atan(0.5 * (std::sqrt(3.0) - 1.0));
    const auto pts = hom_contour_numeric({g}, 0.0, kPi);
    CHECK(contains_theta(pts, theta0, 1e-8));
    CHECK(contains_theta(pts, kPi - theta0, 1e-8));
  }
  SUBCASE("input validation") {
    CHECK_THROWS_AS(hom_contour_numeric({}, 0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(hom_contour_numeric({1.0}, 1.0, 1.0), std::invalid_argument);
  }
}

TEST_CASE("contour periodicity") {
  test_helpers::Rng rng(56);
  int checked = 0;
  while (checked < 20) {
    const double g = rng.uniform(0.0, 2.0 * kPi);
    const auto pts = hom_contour_analytic(g);
    if (pts.empty()) continue;
    ++checked;
    const double theta = pts.front().theta;
    CHECK(std::abs(coincidence_amplitude({g + 2.0 * kPi, theta, 0.0, 0.0})) <= 1e-9);
    CHECK(std::abs(coincidence_amplitude({g, theta + kPi, 0.0, 0.0})) <= 1e-9);
  }
}

TEST_CASE("coincidence landscape") {
  SUBCASE("identity corners") {
    const Landscape l = coincidence_landscape(0.0, 2.0 * kPi, 0.0, kPi / 2.0, 2, 2);
    for (double p : l.prob) CHECK(p == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("zero at a contour cell") {
    // grid chosen so (pi, pi/8) is a cell
    const Landscape l = coincidence_landscape(0.0, 2.0 * kPi, 0.0, kPi / 4.0, 3, 3);
    CHECK(l.g_values[1] == doctest::Approx(kPi));
    CHECK(l.theta_values[1] == doctest::Approx(kPi / 8.0));
    CHECK(l.at(1, 1) <= 1e-14);
  }
  SUBCASE("row-major layout with G as the slow axis") {
    const Landscape l = coincidence_landscape(0.0, kPi, 0.0, 1.0, 4, 5);
    REQUIRE(l.prob.size() == 20);
    for (int gi = 0; gi < 4; ++gi)
      for (int ti = 0; ti < 5; ++ti) {
        const double direct = std::norm(coincidence_amplitude(
            {l.g_values[static_cast<std::size_t>(gi)],
             l.theta_values[static_cast<std::size_t>(ti)], 0.0, 0.0}));
        CHECK(l.at(gi, ti) == doctest::Approx(std::clamp(direct, 0.0, 1.0)).epsilon(1e-15));
      }
  }
  SUBCASE("values stay inside [0, 1]") {
    const Landscape l = coincidence_landscape(0.0, 4.0 * kPi, -kPi / 2.0, kPi, 41, 31);
    for (double p : l.prob) {
      CHECK(p >= 0.0);
      CHECK(p <= 1.0);
    }
  }
  SUBCASE("resolution validation") {
    CHECK_THROWS_AS(coincidence_landscape(0.0, 1.0, 0.0, 1.0, 1, 5), std::invalid_argument);
    CHECK_THROWS_AS(coincidence_landscape(0.0, 1.0, 0.0, 1.0, 5, 1), std::invalid_argument);
  }
}

TEST_CASE("two-photon reduction") {
  SUBCASE("first bipartite family: outer modes interfere, inner mode decoupled") {
    const DeviceParams d{kPi, kPi / 8.0, 0.0, 0.0};
    CHECK(two_photon_coincidence(d, 1, 3) <= 1e-12);
    const Matrix3c v = transfer_matrix(d);
    CHECK(std::abs(std::abs(v(1, 1)) - 1.0) <= 1e-12);
  }
  SUBCASE("second bipartite family: g2 vanishes and mode 3 is decoupled") {
    const DeviceParams d{kPi / 4.0, 0.0, 0.0, 0.0};
    CHECK(two_photon_coincidence(d, 1, 2) <= 1e-12);
    const Matrix3c v = transfer_matrix(d);
    CHECK(std::abs(std::abs(v(2, 2)) - 1.0) <= 1e-12);
  }
  SUBCASE("identity device keeps the photons apart") {
    CHECK(two_photon_coincidence({0.0, 0.4, 0.0, 0.0}, 1, 2) == doctest::Approx(1.0));
  }
  SUBCASE("mode validation") {
    CHECK_THROWS_AS(two_photon_coincidence({1.0, 1.0, 0.0, 0.0}, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(two_photon_coincidence({1.0, 1.0, 0.0, 0.0}, 0, 2), std::invalid_argument);
    CHECK_THROWS_AS(two_photon_coincidence({1.0, 1.0, 0.0, 0.0}, 2, 4), std::invalid_argument);
  }
}
