#include "isingqsp/bb1.hpp"

#include "doctest.h"

#include <cmath>
#include <cstddef>
#include <numbers>

#include "isingqsp/momentum.hpp"

using namespace isingqsp;

TEST_CASE("defining angle and phase lists") {
  const double chi = bb1_chi();
  CHECK(std::cos(2.0 * chi) == doctest::Approx(-0.25).epsilon(1e-15));
  const auto s = bb1_phases();
  REQUIRE(s.canonical.Phi.size() == 6);
  REQUIRE(s.onsager.phi.size() == 6);
  CHECK(s.canonical.degree() == 5);
  CHECK(s.onsager.theta == doctest::Approx(std::numbers::pi / 4));
  CHECK(s.canonical.Phi[0] == doctest::Approx(std::numbers::pi / 2));
  CHECK(s.canonical.Phi[2] == doctest::Approx(2 * chi));
  CHECK(s.canonical.Phi[3] == 0.0);
}

TEST_CASE("the two pictures are exact translations of each other") {
  const auto s = bb1_phases();
  const auto translated = phases_to_canonical(s.onsager);
  REQUIRE(translated.Phi.size() == s.canonical.Phi.size());
  for (std::size_t r = 0; r < translated.Phi.size(); ++r)
    CHECK(std::abs(translated.Phi[r] - s.canonical.Phi[r]) < 1e-12);
  // and the matrices agree at arbitrary momenta
  for (double k : {0.0, 0.37, 1.1, 2.8}) {
    const Mat2 a = qsp_canonical(k, s.canonical);
    const Mat2 b = qsp_momentum(k, s.onsager);
    CHECK((a - b).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("matrix response equals the closed form on a dense grid") {
  const auto s = bb1_phases();
  for (int j = 0; j <= 400; ++j) {
    const double k = -std::numbers::pi + 2.0 * std::numbers::pi * j / 400.0;
    const Mat2 v = qsp_canonical(k, s.canonical);
    const double matrix_r = std::norm(v(0, 0));
    const auto r = bb1_response(k);
    CHECK(std::abs(matrix_r - r.R_bb1) < 1e-10);
    CHECK(r.R_plain == doctest::Approx(std::cos(k) * std::cos(k)));
    CHECK(r.R_bb1 >= -1e-12);
    CHECK(r.R_bb1 <= 1.0 + 1e-12);
  }
}

TEST_CASE("exact zero at the band edge, flat top around the center") {
  CHECK(bb1_response(std::numbers::pi / 2).R_bb1 < 1e-12);
  const auto s = bb1_phases();
  const Mat2 v = qsp_canonical(std::numbers::pi / 2, s.canonical);
  CHECK(std::norm(v(0, 0)) < 1e-12);
  // |x| >= 0.9, i.e. |k| <= acos(0.9): the response stays above 0.99
  double min_top = 1.0;
  const double kmax = std::acos(0.9);
  for (int j = 0; j <= 200; ++j) {
    const double k = -kmax + 2.0 * kmax * j / 200.0;
    min_top = std::min(min_top, bb1_response(k).R_bb1);
  }
  CHECK(min_top > 0.99);
  // the band minimum sits at the band edge |x| = 0.9 itself
  CHECK(min_top == doctest::Approx(0.995620).epsilon(1e-4));
}

TEST_CASE("pinned sample values") {
  CHECK(bb1_response(std::numbers::pi / 3).R_plain ==
        doctest::Approx(0.25).epsilon(1e-12));
  CHECK(bb1_response(std::numbers::pi / 3).R_bb1 ==
        doctest::Approx(0.647339).epsilon(1e-5));
  CHECK(bb1_response(std::acos(0.9)).R_bb1 ==
        doctest::Approx(0.995620).epsilon(1e-5));
}
