#include "isingqsp/boxrec.hpp"

#include "doctest.h"

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <vector>

using namespace isingqsp;

namespace {

// Independent derivation of the coefficients: project the box indicator
// 1{|cos k| < w} onto e^{ink}. The support is exactly (a, pi-a) and
// (-pi+a, -a) with a = acos(w), so composite Simpson on each smooth piece is
// accurate to rounding; then G_n = (pi / w) * (-i)^n * c_n.
double box_coeff_oracle(double w, int n) {
  const double a = std::acos(w);
  const auto piece = [n](double lo, double hi) {
    const int m = 4096;  // even panel count
    const double h = (hi - lo) / m;
    std::complex<double> acc{};
    for (int j = 0; j <= m; ++j) {
      const double weight = (j == 0 || j == m) ? 1.0 : (j % 2 == 1 ? 4.0 : 2.0);
      acc += weight * std::exp(std::complex<double>(0, -n * (lo + j * h)));
    }
    return acc * (h / 3.0);
  };
  const std::complex<double> total =
      piece(a, std::numbers::pi - a) + piece(-std::numbers::pi + a, -a);
  const std::complex<double> cn = total / (2.0 * std::numbers::pi);
  const std::complex<double> mi(0, -1);
  std::complex<double> pw(1, 0);
  for (int i = 0; i < n; ++i) pw *= mi;
  return (std::numbers::pi / w) * (pw * cn).real();
}

}  // namespace

TEST_CASE("quadrature core: smooth integrals") {
  CHECK(integrate([](double x) { return x * x; }, 0.0, 1.0) ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(integrate([](double x) { return std::exp(-x * x); }, -8.0, 8.0) ==
        doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-12));
  // complex-valued integrand
  const auto z = integrate(
      [](double x) { return std::exp(std::complex<double>(0, x)); }, 0.0, 1.0);
  CHECK(std::abs(z - std::complex<double>(std::sin(1.0), 1 - std::cos(1.0))) <
        1e-12);
}

TEST_CASE("quadrature refuses to silently truncate") {
  QuadOptions tight;
  tight.abs_tol = 1e-300;
  tight.rel_tol = 1e-300;
  tight.max_subdivisions = 4;
  CHECK_THROWS_AS(
      integrate([](double x) { return std::sin(50.0 * x) / (1.0 + x * x); },
                0.0, 30.0, tight),
      std::runtime_error);
}

TEST_CASE("series acceleration: alternating harmonic and geometric sums") {
  const auto ln2 = levin_sum(
      [](int j) {
        return std::complex<double>((j % 2 == 0 ? 1.0 : -1.0) / (j + 1), 0);
      },
      1e-12, 30);
  CHECK(ln2.real() == doctest::Approx(std::numbers::ln2).epsilon(1e-10));

  const auto geo = levin_sum(
      [](int j) { return std::complex<double>(std::pow(0.5, j), 0); }, 1e-12,
      30);
  CHECK(geo.real() == doctest::Approx(2.0).epsilon(1e-12));

  // terms with erratic signs and growing magnitude defeat the remainder
  // model entirely; the failure must throw rather than return garbage
  CHECK_THROWS_AS(levin_sum(
                      [](int j) {
                        return std::complex<double>(
                            std::cos(static_cast<double>(j) * j) *
                                std::pow(2.0, j),
                            0);
                      },
                      1e-14, 12),
                  std::runtime_error);
}

TEST_CASE("bessel_j extends to negative argument with parity") {
  CHECK(bessel_j(1, -2.3) == doctest::Approx(-bessel_j(1, 2.3)));
  CHECK(bessel_j(2, -2.3) == doctest::Approx(bessel_j(2, 2.3)));
  CHECK(bessel_j(0, 0.0) == doctest::Approx(1.0));
  CHECK_THROWS_AS(bessel_j(-1, 1.0), std::invalid_argument);
}

TEST_CASE("leading coefficients match their closed forms") {
  const auto model = box_fourier_coeffs(0.75, 8);
  REQUIRE(model.G.size() == 9);
  // G_0 = 2 asin(w) / w
  CHECK(model.G[0] ==
        doctest::Approx(2.0 * std::asin(0.75) / 0.75).epsilon(1e-9));
  // G_{2m} = (-1)^{m+1} sin(2m acos w) / (m w)
  for (int m = 1; 2 * m <= 8; ++m) {
    const double want = ((m % 2 == 0) ? -1.0 : 1.0) *
                        std::sin(2.0 * m * std::acos(0.75)) / (m * 0.75);
    CHECK(model.G[2 * m] == doctest::Approx(want).epsilon(1e-8));
  }
  // a second width as an independent spot check
  const auto half = box_fourier_coeffs(0.5, 0);
  CHECK(half.G[0] == doctest::Approx(2.0 * std::asin(0.5) / 0.5).epsilon(1e-9));
}

TEST_CASE("odd coefficients vanish by the period-pi symmetry of the box") {
  const auto model = box_fourier_coeffs(0.75, 9);
  for (int n = 1; n <= 9; n += 2) CHECK(std::abs(model.G[n]) < 1e-8);
}

TEST_CASE("quadrature coefficients agree with the projection oracle") {
  const auto model = box_fourier_coeffs(0.75, 12);
  for (int n = 0; n <= 12; n += 2) {
    CHECK(model.G[n] == doctest::Approx(box_coeff_oracle(0.75, n)).epsilon(1e-5));
  }
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(box_fourier_coeffs(0.0, 4), std::invalid_argument);
  CHECK_THROWS_AS(box_fourier_coeffs(1.0, 4), std::invalid_argument);
  CHECK_THROWS_AS(box_fourier_coeffs(0.5, -1), std::invalid_argument);
  BoxModel empty;
  empty.G.clear();
  CHECK_THROWS_AS(box_reconstruct(0.3, empty), std::invalid_argument);
  CHECK_THROWS_AS(re_dispersion(0.3, empty), std::invalid_argument);
  CHECK_THROWS_AS(re_hamiltonian_terms(empty), std::invalid_argument);
  BoxModel bad_t = box_fourier_coeffs(0.75, 2);
  bad_t.T = 0.0;
  CHECK_THROWS_AS(re_dispersion(0.3, bad_t), std::invalid_argument);
}

TEST_CASE("reconstruction error decreases with the truncation order") {
  const auto worst_inside = [](const BoxModel& m) {
    // x kept at least 0.1 from the box edges
    double worst = 0.0;
    for (int i = 0; i <= 2000; ++i) {
      const double k = std::numbers::pi * i / 2000.0;
      const double x = std::cos(k);
      const double dist = std::min(std::abs(x - m.w), std::abs(x + m.w));
      if (dist < 0.1) continue;
      const double want = std::abs(x) < m.w ? 1.0 : 0.0;
      worst = std::max(worst, std::abs(box_reconstruct(k, m) - want));
    }
    return worst;
  };
  const auto m10 = box_fourier_coeffs(0.75, 10);
  const auto m20 = box_fourier_coeffs(0.75, 20);
  const auto m40 = box_fourier_coeffs(0.75, 40);
  const double e10 = worst_inside(m10);
  const double e20 = worst_inside(m20);
  const double e40 = worst_inside(m40);
  CHECK(e20 < e10);
  CHECK(e40 < e20);
  CHECK(e40 < 0.12);  // ringing persists near the edges; see the order scan
}

TEST_CASE("dispersion resummation is consistent with its term list") {
  auto model = box_fourier_coeffs(0.75, 16);
  model.T = 1.3;
  const auto terms = re_hamiltonian_terms(model);
  REQUIRE(terms.size() == 9);  // ranges 0, 2, ..., 16
  for (double k : {0.0, 0.4, 1.0, 1.5, 2.2, 3.0}) {
    double omega = std::numbers::pi / model.T + terms[0].coeff;
    for (std::size_t n = 1; n < terms.size(); ++n)
      omega += 2.0 * terms[n].coeff * std::cos(terms[n].range * k);
    CHECK(omega == doctest::Approx(re_dispersion(k, model)).epsilon(1e-12));
  }
  // dispersion and reconstruction are the same data: Omega T = pi (1 - box)
  for (double k : {0.2, 0.9, 1.4}) {
    CHECK(re_dispersion(k, model) * model.T ==
          doctest::Approx(std::numbers::pi * (1.0 - box_reconstruct(k, model)))
              .epsilon(1e-10));
  }
  // Deep inside the box (k = pi/2, x = 0) the dispersion is ~0; deep outside
  // (k = 0, x = 1) it is ~pi/T. Judged on a long expansion where the ringing
  // has died down away from the edges.
  const auto deep = box_fourier_coeffs(0.75, 40);
  CHECK(std::abs(re_dispersion(std::numbers::pi / 2, deep) * deep.T) < 0.15);
  CHECK(re_dispersion(0.0, deep) * deep.T ==
        doctest::Approx(std::numbers::pi).epsilon(0.02));
}

TEST_CASE("term list: nearest-first coefficients and Pauli text") {
  const auto model = box_fourier_coeffs(0.75, 6);
  const auto terms = re_hamiltonian_terms(model);
  REQUIRE(terms.size() == 4);
  CHECK(terms[0].range == 0);
  CHECK(terms[0].coeff ==
        doctest::Approx(-(0.75 / 1.0) * model.G[0]).epsilon(1e-12));
  CHECK(terms[0].pauli == "Z_j");
  CHECK(terms[1].range == 2);
  CHECK(terms[1].coeff == doctest::Approx((0.75 / 1.0) * model.G[2]).epsilon(1e-12));
  CHECK(terms[1].pauli == "X_{j-2} Z_{j-1} X_j - Y_{j-2} Z_{j-1} Y_j");
  CHECK(terms[2].range == 4);
  CHECK(terms[2].pauli == "X_{j-4} Z_{j-3}...Z_{j-1} X_j - Y_{j-4} Z_{j-3}...Z_{j-1} Y_j");
  CHECK(terms[3].range == 6);
  CHECK(terms[3].pauli == "X_{j-6} Z_{j-5}...Z_{j-1} X_j - Y_{j-6} Z_{j-5}...Z_{j-1} Y_j");
  // the example value: range-2 coefficient at w = 3/4, T = 1 is +0.992157...
  CHECK(terms[1].coeff == doctest::Approx(0.992157).epsilon(1e-4));
  // couplings decay with range
  CHECK(std::abs(terms[3].coeff) < std::abs(terms[0].coeff));
}
