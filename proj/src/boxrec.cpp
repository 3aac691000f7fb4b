#include "isingqsp/boxrec.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace isingqsp {
namespace {

constexpr std::complex<double> kI{0.0, 1.0};

double sinc(double u) {
  if (std::abs(u) < 1e-4) {  // series keeps full precision through the zero
    const double u2 = u * u;
    return 1.0 - u2 / 6.0 * (1.0 - u2 / 20.0);
  }
  return std::sin(u) / u;
}

// Levin-accelerated tail of one half-line: the imaginary part of
//   integral_{t0}^{inf} e^{iwt} J(t) / (wt) dt
// summed over pi-length segments, where J is the (possibly reflected) Bessel
// factor handed in by the caller. Segments shrink like t^{-3/2} while
// rotating through two incommensurate phases; the u-transform collapses that
// mixture far faster than any truncation bound on |J_n| could.
template <typename BesselFn>
double oscillatory_tail(BesselFn&& bess, double w, double t0,
                        const QuadOptions& quad) {
  QuadOptions seg = quad;
  seg.abs_tol = std::min(quad.abs_tol, 1e-12);
  const auto segment = [&](int j) {
    const double a = t0 + std::numbers::pi * j;
    const double b = a + std::numbers::pi;
    return integrate(
        [&](double t) { return std::exp(kI * (w * t)) * bess(t) / (w * t); },
        a, b, seg);
  };
  // Segment values are only good to ~1e-12 each, so the accelerated limit
  // cannot settle much below 1e-10; asking for more just exhausts the terms.
  return levin_sum(segment, 1e-10, 36).imag();
}

}  // namespace

double bessel_j(int n, double t) {
  if (n < 0)
    throw std::invalid_argument("bessel_j: order must be nonnegative");
  const double magnitude = std::cyl_bessel_j(static_cast<double>(n),
                                             std::abs(t));
  return (t < 0.0 && n % 2 == 1) ? -magnitude : magnitude;
}

BoxModel box_fourier_coeffs(double w, int n_max, const QuadOptions& quad) {
  if (!(w > 0.0 && w < 1.0))
    throw std::invalid_argument("box_fourier_coeffs: requires 0 < w < 1");
  if (n_max < 0)
    throw std::invalid_argument("box_fourier_coeffs: n_max must be >= 0");
  BoxModel model;
  model.w = w;
  model.G.resize(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    // J_n is negligible until t ~ n, and its asymptotic phase still carries
    // slowly decaying O(n^2/t) corrections past the turning point that spoil
    // the acceleration model, so the head runs well beyond it; the boundary
    // lands on a pi-segment seam.
    const double t0 =
        std::numbers::pi * std::ceil((3.0 * n + 40.0) / std::numbers::pi);
    const auto f = [&](double t) { return sinc(w * t) * bessel_j(n, t); };
    const double head = integrate(f, -t0, t0, quad);
    const double right =
        oscillatory_tail([&](double t) { return bessel_j(n, t); }, w, t0,
                         quad);
    // Left tail via u = -t; the reflection stays inside the Bessel factor so
    // both half-lines run through the same quadrature path.
    const double left =
        oscillatory_tail([&](double u) { return bessel_j(n, -u); }, w, t0,
                         quad);
    model.G[static_cast<std::size_t>(n)] = head + right + left;
  }
  return model;
}

double box_reconstruct(double k, const BoxModel& model) {
  if (model.G.empty())
    throw std::invalid_argument("box_reconstruct: model holds no coefficients");
  // Two-sided sum folded with G_{-n} = G_n:
  //   i^n e^{ink} + i^{-n} e^{-ink} = 2 cos(n(k + pi/2)).
  double acc = model.G[0];
  for (std::size_t n = 1; n < model.G.size(); ++n)
    acc += 2.0 * model.G[n] *
           std::cos(static_cast<double>(n) * (k + std::numbers::pi / 2));
  return model.w / std::numbers::pi * acc;
}

double re_dispersion(double k, const BoxModel& model) {
  if (model.G.empty())
    throw std::invalid_argument("re_dispersion: model holds no coefficients");
  if (!(model.T > 0.0))
    throw std::invalid_argument("re_dispersion: requires T > 0");
  // Omega_k T = pi (1 - box) with the same even-coefficient truncation; the
  // constant term enters once, the rest fold their +-n pair into a factor 2.
  double acc = model.G[0];
  double sign = -1.0;
  for (std::size_t m = 1; 2 * m < model.G.size(); ++m) {
    acc += 2.0 * sign * std::cos(2.0 * static_cast<double>(m) * k) *
           model.G[2 * m];
    sign = -sign;
  }
  return (std::numbers::pi - model.w * acc) / model.T;
}

std::vector<HamTerm> re_hamiltonian_terms(const BoxModel& model) {
  if (model.G.empty())
    throw std::invalid_argument(
        "re_hamiltonian_terms: model holds no coefficients");
  if (!(model.T > 0.0))
    throw std::invalid_argument("re_hamiltonian_terms: requires T > 0");
  std::vector<HamTerm> terms;
  double sign = 1.0;
  for (std::size_t n = 0; 2 * n < model.G.size(); ++n) {
    HamTerm t;
    t.range = static_cast<int>(2 * n);
    t.coeff = -model.w / model.T * sign * model.G[2 * n];
    sign = -sign;
    if (n == 0) {
      t.pauli = "Z_j";  // zero-range pairing collapses to the on-site field
    } else {
      // X_{j-2n} Z-string X_j minus the Y counterpart; the string spans the
      // 2n-1 sites strictly between the endpoints.
      std::ostringstream p;
      const int r = t.range;
      p << "X_{j-" << r << "}";
      if (r == 2)
        p << " Z_{j-1}";
      else
        p << " Z_{j-" << r - 1 << "}...Z_{j-1}";
      p << " X_j - Y_{j-" << r << "}";
      if (r == 2)
        p << " Z_{j-1}";
      else
        p << " Z_{j-" << r - 1 << "}...Z_{j-1}";
      p << " Y_j";
      t.pauli = p.str();
    }
    terms.push_back(std::move(t));
  }
  return terms;
}

}  // namespace isingqsp
