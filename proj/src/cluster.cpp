#include "isingqsp/cluster.hpp"

#include "isingqsp/chebyshev.hpp"
#include "isingqsp/poly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace isingqsp {

namespace {

constexpr double kGapTol = 1e-12;

// Band energy as a function of x = cos k, using cos 4k = T_4(x). Only even
// powers of sin 4k enter, so the branch of sin is irrelevant.
double omega_of_x(double x, const ClusterParams& p) {
  const double c4 = (8.0 * x * x - 8.0) * x * x + 1.0;
  const double dz = p.g0 - p.J * c4;
  const double s4sq = std::max(0.0, 1.0 - c4 * c4);
  const double dx = p.J * p.gamma;
  return 2.0 * std::sqrt(dz * dz + dx * dx * s4sq);
}

}  // namespace

Mat2 cluster_bdg(double k, const ClusterParams& p) {
  const double dz = 2.0 * (p.g0 - p.J * std::cos(4.0 * k));
  const double dx = 2.0 * p.J * p.gamma * std::sin(4.0 * k);
  Mat2 m;
  m << cplx(dz, 0.0), cplx(dx, 0.0), cplx(dx, 0.0), cplx(-dz, 0.0);
  return m;
}

double cluster_omega(double k, const ClusterParams& p) {
  const double dz = p.g0 - p.J * std::cos(4.0 * k);
  const double dx = p.J * p.gamma * std::sin(4.0 * k);
  return 2.0 * std::hypot(dz, dx);
}

ClusterDispersion cluster_dispersion(double k, const ClusterParams& p) {
  ClusterDispersion d;
  d.Omega = cluster_omega(k, p);
  if (d.Omega <= kGapTol)
    throw std::domain_error("cluster_dispersion: band gap closes at this momentum");
  d.nz = 2.0 * (p.g0 - p.J * std::cos(4.0 * k)) / d.Omega;
  d.nx = 2.0 * p.J * p.gamma * std::sin(4.0 * k) / d.Omega;
  return d;
}

Mat2 cluster_evolution(double k, const ClusterParams& p) {
  if (p.T == 0.0) return Mat2::Identity();
  const ClusterDispersion d = cluster_dispersion(k, p);
  const double c = std::cos(d.Omega * p.T);
  const double s = std::sin(d.Omega * p.T);
  Mat2 u;
  u << cplx(c, -d.nz * s), cplx(0.0, -d.nx * s), cplx(0.0, -d.nx * s),
      cplx(c, d.nz * s);
  return u;
}

std::vector<std::pair<double, double>> cluster_response_curve(
    const ClusterParams& p, const std::vector<double>& kgrid) {
  std::vector<std::pair<double, double>> curve;
  curve.reserve(kgrid.size());
  for (const double k : kgrid) {
    const double c = std::cos(cluster_omega(k, p) * p.T);
    curve.emplace_back(k, c * c);
  }
  return curve;
}

ClusterFit qsp_approximate_cluster(const ClusterParams& p, int degree) {
  if (degree < 2 || degree % 2 != 0)
    throw std::invalid_argument(
        "qsp_approximate_cluster: degree must be even and at least 2");

  // Chebyshev-project cos(Omega(x) T) and truncate. The target is even in x,
  // so odd coefficients vanish up to projection noise; scrub them so the
  // solver sees an exactly parity-clean input.
  const std::size_t m = static_cast<std::size_t>(std::max(129, 4 * degree + 1));
  const std::vector<double> xs = cheb_nodes(m);
  std::vector<double> samples(m);
  for (std::size_t i = 0; i < m; ++i)
    samples[i] = std::cos(omega_of_x(xs[i], p) * p.T);
  std::vector<double> coeffs = cheb_project(samples);
  coeffs.resize(static_cast<std::size_t>(degree) + 1);
  for (std::size_t j = 1; j < coeffs.size(); j += 2) coeffs[j] = 0.0;

  // Truncation overshoots |f| = 1 at the band edges (where the true target
  // touches 1) by roughly the truncation error, which the phase solver must
  // reject. Pull the approximant into the unit ball; the perturbation is of
  // the same order as the truncation error already committed.
  const double sup = cheb_sup(coeffs).value;
  if (sup > 1.0)
    for (double& cj : coeffs) cj /= sup;

  const SolveResult sr = solve_phases(coeffs);

  ClusterFit fit;
  fit.phases = sr.phases;
  for (int j = 0; j <= 400; ++j) {
    const double k = kPi * j / 400.0;
    const cplx got = plus_expectation(qsp_canonical(k, fit.phases));
    const double want = std::cos(cluster_omega(k, p) * p.T);
    fit.max_error = std::max(fit.max_error, std::abs(got - want));
  }
  return fit;
}

}  // namespace isingqsp
