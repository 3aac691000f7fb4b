#pragma once

#include "isingqsp/solve.hpp"

#include <utility>
#include <vector>

namespace isingqsp {

// Three-spin cluster chain in its free-fermion frame: the momentum-k block is
// 2 (g0 - J cos 4k) sz + 2 J gamma sin 4k sx.
struct ClusterParams {
  double g0 = 1.0;
  double J = 1.0;
  double gamma = 0.5;
  double T = 1.0;  // evolution time used by cluster_evolution and the fit
};

Mat2 cluster_bdg(double k, const ClusterParams& p);

// Band energy without any gap guard (0 at a closing point).
double cluster_omega(double k, const ClusterParams& p);

// Normalized dispersion data: Omega plus the unit axis (nx, 0, nz) of the
// block Hamiltonian. Gapless points (Omega <= 1e-12) are rejected.
struct ClusterDispersion {
  double Omega = 0.0;
  double nx = 0.0;
  double nz = 0.0;
};

ClusterDispersion cluster_dispersion(double k, const ClusterParams& p);

// e^{-i H_k T} for the block above; T = 0 gives the identity even at a
// gap closing.
Mat2 cluster_evolution(double k, const ClusterParams& p);

// (k, cos^2(Omega_k T)) sampled on kgrid -- the survival-probability target
// the sequence fit is judged against.
std::vector<std::pair<double, double>> cluster_response_curve(
    const ClusterParams& p, const std::vector<double>& kgrid);

struct ClusterFit {
  CanonicalPhases phases;
  double max_error = 0.0;  // sup_k |<+|V_k|+> - cos(Omega_k T)| on a dense k grid
};

// Fit the real part of the evolution's diagonal, f(cos k) = cos(Omega_k T)
// with cos 4k rewritten through T_4(cos k), by an even Chebyshev target of
// the given degree, then solve for phases. degree must be even and >= 2.
ClusterFit qsp_approximate_cluster(const ClusterParams& p, int degree);

}  // namespace isingqsp
