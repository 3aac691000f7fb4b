#pragma once

#include "isingqsp/quad.hpp"

#include <string>
#include <vector>

namespace isingqsp {

// Reverse engineering of a real-space Hamiltonian from a box-shaped momentum
// response: the target evolution has <0|U_k|0> = cos(Omega_k T) equal to +1
// where |cos k| < w and -1 outside, so Omega_k is reconstructed from the
// Fourier coefficients G_n of the box indicator,
//   G_n = integral over the whole real line of sinc(w t) J_n(t) dt,
// with J_n the Bessel function of the first kind. The box has period pi in k,
// so every odd G_n vanishes; the even ones carry the couplings of a nonlocal
// pairing Hamiltonian whose range-2n terms decay with n.

struct BoxModel {
  double w = 0.75;        // box half-width in x = cos k
  double T = 1.0;         // evolution time scale
  std::vector<double> G;  // G[n] for n = 0..n_max (odd entries ~ 0)
};

// First-kind Bessel J_n extended to the whole real line through
// J_n(-t) = (-1)^n J_n(t); n must be nonnegative.
double bessel_j(int n, double t);

// All G_n for n = 0..n_max by quadrature: an adaptive Gauss-Kronrod head
// around the origin plus Levin-accelerated oscillatory tails on both
// half-lines. Throws std::runtime_error with the achieved residual when
// either piece fails to converge.
BoxModel box_fourier_coeffs(double w, int n_max, const QuadOptions& quad = {});

// Partial Fourier resummation of the box indicator at momentum k,
//   (w/pi) sum_{|n| <= n_max} i^n e^{ink} G_n,
// real by symmetry; approaches 1{|cos k| < w} as n_max grows.
double box_reconstruct(double k, const BoxModel& model);

// Reverse-engineered dispersion
//   Omega_k = (1/T) [pi - w G_0 - 2w sum_{m>=1} (-1)^m cos(2mk) G_{2m}],
// i.e. Omega_k T = pi (1 - box) at the same truncation; ~0 deep inside the
// box and ~pi deep outside.
double re_dispersion(double k, const BoxModel& model);

// One real-space term of the reverse-engineered spin Hamiltonian. The
// range-2n pairing term appears once per site pair in each direction, so a
// dispersion resummation counts coeff twice for n >= 1 and once for n = 0:
//   Omega_k = pi/T + coeff(0) + sum_{n>=1} 2 coeff(n) cos(2nk).
struct HamTerm {
  int range = 0;      // 2n, the site separation
  double coeff = 0.0; // -(w/T) (-1)^n G_{2n}
  std::string pauli;  // textual Pauli form of the term
};

// Terms for every even range 2n <= n_max, nearest (n = 0, a plain transverse
// field) first.
std::vector<HamTerm> re_hamiltonian_terms(const BoxModel& model);

}  // namespace isingqsp
