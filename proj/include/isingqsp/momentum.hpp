#pragma once

#include "isingqsp/phases.hpp"
#include "isingqsp/su2.hpp"

namespace isingqsp {

// Signal factor at momentum k,
//   S_k(theta) = e^{2 i theta (sz cos k - sx sin k)}
//              = cos(2 theta) I + i sin(2 theta) (sz cos k - sx sin k).
template <class Real>
Mat2T<Real> signal_factor(Real k, Real theta) {
  const Real c2 = std::cos(2 * theta), s2 = std::sin(2 * theta);
  const Real ck = std::cos(k), sk = std::sin(k);
  Mat2T<Real> m;
  const std::complex<Real> i1(0, 1);
  m << c2 + i1 * s2 * ck, -i1 * s2 * sk, -i1 * s2 * sk, c2 - i1 * s2 * ck;
  return m;
}

inline Mat2 qsp_momentum(double k, const PhaseProgram& p) {
  const std::size_t d = p.degree();
  Mat2 u = zrot(-2.0 * p.phi[0]);
  const Mat2 s = signal_factor(k, p.theta);
  for (std::size_t r = 1; r <= d; ++r) u = u * s * zrot(-2.0 * p.phi[r]);
  return u;
}

// Dual sequence: processing rotations move onto the momentum axis while the
// signal becomes a fixed z rotation,
//   U^D_k = e^{2 i phi_0 (sz cos k - sx sin k)}
//           prod_{r=1..d} [ e^{-2 i theta sz} e^{2 i phi_r (sz cos k - sx sin k)} ].
inline Mat2 qsp_momentum_dual(double k, const PhaseProgram& p) {
  const std::size_t d = p.degree();
  Mat2 u = signal_factor(k, p.phi[0]);
  const Mat2 s = zrot(-2.0 * p.theta);
  for (std::size_t r = 1; r <= d; ++r) u = u * s * signal_factor(k, p.phi[r]);
  return u;
}

// Field/coupling exchange as a momentum-space conjugation: with right-handed
// Pauli matrices,
//   kw_dual_transform(conjugate(qsp_momentum(-k, p)), k) == qsp_momentum_dual(k, p)
// for every program p. (The conjugation direction flips if sy is taken
// left-handed; this codebase is uniformly right-handed.)
inline Mat2 kw_dual_transform(const Mat2& m, double k) {
  return yrot(0.5 * k) * m * yrot(-0.5 * k);
}

inline Mat2 qsp_canonical(double k, const CanonicalPhases& c) {
  const std::size_t d = c.degree();
  Mat2 v = zrot(c.Phi[0]);
  const Mat2 x = xrot(-k);
  for (std::size_t r = 1; r <= d; ++r) v = v * x * zrot(c.Phi[r]);
  return v;
}

// <+| m |+> = (sum of entries) / 2.
inline cplx plus_expectation(const Mat2& m) { return 0.5 * m.sum(); }

// Opposite-momentum signal pair S_k(theta) S_{-k}(theta)^{-1} collapses to a
// single rotation about an axis in the x-y plane:
//   cos Omega = cos^2(2 theta) + cos(2k) sin^2(2 theta),
//   A = -sin k sin(4 theta) / sin Omega,
//   B =  sin(2k) sin^2(2 theta) / sin Omega,
// and the pair equals e^{i Omega (A sx + B sy)} with A^2 + B^2 = 1. When
// sin Omega vanishes the axis is undefined.
struct PairRotation {
  double omega;
  double ax;
  double ay;
};

inline PairRotation signal_pair_rotation(double k, double theta,
                                         double tol = 1e-12) {
  const double c2 = std::cos(2 * theta), s2 = std::sin(2 * theta);
  double c = c2 * c2 + std::cos(2 * k) * s2 * s2;
  c = std::min(1.0, std::max(-1.0, c));
  const double omega = std::acos(c);
  const double so = std::sin(omega);
  if (std::abs(so) <= tol)
    throw std::domain_error(
        "signal_pair_rotation: degenerate pair (sin Omega = 0), axis undefined");
  return {omega, -std::sin(k) * std::sin(4 * theta) / so,
          std::sin(2 * k) * s2 * s2 / so};
}

// Sequence built from signal pairs with shifted processing phases,
//   prod_{r=1..d} [ S_k(theta) S_{-k}(theta)^{-1} e^{-2 i (phi_r + pi/4) sz} ];
// phi_0 is not used. This is the arbitrary-theta form in which each pair acts
// as one in-plane rotation by Omega(k, theta).
inline Mat2 qsp_signal_pair(double k, const PhaseProgram& p) {
  const std::size_t d = p.degree();
  const Mat2 pair = signal_factor(k, p.theta) * signal_factor(-k, -p.theta);
  Mat2 u = Mat2::Identity();
  for (std::size_t r = 1; r <= d; ++r)
    u = u * pair * zrot(-2.0 * (p.phi[r] + kPi / 4));
  return u;
}

}  // namespace isingqsp
