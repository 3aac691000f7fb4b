#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace isingqsp {

// Phase program for the field/coupling picture,
//   U_k = e^{-2 i phi_0 sz} prod_{r=1..d} [ S_k(theta) e^{-2 i phi_r sz} ],
// with the product written left to right in ascending r. phi holds d+1
// entries; d = 0 is legal (a bare z rotation).
struct PhaseProgram {
  double theta = 0.0;
  std::vector<double> phi;

  std::size_t degree() const {
    if (phi.empty())
      throw std::invalid_argument("PhaseProgram: phi must hold at least one entry");
    return phi.size() - 1;
  }
};

// Canonical z-x picture,
//   V_k = e^{i Phi_0 sz} prod_{r=1..d} [ e^{-i k sx} e^{i Phi_r sz} ].
struct CanonicalPhases {
  std::vector<double> Phi;

  std::size_t degree() const {
    if (Phi.empty())
      throw std::invalid_argument("CanonicalPhases: Phi must hold at least one entry");
    return Phi.size() - 1;
  }
};

// Exact picture change at theta = pi/4 (matrix identity, no leftover global
// phase):
//   Phi_0 = pi/4 - 2 phi_0,
//   Phi_r = pi/2 - 2 phi_r   (0 < r < d),
//   Phi_d = pi/4 - 2 phi_d.
// It follows from S_k(pi/4) = e^{i pi/4 sz} e^{-i k sx} e^{i pi/4 sz} with the
// quarter z rotations absorbed into neighboring processing phases. Undefined
// for d = 0 (the head and tail shifts would collide on phi_0).
inline CanonicalPhases phases_to_canonical(const PhaseProgram& p,
                                           double theta_tol = 1e-12) {
  const std::size_t d = p.degree();
  if (d < 1)
    throw std::domain_error(
        "phases_to_canonical: undefined at d = 0 (endpoint rules collide)");
  if (std::abs(p.theta - std::numbers::pi / 4) > theta_tol)
    throw std::domain_error(
        "phases_to_canonical: translation is defined only at theta = pi/4");
  CanonicalPhases c;
  c.Phi.resize(d + 1);
  c.Phi[0] = std::numbers::pi / 4 - 2.0 * p.phi[0];
  for (std::size_t r = 1; r < d; ++r) c.Phi[r] = std::numbers::pi / 2 - 2.0 * p.phi[r];
  c.Phi[d] = std::numbers::pi / 4 - 2.0 * p.phi[d];
  return c;
}

inline PhaseProgram canonical_to_phases(const CanonicalPhases& c) {
  const std::size_t d = c.degree();
  if (d < 1)
    throw std::domain_error("canonical_to_phases: degree must be at least 1");
  PhaseProgram p;
  p.theta = std::numbers::pi / 4;
  p.phi.resize(d + 1);
  p.phi[0] = 0.5 * (std::numbers::pi / 4 - c.Phi[0]);
  for (std::size_t r = 1; r < d; ++r) p.phi[r] = 0.5 * (std::numbers::pi / 2 - c.Phi[r]);
  p.phi[d] = 0.5 * (std::numbers::pi / 4 - c.Phi[d]);
  return p;
}

}  // namespace isingqsp
