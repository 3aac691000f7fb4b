#pragma once

#include "isingqsp/phases.hpp"

#include <cmath>
#include <numbers>

namespace isingqsp {

// BB1 composite pulse carried over to momentum space: five processed signal
// rotations whose response keeps |<0|V_k|0>|^2 ~ 1 over a wide band around
// k = 0 while pinning an exact zero at k = +-pi/2.

struct Bb1Sequences {
  CanonicalPhases canonical;  // Phi = (pi/2, -chi, 2chi, 0, -2chi, chi)
  PhaseProgram onsager;       // its exact field/coupling preimage at theta = pi/4
};

struct Bb1Response {
  double R_plain = 0.0;  // |<0|e^{-ik sx}|0>|^2 = cos^2 k, the bare signal
  double R_bb1 = 0.0;    // after the composite sequence
};

// The defining angle chi = (1/2) arccos(-1/4).
inline double bb1_chi() { return 0.5 * std::acos(-0.25); }

// Both pictures of the sequence; phases_to_canonical(onsager) reproduces
// canonical exactly (the map is affine with rational-in-pi offsets).
inline Bb1Sequences bb1_phases() {
  const double chi = bb1_chi();
  const double pi = std::numbers::pi;
  Bb1Sequences s;
  s.canonical.Phi = {pi / 2, -chi, 2 * chi, 0.0, -2 * chi, chi};
  s.onsager.theta = pi / 4;
  s.onsager.phi = {-pi / 8,          chi / 2 + pi / 4, -chi + pi / 4,
                   pi / 4,           chi + pi / 4,     -chi / 2 + pi / 8};
  return s;
}

// Closed-form transition probabilities; the matrix route (top-left entry of
// the canonical product) agrees within 1e-10 and is exercised by the tests.
inline Bb1Response bb1_response(double k) {
  const double x = std::cos(k);
  const double x2 = x * x;
  Bb1Response r;
  r.R_plain = x2;
  r.R_bb1 =
      x2 / 8.0 *
      ((((3.0 * x2 - 15.0) * x2 + 35.0) * x2 - 45.0) * x2 + 30.0);
  return r;
}

}  // namespace isingqsp
