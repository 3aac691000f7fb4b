#pragma once

#include "isingqsp/poly.hpp"

#include <cstdint>
#include <string>

namespace isingqsp {

struct SolveOptions {
  double residual_tol = 1e-8;   // accept when the verified residual is below this
  std::size_t check_points = 801;  // dense grid for the final verification
  std::uint64_t seed = 20260818;   // jitter seed for optimizer restarts
  int max_iterations = 600;        // per optimizer restart
  int restarts = 3;
};

struct SolveResult {
  CanonicalPhases phases;
  double target_rescale = 1.0;  // s: the realized response is s * f
  double residual = 0.0;        // sup_k |<+|V_k|+> - s f(cos k)|, coeff check folded in
  std::string route;            // "spectral" or "iterative"
};

// Unitarity completion of a bounded real target f: real polynomials b, e
// (Chebyshev coefficients) with f^2 + b^2 + (1 - x^2) e^2 = 1 on [-1, 1],
// deg b <= deg f frame, deg e <= frame - 1, parities frame and frame - 1.
// frame_parity is the parity (0 or 1) of the phase-sequence degree the
// completion will be embedded in; it matters only for degenerate targets
// whose own coefficients do not pin it.
struct Completion {
  std::vector<double> b;
  std::vector<double> e;
  double residual = 0.0;  // spectral-factorization defect, max over samples
};

// Spectral (root-finding) completion. Throws std::runtime_error when the
// factorization cannot be carried out at the requested accuracy.
Completion complete_target(const std::vector<double>& f_cheb, int frame_parity);

// Peel a canonical sequence layer by layer from its matrix-element
// polynomials: P, Q as Chebyshev coefficient vectors (any length <= d+1 and
// d; missing entries are treated as zero). Returns the d+1 phases. The caller
// is responsible for (P, Q) actually being realizable; garbage in gives
// garbage phases out, caught by re-extraction downstream.
std::vector<double> strip_phases(std::vector<cplx> P, std::vector<cplx> Q,
                                 std::size_t d);

// Find canonical phases realizing a real degree-d target polynomial f (given
// as first-kind Chebyshev coefficients, low degree first; d = size - 1):
// the returned sequence satisfies <+|V_k|+> = s * f(cos k) up to the reported
// residual, with the real part of the (0,0) element equal to s * f and the
// real part of the Q element zero. s = target_rescale is 1 for comfortably
// sub-unit targets and is pulled marginally below the unit bound otherwise.
//
// Requirements: f must have the parity of its degree (opposite-parity
// coefficients below 1e-12) and satisfy |f| <= 1 on [-1, 1]; violations are
// reported as std::invalid_argument with a witness abscissa. Failure of both
// the spectral route and the optimizer raises std::runtime_error carrying the
// best residual reached. Deterministic for fixed options.
SolveResult solve_phases(const std::vector<double>& target_cheb,
                         const SolveOptions& opts = {});

}  // namespace isingqsp
