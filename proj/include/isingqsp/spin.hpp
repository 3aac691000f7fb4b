#pragma once

#include "isingqsp/momentum.hpp"

#include <Eigen/Core>
#include <iosfwd>
#include <vector>

namespace isingqsp {

// Dense spin-chain state, N sites, periodic chain. Basis ordering: site 1 is
// the least significant bit; bit value 0 means spin up (so sz |up> = +|up>).
struct DenseState {
  int N = 0;
  Eigen::VectorXcd amp;
};

// |up...up>, the field-aligned reference state.
DenseState make_all_up(int N);

cplx inner(const DenseState& a, const DenseState& b);

// <prod_j Z_j>, the conserved fermion-parity expectation.
double parity_expectation(const DenseState& s);

// Site relabeling j -> j+1 (mod N).
DenseState cyclic_shift(const DenseState& s);

// e^{i phi sum_j Z_j}: a basis state with u up and d down spins picks up
// e^{i phi (u - d)}.
void apply_field(DenseState& s, double phi);

// e^{i theta sum_j X_j X_{j+1}} with periodic boundary (X_{N+1} = X_1): a
// product of commuting bond factors cos(theta) + i sin(theta) X_j X_{j+1}.
// N = 2 applies its single bond twice (j = 1 and j = 2 name the same pair).
void apply_coupling(DenseState& s, double theta);

// Many-body sequence e^{i phi_0 sum Z} prod_{r=1..d} e^{i theta sum XX} e^{i phi_r sum Z},
// rightmost factor acting first.
void qsp_spin(DenseState& s, const PhaseProgram& prog);

// Signal/processing roles exchanged: e^{i phi_0 sum XX} prod_r e^{i theta sum Z} e^{i phi_r sum XX}.
void qsp_spin_dual(DenseState& s, const PhaseProgram& prog);

// Positive momenta of the even (antiperiodic) sector, k_m = (2m-1) pi / N.
struct MomentumGrid {
  int N = 0;
  std::vector<double> ks;
};

MomentumGrid momentum_grid(int N);  // N even, 4 <= N <= 14

// Pseudo-spin Hamiltonian snapshot 2(g - J cos k) sz + 2 J sin k sx.
struct BdGParams {
  double g = 0.0;
  double J = 0.0;
  double k = 0.0;
};

Mat2 bdg_matrix(const BdGParams& p);

// Momentum-block prediction of the all-up survival amplitude: each positive
// momentum contributes the (1,1) element of its 2x2 sequence, and the dense
// amplitude equals the product up to a global phase fixed by the fermion
// boundary convention (magnitudes agree; the phase relation is pinned by a
// regression test).
cplx predict_vacuum_amplitude(const PhaseProgram& prog, int N);

// Normalized pair excitation with momenta (k0, -k0):
// proportional to sum_{i<j} sin(k0 (j-i)) |down_i down_j>.
// k0 must lie on momentum_grid(N).
DenseState two_excitation_state(int N, double k0);

// Raw little-endian interchange format: uint32 N, then 2^N (re, im) doubles.
void write_state(const DenseState& s, std::ostream& os);
DenseState read_state(std::istream& is);

}  // namespace isingqsp
