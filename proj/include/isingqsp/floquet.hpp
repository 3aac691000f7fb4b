#pragma once

#include "isingqsp/momentum.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace isingqsp {

// ===== periodic sequence: Floquet operator and quasienergies =====

// One period of the repeated theta = pi/4 sequence with a constant
// processing phase phi = (pi/2)(1 - 2 eps):
//   F_k = e^{i (pi/2)(sz cos k - sx sin k)} e^{-i pi (1 - 2 eps) sz}.
inline Mat2 floquet_op(double k, double eps) {
  return signal_factor(k, kPi / 4) * zrot(-kPi * (1.0 - 2.0 * eps));
}

struct ScanRecord {
  double k = 0.0;
  double eps = 0.0;
  std::optional<std::array<double, 2>> mu;  // absent when non-unitary
  std::array<double, 2> lambda_mods{0.0, 0.0};
  bool unitary = false;
};

inline std::vector<ScanRecord> floquet_scan(const std::vector<double>& ks,
                                            const std::vector<double>& epss) {
  std::vector<ScanRecord> out;
  out.reserve(ks.size() * epss.size());
  for (double k : ks) {
    for (double eps : epss) {
      const Mat2 f = floquet_op(k, eps);
      ScanRecord r;
      r.k = k;
      r.eps = eps;
      const auto lam = eigenvalues(f);
      r.lambda_mods = {std::abs(lam[0]), std::abs(lam[1])};
      r.unitary = true;  // one period of a unitary sequence
      r.mu = floquet_exponents(f);
      out.push_back(r);
    }
  }
  return out;
}

// ===== space-time dual of the periodic sequence =====

// Swapping the roles of signal and processing angles turns the constant
// processing phase into a signal angle that must satisfy
// sin(2 theta~) sin(2 theta) = 1 with 2 theta = pi (1 - 2 eps) + pi/2, giving
//   theta~ = -pi/4 + (i/2) log tan((pi/2)(1 - 2 eps)).
// Real on the line eps = 1/4 only; the log forces a branch choice as soon as
// tan goes negative, and the endpoints eps = 0, 1/2 are genuine singularities
// (note: std::tan(pi/2) rounds to a large finite value, so the endpoints need
// an explicit guard rather than an isfinite check).
inline cplx dual_theta(double eps) {
  if (eps == 0.0 || eps == 0.5)
    throw std::domain_error("dual_theta: singular at eps = " +
                            std::to_string(eps) + "; need 0 < eps < 1/2");
  const double t = std::tan(0.5 * kPi * (1.0 - 2.0 * eps));
  if (!(t > 0.0) || !std::isfinite(t))
    throw std::domain_error(
        "dual_theta: tan((pi/2)(1-2 eps)) <= 0 at eps = " + std::to_string(eps) +
        "; principal log branch undefined");
  return {-kPi / 4, 0.5 * std::log(t)};
}

// One period of the dual sequence,
//   F^D_k = e^{i (pi/2) sz} e^{2 i theta~ (sz cos k - sx sin k)},
// with complex theta~. Unit determinant always (traceless generator);
// unitary only on the line eps = 1/4.
inline Mat2 dual_floquet_op(double k, double eps) {
  const cplx th = dual_theta(eps);
  const cplx c = std::cos(2.0 * th), s = std::sin(2.0 * th);
  const double ck = std::cos(k), sk = std::sin(k);
  const cplx i1(0, 1);
  Mat2 g;
  g << c + i1 * s * ck, -i1 * s * sk, -i1 * s * sk, c - i1 * s * ck;
  return zrot(kPi / 2) * g;
}

// Grid scan of the dual operator. `unitary` tracks the spectral condition
// (both eigenvalue moduli within tol of 1); exponents are reported exactly
// when that holds. For generic eps the operator is non-normal, so the
// spectral condition is weaker than matrix unitarity -- which is recovered
// only at eps = 1/4.
inline std::vector<ScanRecord> dual_floquet_scan(const std::vector<double>& ks,
                                                 const std::vector<double>& epss,
                                                 double tol = 1e-6) {
  std::vector<ScanRecord> out;
  out.reserve(ks.size() * epss.size());
  for (double k : ks) {
    for (double eps : epss) {
      const Mat2 f = dual_floquet_op(k, eps);
      ScanRecord r;
      r.k = k;
      r.eps = eps;
      const auto lam = eigenvalues(f);
      r.lambda_mods = {std::abs(lam[0]), std::abs(lam[1])};
      r.unitary = std::abs(r.lambda_mods[0] - 1.0) <= tol &&
                  std::abs(r.lambda_mods[1] - 1.0) <= tol;
      if (r.unitary) {
        double m1 = -detail::principal_arg(lam[0]);
        double m2 = -detail::principal_arg(lam[1]);
        if (m1 <= -kPi) m1 += 2 * kPi;
        if (m2 <= -kPi) m2 += 2 * kPi;
        if (m1 > m2) std::swap(m1, m2);
        r.mu = std::array<double, 2>{m1, m2};
      }
      out.push_back(r);
    }
  }
  return out;
}

// Boolean table over a (k, eps) grid, row-major in k.
struct BoolGrid {
  std::vector<double> ks;
  std::vector<double> epss;
  std::vector<std::uint8_t> cells;

  bool at(std::size_t ik, std::size_t ie) const {
    return cells.at(ik * epss.size() + ie) != 0;
  }
};

// Cells where the dual operator has both eigenvalue moduli within tol of 1.
inline BoolGrid unitarity_region(const std::vector<double>& ks,
                                 const std::vector<double>& epss,
                                 double tol = 1e-6) {
  BoolGrid g;
  g.ks = ks;
  g.epss = epss;
  g.cells.reserve(ks.size() * epss.size());
  for (double k : ks) {
    for (double eps : epss) {
      const auto lam = eigenvalues(dual_floquet_op(k, eps));
      const bool ok = std::abs(std::abs(lam[0]) - 1.0) <= tol &&
                      std::abs(std::abs(lam[1]) - 1.0) <= tol;
      g.cells.push_back(ok ? 1 : 0);
    }
  }
  return g;
}

// ===== closed form at k = pi/2 =====

// At k = pi/2 the theta = pi/4 signal factor collapses to -i sx, so d steps
// of the constant-phase sequence reduce to the literal product
//   prod_{r=1..d} (-i sx) e^{-i pi (1 - 2 eps) sz},
// which is proportional to I for even d and to sx e^{-i pi (1 - 2 eps) sz}
// for odd d. Built from the exact factors (no trig crumbs).
inline Mat2 k_half_pi_sequence(int d, double eps) {
  if (d < 1) throw std::invalid_argument("k_half_pi_sequence: d must be >= 1");
  Mat2 misx;
  misx << cplx(0, 0), cplx(0, -1), cplx(0, -1), cplx(0, 0);
  const Mat2 step = misx * zrot(-kPi * (1.0 - 2.0 * eps));
  Mat2 u = Mat2::Identity();
  for (int r = 0; r < d; ++r) u = u * step;
  return u;
}

}  // namespace isingqsp
