#pragma once

#include <Eigen/Core>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace isingqsp {

template <class Real>
using Mat2T = Eigen::Matrix<std::complex<Real>, 2, 2>;
template <class Real>
using Vec3T = Eigen::Matrix<Real, 3, 1>;

using Mat2 = Mat2T<double>;
using Vec3 = Vec3T<double>;
using cplx = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kDefaultTol = 1e-10;

// Pauli matrices, right-handed convention: sx * sy = i * sz.
template <class Real = double>
Mat2T<Real> pauli_x() {
  Mat2T<Real> m;
  m << 0, 1, 1, 0;
  return m;
}

template <class Real = double>
Mat2T<Real> pauli_y() {
  using C = std::complex<Real>;
  Mat2T<Real> m;
  m << C(0, 0), C(0, -1), C(0, 1), C(0, 0);
  return m;
}

template <class Real = double>
Mat2T<Real> pauli_z() {
  Mat2T<Real> m;
  m << 1, 0, 0, -1;
  return m;
}

// e^{i angle (n . sigma)} = cos(angle) I + i sin(angle) (n . sigma).
// The axis must be a unit vector; anything else is a caller bug.
template <class Real>
Mat2T<Real> rot(const Vec3T<Real>& axis, Real angle, Real axis_tol = Real(1e-9)) {
  if (std::abs(axis.squaredNorm() - Real(1)) > axis_tol)
    throw std::invalid_argument("rot: axis must be a unit vector");
  const std::complex<Real> isin(0, std::sin(angle));
  Mat2T<Real> ns = axis[0] * pauli_x<Real>() + axis[1] * pauli_y<Real>() +
                   axis[2] * pauli_z<Real>();
  return std::cos(angle) * Mat2T<Real>::Identity() + isin * ns;
}

// Exact single-axis forms (no trig on the axis, used in hot paths).
template <class Real = double>
Mat2T<Real> zrot(Real a) {  // e^{i a sz}
  Mat2T<Real> m = Mat2T<Real>::Zero();
  m(0, 0) = std::exp(std::complex<Real>(0, a));
  m(1, 1) = std::exp(std::complex<Real>(0, -a));
  return m;
}

template <class Real = double>
Mat2T<Real> xrot(Real a) {  // e^{i a sx}
  Mat2T<Real> m;
  const std::complex<Real> is(0, std::sin(a));
  const Real c = std::cos(a);
  m << c, is, is, c;
  return m;
}

template <class Real = double>
Mat2T<Real> yrot(Real a) {  // e^{i a sy}
  Mat2T<Real> m;
  const Real c = std::cos(a), s = std::sin(a);
  m << c, s, -s, c;
  return m;
}

inline bool is_unitary(const Mat2& m, double tol = kDefaultTol) {
  return (m.adjoint() * m - Mat2::Identity()).cwiseAbs().maxCoeff() <= tol;
}

namespace detail {
// Principal argument mapped into (-pi, pi]; std::arg can return -pi exactly.
inline double principal_arg(const cplx& z) {
  double a = std::arg(z);
  if (a <= -kPi) a += 2 * kPi;
  return a;
}
}  // namespace detail

// Eigenvalues of a 2x2, ordered by ascending principal argument in (-pi, pi],
// ties broken by ascending modulus.
inline std::array<cplx, 2> eigenvalues(const Mat2& m) {
  const cplx tr = m.trace();
  const cplx det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  const cplx disc = std::sqrt(tr * tr - 4.0 * det);
  // Pick the root with the larger magnitude first to avoid cancellation,
  // then recover the partner from the determinant.
  const cplx big = (std::abs(tr + disc) >= std::abs(tr - disc)) ? 0.5 * (tr + disc)
                                                                : 0.5 * (tr - disc);
  cplx l1, l2;
  if (std::abs(big) > 0.0) {
    l1 = big;
    l2 = det / big;
  } else {
    l1 = l2 = cplx(0, 0);
  }
  const double a1 = detail::principal_arg(l1);
  const double a2 = detail::principal_arg(l2);
  if (a1 < a2 || (a1 == a2 && std::abs(l1) <= std::abs(l2))) return {l1, l2};
  return {l2, l1};
}

// Floquet exponents mu = -arg(lambda) of a unitary, mapped into (-pi, pi]
// and returned ascending. Non-unitary input is a domain error: the exponents
// are only defined on the unit circle.
inline std::array<double, 2> floquet_exponents(const Mat2& m,
                                               double tol = kDefaultTol) {
  if (!is_unitary(m, tol))
    throw std::domain_error("floquet_exponents: input is not unitary");
  const auto lam = eigenvalues(m);
  double m1 = -detail::principal_arg(lam[0]);
  double m2 = -detail::principal_arg(lam[1]);
  if (m1 <= -kPi) m1 += 2 * kPi;
  if (m2 <= -kPi) m2 += 2 * kPi;
  if (m1 > m2) std::swap(m1, m2);
  return {m1, m2};
}

// Least-squares scalar c minimizing ||m - c t||_F and the remaining max-norm
// deviation; used for "proportional to" assertions.
struct ScalarMatch {
  cplx c;
  double deviation;
};

inline ScalarMatch scalar_match(const Mat2& m, const Mat2& t) {
  const cplx denom = (t.adjoint() * t).trace();
  if (std::abs(denom) == 0.0)
    throw std::invalid_argument("scalar_match: reference matrix is zero");
  const cplx c = (t.adjoint() * m).trace() / denom;
  const double dev = (m - c * t).cwiseAbs().maxCoeff();
  return {c, dev};
}

}  // namespace isingqsp
