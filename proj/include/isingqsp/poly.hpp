#pragma once

#include "isingqsp/chebyshev.hpp"
#include "isingqsp/momentum.hpp"

namespace isingqsp {

// Matrix-element polynomials of the canonical sequence. With x = cos k and
// s = sin k >= 0,
//   V_k = [[ P(x),            i Q(x) s ],
//          [ i conj(Q)(x) s,  conj(P)(x) ]],
// where deg P <= d with parity d mod 2, deg Q <= d-1 with parity (d-1) mod 2,
// and |P|^2 + (1 - x^2) |Q|^2 = 1 on [-1, 1]. Coefficients are in the
// first-kind Chebyshev basis.
struct PolyPair {
  std::vector<cplx> P;
  std::vector<cplx> Q;
};

// Sample the sequence at d+1 interior Chebyshev angles and project; exact to
// rounding since both entries are polynomials within the sampled degree.
inline PolyPair extract_poly(const CanonicalPhases& c) {
  const std::size_t d = c.degree();
  const std::size_t m = d + 1;
  const auto xs = cheb_nodes(m);
  std::vector<cplx> ps(m), qs(m);
  for (std::size_t j = 0; j < m; ++j) {
    const double k = std::acos(xs[j]);  // (0, pi), so sin k > 0
    const Mat2 v = qsp_canonical(k, c);
    ps[j] = v(0, 0);
    qs[j] = v(0, 1) / (cplx(0, 1) * std::sin(k));
  }
  PolyPair pq;
  pq.P = cheb_project(ps);
  if (d == 0) {
    pq.Q.clear();
    return pq;
  }
  pq.Q = cheb_project(qs);
  pq.Q.resize(d);  // top coefficient belongs to degree d and must vanish
  return pq;
}

}  // namespace isingqsp
