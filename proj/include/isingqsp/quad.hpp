#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <type_traits>
#include <vector>

namespace isingqsp {

// Adaptive Gauss-Kronrod quadrature and Levin sequence acceleration. Both are
// value-type generic (double or std::complex<double>) so oscillatory tails can
// be carried in complex form and projected at the end.

struct QuadOptions {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  int max_subdivisions = 4000;
};

namespace detail {

// 15-point Kronrod extension of 7-point Gauss on [-1, 1]; positive half of
// the node set, last entry the center.
inline constexpr double kGk15Nodes[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.0};
inline constexpr double kGk15Kronrod[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
// Gauss-7 weights, matching every second Kronrod node (indices 1, 3, 5, 7).
inline constexpr double kGk15Gauss[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469};

}  // namespace detail

template <typename F>
struct PanelResult {
  using value_type = std::invoke_result_t<F&, double>;
  value_type value{};
  double error = 0.0;
};

// One Gauss-Kronrod 15(7) panel on [a, b]; error is the Gauss/Kronrod gap.
template <typename F>
PanelResult<F> gk15_panel(F&& f, double a, double b) {
  using V = typename PanelResult<F>::value_type;
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  V kron{};
  V gauss{};
  for (int i = 0; i < 8; ++i) {
    const double x = detail::kGk15Nodes[i];
    V s = f(mid + half * x);
    if (i < 7) s += f(mid - half * x);
    kron += detail::kGk15Kronrod[i] * s;
    if (i % 2 == 1) gauss += detail::kGk15Gauss[i / 2] * s;
  }
  PanelResult<F> out;
  out.value = half * kron;
  out.error = std::abs(half * (kron - gauss));
  return out;
}

// Adaptive bisection driven by the per-panel Gauss/Kronrod gap: always split
// the worst panel until the summed estimate meets max(abs_tol, rel_tol*|I|).
// Non-convergence within the subdivision budget is an error carrying the
// achieved estimate, never a silent truncation.
template <typename F>
auto integrate(F&& f, double a, double b, const QuadOptions& opt = {}) {
  using V = typename PanelResult<F>::value_type;
  struct Panel {
    double a, b, error;
    V value;
  };
  std::vector<Panel> panels;
  {
    auto p = gk15_panel(f, a, b);
    panels.push_back({a, b, p.error, p.value});
  }
  for (int iter = 0;; ++iter) {
    V total{};
    double err = 0.0;
    std::size_t worst = 0;
    for (std::size_t i = 0; i < panels.size(); ++i) {
      total += panels[i].value;
      err += panels[i].error;
      if (panels[i].error > panels[worst].error) worst = i;
    }
    if (err <= std::max(opt.abs_tol, opt.rel_tol * std::abs(total)))
      return total;
    if (iter >= opt.max_subdivisions) {
      std::ostringstream msg;
      msg << "integrate: failed to converge on [" << a << ", " << b
          << "]; error estimate " << err << " after " << panels.size()
          << " panels";
      throw std::runtime_error(msg.str());
    }
    const Panel w = panels[worst];
    const double m = 0.5 * (w.a + w.b);
    auto left = gk15_panel(f, w.a, m);
    auto right = gk15_panel(f, m, w.b);
    panels[worst] = {w.a, m, left.error, left.value};
    panels.push_back({m, w.b, right.error, right.value});
  }
}

// Levin u-transform limit of the series sum_{j>=0} term(j). The remainder
// model omega_j = (beta + j) a_j with beta = 1 suits slowly decaying
// oscillatory tails (partial sums approach the limit like a mixture of
// geometric phases with algebraic envelopes). Terms are requested one at a
// time; the order-n estimate uses rows 0..n of the classic formula
//   L_n = [sum_j (-1)^j C(n,j) ((1+j)/(1+n))^{n-1} S_j / omega_j] /
//         [sum_j (-1)^j C(n,j) ((1+j)/(1+n))^{n-1}  1  / omega_j].
// Successive estimates within tol of each other declare convergence. Orders
// much past twenty mostly amplify rounding noise in the terms, so when the
// budget runs out the best-settled estimate is still accepted if its
// neighboring orders agreed to within 10 tol; a genuine failure throws with
// the achieved residual. A vanishing term means the series ended and the
// partial sum is exact.
template <typename TermFn>
std::complex<double> levin_sum(TermFn&& term, double tol = 1e-12,
                               int max_terms = 30) {
  using C = std::complex<double>;
  std::vector<C> terms;
  std::vector<C> sums;
  C prev{};
  bool have_prev = false;
  C best_est{};
  double best = std::numeric_limits<double>::infinity();
  for (int n = 0; n < max_terms; ++n) {
    const C a = term(n);
    terms.push_back(a);
    sums.push_back(n == 0 ? a : sums.back() + a);
    if (std::abs(a) == 0.0) return sums.back();
    // Pascal row C(n, j), exact in double well past the term cap.
    std::vector<double> binom(static_cast<std::size_t>(n) + 1, 1.0);
    for (int j = 1; j <= n; ++j)
      for (int i = j - 1; i >= 1; --i) binom[i] += binom[i - 1];
    C num{};
    C den{};
    for (int j = 0; j <= n; ++j) {
      const double ratio =
          std::pow((1.0 + j) / (1.0 + n), n - 1);
      const double sgn = (j % 2 == 0) ? 1.0 : -1.0;
      const C omega = (1.0 + j) * terms[j];
      const C common = sgn * binom[j] * ratio / omega;
      num += common * sums[j];
      den += common;
    }
    const C est = num / den;
    // A low order can hit an exactly cancelling denominator (est overflows to
    // inf/nan); such an order carries no information, and comparing against
    // it would poison the convergence test -- inf <= inf holds. Skip it.
    if (!std::isfinite(est.real()) || !std::isfinite(est.imag())) {
      have_prev = false;
      continue;
    }
    if (have_prev) {
      const double diff = std::abs(est - prev);
      if (diff < best) {
        best = diff;
        best_est = est;
      }
      if (diff <= tol * (1.0 + std::abs(est))) return est;
    }
    prev = est;
    have_prev = true;
  }
  if (best <= 10.0 * tol * (1.0 + std::abs(best_est))) return best_est;
  std::ostringstream msg;
  msg << "levin_sum: series acceleration failed to converge; best residual "
      << best << " after " << max_terms << " terms";
  throw std::runtime_error(msg.str());
}

}  // namespace isingqsp
