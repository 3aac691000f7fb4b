#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace isingqsp {

// First-kind Chebyshev series c[0] T_0 + c[1] T_1 + ...; the index of a
// coefficient is the degree of its basis element.

inline std::vector<double> cheb_nodes(std::size_t m) {
  if (m == 0) throw std::invalid_argument("cheb_nodes: need at least one node");
  std::vector<double> x(m);
  for (std::size_t j = 0; j < m; ++j)
    x[j] = std::cos((2.0 * j + 1.0) * std::numbers::pi / (2.0 * m));
  return x;
}

template <class T, class X = double>
T cheb_eval(const std::vector<T>& c, X x) {
  if (c.empty()) return T(0);
  T b1 = T(0), b2 = T(0);
  for (std::size_t i = c.size(); i-- > 1;) {
    T b0 = T(2 * x) * b1 - b2 + c[i];
    b2 = b1;
    b1 = b0;
  }
  return T(x) * b1 - b2 + c[0];
}

// Project samples taken at cheb_nodes(m) onto T_0..T_{m-1}; exact (to
// rounding) whenever the sampled function is a polynomial of degree < m.
template <class T>
std::vector<T> cheb_project(const std::vector<T>& samples) {
  const std::size_t m = samples.size();
  if (m == 0) throw std::invalid_argument("cheb_project: empty sample set");
  std::vector<T> c(m, T(0));
  for (std::size_t j = 0; j < m; ++j) {
    T acc = T(0);
    for (std::size_t i = 0; i < m; ++i)
      acc += samples[i] * T(std::cos(j * (2.0 * i + 1.0) * std::numbers::pi / (2.0 * m)));
    c[j] = acc * T((j == 0 ? 1.0 : 2.0) / static_cast<double>(m));
  }
  return c;
}

// x * (series): x T_n = (T_{n+1} + T_{n-1}) / 2, x T_0 = T_1.
template <class T>
std::vector<T> cheb_mul_x(const std::vector<T>& c) {
  std::vector<T> r(c.size() + 1, T(0));
  for (std::size_t n = 0; n < c.size(); ++n) {
    if (n == 0) {
      r[1] += c[0];
    } else {
      r[n + 1] += T(0.5) * c[n];
      r[n - 1] += T(0.5) * c[n];
    }
  }
  return r;
}

// Product of two series: T_m T_n = (T_{m+n} + T_{|m-n|}) / 2.
template <class A, class B>
auto cheb_mul(const std::vector<A>& a, const std::vector<B>& b) {
  using R = decltype(A(0) * B(0));
  if (a.empty() || b.empty()) return std::vector<R>{};
  std::vector<R> r(a.size() + b.size() - 1, R(0));
  for (std::size_t m = 0; m < a.size(); ++m) {
    for (std::size_t n = 0; n < b.size(); ++n) {
      const R half = R(0.5) * R(a[m] * b[n]);
      r[m + n] += half;
      r[(m > n) ? m - n : n - m] += half;
    }
  }
  return r;
}

template <class T>
void cheb_trim(std::vector<T>& c, double tol) {
  while (c.size() > 1 && std::abs(c.back()) <= tol) c.pop_back();
}

// Leading monomial coefficient of T_deg is 2^{deg-1} (1 for deg 0).
inline double cheb_leading_scale(std::size_t deg) {
  return deg == 0 ? 1.0 : std::ldexp(1.0, static_cast<int>(deg) - 1);
}

// Exact basis change: the recurrence T_{n+1} = 2x T_n - T_{n-1} has integer
// coefficients that fit a long double exactly through degree ~40.
template <class T>
std::vector<T> cheb_to_monomial(const std::vector<T>& c) {
  const std::size_t n = c.size();
  std::vector<T> out(n, T(0));
  if (n == 0) return out;
  std::vector<long double> tm1{1.0L};        // T_0
  std::vector<long double> t{0.0L, 1.0L};    // T_1
  out[0] += c[0];
  if (n == 1) return out;
  for (std::size_t j = 0; j < t.size(); ++j) out[j] += c[1] * T(t[j]);
  for (std::size_t deg = 2; deg < n; ++deg) {
    std::vector<long double> nxt(deg + 1, 0.0L);
    for (std::size_t j = 0; j < t.size(); ++j) nxt[j + 1] += 2.0L * t[j];
    for (std::size_t j = 0; j < tm1.size(); ++j) nxt[j] -= tm1[j];
    for (std::size_t j = 0; j <= deg; ++j) out[j] += c[deg] * T(nxt[j]);
    tm1 = std::move(t);
    t = std::move(nxt);
  }
  return out;
}

// Second-kind expansion helper: appends alpha * U_{j-1} (in the T basis) to
// acc, using U_{j-1} = 2 (T_{j-1} + T_{j-3} + ...) with a T_0 term counted
// once. j >= 1.
template <class T>
void cheb_add_u(std::vector<T>& acc, std::size_t j, const T& alpha) {
  if (j == 0) throw std::invalid_argument("cheb_add_u: j must be >= 1");
  if (acc.size() < j) acc.resize(j, T(0));
  for (std::size_t l = j - 1;; l -= 2) {
    acc[l] += T(l == 0 ? 1.0 : 2.0) * alpha;
    if (l < 2) break;
  }
}

// Horner evaluation of a monomial-basis polynomial (tests and cross-checks).
template <class T, class X = double>
T monomial_eval(const std::vector<T>& c, X x) {
  T acc = T(0);
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * T(x) + c[i];
  return acc;
}

// Accurate sup-norm of a real series over [-1, 1]. A coarse angular grid can
// undersample a between-node peak of an oscillatory series by far more than
// any unit-bound slack, so every bracketed interior maximum is polished by
// golden-section search.
struct ChebSup {
  double value = 0.0;
  double at = 1.0;  // abscissa in [-1, 1] where the sup is attained
};

inline ChebSup cheb_sup(const std::vector<double>& c, std::size_t m = 2000) {
  const auto val = [&c](double k) { return std::abs(cheb_eval(c, std::cos(k))); };
  if (m < 8) m = 8;
  const auto node = [m](std::size_t j) {
    return std::numbers::pi * static_cast<double>(j) / static_cast<double>(m);
  };
  ChebSup s;
  std::vector<double> g(m + 1);
  for (std::size_t j = 0; j <= m; ++j) {
    g[j] = val(node(j));
    if (g[j] > s.value) {
      s.value = g[j];
      s.at = std::cos(node(j));
    }
  }
  constexpr double inv_phi = 0.6180339887498949;
  for (std::size_t j = 0; j <= m; ++j) {
    // Interior brackets need a dominating center; the two edge cells are
    // always refined, since a peak just inside an endpoint hides from the
    // dominance test.
    if (j > 0 && j < m && (g[j] < g[j - 1] || g[j] < g[j + 1])) continue;
    if ((j == 0 && g[1] >= g[0]) || (j == m && g[m - 1] >= g[m])) continue;
    double a = node(j == 0 ? 0 : j - 1);
    double b = node(j == m ? m : j + 1);
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = val(x1);
    double f2 = val(x2);
    for (int it = 0; it < 80 && b - a > 1e-13; ++it) {
      if (f1 < f2) {
        a = x1;
        x1 = x2;
        f1 = f2;
        x2 = a + inv_phi * (b - a);
        f2 = val(x2);
      } else {
        b = x2;
        x2 = x1;
        f2 = f1;
        x1 = b - inv_phi * (b - a);
        f1 = val(x1);
      }
    }
    const double km = 0.5 * (a + b);
    const double vm = val(km);
    if (vm > s.value) {
      s.value = vm;
      s.at = std::cos(km);
    }
  }
  return s;
}

}  // namespace isingqsp
