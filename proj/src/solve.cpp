#include "isingqsp/solve.hpp"

#include "isingqsp/rng.hpp"

#include <Eigen/Core>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <sstream>

namespace isingqsp {
namespace {

using cld = std::complex<long double>;

constexpr double kParityTol = 1e-12;
constexpr double kBoundSlack = 1e-9;
constexpr double kCircleBand = 1e-7;  // radial band treated as "on the circle"
constexpr double kClusterTol = 1e-3;  // angular width of a circle-root cluster

// ===== spectral completion =====
//
// Needs real b, e with b^2 + (1 - x^2) e^2 = N(x), N = 1 - f^2 >= 0. On the
// unit circle z = e^{ik} the combination c(z) = b(cos k) + (z - 1/z)/2 e(cos k)
// satisfies c(z) c(1/z) = N(cos k), so a spectral factor of the Laurent
// polynomial t(z) = N((z + 1/z)/2) delivers the pair. Roots of z^D t(z) come
// in {rho, 1/rho} pairs with circle roots of even multiplicity; one member of
// each pair goes into the factor.

std::optional<Completion> try_complete(const std::vector<double>& sf,
                                       int frame_parity) {
  std::vector<double> n = cheb_mul(sf, sf);
  for (double& v : n) v = -v;
  if (n.empty()) n.resize(1, 0.0);
  n[0] += 1.0;
  for (std::size_t j = 1; j < n.size(); j += 2) n[j] = 0.0;  // N is even in x
  double nmax = 0.0;
  for (double v : n) nmax = std::max(nmax, std::abs(v));

  Completion out;
  if (nmax <= 1e-14) {  // |f| == 1 identically; nothing to add
    out.residual = nmax;
    return out;
  }
  cheb_trim(n, 1e-14);
  if ((n.size() - 1) % 2 == 1) n.pop_back();
  const std::size_t D = n.size() - 1;

  if (D == 0) {
    if (n[0] <= 0.0) return std::nullopt;
    const double r = std::sqrt(n[0]);
    if (frame_parity == 0) {
      out.b = {r};
    } else {  // constant defect in an odd frame splits across b = r x, e = r
      out.b = {0.0, r};
      out.e = {r};
    }
    return out;
  }

  // Roots of N in x from the Chebyshev comrade pencil A v = x B v: D x D,
  // native to the basis, and free of any division by the leading coefficient.
  // N can end in a coefficient many orders below its peak (e.g. the square of
  // a series whose own tail is small), and folding 1/n[D] into a plain
  // colleague matrix then poisons every root; the pencil keeps entries at the
  // scale of the coefficients and shunts the deficiency into eigenvalues at
  // infinity. Each finite x-root xi maps to the z-pair z = xi +- sqrt(xi^2-1)
  // with product exactly 1, so the {rho, 1/rho} symmetry of z^D N((z + 1/z)/2)
  // is structural, not numerical; an infinite xi is the collapsed pair
  // {0, inf}, whose inside member is z = 0.
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(D, D);
  Eigen::MatrixXd B = Eigen::MatrixXd::Identity(D, D);
  A(1, 0) = 1.0;  // x T_0 = T_1; D >= 2 since N is even
  for (std::size_t j = 1; j + 1 < D; ++j) {
    A(j - 1, j) = 0.5;
    A(j + 1, j) = 0.5;
  }
  for (std::size_t i = 0; i < D; ++i) A(i, D - 1) -= 0.5 * n[i];
  A(D - 2, D - 1) += 0.5 * n[D];
  B(D - 1, D - 1) = n[D];
  // GeneralizedEigenSolver cannot be queried safely after a failed
  // decomposition, so probe convergence on a bare RealQZ first (it always
  // initializes, whatever the outcome).
  const bool qz_ok =
      Eigen::RealQZ<Eigen::MatrixXd>(A, B, false).info() == Eigen::Success;
  std::vector<cplx> xroots;
  xroots.reserve(D);
  if (qz_ok) {
    Eigen::GeneralizedEigenSolver<Eigen::MatrixXd> es(A, B, false);
    if (es.info() != Eigen::Success) return std::nullopt;
    for (Eigen::Index i = 0; i < es.alphas().size(); ++i)
      xroots.push_back(es.alphas()(i) / cplx(es.betas()(i), 0.0));
  } else if (std::abs(n[D]) >= 1e-9 * std::max(1.0, nmax)) {
    // The QZ iteration can stall outright on healthy pencils. When the
    // leading coefficient is large enough that folding it into the last
    // column cannot poison the moderate roots, retry as a plain colleague
    // matrix under the ordinary Schur solver, which does not share the
    // stall. Far roots lose absolute accuracy to the division, but they map
    // to z near 0 where the factor barely feels them, and the defect check
    // below rejects any real damage.
    Eigen::MatrixXd M = A;
    M.col(static_cast<Eigen::Index>(D - 1)) /= n[D];
    Eigen::EigenSolver<Eigen::MatrixXd> es(M, false);
    if (es.info() != Eigen::Success) return std::nullopt;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
      xroots.push_back(es.eigenvalues()(i));
  } else {
    return std::nullopt;
  }

  // Pick the inside-the-circle member of each split pair. An x-root whose
  // pair hugs the circle sits on [-1, 1]: those come from even-order touching
  // zeros (select half a conjugate pair per copy, at the cluster centroid) or
  // odd-order endpoint zeros (z = +-1 once per copy).
  std::vector<cplx> selected;
  selected.reserve(D);
  std::vector<double> segment;
  for (const cplx& xi : xroots) {
    if (!std::isfinite(std::abs(xi))) {  // eigenvalue at infinity
      selected.push_back(cplx(0.0, 0.0));
      continue;
    }
    const cplx w = std::sqrt(xi * xi - cplx(1.0, 0.0));
    const cplx zb = std::abs(xi + w) >= std::abs(xi - w) ? xi + w : xi - w;
    const cplx zs = cplx(1.0, 0.0) / zb;
    if (std::abs(zs) < 1.0 - kCircleBand)
      selected.push_back(zs);
    else
      segment.push_back(xi.real());
  }
  std::sort(segment.begin(), segment.end());
  std::vector<std::pair<double, std::size_t>> clusters;  // mean abscissa, count
  for (const double xr : segment) {
    if (!clusters.empty()) {
      auto& [mean, cnt] = clusters.back();
      if (std::abs(xr - mean) <= kClusterTol) {
        mean += (xr - mean) / static_cast<double>(cnt + 1);
        ++cnt;
        continue;
      }
    }
    clusters.emplace_back(xr, 1);
  }
  constexpr double kEndpointTol = 1e-6;
  for (const auto& [mean, cnt] : clusters) {
    if (std::abs(mean) >= 1.0 - kEndpointTol) {
      for (std::size_t c = 0; c < cnt; ++c)
        selected.push_back(cplx(mean > 0.0 ? 1.0 : -1.0, 0.0));
    } else {
      const double ang = std::acos(std::clamp(mean, -1.0, 1.0));
      for (std::size_t c = 0; c < cnt / 2; ++c) {
        selected.push_back(std::polar(1.0, ang));
        selected.push_back(std::polar(1.0, -ang));
      }
    }
  }
  if (selected.size() != D) return std::nullopt;

  // Expand the factor a(z) = prod (z - rho); real coefficients by symmetry.
  std::vector<cld> acc{cld(1.0L, 0.0L)};
  for (const cplx& rho : selected) {
    acc.push_back(cld(0.0L, 0.0L));
    const cld r(rho.real(), rho.imag());
    for (std::size_t j = acc.size(); j-- > 1;) acc[j] = acc[j - 1] - r * acc[j];
    acc[0] = -r * acc[0];
  }
  std::vector<long double> ar(D + 1);
  for (std::size_t j = 0; j <= D; ++j) ar[j] = acc[j].real();

  const auto factor_mod2 = [&](double k) -> long double {
    const cld z(std::cos(k), std::sin(k));
    cld h(0.0L, 0.0L);
    for (std::size_t j = D + 1; j-- > 0;) h = h * z + cld(ar[j], 0.0L);
    return h.real() * h.real() + h.imag() * h.imag();
  };

  // t(z) = kappa a(z) a(1/z) on the circle for one positive constant; fit it
  // by least squares over sample angles, then check the defect densely.
  long double num = 0.0L, den = 0.0L;
  const std::size_t m0 = 2 * D + 9;
  for (std::size_t j = 0; j < m0; ++j) {
    const double k = kPi * (static_cast<double>(j) + 0.5) / static_cast<double>(m0);
    const long double w = factor_mod2(k);
    num += static_cast<long double>(cheb_eval(n, std::cos(k))) * w;
    den += w * w;
  }
  if (!(den > 0.0L)) return std::nullopt;
  const long double kappa = num / den;
  if (!(kappa > 0.0L)) return std::nullopt;

  double defect = 0.0;
  const std::size_t m1 = 4 * D + 17;
  for (std::size_t j = 0; j < m1; ++j) {
    const double k = kPi * (static_cast<double>(j) + 0.5) / static_cast<double>(m1);
    const double diff = static_cast<double>(
        static_cast<long double>(cheb_eval(n, std::cos(k))) - kappa * factor_mod2(k));
    defect = std::max(defect, std::abs(diff));
  }
  // Loose on purpose: companion eigenvalues of tightly clustered circle roots
  // smear by far more than the final accuracy we need, and a structurally
  // wrong factor selection overshoots this threshold by orders of magnitude.
  // Residual accuracy is recovered downstream (verification plus descent).
  if (defect > 1e-3 * std::max(1.0, nmax)) return std::nullopt;

  // c(z) = sqrt(kappa) z^{-h} a(z): symmetric part -> b, antisymmetric -> e.
  const std::size_t h = D / 2;
  const long double sq = std::sqrt(kappa);
  out.b.assign(h + 1, 0.0);
  out.b[0] = static_cast<double>(sq * ar[h]);
  for (std::size_t m = 1; m <= h; ++m) {
    out.b[m] = static_cast<double>(sq * (ar[h + m] + ar[h - m]));
    const double diff = static_cast<double>(sq * (ar[h + m] - ar[h - m]));
    cheb_add_u(out.e, m, diff);
  }
  for (std::size_t j = 0; j < out.b.size(); ++j)
    if (static_cast<int>(j % 2) != frame_parity) out.b[j] = 0.0;
  for (std::size_t j = 0; j < out.e.size(); ++j)
    if (static_cast<int>(j % 2) == frame_parity) out.e[j] = 0.0;
  out.residual = defect;
  return out;
}

template <class V>
cld at_or_zero(const V& v, std::size_t j) {
  return j < v.size() ? v[j] : cld(0.0L, 0.0L);
}

double verify(const CanonicalPhases& c, const std::vector<double>& sf,
              std::size_t pts) {
  double worst = 0.0;
  for (std::size_t j = 0; j < pts; ++j) {
    const double k = kPi * static_cast<double>(j) / static_cast<double>(pts - 1);
    const cplx resp = plus_expectation(qsp_canonical(k, c));
    worst = std::max(worst, std::abs(resp - cheb_eval(sf, std::cos(k))));
  }
  const PolyPair pq = extract_poly(c);
  for (std::size_t j = 0; j < sf.size(); ++j)
    worst = std::max(worst, std::abs(pq.P[j].real() - sf[j]));
  return worst;
}

// ===== iterative fallback =====

struct Samples {
  std::vector<double> k;
  std::vector<double> f;
};

struct ObjEval {
  double value = 0.0;
  Eigen::VectorXd grad;
};

ObjEval objective(const Eigen::VectorXd& phi, const Samples& smp) {
  const std::size_t d = static_cast<std::size_t>(phi.size()) - 1;
  ObjEval out;
  out.grad = Eigen::VectorXd::Zero(phi.size());
  std::vector<Mat2> L(d + 1), S(d + 1);
  for (std::size_t j = 0; j < smp.k.size(); ++j) {
    const Mat2 X = xrot(-smp.k[j]);
    L[0] = zrot(phi(0));
    for (std::size_t r = 1; r <= d; ++r) L[r] = L[r - 1] * X * zrot(phi(r));
    S[d] = Mat2::Identity();
    for (std::size_t r = d; r-- > 0;) S[r] = X * zrot(phi(r + 1)) * S[r + 1];
    const cplx w = plus_expectation(L[d]) - smp.f[j];
    out.value += std::norm(w);
    for (std::size_t r = 0; r <= d; ++r) {
      Mat2 t = L[r];
      t.col(0) *= cplx(0, 1);
      t.col(1) *= cplx(0, -1);
      const cplx dresp = plus_expectation(t * S[r]);
      out.grad(static_cast<Eigen::Index>(r)) += 2.0 * std::real(std::conj(w) * dresp);
    }
  }
  return out;
}

std::pair<Eigen::VectorXd, double> lbfgs(Eigen::VectorXd x, const Samples& smp,
                                         int iters) {
  constexpr std::size_t kHist = 10;
  std::vector<Eigen::VectorXd> sv, yv;
  std::vector<double> rho;
  ObjEval cur = objective(x, smp);
  for (int it = 0; it < iters; ++it) {
    if (cur.grad.lpNorm<Eigen::Infinity>() <= 1e-13 || cur.value <= 1e-26) break;
    Eigen::VectorXd q = cur.grad;
    std::vector<double> alpha(sv.size());
    for (std::size_t i = sv.size(); i-- > 0;) {
      alpha[i] = rho[i] * sv[i].dot(q);
      q -= alpha[i] * yv[i];
    }
    if (!sv.empty()) {
      const double ys = yv.back().squaredNorm();
      if (ys > 0.0) q *= sv.back().dot(yv.back()) / ys;
    }
    for (std::size_t i = 0; i < sv.size(); ++i) {
      const double beta = rho[i] * yv[i].dot(q);
      q += (alpha[i] - beta) * sv[i];
    }
    Eigen::VectorXd dir = -q;
    double dg = dir.dot(cur.grad);
    if (!(dg < 0.0)) {
      dir = -cur.grad;
      dg = -cur.grad.squaredNorm();
      sv.clear();
      yv.clear();
      rho.clear();
    }
    double t = 1.0;
    bool ok = false;
    ObjEval nxt;
    for (int hcount = 0; hcount < 50; ++hcount) {
      nxt = objective(x + t * dir, smp);
      if (nxt.value <= cur.value + 1e-4 * t * dg) {
        ok = true;
        break;
      }
      t *= 0.5;
    }
    if (!ok) break;
    const Eigen::VectorXd xn = x + t * dir;
    const Eigen::VectorXd step = xn - x;
    const Eigen::VectorXd dgrad = nxt.grad - cur.grad;
    const double sy = step.dot(dgrad);
    if (sy > 1e-18) {
      sv.push_back(step);
      yv.push_back(dgrad);
      rho.push_back(1.0 / sy);
      if (sv.size() > kHist) {
        sv.erase(sv.begin());
        yv.erase(yv.begin());
        rho.erase(rho.begin());
      }
    }
    x = xn;
    cur = nxt;
  }
  return {x, cur.value};
}

}  // namespace

Completion complete_target(const std::vector<double>& f_cheb, int frame_parity) {
  if (f_cheb.empty())
    throw std::invalid_argument("complete_target: empty target");
  std::vector<double> f = f_cheb;
  cheb_trim(f, 1e-14);
  auto comp = try_complete(f, frame_parity);
  if (!comp)
    throw std::runtime_error("complete_target: spectral factorization failed");
  return *comp;
}

std::vector<double> strip_phases(std::vector<cplx> Pd, std::vector<cplx> Qd,
                                 std::size_t d) {
  std::vector<cld> P(d + 1, cld(0.0L, 0.0L)), Q(d, cld(0.0L, 0.0L));
  for (std::size_t j = 0; j < P.size() && j < Pd.size(); ++j)
    P[j] = cld(Pd[j].real(), Pd[j].imag());
  for (std::size_t j = 0; j < Q.size() && j < Qd.size(); ++j)
    Q[j] = cld(Qd[j].real(), Qd[j].imag());

  std::vector<double> phi(d + 1, 0.0);
  for (std::size_t r = d; r >= 1; --r) {
    const cld pl = P[r];
    const cld ql = Q[r - 1];
    long double a = 0.0L;
    // Leading coefficients vanish together when the pair is degree-deficient
    // (deficiency is even by parity); a zero phase then just shrinks the frame.
    if (std::max(std::abs(pl), std::abs(ql)) > 1e-13L && std::abs(ql) > 0.0L)
      a = 0.5L * std::arg(-pl / ql);
    phi[r] = static_cast<double>(a);
    const cld em(std::cos(a), -std::sin(a));  // e^{-i phi_r}
    const cld ep = std::conj(em);
    const auto xP = cheb_mul_x(P);
    const auto xQ = cheb_mul_x(Q);
    const auto x2Q = cheb_mul_x(xQ);
    // V_{r-1} = V_r e^{-i phi_r sz} e^{+i k sx}:
    //   P' = x P e^{-i phi} - (1 - x^2) Q e^{+i phi}
    //   Q' = P e^{-i phi} + x Q e^{+i phi}
    // The chosen phi cancels both top coefficients; parity kills the next.
    std::vector<cld> nP(r, cld(0.0L, 0.0L));
    std::vector<cld> nQ(r - 1, cld(0.0L, 0.0L));
    for (std::size_t j = 0; j < nP.size(); ++j)
      nP[j] = em * at_or_zero(xP, j) - ep * (at_or_zero(Q, j) - at_or_zero(x2Q, j));
    for (std::size_t j = 0; j < nQ.size(); ++j)
      nQ[j] = em * at_or_zero(P, j) + ep * at_or_zero(xQ, j);
    P = std::move(nP);
    Q = std::move(nQ);
  }
  phi[0] = static_cast<double>(std::arg(P[0]));
  return phi;
}

SolveResult solve_phases(const std::vector<double>& target,
                         const SolveOptions& opts) {
  if (target.empty())
    throw std::invalid_argument("solve_phases: empty target");
  const std::size_t d = target.size() - 1;
  const int parity = static_cast<int>(d % 2);
  for (std::size_t j = 0; j < target.size(); ++j) {
    if (static_cast<int>(j % 2) != parity && std::abs(target[j]) > kParityTol) {
      std::ostringstream msg;
      msg << "solve_phases: target must have the parity of its degree; "
          << "offending T_" << j << " coefficient " << target[j];
      throw std::invalid_argument(msg.str());
    }
  }
  const ChebSup sup =
      cheb_sup(target, std::max<std::size_t>(2000, 16 * (d + 1)));
  if (sup.value > 1.0 + kBoundSlack) {
    std::ostringstream msg;
    msg << "solve_phases: target is not bounded by 1: |f(" << sup.at
        << ")| = " << sup.value;
    throw std::invalid_argument(msg.str());
  }
  const double s0 = 1.0 / std::max(1.0, sup.value);

  double best_res = std::numeric_limits<double>::infinity();
  CanonicalPhases best_c;
  std::string best_route = "spectral";

  const auto make_samples = [d](const std::vector<double>& sf) {
    Samples smp;
    const std::size_t m = 4 * (d + 1);
    for (std::size_t j = 0; j < m; ++j) {
      const double k =
          kPi * (static_cast<double>(j) + 0.5) / static_cast<double>(m);
      smp.k.push_back(k);
      smp.f.push_back(cheb_eval(sf, std::cos(k)));
    }
    return smp;
  };

  // Exact completion first; if the factorization chokes (targets touching the
  // unit bound can), retreat a hair from the bound and try again. Each rung
  // that yields a near-miss seed gets a quasi-Newton polish against that
  // rung's rescaled target before any further retreat, since retreat costs
  // accuracy against the caller's original target.
  for (const double eta : {0.0, 1e-12, 1e-9, 1e-6, 1e-3}) {
    const double s = s0 * (1.0 - eta);
    std::vector<double> sf = target;
    for (double& v : sf) v *= s;
    std::vector<double> sft = sf;
    cheb_trim(sft, 1e-14);
    const auto comp = try_complete(sft, parity);
    if (!comp) continue;
    std::vector<cplx> P(d + 1, cplx(0, 0)), Q(d, cplx(0, 0));
    for (std::size_t j = 0; j <= d; ++j)
      P[j] = cplx(sf[j], j < comp->b.size() ? comp->b[j] : 0.0);
    for (std::size_t j = 0; j < d; ++j)
      Q[j] = cplx(0.0, j < comp->e.size() ? comp->e[j] : 0.0);
    CanonicalPhases c{strip_phases(std::move(P), std::move(Q), d)};
    const double res = verify(c, sf, opts.check_points);
    if (res < best_res) {
      best_res = res;
      best_c = c;
      best_route = "spectral";
    }
    if (res <= opts.residual_tol)
      return {c, s, res, "spectral"};
    if (res <= 1e-2) {
      const Samples smp = make_samples(sf);
      Eigen::VectorXd x0(static_cast<Eigen::Index>(d + 1));
      for (std::size_t j = 0; j <= d; ++j)
        x0(static_cast<Eigen::Index>(j)) = c.Phi[j];
      const auto [xf, val] = lbfgs(std::move(x0), smp, opts.max_iterations);
      (void)val;
      CanonicalPhases cp;
      cp.Phi.assign(xf.data(), xf.data() + xf.size());
      const double res2 = verify(cp, sf, opts.check_points);
      if (res2 < best_res) {
        best_res = res2;
        best_c = cp;
        best_route = "iterative";
      }
      if (res2 <= opts.residual_tol)
        return {cp, s, res2, "iterative"};
    }
  }

  // Cold quasi-Newton descent on the phases themselves.
  const double s = s0 * (1.0 - 1e-9);
  std::vector<double> sf = target;
  for (double& v : sf) v *= s;
  const Samples smp = make_samples(sf);
  for (int attempt = 0; attempt < std::max(1, opts.restarts); ++attempt) {
    Eigen::VectorXd x0 = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(d + 1));
    if (attempt == 0 && std::isfinite(best_res)) {
      for (std::size_t j = 0; j <= d; ++j)
        x0(static_cast<Eigen::Index>(j)) = best_c.Phi[j];
    } else if (attempt > 0) {
      Rng rng(opts.seed + static_cast<std::uint64_t>(attempt));
      for (std::size_t j = 0; j <= d; ++j)
        x0(static_cast<Eigen::Index>(j)) = 0.4 * (rng.uniform() - 0.5);
    }
    const auto [xf, val] = lbfgs(std::move(x0), smp, opts.max_iterations);
    (void)val;
    CanonicalPhases c;
    c.Phi.assign(xf.data(), xf.data() + xf.size());
    const double res = verify(c, sf, opts.check_points);
    if (res < best_res) {
      best_res = res;
      best_c = c;
      best_route = "iterative";
    }
    if (res <= opts.residual_tol)
      return {c, s, res, "iterative"};
  }

  std::ostringstream msg;
  msg << "solve_phases: no phase sequence found within tolerance; best residual "
      << best_res << " via " << best_route;
  throw std::runtime_error(msg.str());
}

}  // namespace isingqsp
