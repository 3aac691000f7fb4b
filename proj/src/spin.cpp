#include "isingqsp/spin.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

namespace isingqsp {

namespace {

constexpr int kMinSites = 2;
constexpr int kMaxSites = 14;

void check_state(const DenseState& s) {
  if (s.N < kMinSites || s.N > kMaxSites)
    throw std::invalid_argument("spin state: N must lie in [2, 14], got " +
                                std::to_string(s.N));
  if (s.amp.size() != (Eigen::Index(1) << s.N))
    throw std::invalid_argument("spin state: amplitude vector has wrong length");
}

}  // namespace

DenseState make_all_up(int N) {
  DenseState s;
  s.N = N;
  if (N < kMinSites || N > kMaxSites)
    throw std::invalid_argument("make_all_up: N must lie in [2, 14], got " +
                                std::to_string(N));
  s.amp = Eigen::VectorXcd::Zero(Eigen::Index(1) << N);
  s.amp[0] = 1.0;  // all bits clear = all spins up
  return s;
}

cplx inner(const DenseState& a, const DenseState& b) {
  check_state(a);
  check_state(b);
  if (a.N != b.N) throw std::invalid_argument("inner: mismatched chain lengths");
  return a.amp.dot(b.amp);  // conjugates the first factor
}

double parity_expectation(const DenseState& s) {
  check_state(s);
  double acc = 0.0;
  for (Eigen::Index b = 0; b < s.amp.size(); ++b) {
    const double w = std::norm(s.amp[b]);
    acc += (std::popcount(static_cast<unsigned>(b)) & 1) ? -w : w;
  }
  return acc;
}

DenseState cyclic_shift(const DenseState& s) {
  check_state(s);
  const unsigned n = static_cast<unsigned>(s.N);
  const unsigned full = (1u << n) - 1u;
  DenseState out;
  out.N = s.N;
  out.amp.resize(s.amp.size());
  for (Eigen::Index b = 0; b < s.amp.size(); ++b) {
    const unsigned ub = static_cast<unsigned>(b);
    const unsigned rot = ((ub << 1) | (ub >> (n - 1))) & full;
    out.amp[rot] = s.amp[b];
  }
  return out;
}

void apply_field(DenseState& s, double phi) {
  check_state(s);
  // e^{i phi (N - 2 c)} where c counts down spins (set bits).
  std::vector<cplx> table(s.N + 1);
  for (int c = 0; c <= s.N; ++c)
    table[c] = std::exp(cplx(0.0, phi * (s.N - 2 * c)));
  for (Eigen::Index b = 0; b < s.amp.size(); ++b)
    s.amp[b] *= table[std::popcount(static_cast<unsigned>(b))];
}

void apply_coupling(DenseState& s, double theta) {
  check_state(s);
  const cplx c(std::cos(theta), 0.0);
  const cplx is(0.0, std::sin(theta));
  const Eigen::Index dim = s.amp.size();
  for (int j = 0; j < s.N; ++j) {
    const unsigned bj = 1u << j;
    const unsigned bj1 = 1u << ((j + 1) % s.N);
    const unsigned mask = bj | bj1;
    const unsigned high = bj > bj1 ? bj : bj1;
    for (Eigen::Index b = 0; b < dim; ++b) {
      if (static_cast<unsigned>(b) & high) continue;  // visit each pair once
      const Eigen::Index b2 = static_cast<Eigen::Index>(static_cast<unsigned>(b) ^ mask);
      const cplx a0 = s.amp[b];
      const cplx a1 = s.amp[b2];
      s.amp[b] = c * a0 + is * a1;
      s.amp[b2] = c * a1 + is * a0;
    }
  }
}

void qsp_spin(DenseState& s, const PhaseProgram& prog) {
  const std::size_t d = prog.degree();
  for (std::size_t r = d; r >= 1; --r) {
    apply_field(s, prog.phi[r]);
    apply_coupling(s, prog.theta);
  }
  apply_field(s, prog.phi[0]);
}

void qsp_spin_dual(DenseState& s, const PhaseProgram& prog) {
  const std::size_t d = prog.degree();
  for (std::size_t r = d; r >= 1; --r) {
    apply_coupling(s, prog.phi[r]);
    apply_field(s, prog.theta);
  }
  apply_coupling(s, prog.phi[0]);
}

MomentumGrid momentum_grid(int N) {
  if (N < 4 || N > kMaxSites || N % 2 != 0)
    throw std::invalid_argument(
        "momentum_grid: only even chains with 4 <= N <= 14 are supported, got " +
        std::to_string(N));
  MomentumGrid g;
  g.N = N;
  g.ks.reserve(N / 2);
  for (int m = 1; m <= N / 2; ++m) g.ks.push_back((2 * m - 1) * kPi / N);
  return g;
}

Mat2 bdg_matrix(const BdGParams& p) {
  const double dz = 2.0 * (p.g - p.J * std::cos(p.k));
  const double dx = 2.0 * p.J * std::sin(p.k);
  Mat2 m;
  m << cplx(dz, 0.0), cplx(dx, 0.0), cplx(dx, 0.0), cplx(-dz, 0.0);
  return m;
}

cplx predict_vacuum_amplitude(const PhaseProgram& prog, int N) {
  const MomentumGrid grid = momentum_grid(N);
  cplx acc(1.0, 0.0);
  for (const double k : grid.ks) acc *= qsp_momentum(k, prog)(1, 1);
  return acc;
}

DenseState two_excitation_state(int N, double k0) {
  const MomentumGrid grid = momentum_grid(N);
  bool on_grid = false;
  for (const double k : grid.ks)
    if (std::abs(k - k0) <= 1e-12) on_grid = true;
  if (!on_grid)
    throw std::invalid_argument(
        "two_excitation_state: k0 is not a positive grid momentum of this chain");

  DenseState s;
  s.N = N;
  s.amp = Eigen::VectorXcd::Zero(Eigen::Index(1) << N);
  const double pref = -2.0 / N;
  for (int i = 0; i < N; ++i)
    for (int j = i + 1; j < N; ++j) {
      const Eigen::Index idx = (Eigen::Index(1) << i) | (Eigen::Index(1) << j);
      s.amp[idx] = pref * std::sin(k0 * (j - i));
    }
  s.amp /= s.amp.norm();  // analytically unit already; scrub rounding
  return s;
}

void write_state(const DenseState& s, std::ostream& os) {
  static_assert(std::endian::native == std::endian::little,
                "state interchange assumes a little-endian host");
  check_state(s);
  const std::uint32_t n = static_cast<std::uint32_t>(s.N);
  os.write(reinterpret_cast<const char*>(&n), sizeof n);
  for (Eigen::Index b = 0; b < s.amp.size(); ++b) {
    const double re = s.amp[b].real();
    const double im = s.amp[b].imag();
    os.write(reinterpret_cast<const char*>(&re), sizeof re);
    os.write(reinterpret_cast<const char*>(&im), sizeof im);
  }
  if (!os) throw std::runtime_error("write_state: stream failure");
}

DenseState read_state(std::istream& is) {
  static_assert(std::endian::native == std::endian::little,
                "state interchange assumes a little-endian host");
  std::uint32_t n = 0;
  is.read(reinterpret_cast<char*>(&n), sizeof n);
  if (!is || n < kMinSites || n > kMaxSites)
    throw std::runtime_error("read_state: bad or truncated header");
  DenseState s;
  s.N = static_cast<int>(n);
  s.amp.resize(Eigen::Index(1) << s.N);
  for (Eigen::Index b = 0; b < s.amp.size(); ++b) {
    double re = 0.0, im = 0.0;
    is.read(reinterpret_cast<char*>(&re), sizeof re);
    is.read(reinterpret_cast<char*>(&im), sizeof im);
    s.amp[b] = cplx(re, im);
  }
  if (!is) throw std::runtime_error("read_state: truncated amplitude payload");
  return s;
}

}  // namespace isingqsp
