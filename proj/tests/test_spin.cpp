#include "isingqsp/spin.hpp"

#include "doctest.h"

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <sstream>
#include <vector>

#include "isingqsp/rng.hpp"

using namespace isingqsp;

namespace {
PhaseProgram random_program(Rng& rng, std::size_t d) {
  PhaseProgram p;
  p.theta = rng.uniform(-std::numbers::pi, std::numbers::pi);
  p.phi.resize(d + 1);
  for (auto& v : p.phi) v = rng.uniform(-std::numbers::pi, std::numbers::pi);
  return p;
}
}  // namespace

TEST_CASE("basic state plumbing") {
  const auto s = make_all_up(3);
  REQUIRE(s.amp.size() == 8);
  CHECK(std::abs(inner(s, s) - cplx(1, 0)) < 1e-15);
  CHECK(parity_expectation(s) == doctest::Approx(1.0));

  // flipping one spin flips the parity
  DenseState one = s;
  one.amp.setZero();
  one.amp[1] = 1.0;  // site 1 down
  CHECK(parity_expectation(one) == doctest::Approx(-1.0));

  // cyclic shift permutes basis labels and preserves norms
  DenseState shifted = cyclic_shift(one);
  CHECK(std::abs(shifted.amp[2]) == doctest::Approx(1.0));
  CHECK(std::abs(inner(shifted, shifted) - cplx(1, 0)) < 1e-15);
}

TEST_CASE("field factor phases each basis state by its magnetization") {
  DenseState s = make_all_up(2);
  s.amp.setZero();
  s.amp[0] = 0.5;  // both up: e^{2 i phi}
  s.amp[3] = 0.5;  // both down: e^{-2 i phi}
  apply_field(s, 0.7);
  CHECK(std::abs(s.amp[0] - 0.5 * std::exp(cplx(0, 1.4))) < 1e-15);
  CHECK(std::abs(s.amp[3] - 0.5 * std::exp(cplx(0, -1.4))) < 1e-15);
}

TEST_CASE("two-site coupling applies its single bond twice") {
  DenseState s = make_all_up(2);
  apply_coupling(s, 0.3);
  // e^{2 i theta XX} |uu> = cos(0.6)|uu> + i sin(0.6)|dd>
  CHECK(std::abs(s.amp[0] - cplx(std::cos(0.6), 0)) < 1e-14);
  CHECK(std::abs(s.amp[3] - cplx(0, std::sin(0.6))) < 1e-14);
}

TEST_CASE("dense evolution matches the momentum-block prediction") {
  Rng rng(307);
  for (int N : {4, 6, 8}) {
    for (int trial = 0; trial < 6; ++trial) {
      const auto prog = random_program(rng, 1 + rng.index(6));
      DenseState s = make_all_up(N);
      qsp_spin(s, prog);
      const cplx dense = inner(make_all_up(N), s);
      const cplx block = predict_vacuum_amplitude(prog, N);
      CHECK(std::abs(std::abs(dense) - std::abs(block)) < 2e-15);
    }
  }
}

TEST_CASE("survival amplitude agrees in full complex value, not just modulus") {
  // Pinned regression: the boundary convention makes the dense amplitude and
  // the block product agree as complex numbers for these draws.
  Rng rng(55);
  for (int N : {4, 6, 8}) {
    for (int trial = 0; trial < 4; ++trial) {
      const auto prog = random_program(rng, 1 + rng.index(5));
      DenseState s = make_all_up(N);
      qsp_spin(s, prog);
      const cplx dense = inner(make_all_up(N), s);
      const cplx block = predict_vacuum_amplitude(prog, N);
      CHECK(std::abs(dense - block) < 2e-14);
    }
  }
}

TEST_CASE("pair-excitation overlap factorizes over momentum blocks") {
  // Pinned regression of the sign/phase convention: evolving the pair state
  // at k0 and projecting back onto the vacuum picks up the de-excitation
  // entry (1,0) of the k0 block and the vacuum-persistence entry (1,1) of
  // every other block. The reverse matrix element (vacuum in, pair out)
  // picks up (0,1) instead.
  const int N = 8;
  const auto grid = momentum_grid(N);
  const double k0 = grid.ks[1];
  PhaseProgram prog;
  prog.theta = 0.37;
  prog.phi = {0.11, -0.52, 0.29};

  const DenseState pair = two_excitation_state(N, k0);
  CHECK(std::abs(inner(pair, pair) - cplx(1, 0)) < 1e-12);
  DenseState s = pair;
  qsp_spin(s, prog);
  const cplx overlap = inner(make_all_up(N), s);

  DenseState up = make_all_up(N);
  qsp_spin(up, prog);
  const cplx reverse = inner(pair, up);

  cplx pred(1, 0), pred_rev(1, 0);
  for (double k : grid.ks) {
    const Mat2 u = qsp_momentum(k, prog);
    pred *= (k == k0) ? u(1, 0) : u(1, 1);
    pred_rev *= (k == k0) ? u(0, 1) : u(1, 1);
  }
  CHECK(std::abs(overlap - pred) < 1e-14);
  CHECK(std::abs(reverse - pred_rev) < 1e-14);
}

TEST_CASE("momentum grid covers the antiperiodic sector") {
  const auto g = momentum_grid(8);
  REQUIRE(g.ks.size() == 4);
  CHECK(g.ks[0] == doctest::Approx(std::numbers::pi / 8));
  CHECK(g.ks[3] == doctest::Approx(7 * std::numbers::pi / 8));
  CHECK_THROWS_AS(momentum_grid(7), std::invalid_argument);
  CHECK_THROWS_AS(momentum_grid(2), std::invalid_argument);
  CHECK_THROWS_AS(two_excitation_state(8, 0.123), std::invalid_argument);
}

TEST_CASE("bdg matrix assembles the stated pseudo-spin form") {
  const Mat2 h = bdg_matrix({1.0, 0.5, std::numbers::pi / 3});
  const double hz = 2.0 * (1.0 - 0.5 * std::cos(std::numbers::pi / 3));
  const double hx = 2.0 * 0.5 * std::sin(std::numbers::pi / 3);
  CHECK(h(0, 0).real() == doctest::Approx(hz));
  CHECK(h(0, 1).real() == doctest::Approx(hx));
  CHECK(std::abs(h(0, 1) - h(1, 0)) < 1e-15);
}

TEST_CASE("state IO round-trips bit for bit") {
  Rng rng(808);
  DenseState s = make_all_up(4);
  for (int i = 0; i < s.amp.size(); ++i)
    s.amp[i] = cplx(rng.uniform(-1, 1), rng.uniform(-1, 1));
  std::stringstream buf(std::ios::in | std::ios::out | std::ios::binary);
  write_state(s, buf);
  const DenseState r = read_state(buf);
  REQUIRE(r.N == 4);
  for (int i = 0; i < s.amp.size(); ++i) CHECK(r.amp[i] == s.amp[i]);
}

TEST_CASE("state IO rejects truncated and corrupt payloads") {
  DenseState s = make_all_up(3);
  std::stringstream buf(std::ios::in | std::ios::out | std::ios::binary);
  write_state(s, buf);
  std::string bytes = buf.str();
  bytes.resize(bytes.size() - 7);  // chop mid-amplitude
  std::istringstream cut(bytes, std::ios::binary);
  CHECK_THROWS_AS(read_state(cut), std::runtime_error);

  std::string garbage = "\xff\xff\xff\x7f then some text";
  std::istringstream bad(garbage, std::ios::binary);
  CHECK_THROWS_AS(read_state(bad), std::runtime_error);
}
