#include <doctest.h>

#include <cmath>
#include <random>

#include "pwig/oracle.hpp"
#include "pwig/spinor.hpp"
#include "pwig/verify.hpp"

using namespace pwig;
using spinor::Sign;

namespace {
const QuasiMomentumGrid g64(Period::TwoPi, 64);
}

TEST_CASE("canonical parameters satisfy every constraint") {
  const auto p = spinor::Params::canonical();
  CHECK(p.violations().empty());
  CHECK(p.A[1][0] == 0.0);
  CHECK(p.C[1][1] == 1.0);
  CHECK(p.C[0][1] == 0.0);
  CHECK(p.c == -0.25);
  CHECK(p.a_norm == 1.0);
  CHECK(p.d_norm == 8.0);
}

TEST_CASE("constraint violations are named") {
  auto p = spinor::Params::canonical();
  p.b += 0.1;
  const auto bad = p.violations();
  REQUIRE(bad.size() == 1);
  CHECK(bad[0] == "b - c = 1/2");
  CHECK_THROWS_AS(spinor::spinor_wigner(LatticeState::position(0, -2, 2), g64, p), PhaseSpaceError);
}

TEST_CASE("solver output is valid for arbitrary free coefficients") {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(-2, 2);
  for (int i = 0; i < 20; ++i) CHECK(spinor::Params::solve(u(rng), u(rng), u(rng), u(rng)).violations(1e-14).empty());
}

TEST_CASE("position marginals of a site") {
  const auto w = spinor::spinor_wigner(LatticeState::position(1, -2, 3), g64, spinor::Params::canonical());
  const auto pm = spinor::position_marginals(w);
  for (std::size_t r = 0; r < w[0].rows(); ++r) {
    const long m = w[0].row_twice(r) / 2;
    CHECK(pm[0][r] == doctest::Approx(m == 1 ? 1.0 : 0.0));
    CHECK(pm[1][r] == doctest::Approx(m + 1 == 1 ? 1.0 : 0.0));
  }
}

TEST_CASE("marginals of random states under random valid parameters") {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int s = 0; s < 20; ++s) {
    const auto psi = verify::random_state(rng, -3, 10);
    const auto par = spinor::Params::solve(u(rng), u(rng), u(rng), u(rng));
    const auto w = spinor::spinor_wigner(psi, g64, par);
    const auto pm = spinor::position_marginals(w);
    for (std::size_t r = 0; r < w[0].rows(); ++r) {
      const long m = w[0].row_twice(r) / 2;
      CHECK(std::abs(pm[0][r] - std::norm(psi(m))) < 1e-12);
      CHECK(std::abs(pm[1][r] - std::norm(psi(m + 1))) < 1e-12);
    }
    // Momentum marginal: (1/4pi)[(S + 2B)|psi~_k|^2 + (S - 2B)|psi~_{k+pi}|^2]
    // with S = sum_p (A + C) and B = sum_p beta.
    const auto mm = spinor::momentum_marginals(w);
    for (int si = 0; si < 2; ++si) {
      double S = 0, B = 0;
      for (int p = 0; p < 2; ++p) {
        S += par.A[si][p] + par.C[si][p];
        B += par.beta(static_cast<Sign>(si), static_cast<Sign>(p));
      }
      for (int j = 0; j < g64.count(); ++j) {
        const double k = g64.at(j);
        const double P = std::norm(oracle::direct_transform(psi, k));
        const double Q = std::norm(oracle::direct_transform(psi, k + kPi));
        CHECK(std::abs(mm[si][j] - ((S + 2 * B) * P + (S - 2 * B) * Q) / (4 * kPi)) < 1e-12);
      }
    }
  }
}

TEST_CASE("canonical momentum marginals split P and Q") {
  std::mt19937_64 rng(6);
  const auto psi = verify::random_state(rng, 0, 8);
  const auto mm = spinor::momentum_marginals(spinor::spinor_wigner(psi, g64, spinor::Params::canonical()));
  for (int j = 0; j < g64.count(); ++j) {
    const double k = g64.at(j);
    CHECK(std::abs(mm[0][j] - std::norm(oracle::direct_transform(psi, k)) / kTwoPi) < 1e-12);
    CHECK(std::abs(mm[1][j] - std::norm(oracle::direct_transform(psi, k + kPi)) / kTwoPi) < 1e-12);
  }
}

TEST_CASE("parity Fourier sums") {
  CHECK(spinor::parity_fourier(LatticeState::position(0, -1, 1), spinor::Parity::Odd, 0.3) == cplx{});
  const auto one = LatticeState::position(1, -1, 2);
  CHECK(std::abs(spinor::parity_fourier(one, spinor::Parity::Odd, 0.3) - std::polar(1.0, -0.3)) < 1e-15);

  std::mt19937_64 rng(8);
  const auto psi = verify::random_state(rng, -8, 16);
  for (double k : {0.0, 0.4, 2.5, 5.9}) {
    const cplx full = oracle::direct_transform(psi, k), shifted = oracle::direct_transform(psi, k + kPi);
    const cplx e = spinor::parity_fourier(psi, spinor::Parity::Even, k);
    const cplx o = spinor::parity_fourier(psi, spinor::Parity::Odd, k);
    CHECK(std::abs(e + o - full) < 1e-12);
    CHECK(std::abs(e - 0.5 * (full + shifted)) < 1e-12);
    CHECK(std::abs(o - 0.5 * (full - shifted)) < 1e-12);
    CHECK(std::abs(spinor::full_fourier(psi, k) - full) < 1e-12);
  }
}
