#include <doctest.h>

#include <cmath>
#include <random>

#include "pwig/models.hpp"
#include "pwig/oracle.hpp"
#include "pwig/verify.hpp"

using namespace pwig;

TEST_CASE("ODE oracle") {
  std::mt19937_64 rng(4);
  const auto a = verify::random_state(rng, -5, 10);
  const auto b = verify::random_state(rng, -5, 10);
  const auto at0 = oracle::ode_tb_evolve(a, 0.0);
  for (long n = a.n_min(); n <= a.n_max(); ++n) CHECK(at0.state(n) == a(n));

  // linear: evolve(a + 2i b) = evolve(a) + 2i evolve(b)
  std::vector<cplx> sum;
  for (long n = a.n_min(); n <= a.n_max(); ++n) sum.push_back(a(n) + cplx(0, 2) * b(n));
  const LatticeState ab(a.n_min(), sum, false);
  const auto ea = oracle::ode_tb_evolve(a, 0.8).state;
  const auto eb = oracle::ode_tb_evolve(b, 0.8).state;
  const auto eab = oracle::ode_tb_evolve(ab, 0.8).state;
  for (long n = a.n_min(); n <= a.n_max(); ++n) CHECK(std::abs(eab(n) - ea(n) - cplx(0, 2) * eb(n)) < 1e-9);
  CHECK(oracle::ode_tb_evolve(a, 0.8).norm_drift < 1e-8);
}

TEST_CASE("eigenphase evolution") {
  const auto sp = SpectrumModel::linear(0.5, 0.1);
  std::mt19937_64 rng(2);
  const auto psi = verify::random_state(rng, 0, 6);
  const auto out = oracle::eigenphase_evolve(psi, sp, 2.0);
  for (long n = psi.n_min(); n <= psi.n_max(); ++n) CHECK(std::abs(out(n) - psi(n) * std::polar(1.0, -(0.5 * n + 0.1) * 2.0)) < 1e-15);
}

TEST_CASE("direct transform and Parseval") {
  std::mt19937_64 rng(6);
  const auto psi = verify::random_state(rng, -3, 7);
  CHECK(oracle::direct_transform(LatticeState::position(3, 0, 4), 0.5) == std::polar(1.0, -1.5));
  const int count = 64;
  double s = 0.0;
  for (int j = 0; j < count; ++j) s += std::norm(oracle::direct_transform(psi, kTwoPi * j / count)) / count;
  CHECK(s == doctest::Approx(psi.norm_squared()).epsilon(1e-13));
}

TEST_CASE("naive Wigner sum") {
  const auto site = LatticeState::position(2, 0, 4);
  CHECK(oracle::naive_wigner(site, 4, 0.3) == doctest::Approx(1.0 / kTwoPi));
  CHECK(oracle::naive_wigner(site, 3, 0.3) == 0.0);
  std::mt19937_64 rng(8);
  const auto rho = verify::random_density(rng, -2, 6);
  for (long m = -4; m <= 6; ++m) CHECK(std::abs(oracle::naive_wigner_complex(rho, m, 0.77).imag()) < 1e-15);
  const auto psi = verify::random_state(rng, -2, 6);
  CHECK(oracle::naive_wigner(psi, 1, 2.1) == doctest::Approx(oracle::naive_wigner(DensityWindow::pure(psi), 1, 2.1)).epsilon(1e-13));
}

TEST_CASE("report comparison") {
  const auto r = oracle::compare("x", {1.0, 2.0}, {1.0, 2.5}, 0.6);
  CHECK(r.max_abs_error == doctest::Approx(0.5));
  CHECK(r.pass);
  CHECK_FALSE(oracle::compare("x", {1.0}, {2.0}, 0.5).pass);
  CHECK_THROWS(oracle::compare("x", {1.0}, {1.0, 2.0}, 0.5));
}
