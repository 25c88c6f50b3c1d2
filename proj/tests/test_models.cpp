#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <cmath>
#include <random>

#include "pwig/dynamics.hpp"
#include "pwig/models.hpp"
#include "pwig/oracle.hpp"

using namespace pwig;
using namespace pwig::models;

namespace {

HybridState random_hybrid(std::mt19937_64& rng, long n_max, long used) {
  std::normal_distribution<double> d;
  HybridState h(n_max);
  for (long n = 0; n <= used; ++n) {
    h(n, false) = {d(rng), d(rng)};
    if (n < used) h(n, true) = {d(rng), d(rng)};
  }
  h.normalize();
  return h;
}

}  // namespace

TEST_CASE("JC spectrum against the 2x2 block") {
  for (const JCParams p : {JCParams{1.0, 0.0, 1.0}, JCParams{1.0, 0.5, 1.0}, JCParams{0.7, -1.3, 0.4}}) {
    const auto jc = jc_spectrum(p);
    CHECK(jc(0) == 0.0);
    for (long m = 1; m <= 12; ++m) {
      // basis {|m-1,+>, |m,->}
      Eigen::Matrix2d h;
      h << m * p.omega + p.delta, p.g * std::sqrt(double(m)), p.g * std::sqrt(double(m)), m * p.omega;
      Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(h);
      CHECK(jc(-m) == doctest::Approx(es.eigenvalues()(0)).epsilon(1e-13));
      CHECK(jc(m) == doctest::Approx(es.eigenvalues()(1)).epsilon(1e-13));
      for (long n : {m, -m}) {
        const Eigen::Vector2d v = es.eigenvectors().col(n > 0 ? 1 : 0);
        const double th = jc_angle(p, n);
        CHECK(std::abs(std::abs(v(0) * std::sin(th) + v(1) * std::cos(th)) - 1.0) < 1e-12);
      }
    }
    CHECK(dressed_map_orthonormality_error(*jc.dressed_map(), 30) < 1e-14);
  }
  CHECK(jc_angle({1.0, 0.0, 1.0}, 4) == doctest::Approx(kPi / 4));
  CHECK(jc_angle({1.0, 0.0, 1.0}, -4) == doctest::Approx(-kPi / 4));
  CHECK_THROWS_AS(jc_spectrum({1.0, 0.0, 0.0}), SpectrumError);
}

TEST_CASE("spectrum ordering on a window") {
  const auto jc = jc_spectrum({1.0, 0.5, 1.0});
  for (long n = 1; n < 40; ++n) CHECK(jc(n + 1) > jc(n));
  for (long n = -40; n < -3; ++n) CHECK(jc(n - 1) > jc(n));
}

TEST_CASE("bare <-> dressed basis change") {
  std::mt19937_64 rng(5);
  const auto jc = jc_spectrum({1.0, 0.5, 1.0});
  const auto& map = *jc.dressed_map();
  for (int s = 0; s < 10; ++s) {
    const auto a = random_hybrid(rng, 20, 10);
    const auto b = random_hybrid(rng, 20, 10);
    const auto la = bare_to_dressed(a, map);
    const auto lb = bare_to_dressed(b, map);
    CHECK(la.norm_squared() == doctest::Approx(1.0).epsilon(1e-12));
    cplx bare{}, dressed{};
    for (long n = 0; n <= 20; ++n)
      for (bool e : {false, true}) bare += std::conj(a(n, e)) * b(n, e);
    for (long n = la.n_min(); n <= la.n_max(); ++n) dressed += std::conj(la(n)) * lb(n);
    CHECK(std::abs(bare - dressed) < 1e-12);
    const auto back = dressed_to_bare(la, map, 20);
    CHECK((back.vector() - a.vector()).norm() < 1e-12);
  }
  SUBCASE("|0,+> at resonance splits evenly over n = +-1") {
    const auto res = jc_spectrum({1.0, 0.0, 1.0});
    HybridState h(12);
    h(0, true) = 1.0;
    const auto l = bare_to_dressed(h, *res.dressed_map());
    CHECK(std::abs(l(1) - 1.0 / std::sqrt(2.0)) < 1e-15);
    CHECK(std::abs(l(-1) + 1.0 / std::sqrt(2.0)) < 1e-15);
    CHECK(std::abs(l(0)) == 0.0);
  }
  SUBCASE("relabel map rejects |0,+>") {
    const auto disp = dispersive_spectrum(1.0, 5.0, 0.1);
    HybridState h(12);
    h(0, true) = 1.0;
    CHECK_THROWS(bare_to_dressed(h, *disp.dressed_map()));
    HybridState ok(12);
    ok(2, true) = 1.0;
    CHECK(std::abs(bare_to_dressed(ok, *disp.dressed_map())(-2) - 1.0) < 1e-15);
  }
  SUBCASE("truncation certificate") {
    HybridState h(30);
    h(29, false) = 1.0;
    CHECK_THROWS(bare_to_dressed(h, map));
  }
}

TEST_CASE("coherent states") {
  const cplx alpha = std::polar(3.0, 0.4);
  const auto h = coherent_bare_state(alpha, coherent_n_max(alpha));
  CHECK(h.norm_squared() == doctest::Approx(1.0).epsilon(1e-14));
  const auto mom = excitation_moments(h);
  CHECK(mom.mean == doctest::Approx(9.0).epsilon(1e-12));
  CHECK(mom.variance == doctest::Approx(9.0).epsilon(1e-12));

  const auto l = coherent_lattice_state(alpha);
  for (long n = -15; n <= 15; ++n) {
    const long a = std::labs(n);
    const double w = n == 0 ? 1.0 : 2.0;
    const cplx expect = std::exp(-4.5) * std::pow(alpha, static_cast<double>(a)) / std::sqrt(w * std::tgamma(a + 1.0));
    // sign of the n < 0 half follows the rotation angle
    CHECK(std::abs(std::abs(l(n)) - std::abs(expect)) < 1e-14);
    if (n >= 0) CHECK(std::abs(l(n) - expect) < 1e-14);
  }

  const auto minus = dressed_coherent(alpha, Branch::Minus, -45, 45);
  const auto plus = dressed_coherent(alpha, Branch::Plus, -45, 45);
  CHECK(minus.norm_squared() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(plus(0) == cplx{});
  for (long n = 1; n <= 30; ++n) {
    CHECK(std::abs(plus(-n) - minus(n)) < 1e-15);
    CHECK(std::abs(l(n) - minus(n) / std::sqrt(2.0)) < 1e-14);
  }
  CHECK(std::abs(l(0) - minus(0)) < 1e-15);
  CHECK_THROWS(dressed_coherent(alpha, Branch::Minus, 0, 5));
}

TEST_CASE("closed-form coherent Wigner function") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> uk(0, kTwoPi);
  std::uniform_int_distribution<long> un(-30, 30);
  for (const cplx alpha : {cplx{0, 3.0}, std::polar(2.0, 1.1), cplx{0.5, 0}}) {
    const auto l = coherent_lattice_state(alpha);
    for (int i = 0; i < 20; ++i) {
      const long n = un(rng);
      const double k = uk(rng);
      CHECK(std::abs(jc_coherent_wigner_closed(alpha, n, k) - oracle::naive_wigner(l, 2 * n, k)) < 1e-12);
    }
  }
  CHECK(jc_coherent_wigner_closed(0.0, 0, 1.0) == doctest::Approx(1.0 / kTwoPi));
  CHECK(jc_coherent_wigner_closed(0.0, 1, 1.0) == 0.0);
}

TEST_CASE("revival time and autocorrelation") {
  CHECK(revival_time(cplx{0, 6.0}, 1.0) == doctest::Approx(12 * kPi));
  CHECK_THROWS(revival_time(1.0, 0.0));
  const auto jc = jc_spectrum({1.0, 0.0, 1.0});
  const auto l = coherent_lattice_state(cplx{0, 3.0});
  CHECK(autocorrelation(l, jc, 0.0) == doctest::Approx(1.0));
  CHECK(mirror_coherence(l, jc, 0.0) == doctest::Approx(1.0 - std::exp(-9.0)).epsilon(1e-12));
  CHECK(autocorrelation(l, jc, 7.3) < 1.0);
}

TEST_CASE("Buck-Sukumar spectrum") {
  const auto bs = bs_spectrum(1.0, 0.5);
  CHECK(bs(3) == doctest::Approx(4.5));
  CHECK(bs(-3) == doctest::Approx(1.5));
  CHECK(bs(0) == 0.0);
  CHECK(bs.dressed_map()->angle(2) == doctest::Approx(kPi / 4));
  CHECK(bs.dressed_map()->angle(-2) == doctest::Approx(-kPi / 4));
  CHECK(dressed_map_orthonormality_error(*bs.dressed_map(), 20) < 1e-14);
  CHECK_FALSE(bs_spectrum(1.0, 1.5).note().empty());

  SUBCASE("restricted kernel period pi/(omega+g)") {
    const long n = 12;
    const double T = kPi / 1.5;
    for (double t : {0.3, 2.0, 17.0})
      for (double k : {0.2, 1.7})
        CHECK(std::abs(dynamics::kernel_value_restricted(bs, 2 * n, k, t, 1, n - 1) -
                       dynamics::kernel_value_restricted(bs, 2 * n, k, t + T, 1, n - 1)) < 1e-10);
    CHECK(std::abs(dynamics::kernel_value(bs, 2 * n, 0.2, 0.3, 30) - dynamics::kernel_value(bs, 2 * n, 0.2, 0.3 + T, 30)) > 1e-3);
  }
  SUBCASE("commensurate branches give a full period of 4 pi") {
    for (long m : {0L, 5L, 8L, -6L})
      for (double t : {0.4, 3.0})
        CHECK(std::abs(dynamics::kernel_value(bs, m, 0.9, t, 25) - dynamics::kernel_value(bs, m, 0.9, t + 4 * kPi, 25)) < 1e-10);
  }
}

TEST_CASE("dispersive spectrum") {
  const double omega = 1.0, delta = 5.0, g = 0.1, chi = g * g / delta;
  const auto disp = dispersive_spectrum(omega, delta, g);
  CHECK_THROWS_AS(dispersive_spectrum(1.0, 0.0, 1.0), SpectrumError);
  for (long n = 1; n <= 5; ++n) {
    CHECK(disp(n) == doctest::Approx((omega + chi) * n));
    CHECK(disp(-n) == doctest::Approx((omega - chi) * n + omega + delta - chi));
  }

  SUBCASE("restricted periods on each branch") {
    const double tp = kPi / (omega + chi), tm = kPi / (omega - chi);
    for (double t : {0.5, 9.0}) {
      CHECK(std::abs(dynamics::kernel_value_restricted(disp, 20, 0.4, t, 1, 9) -
                     dynamics::kernel_value_restricted(disp, 20, 0.4, t + tp, 1, 9)) < 1e-10);
      CHECK(std::abs(dynamics::kernel_value_restricted(disp, -20, 0.4, t, 1, 9) -
                     dynamics::kernel_value_restricted(disp, -20, 0.4, t + tm, 1, 9)) < 1e-10);
    }
  }
  SUBCASE("agrees with JC when levels are paired by bare content") {
    const JCParams p{omega, delta, g};
    const auto jc = jc_spectrum(p);
    for (long m = 1; m <= 10; ++m) {
      // JC -m is mostly |m,->, JC m+1 mostly |m,+>
      CHECK(std::abs(std::cos(jc_angle(p, -m))) > 0.99);
      CHECK(std::abs(std::sin(jc_angle(p, m + 1))) > 0.99);
      CHECK(std::abs(disp(m) - jc(-m)) / std::abs(jc(-m)) < 1e-2);
      CHECK(std::abs(disp(-m) - jc(m + 1)) / std::abs(jc(m + 1)) < 1e-2);
    }
  }
}

TEST_CASE("caustics") {
  CausticQuery q{.n = 40, .dk = -0.3, .t = 2.0, .delta = 1.0, .g = 1.0, .branch = 0};
  const auto pts = caustics(q);
  REQUIRE_FALSE(pts.empty());
  for (const auto& p : pts) {
    CHECK(std::abs(caustic_phase_slope(q, p.x)) < 1e-8);
    const double r = std::remainder(p.phase, kTwoPi);
    if (p.kind == CausticPoint::Kind::Maximum) CHECK(std::abs(r) < 0.1);
    if (p.kind == CausticPoint::Kind::Minimum) CHECK(std::abs(std::abs(r) - kPi) < 0.1);
  }
  // slope is the derivative of the phase
  const double h = 1e-5, x = 3.3;
  CHECK(caustic_phase_slope(q, x) == doctest::Approx((caustic_phase(q, x + h) - caustic_phase(q, x - h)) / (2 * h)).epsilon(1e-6));

  q.dk = 0.0;
  const auto zero = caustics(q);
  REQUIRE(zero.size() == 1);
  CHECK(zero[0].x == 0.0);
  CHECK(zero[0].kind == CausticPoint::Kind::Maximum);
  q.n = 1;
  q.dk = 0.2;
  CHECK_THROWS(caustics(q));
  CausticQuery s{.n = 50, .dk = 0.1, .t = 1.0, .delta = 1.0, .g = 100.0};
  CHECK(strong_coupling_root(s) == doctest::Approx(0.1 * 1.0 / (2.0 * 50 * 100)));
}

TEST_CASE("excitation moments") {
  HybridState h(5);
  h(3, true) = 1.0;
  const auto m = excitation_moments(h);
  CHECK(m.mean == 4.0);
  CHECK(m.variance == 0.0);
  const auto jc = jc_spectrum({1.0, 0.5, 1.0});
  const auto site = dressed_to_bare(LatticeState::position(-4, -5, 5), *jc.dressed_map(), 6);
  CHECK(excitation_moments(site).mean == doctest::Approx(4.0).epsilon(1e-14));
  CHECK(excitation_moments(site).variance < 1e-14);
  const auto p = excitation_distribution(h);
  CHECK(p.size() == 7);
  CHECK(p[4] == 1.0);
}
