#include <doctest.h>

#include <cmath>

#include "pwig/models.hpp"
#include "pwig/oracle.hpp"
#include "pwig/rabi.hpp"

using namespace pwig;

namespace {

double fidelity(const models::HybridState& a, const models::HybridState& b) {
  return std::norm(a.vector().dot(b.vector()));
}

}  // namespace

TEST_CASE("Rabi Hamiltonian") {
  const rabi::RabiParams p{1.0, 1.4, 0.6};
  const auto h = rabi::hamiltonian(p, 30);
  CHECK((h - h.transpose()).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(h.rows() == 62);
  // sigma_x (a + a^dag) couples |2,-> to |1,+> and |3,+>
  const auto i = [](long n, bool e) { return static_cast<Eigen::Index>(models::HybridState::index(n, e)); };
  CHECK(h(i(2, false), i(1, true)) == doctest::Approx(0.6 * std::sqrt(2.0)));
  CHECK(h(i(2, false), i(3, true)) == doctest::Approx(0.6 * std::sqrt(3.0)));
  CHECK(h(i(2, false), i(2, true)) == 0.0);
  CHECK(h(i(2, true), i(2, true)) == doctest::Approx(3.4));
  const auto j = rabi::from_jc({1.0, 0.5, 2.0});
  CHECK(j.Omega == 1.5);
  CHECK(j.g == 2.0);
}

TEST_CASE("uncoupled evolution is a phase") {
  const rabi::RabiParams p{1.0, 1.3, 0.0};
  models::HybridState h(20);
  h(4, false) = 1.0;
  const rabi::Propagator prop(p, 20);
  const auto out = prop.evolve(h, 2.5);
  CHECK(std::abs(out(4, false) - std::polar(1.0, -4.0 * 2.5)) < 1e-12);
  h(4, false) = 0.0;
  h(2, true) = 1.0;
  CHECK(std::abs(prop.evolve(h, 2.5)(2, true) - std::polar(1.0, -3.3 * 2.5)) < 1e-12);
}

TEST_CASE("Rabi evolution is unitary and certified") {
  const rabi::RabiParams p{1.0, 1.5, 1.0};
  models::HybridState h0(10);
  h0(5, false) = 1.0;
  const double times[] = {0.5, 3.0};
  const auto run = rabi::evolve(p, h0, times, 0, 1e-10);
  CHECK(run.leakage < 1e-10);
  for (const auto& s : run.states) CHECK(s.norm_squared() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(run.n_max > 10);
  CHECK_THROWS_AS(rabi::evolve(p, h0, times, 0, 1e-10, 12), PhaseSpaceError);

  SUBCASE("truncation converged") {
    const auto bigger = rabi::evolve(p, h0, times, run.n_max * 2, 1e-10);
    CHECK((bigger.states[1].vector() - run.states[1].resized(bigger.n_max).vector()).norm() < 1e-6);
  }
}

TEST_CASE("rotating-wave limit matches JC") {
  const double g = 0.01;
  const models::JCParams jp{1.0, 0.0, g};
  const auto jc = models::jc_spectrum(jp);
  const auto& map = *jc.dressed_map();
  const auto rp = rabi::from_jc(jp);
  for (long n0 : {0L, 3L, 5L}) {
    models::HybridState h0(n0 + 1);
    h0(n0, false) = 1.0;
    if (n0 > 0) {
      h0(n0 - 1, true) = cplx(0.0, 1.0);
      h0.normalize();
    }
    std::vector<double> times;
    for (double t = 5.0 / g; t <= 50.0 / g; t += 5.0 / g) times.push_back(t);
    const auto run = rabi::evolve(rp, h0, times, 30, 1e-12);
    const auto l0 = models::bare_to_dressed(h0.resized(run.n_max), map);
    for (std::size_t i = 0; i < times.size(); ++i) {
      const auto jct = models::dressed_to_bare(oracle::eigenphase_evolve(l0, jc, times[i]), map, run.n_max);
      CHECK(fidelity(jct, run.states[i]) >= 0.999);
    }
  }
}

TEST_CASE("strong coupling spreads excitation number") {
  const rabi::RabiParams p{1.0, 2.5, 10.0};
  models::HybridState h0(20);
  h0(8, false) = 1.0;
  const double times[] = {0.1 / 10.0, 0.3 / 10.0};
  const auto run = rabi::evolve(p, h0, times, 40, 1e-12);
  const auto a = models::excitation_moments(run.states[0]);
  const auto b = models::excitation_moments(run.states[1]);
  CHECK(b.variance > a.variance);
  CHECK(a.variance > 0.0);
}

TEST_CASE("portrait stays on a clean lattice window") {
  const models::JCParams jp{1.0, 1.5, 1.0};
  const QuasiMomentumGrid grid(Period::TwoPi, 512);
  const auto pr = rabi::wigner_portrait(jp, rabi::from_jc(jp), 10, 1.0, grid);
  CHECK(pr.lattice.norm_squared() == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(pr.bare.tail_mass() < 1e-20);
  double marg = 0.0;
  for (std::size_t r = 0; r < pr.wigner.rows(); ++r)
    for (std::size_t j = 0; j < pr.wigner.cols(); ++j) marg += pr.wigner(r, j) * grid.spacing();
  CHECK(marg == doctest::Approx(1.0).epsilon(1e-10));
}
