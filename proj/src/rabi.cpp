#include "pwig/rabi.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

namespace pwig::rabi {

RabiParams from_jc(const models::JCParams& p) { return {p.omega, p.omega + p.delta, p.g}; }

Eigen::MatrixXd hamiltonian(const RabiParams& p, long n_max) {
  const auto dim = static_cast<Eigen::Index>(2 * (n_max + 1));
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
  const auto idx = [](long n, bool up) { return static_cast<Eigen::Index>(models::HybridState::index(n, up)); };
  for (long n = 0; n <= n_max; ++n) {
    h(idx(n, false), idx(n, false)) = p.omega * static_cast<double>(n);
    h(idx(n, true), idx(n, true)) = p.omega * static_cast<double>(n) + p.Omega;
    if (n == n_max) break;
    const double c = p.g * std::sqrt(static_cast<double>(n + 1));
    // sigma+ a: |n+1,-> <-> |n,+>
    h(idx(n, true), idx(n + 1, false)) = h(idx(n + 1, false), idx(n, true)) = c;
    // sigma+ a^dag: |n,-> <-> |n+1,+>
    h(idx(n + 1, true), idx(n, false)) = h(idx(n, false), idx(n + 1, true)) = c;
  }
  return h;
}

Propagator::Propagator(const RabiParams& p, long n_max) : n_max_(n_max) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(hamiltonian(p, n_max));
  if (es.info() != Eigen::Success) throw PhaseSpaceError("Rabi eigendecomposition failed");
  energies_ = es.eigenvalues();
  vectors_ = es.eigenvectors();
}

models::HybridState Propagator::evolve(const models::HybridState& h, double t) const {
  if (h.n_max() != n_max_) throw PhaseSpaceError("HybridState truncation does not match the propagator");
  const Eigen::VectorXcd coeff = vectors_.transpose().cast<cplx>() * h.vector();
  Eigen::VectorXcd phased(coeff.size());
  for (Eigen::Index i = 0; i < coeff.size(); ++i) phased(i) = coeff(i) * std::polar(1.0, -energies_(i) * t);
  models::HybridState out(n_max_);
  out.vector() = vectors_.cast<cplx>() * phased;
  return out;
}

Run evolve(const RabiParams& p, const models::HybridState& h0, std::span<const double> times, long n_max_start,
           double leak_tol, long max_n_max) {
  long n_max = std::max(n_max_start, h0.n_max());
  for (int attempt = 1;; ++attempt) {
    const Propagator prop(p, n_max);
    const auto start = h0.resized(n_max);
    Run run{{}, n_max, 0.0, attempt};
    for (double t : times) {
      run.states.push_back(prop.evolve(start, t));
      run.leakage = std::max(run.leakage, run.states.back().tail_mass(10));
    }
    if (run.leakage < leak_tol) return run;
    if (n_max >= max_n_max)
      throw PhaseSpaceError("Rabi truncation not certified: leakage " + std::to_string(run.leakage) +
                            " at n_max=" + std::to_string(n_max));
    n_max = std::min(max_n_max, static_cast<long>(std::ceil(1.5 * static_cast<double>(n_max))));
  }
}

Portrait wigner_portrait(const models::JCParams& ref, const RabiParams& p, long n0, double t,
                         const QuasiMomentumGrid& grid, LatticeMode mode, Exec exec) {
  const auto jc = models::jc_spectrum(ref);
  const auto& map = *jc.dressed_map();
  const long start = std::labs(n0) + 60;
  const auto h0 = models::dressed_to_bare(LatticeState::position(n0, n0 - 1, n0 + 1), map, start);
  // The lattice edge must be clean for the Wigner transform, hence the tight
  // leakage bound.
  const double times[] = {t};
  auto run = evolve(p, h0, times, start, 1e-20);
  auto lattice = models::bare_to_dressed(run.states.front(), map, 1e-20);
  auto w = wigner_from_state(lattice, grid, mode, exec);
  return {std::move(run.states.front()), std::move(lattice), std::move(w), run.n_max};
}

}  // namespace pwig::rabi
