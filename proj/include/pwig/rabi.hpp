// The quantum Rabi model on a truncated Fock space:
//   H = omega a^dag a + Omega sigma+ sigma- + g (sigma+ + sigma-)(a^dag + a)
#pragma once

#include <Eigen/Dense>
#include <span>
#include <vector>

#include "pwig/lattice.hpp"
#include "pwig/models.hpp"
#include "pwig/phase_space.hpp"

namespace pwig::rabi {

struct RabiParams {
  double omega = 1.0;
  double Omega = 1.0;
  double g = 1.0;
};

/// Omega = omega + delta, matching the JC atomic term.
RabiParams from_jc(const models::JCParams& p);

/// Real symmetric matrix in the HybridState basis (2 n_ph + [s = +]).
Eigen::MatrixXd hamiltonian(const RabiParams& p, long n_max);

/// Full eigendecomposition of the truncated Hamiltonian.
class Propagator {
 public:
  Propagator(const RabiParams& p, long n_max);
  long n_max() const { return n_max_; }
  const Eigen::VectorXd& energies() const { return energies_; }
  models::HybridState evolve(const models::HybridState& h, double t) const;

 private:
  long n_max_;
  Eigen::VectorXd energies_;
  Eigen::MatrixXd vectors_;
};

struct Run {
  std::vector<models::HybridState> states;  // one per requested time
  long n_max;
  double leakage;  // max tail mass over the requested times
  int attempts;
};

/// Evolves to each time, growing n_max by 1.5x until the top ten Fock levels
/// hold less than `leak_tol` at every time.  Throws after `max_n_max`.
Run evolve(const RabiParams& p, const models::HybridState& h0, std::span<const double> times, long n_max_start = 0,
           double leak_tol = 1e-8, long max_n_max = 6000);

struct Portrait {
  models::HybridState bare;
  LatticeState lattice;
  WignerField wigner;
  long n_max;
};

/// Evolves the JC dressed site |n0> under the Rabi Hamiltonian and maps the
/// result back onto the JC lattice of `ref`.
Portrait wigner_portrait(const models::JCParams& ref, const RabiParams& p, long n0, double t,
                         const QuasiMomentumGrid& grid, LatticeMode mode = LatticeMode::Integer,
                         Exec exec = Exec::Parallel);

}  // namespace pwig::rabi
