// Brute-force references for tests.  Nothing here calls the optimized
// phase-space or dynamics paths.
#pragma once

#include <string>
#include <vector>

#include "pwig/lattice.hpp"
#include "pwig/spectrum.hpp"

namespace pwig::oracle {

struct OracleReport {
  std::string name;
  std::vector<double> reference;
  std::vector<double> comparison;
  double max_abs_error = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

/// Fills max_abs_error and pass from the two vectors (which must match in size).
OracleReport compare(std::string name, std::vector<double> reference, std::vector<double> comparison,
                     double tolerance);

struct OdeResult {
  LatticeState state;
  double norm_drift;
};

/// Integrates psi_n' = psi_{n-1} - psi_{n+1} on psi0's window (zero outside)
/// with an adaptive embedded Runge-Kutta 7(8) method.
OdeResult ode_tb_evolve(const LatticeState& psi0, double t, double rtol = 1e-10);

/// psi_n(t) = exp(-i eps_n t) psi_n(0).
LatticeState eigenphase_evolve(const LatticeState& psi0, const SpectrumModel& spectrum, double t);

/// (1/2pi) sum_{a+b=M} psi_b psi*_a exp(-ik(b-a)) by a literal loop.
double naive_wigner(const LatticeState& psi, long m_twice, double k);
double naive_wigner(const DensityWindow& rho, long m_twice, double k);
/// Complex value of the same sum (imaginary part should vanish).
cplx naive_wigner_complex(const DensityWindow& rho, long m_twice, double k);

/// sum_mu psi_mu exp(-ik mu).
cplx direct_transform(const LatticeState& psi, double k);

}  // namespace pwig::oracle
