// Oracle/invariant suites behind `pwig verify`, plus the random-state
// helpers shared with the tests.
#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "pwig/lattice.hpp"
#include "pwig/oracle.hpp"

namespace pwig::verify {

enum class Level { Fast, Full };

struct VerifyOptions {
  Level level = Level::Fast;
  /// Harness self-test: propagate with the kernel phase reversed.
  bool inject_kernel_sign_error = false;
  std::uint64_t seed = 20240611;
};

std::vector<oracle::OracleReport> run(const VerifyOptions& opt);

bool all_pass(const std::vector<oracle::OracleReport>& reports);

/// Complex Gaussian amplitudes on [n_min, n_min + size), normalized, inside
/// a window padded by one empty site on each side.
LatticeState random_state(std::mt19937_64& rng, long n_min, int size);
/// Random mixed state rho = sum_i p_i |psi_i><psi_i| of `rank` random kets.
DensityWindow random_density(std::mt19937_64& rng, long n_min, int dim, int rank = 3);

/// Keeps at most `keep` evenly spaced samples of the stored vectors (the
/// error and verdict are unchanged).
oracle::OracleReport thin(oracle::OracleReport r, std::size_t keep = 64);

}  // namespace pwig::verify
