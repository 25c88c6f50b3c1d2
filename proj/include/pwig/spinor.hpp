// 2x2 spinor Wigner matrix W^{sp}(m,k), s,p in {+,-}, which keeps every
// phase-space point on the integer lattice by splitting even and odd index
// differences into separate coefficient rows.
#pragma once

#include <array>
#include <string>
#include <vector>

#include "pwig/lattice.hpp"
#include "pwig/phase_space.hpp"

namespace pwig::spinor {

enum class Sign { Plus = 0, Minus = 1 };

/// Coefficients of the four components.  The odd-difference weights are
/// B^{sp}(k) = beta^{sp} e^{-ik} with beta^{++} = b, beta^{-+} = -b,
/// beta^{--} = c, beta^{+-} = -c.
struct Params {
  // Indexed [s][p] with 0 = plus, 1 = minus.
  std::array<std::array<double, 2>, 2> A{};
  std::array<std::array<double, 2>, 2> C{};
  double b = 0.0;
  double c = 0.0;
  double a_norm = 1.0;
  double d_norm = 8.0;

  double beta(Sign s, Sign p) const;

  /// Fills every coefficient from the four free ones.
  static Params solve(double A_pp, double C_pp, double A_pm, double b, double d_norm = 8.0);
  /// A^{++} = 1, C^{++} = 0, A^{+-} = 0, b = 1/4, d = 8, a = 1.
  static Params canonical();

  /// Names of violated consistency relations (empty when valid).
  std::vector<std::string> violations(double tol = 0.0) const;
  void require_valid(double tol = 0.0) const;
};

/// Components in the order ++, +-, -+, --; rows are integer m (doubled 2m)
/// over [n_min - 1, n_max].  The grid must have period 2pi.
using SpinorField = std::array<WignerField, 4>;

inline std::size_t component(Sign s, Sign p) { return 2 * static_cast<std::size_t>(s) + static_cast<std::size_t>(p); }

SpinorField spinor_wigner(const LatticeState& psi, const QuasiMomentumGrid& grid, const Params& params,
                          Exec exec = Exec::Parallel);

enum class Parity { Even, Odd };

/// sum over mu of the given parity of psi_mu exp(-ik mu).
cplx parity_fourier(const LatticeState& psi, Parity parity, double k);

/// psi~_k = sum_mu psi_mu exp(-ik mu), assembled from the two parity sums.
cplx full_fourier(const LatticeState& psi, double k);

/// For p = +/-: sum_s int dk W^{sp}(m,k), indexed by the field rows.
std::array<std::vector<double>, 2> position_marginals(const SpinorField& w);

/// For s = +/-: sum_m sum_p W^{sp}(m,k), indexed by k sample.
std::array<std::vector<double>, 2> momentum_marginals(const SpinorField& w);

}  // namespace pwig::spinor
