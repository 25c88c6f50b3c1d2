// Time evolution on the lattice: the tight-binding chain H = iT - iT^dag
// with its Bessel Green function, and the propagator kernel that advances a
// Wigner field for any Hamiltonian diagonal in the lattice basis.
#pragma once

#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "pwig/lattice.hpp"
#include "pwig/phase_space.hpp"
#include "pwig/spectrum.hpp"

namespace pwig::dynamics {

/// Sites added on each side before evolving for time t at group velocity
/// at most `vmax`.
long wavefront_margin(double t, double vmax = 2.0);

/// psi_n(t) = sum_m J_{n-m}(2t) psi_m(0).  The window is widened by
/// wavefront_margin(t); throws if the evolved state still reaches the edge.
LatticeState tb_evolve_state(const LatticeState& psi0, double t);

/// sum_m C_m J_{M+m}(4t cos k) with M the doubled row index.
double tb_wigner_closed_form(std::span<const std::pair<long, double>> coeffs, long m_twice, double k, double t);

/// W(M,k;t) = sum_M' J_{M-M'}(4t cos k) W(M',k;0) on rows widened by the
/// light cone.  M' runs over all doubled rows, so `w0` must be half mode.
WignerField tb_propagate_wigner(const WignerField& w0, double t);

/// [1/(4cos^2 k)] d_t^2 W - Delta_n W by central differences; throws when
/// |cos k| < 1e-6.
double wave_equation_residual(const std::function<WignerField(double)>& wfun, long m_twice, std::size_t k_index,
                              double t, double dt);
/// d_t^2 W - 4cos^2 k Delta_n W, usable on the k = pi/2 line.
double wave_equation_residual_multiplied(const std::function<WignerField(double)>& wfun, long m_twice,
                                         std::size_t k_index, double t, double dt);

/// x -+ 2 cos(k) t.
std::pair<double, double> shear_transport_predict(double x, double k, double t);

/// <N> = sum n |psi_n|^2 and <T + T^dag>.
double mean_position(const LatticeState& psi);
double mean_hopping(const LatticeState& psi);

/// psi_n -> exp(-i eps_n t) psi_n.
LatticeState phase_evolve(const LatticeState& psi, const SpectrumModel& spectrum, double t);

struct PropagatorKernel {
  long m_twice;
  double t;
  int truncation;
  QuasiMomentumGrid grid;
  std::vector<double> samples;
  std::string spectrum;
};

/// K(M/2, k; t) = (1/2pi)[delta_{M even} + 2 sum_j cos(t(eps_{(M+j)/2} - eps_{(M-j)/2}) + jk)]
/// over 0 < j <= 2*truncation, j = M (mod 2).  For integer rows this is
/// 1/2pi + (1/pi) sum_{n'=1}^{N'} cos(t[eps_{n+n'} - eps_{n-n'}] + 2n'k).
double kernel_value(const SpectrumModel& spectrum, long m_twice, double k, double t, int truncation);

/// Same sum restricted to 1 <= n' <= n' max (used by periodicity checks).
double kernel_value_restricted(const SpectrumModel& spectrum, long m_twice, double k, double t, int n_prime_lo,
                               int n_prime_hi);

PropagatorKernel kernel(const SpectrumModel& spectrum, long m_twice, const QuasiMomentumGrid& grid, double t,
                        int truncation);

struct PropagateOptions {
  int truncation = -1;  // < 0: half the window width, rounded up
  Exec exec = Exec::Parallel;
  bool use_fft = true;
};

/// W(n,k;t) = int_0^{2pi} dk' K(n, k-k'; t) W(n,k';0), as a cyclic
/// convolution on the grid.  Needs k_count >= 2(2N'+1).
WignerField propagate_wigner(const WignerField& w0, const SpectrumModel& spectrum, double t,
                             const PropagateOptions& opt = {});

/// Exact propagation of momentum deltas: sum_l weight_l(n) K(n, k - k_l; t).
WignerField propagate_delta_field(const DeltaField& field, const SpectrumModel& spectrum, double t,
                                  const QuasiMomentumGrid& grid, int truncation);

/// |2pi Tr{W(n',k') W(n,k;t)} - K(n,k-k';t) delta_{nn'}| with both sides
/// truncated at the same N'.
double kernel_trace_identity_check(const SpectrumModel& spectrum, long n_twice, long n2_twice, double k, double k2,
                                   double t, int truncation);

}  // namespace pwig::dynamics
