// Atom-field models on the polariton lattice: Jaynes-Cummings, Buck-Sukumar
// and dispersive spectra, the dressed/bare basis change, coherent states and
// the stationary-phase caustics of the JC kernel.
#pragma once

#include <Eigen/Dense>
#include <vector>

#include "pwig/lattice.hpp"
#include "pwig/spectrum.hpp"

namespace pwig::models {

struct JCParams {
  double omega = 1.0;
  double delta = 0.0;
  double g = 1.0;
};

/// eps_0 = 0, eps_n = omega|n| + delta/2 + sgn(n) sqrt(delta^2/4 + g^2|n|).
/// Dressed sites |n> = sin(theta_n)|{|n|-1},+> + cos(theta_n)|{|n|},->,
/// theta_n = arctan((eps_n - |n| omega) / (g sqrt|n|)).
SpectrumModel jc_spectrum(const JCParams& p);
double jc_angle(const JCParams& p, long n);

/// eps_n = omega|n| + g n with mixing angle arctan(sgn n).
SpectrumModel bs_spectrum(double omega, double g);

/// omega' = omega + delta - g^2/delta;
/// eps_n = omega|n| + (1 - sgn n)/2 omega' + (g^2/delta) n.
/// Sites are bare states: |n,-> for n >= 0, |-n,+> for n < 0.
SpectrumModel dispersive_spectrum(double omega, double delta, double g);

/// Amplitudes c(n_ph, s) for n_ph in [0, n_max], stored at 2 n_ph + [s = +].
class HybridState {
 public:
  explicit HybridState(long n_max);

  long n_max() const { return n_max_; }
  std::size_t dim() const { return static_cast<std::size_t>(2 * (n_max_ + 1)); }
  static std::size_t index(long n_ph, bool excited) { return static_cast<std::size_t>(2 * n_ph + (excited ? 1 : 0)); }

  cplx& operator()(long n_ph, bool excited) { return c_(static_cast<Eigen::Index>(index(n_ph, excited))); }
  cplx operator()(long n_ph, bool excited) const;

  Eigen::VectorXcd& vector() { return c_; }
  const Eigen::VectorXcd& vector() const { return c_; }

  double norm_squared() const { return c_.squaredNorm(); }
  void normalize();
  /// Probability in the top `levels` photon numbers.
  double tail_mass(int levels = 10) const;
  /// Throws unless tail_mass(10) <= tol.
  void require_certified(double tol = 1e-10) const;
  /// Same amplitudes in a larger (or equal) truncation.
  HybridState resized(long n_max) const;

 private:
  long n_max_;
  Eigen::VectorXcd c_;
};

/// Smallest n_max accepted for a coherent state: |alpha|^2 + 10|alpha| + 20.
long coherent_n_max(cplx alpha);

/// |alpha> (x) |->.
HybridState coherent_bare_state(cplx alpha, long n_max);

/// psi_n = <n|h>.  Rotation maps use sites [-(n_max+1), n_max+1] (the outer
/// pair completes the last 2x2 block); relabel maps use [-n_max, n_max] and
/// reject amplitude on the unmapped |0,+>.
LatticeState bare_to_dressed(const HybridState& h, const DressedMap& map, double certificate_tol = 1e-10);
HybridState dressed_to_bare(const LatticeState& psi, const DressedMap& map, long n_max);

/// max |<n|n'> - delta_{nn'}| of the map's sites 0 < |n| <= n_max, rebuilt in
/// the bare basis.
double dressed_map_orthonormality_error(const DressedMap& map, long n_max);

/// coherent_bare_state mapped by the delta = 0 JC rotation:
/// psi_n = e^{-|alpha|^2/2} alpha^{|n|} / sqrt(w_n |n|!), w_0 = 1, w_{n != 0} = 2.
LatticeState coherent_lattice_state(cplx alpha);

enum class Branch { Minus, Plus };

/// Minus: e^{-|alpha|^2/2} alpha^n / sqrt(n!) for n >= 0.  Plus: the mirror
/// image on n <= -1 (flagged unnormalized, since the vacuum term belongs to
/// the minus branch).  Throws if the window drops more than 1e-10 of mass.
LatticeState dressed_coherent(cplx alpha, Branch branch, long lo, long hi);

/// Closed-form W(n,k) of coherent_lattice_state(alpha); truncation < 0
/// picks one that covers the Poisson tail.
double jc_coherent_wigner_closed(cplx alpha, long n, double k, int truncation = -1);

/// 2 pi |alpha| / g.
double revival_time(cplx alpha, double g);

/// |<psi|exp(-iHt)|psi>| for H diagonal with the given spectrum.
double autocorrelation(const LatticeState& psi, const SpectrumModel& spectrum, double t);

/// 2 |sum_{n>=1} psi*_{-n}(t) psi_n(t)|: the coherence between mirror sites,
/// which for the JC coherent state carries the Rabi oscillation.
double mirror_coherence(const LatticeState& psi, const SpectrumModel& spectrum, double t);

struct CausticQuery {
  long n = 1;
  double dk = 0.0;  // k - k0
  double t = 1.0;
  double delta = 1.0;
  double g = 1.0;
  int branch = 0;  // m in the caustic family relation
};

struct CausticPoint {
  enum class Kind { Maximum, Minimum, Neither };
  double x;
  double phase;
  Kind kind;
};

/// Phase Phi(x) = t(eps_{n+x} - eps_{n-x}) + 2x(k - k0) on the continuous
/// relaxation of the omega = 0 JC spectrum, and its x-derivative.
double caustic_phase(const CausticQuery& q, double x);
double caustic_phase_slope(const CausticQuery& q, double x);

/// Stationary points of Phi on (0, |n| - 1], ordered by x.  Throws if none.
/// dk = 0 returns the symmetric point x = 0.
std::vector<CausticPoint> caustics(const CausticQuery& q);

/// Strong-coupling predictions: x* = (k-k0) delta / (2 t n g) and the
/// family value (k-k0)^2 delta / (t n g) + 2 t n g / delta.
double strong_coupling_root(const CausticQuery& q);
double strong_coupling_family(const CausticQuery& q);

struct Moments {
  double mean;
  double variance;
};

/// Moments of N = a^dag a + sigma+ sigma-.
Moments excitation_moments(const HybridState& h);

/// P(N) for N in [0, n_max + 1].
std::vector<double> excitation_distribution(const HybridState& h);

}  // namespace pwig::models
