#include "pwig/models.hpp"

#include <cmath>
#include <map>

namespace pwig::models {

namespace {

double sgn(long n) { return n > 0 ? 1.0 : (n < 0 ? -1.0 : 0.0); }

// e^{-|alpha|^2/2} alpha^m / sqrt(m!) without overflow.
cplx poisson_amplitude(cplx alpha, long m) {
  const double r = std::abs(alpha);
  if (r == 0.0) return m == 0 ? cplx{1.0} : cplx{};
  const double logmag = -0.5 * r * r + static_cast<double>(m) * std::log(r) - 0.5 * std::lgamma(m + 1.0);
  return std::polar(std::exp(logmag), static_cast<double>(m) * std::arg(alpha));
}

}  // namespace

double jc_angle(const JCParams& p, long n) {
  if (n == 0) return 0.0;
  const double m = static_cast<double>(std::labs(n));
  const double shift = p.delta / 2.0 + sgn(n) * std::sqrt(p.delta * p.delta / 4.0 + p.g * p.g * m);
  return std::atan(shift / (p.g * std::sqrt(m)));
}

SpectrumModel jc_spectrum(const JCParams& p) {
  if (p.g == 0.0) throw SpectrumError("JC dressed states need g != 0");
  SpectrumModel s("jc", [p](long n) {
    if (n == 0) return 0.0;
    const double m = static_cast<double>(std::labs(n));
    return p.omega * m + p.delta / 2.0 + sgn(n) * std::sqrt(p.delta * p.delta / 4.0 + p.g * p.g * m);
  });
  s.with_map(DressedMap::rotation([p](long n) { return jc_angle(p, n); }));
  return s;
}

SpectrumModel bs_spectrum(double omega, double g) {
  SpectrumModel s("buck_sukumar", [omega, g](long n) { return omega * static_cast<double>(std::labs(n)) + g * n; });
  s.with_map(DressedMap::rotation([](long n) { return std::atan(sgn(n)); }));
  if (g >= omega) s.with_note("g >= omega: branches cross, spectrum is not injective; unvalidated");
  return s;
}

SpectrumModel dispersive_spectrum(double omega, double delta, double g) {
  if (delta == 0.0) throw SpectrumError("dispersive spectrum needs delta != 0");
  const double chi = g * g / delta;
  const double omega_p = omega + delta - chi;
  SpectrumModel s("dispersive", [=](long n) {
    if (n == 0) return 0.0;
    return omega * static_cast<double>(std::labs(n)) + (n < 0 ? omega_p : 0.0) + chi * static_cast<double>(n);
  });
  s.with_map(DressedMap::relabel());
  s.with_note("valid for |delta| >> g");
  return s;
}

// ---------------------------------------------------------------- HybridState

HybridState::HybridState(long n_max) : n_max_(n_max) {
  if (n_max < 0) throw PhaseSpaceError("HybridState needs n_max >= 0");
  c_ = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dim()));
}

cplx HybridState::operator()(long n_ph, bool excited) const {
  if (n_ph < 0 || n_ph > n_max_) return {};
  return c_(static_cast<Eigen::Index>(index(n_ph, excited)));
}

void HybridState::normalize() {
  const double n = c_.norm();
  if (n == 0.0) throw PhaseSpaceError("cannot normalize a zero HybridState");
  c_ /= n;
}

double HybridState::tail_mass(int levels) const {
  double s = 0.0;
  for (long n = std::max(0L, n_max_ - levels + 1); n <= n_max_; ++n)
    s += std::norm((*this)(n, false)) + std::norm((*this)(n, true));
  return s;
}

void HybridState::require_certified(double tol) const {
  const double tail = tail_mass(10);
  if (tail > tol)
    throw PhaseSpaceError("truncation certificate failed: top-10 Fock mass " + std::to_string(tail) +
                          " at n_max=" + std::to_string(n_max_));
}

HybridState HybridState::resized(long n_max) const {
  if (n_max < n_max_) throw PhaseSpaceError("HybridState::resized cannot shrink");
  HybridState out(n_max);
  out.c_.head(c_.size()) = c_;
  return out;
}

long coherent_n_max(cplx alpha) {
  const double r = std::abs(alpha);
  return static_cast<long>(std::ceil(r * r + 10.0 * r + 20.0));
}

HybridState coherent_bare_state(cplx alpha, long n_max) {
  if (n_max < coherent_n_max(alpha))
    throw PhaseSpaceError("coherent state needs n_max >= " + std::to_string(coherent_n_max(alpha)));
  HybridState h(n_max);
  for (long m = 0; m <= n_max; ++m) h(m, false) = poisson_amplitude(alpha, m);
  h.require_certified();
  return h;
}

// ------------------------------------------------------------- basis change

LatticeState bare_to_dressed(const HybridState& h, const DressedMap& map, double certificate_tol) {
  h.require_certified(certificate_tol);
  const long edge = map.is_rotation() ? h.n_max() + 1 : h.n_max();
  if (!map.is_rotation() && std::abs(h(0, true)) > 1e-12)
    throw PhaseSpaceError("|0,+> has no lattice site under this map");
  std::vector<cplx> psi(static_cast<std::size_t>(2 * edge + 1));
  for (long n = -edge; n <= edge; ++n) {
    cplx s{};
    for (const auto& term : map.terms(n)) s += term.amplitude * h(term.level.n_ph, term.level.excited);
    psi[static_cast<std::size_t>(n + edge)] = s;
  }
  const bool unit = std::abs(h.norm_squared() - 1.0) < 1e-10;
  return LatticeState(-edge, std::move(psi), unit);
}

HybridState dressed_to_bare(const LatticeState& psi, const DressedMap& map, long n_max) {
  HybridState h(n_max);
  double dropped = 0.0;
  std::map<long, cplx> lost;
  for (long n = psi.n_min(); n <= psi.n_max(); ++n) {
    const cplx a = psi(n);
    if (a == cplx{}) continue;
    for (const auto& term : map.terms(n)) {
      if (term.level.n_ph > n_max) {
        lost[2 * term.level.n_ph + term.level.excited] += term.amplitude * a;
        continue;
      }
      h(term.level.n_ph, term.level.excited) += term.amplitude * a;
    }
  }
  for (const auto& [lvl, v] : lost) dropped += std::norm(v);
  if (dropped > 1e-20) throw PhaseSpaceError("dressed state extends beyond n_max=" + std::to_string(n_max));
  return h;
}

double dressed_map_orthonormality_error(const DressedMap& map, long n_max) {
  std::vector<std::map<long, double>> cols;
  for (long n = -n_max; n <= n_max; ++n) {
    std::map<long, double> v;
    for (const auto& term : map.terms(n)) v[2 * term.level.n_ph + term.level.excited] += term.amplitude;
    cols.push_back(std::move(v));
  }
  double err = 0.0;
  for (std::size_t i = 0; i < cols.size(); ++i)
    for (std::size_t j = i; j < cols.size(); ++j) {
      double dot = 0.0;
      for (const auto& [lvl, a] : cols[i]) {
        const auto it = cols[j].find(lvl);
        if (it != cols[j].end()) dot += a * it->second;
      }
      err = std::max(err, std::abs(dot - (i == j ? 1.0 : 0.0)));
    }
  return err;
}

LatticeState coherent_lattice_state(cplx alpha) {
  const auto jc = jc_spectrum({1.0, 0.0, 1.0});
  return bare_to_dressed(coherent_bare_state(alpha, coherent_n_max(alpha)), *jc.dressed_map());
}

LatticeState dressed_coherent(cplx alpha, Branch branch, long lo, long hi) {
  if (lo > hi) throw PhaseSpaceError("empty window");
  std::vector<cplx> amps(static_cast<std::size_t>(hi - lo + 1));
  double kept = 0.0;
  for (long n = lo; n <= hi; ++n) {
    cplx a{};
    if (branch == Branch::Minus && n >= 0) a = poisson_amplitude(alpha, n);
    if (branch == Branch::Plus && n <= -1) a = poisson_amplitude(alpha, -n);
    amps[static_cast<std::size_t>(n - lo)] = a;
    kept += std::norm(a);
  }
  const double r2 = std::norm(alpha);
  const double total = branch == Branch::Minus ? 1.0 : -std::expm1(-r2);
  if (total - kept > 1e-10) throw PhaseSpaceError("window drops dressed-coherent mass " + std::to_string(total - kept));
  return LatticeState(lo, std::move(amps), branch == Branch::Minus);
}

double jc_coherent_wigner_closed(cplx alpha, long n, double k, int truncation) {
  const double r = std::abs(alpha);
  const long reach = truncation >= 0 ? truncation : std::labs(n) + coherent_n_max(alpha);
  const double phi = std::arg(alpha);
  cplx s{};
  for (long q = -reach; q <= reach; ++q) {
    const long np = std::labs(n + q), nm = std::labs(n - q);
    double mag;
    if (r == 0.0) {
      if (np + nm != 0) continue;
      mag = 1.0;
    } else {
      const double logw = (np ? std::log(2.0) : 0.0) + (nm ? std::log(2.0) : 0.0);
      mag = std::exp(-r * r + static_cast<double>(np + nm) * std::log(r) -
                     0.5 * (logw + std::lgamma(np + 1.0) + std::lgamma(nm + 1.0)));
    }
    s += std::polar(mag, phi * static_cast<double>(np - nm) - 2.0 * k * static_cast<double>(q));
  }
  return s.real() / kTwoPi;
}

double revival_time(cplx alpha, double g) {
  if (g <= 0.0) throw SpectrumError("revival time needs g > 0");
  return kTwoPi * std::abs(alpha) / g;
}

double autocorrelation(const LatticeState& psi, const SpectrumModel& spectrum, double t) {
  cplx s{};
  for (long n = psi.n_min(); n <= psi.n_max(); ++n) {
    const double p = std::norm(psi(n));
    if (p != 0.0) s += p * std::polar(1.0, -spectrum(n) * t);
  }
  return std::abs(s) / psi.norm_squared();
}

double mirror_coherence(const LatticeState& psi, const SpectrumModel& spectrum, double t) {
  cplx s{};
  const long reach = std::min(-psi.n_min(), psi.n_max());
  for (long n = 1; n <= reach; ++n) {
    const cplx c = std::conj(psi(-n)) * psi(n);
    if (c != cplx{}) s += c * std::polar(1.0, (spectrum(-n) - spectrum(n)) * t);
  }
  return 2.0 * std::abs(s) / psi.norm_squared();
}

// ----------------------------------------------------------------- caustics

namespace {

double eps_continuous(const CausticQuery& q, double y) {
  if (y == 0.0) return 0.0;
  const double f = std::sqrt(q.delta * q.delta / 4.0 + q.g * q.g * std::abs(y));
  return q.delta / 2.0 + (y > 0 ? f : -f);
}

double eps_slope(const CausticQuery& q, double y) {
  return q.g * q.g / (2.0 * std::sqrt(q.delta * q.delta / 4.0 + q.g * q.g * std::abs(y)));
}

CausticPoint::Kind classify(double phase) {
  const double r = std::remainder(phase, kTwoPi);
  if (std::abs(r) < 0.1) return CausticPoint::Kind::Maximum;
  if (kPi - std::abs(r) < 0.1) return CausticPoint::Kind::Minimum;
  return CausticPoint::Kind::Neither;
}

}  // namespace

double caustic_phase(const CausticQuery& q, double x) {
  const double n = static_cast<double>(q.n);
  return q.t * (eps_continuous(q, n + x) - eps_continuous(q, n - x)) + 2.0 * x * q.dk;
}

double caustic_phase_slope(const CausticQuery& q, double x) {
  const double n = static_cast<double>(q.n);
  return q.t * (eps_slope(q, n + x) + eps_slope(q, n - x)) + 2.0 * q.dk;
}

std::vector<CausticPoint> caustics(const CausticQuery& q) {
  if (!(q.t > 0.0)) throw PhaseSpaceError("caustics need t > 0");
  if (q.dk == 0.0) return {{0.0, 0.0, CausticPoint::Kind::Maximum}};
  const double hi = static_cast<double>(std::labs(q.n)) - 1.0;
  if (hi <= 0.0) throw PhaseSpaceError("caustics need |n| >= 2");

  constexpr int kScan = 4000;
  const double lo = 1e-12 * hi;
  std::vector<CausticPoint> roots;
  double xa = lo, fa = caustic_phase_slope(q, xa);
  for (int i = 1; i <= kScan; ++i) {
    const double xb = lo + (hi - lo) * i / kScan;
    const double fb = caustic_phase_slope(q, xb);
    if (fa == 0.0 || (fa < 0.0) != (fb < 0.0)) {
      double a = xa, b = xb, fl = fa;
      for (int it = 0; it < 200 && b - a > 1e-14 * std::max(1.0, b); ++it) {
        const double m = 0.5 * (a + b);
        const double fm = caustic_phase_slope(q, m);
        if ((fm < 0.0) == (fl < 0.0)) {
          a = m;
          fl = fm;
        } else {
          b = m;
        }
      }
      const double x = 0.5 * (a + b);
      const double ph = caustic_phase(q, x);
      roots.push_back({x, ph, classify(ph)});
    }
    xa = xb;
    fa = fb;
  }
  if (roots.empty()) throw PhaseSpaceError("no stationary point of the kernel phase in (0, |n|-1]");
  return roots;
}

double strong_coupling_root(const CausticQuery& q) {
  return q.dk * q.delta / (2.0 * q.t * static_cast<double>(q.n) * q.g);
}

double strong_coupling_family(const CausticQuery& q) {
  const double tng = q.t * static_cast<double>(q.n) * q.g;
  return q.dk * q.dk * q.delta / tng + 2.0 * tng / q.delta;
}

// ------------------------------------------------------------------ moments

std::vector<double> excitation_distribution(const HybridState& h) {
  std::vector<double> p(static_cast<std::size_t>(h.n_max() + 2), 0.0);
  for (long n = 0; n <= h.n_max(); ++n) {
    p[static_cast<std::size_t>(n)] += std::norm(h(n, false));
    p[static_cast<std::size_t>(n + 1)] += std::norm(h(n, true));
  }
  return p;
}

Moments excitation_moments(const HybridState& h) {
  const auto p = excitation_distribution(h);
  double m1 = 0.0, z = 0.0;
  for (std::size_t n = 0; n < p.size(); ++n) {
    z += p[n];
    m1 += static_cast<double>(n) * p[n];
  }
  m1 /= z;
  double var = 0.0;
  for (std::size_t n = 0; n < p.size(); ++n) var += (static_cast<double>(n) - m1) * (static_cast<double>(n) - m1) * p[n];
  return {m1, var / z};
}

}  // namespace pwig::models
