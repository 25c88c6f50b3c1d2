#include "pwig/oracle.hpp"

#include <algorithm>
#include <cmath>

#include <boost/numeric/odeint.hpp>

namespace pwig::oracle {

OracleReport compare(std::string name, std::vector<double> reference, std::vector<double> comparison,
                     double tolerance) {
  if (reference.size() != comparison.size()) throw PhaseSpaceError("oracle comparison of mismatched sizes");
  double err = 0.0;
  for (std::size_t i = 0; i < reference.size(); ++i) {
    const double d = std::abs(reference[i] - comparison[i]);
    err = std::isnan(d) ? INFINITY : std::max(err, d);
  }
  return {std::move(name), std::move(reference), std::move(comparison), err, tolerance, err <= tolerance};
}

OdeResult ode_tb_evolve(const LatticeState& psi0, double t, double rtol) {
  namespace odeint = boost::numeric::odeint;
  using State = std::vector<cplx>;
  State x(psi0.amplitudes().begin(), psi0.amplitudes().end());
  const std::size_t n = x.size();
  auto rhs = [n](const State& y, State& dy, double) {
    for (std::size_t i = 0; i < n; ++i) {
      const cplx left = i > 0 ? y[i - 1] : cplx{};
      const cplx right = i + 1 < n ? y[i + 1] : cplx{};
      dy[i] = left - right;
    }
  };
  if (t != 0.0) {
    auto stepper = odeint::make_controlled(rtol * 1e-2, rtol, odeint::runge_kutta_fehlberg78<State>());
    odeint::integrate_adaptive(stepper, rhs, x, 0.0, t, t > 0 ? 1e-3 : -1e-3);
  }
  LatticeState out(psi0.n_min(), std::move(x), false);
  return {out, std::abs(out.norm_squared() - psi0.norm_squared())};
}

LatticeState eigenphase_evolve(const LatticeState& psi0, const SpectrumModel& spectrum, double t) {
  std::vector<cplx> out;
  out.reserve(psi0.size());
  for (long n = psi0.n_min(); n <= psi0.n_max(); ++n) {
    const double ph = -spectrum(n) * t;
    out.push_back(psi0(n) * cplx(std::cos(ph), std::sin(ph)));
  }
  return LatticeState(psi0.n_min(), std::move(out), psi0.normalized());
}

double naive_wigner(const LatticeState& psi, long m_twice, double k) {
  cplx s{};
  for (long a = psi.n_min(); a <= psi.n_max(); ++a) {
    const long b = m_twice - a;
    const double ph = -k * static_cast<double>(b - a);
    s += psi(b) * std::conj(psi(a)) * cplx(std::cos(ph), std::sin(ph));
  }
  return s.real() / kTwoPi;
}

cplx naive_wigner_complex(const DensityWindow& rho, long m_twice, double k) {
  cplx s{};
  for (long a = rho.n_min(); a < rho.n_min() + rho.dim(); ++a) {
    const long b = m_twice - a;
    const double ph = -k * static_cast<double>(b - a);
    s += rho.get(b, a) * cplx(std::cos(ph), std::sin(ph));
  }
  return s / kTwoPi;
}

double naive_wigner(const DensityWindow& rho, long m_twice, double k) {
  return naive_wigner_complex(rho, m_twice, k).real();
}

cplx direct_transform(const LatticeState& psi, double k) {
  cplx s{};
  for (long mu = psi.n_min(); mu <= psi.n_max(); ++mu) {
    const double ph = -k * static_cast<double>(mu);
    s += psi(mu) * cplx(std::cos(ph), std::sin(ph));
  }
  return s;
}

}  // namespace pwig::oracle
