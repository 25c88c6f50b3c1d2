#include "pwig/spinor.hpp"

#include <cmath>

#include "pwig/kernels.hpp"

namespace pwig::spinor {

namespace {
constexpr int P = 0, M = 1;
}

double Params::beta(Sign s, Sign p) const {
  if (s == Sign::Plus && p == Sign::Plus) return b;
  if (s == Sign::Minus && p == Sign::Plus) return -b;
  if (s == Sign::Minus && p == Sign::Minus) return c;
  return -c;
}

Params Params::solve(double A_pp, double C_pp, double A_pm, double b, double d_norm) {
  Params q;
  q.A[P][P] = A_pp;
  q.C[P][P] = C_pp;
  q.A[P][M] = A_pm;
  q.b = b;
  q.A[M][P] = 1.0 - A_pp;
  q.C[M][P] = -C_pp;
  q.A[M][M] = -A_pm;
  q.C[M][M] = A_pp + C_pp - q.A[M][M];
  q.C[P][M] = 1.0 - q.C[M][M];
  q.c = b - 0.5;
  q.d_norm = d_norm;
  q.a_norm = d_norm / 8.0;
  return q;
}

Params Params::canonical() { return solve(1.0, 0.0, 0.0, 0.25); }

std::vector<std::string> Params::violations(double tol) const {
  std::vector<std::string> bad;
  auto check = [&](double v, const char* name) {
    if (std::abs(v) > tol) bad.emplace_back(name);
  };
  check(a_norm - d_norm / 8.0, "a = d/8");
  check((A[P][P] + C[P][P]) - (A[M][M] + C[M][M]), "A++ + C++ = A-- + C--");
  check(C[M][P] + C[P][P], "C-+ + C++ = 0");
  check(A[P][M] + A[M][M], "A+- + A-- = 0");
  check(C[P][M] + C[M][M] - 1.0, "C+- + C-- = 1");
  check(A[P][P] + A[M][P] - 1.0, "A++ + A-+ = 1");
  check(b - c - 0.5, "b - c = 1/2");
  if (!(d_norm > 0.0)) bad.emplace_back("d > 0");
  return bad;
}

void Params::require_valid(double tol) const {
  const auto bad = violations(tol);
  if (bad.empty()) return;
  std::string msg = "spinor parameters violate:";
  for (const auto& s : bad) msg += " [" + s + "]";
  throw PhaseSpaceError(msg);
}

SpinorField spinor_wigner(const LatticeState& psi, const QuasiMomentumGrid& grid, const Params& params,
                          Exec exec) {
  params.require_valid(1e-14);
  if (grid.period() != Period::TwoPi) throw PhaseSpaceError("spinor Wigner needs the 2pi period");
  if (!psi.normalized()) throw PhaseSpaceError("spinor Wigner needs a normalized state");
  psi.require_clean_boundary();

  const long m_lo = psi.n_min() - 1, m_hi = psi.n_max();
  const long span = psi.n_max() - psi.n_min() + 1;
  SpinorField out{WignerField(LatticeMode::Integer, 2 * m_lo, 2 * m_hi, grid),
                  WignerField(LatticeMode::Integer, 2 * m_lo, 2 * m_hi, grid),
                  WignerField(LatticeMode::Integer, 2 * m_lo, 2 * m_hi, grid),
                  WignerField(LatticeMode::Integer, 2 * m_lo, 2 * m_hi, grid)};

  for (int s = 0; s < 2; ++s)
    for (int p = 0; p < 2; ++p) {
      const double A = params.A[s][p], C = params.C[s][p];
      const double beta = params.beta(static_cast<Sign>(s), static_cast<Sign>(p));
      std::vector<kernels::RowSeries> series;
      for (long m = m_lo; m <= m_hi; ++m) {
        kernels::RowSeries row;
        for (long n = -span; n <= span; ++n) {
          const cplx even_a = psi(m + n) * std::conj(psi(m - n));
          const cplx even_c = psi(m + 1 + n) * std::conj(psi(m + 1 - n));
          const cplx odd = psi(m + 1 + n) * std::conj(psi(m - n));
          if (A != 0.0 && even_a != cplx{}) {
            row.harmonic.push_back(2 * n);
            row.coef.push_back(A * even_a);
          }
          if (C != 0.0 && even_c != cplx{}) {
            row.harmonic.push_back(2 * n);
            row.coef.push_back(C * even_c);
          }
          if (beta != 0.0 && odd != cplx{}) {
            // beta e^{-ik} e^{-2ikn} X + c.c.
            row.harmonic.push_back(2 * n + 1);
            row.coef.push_back(beta * odd);
            row.harmonic.push_back(-(2 * n + 1));
            row.coef.push_back(beta * std::conj(odd));
          }
        }
        series.push_back(std::move(row));
      }
      auto& w = out[2 * s + p];
      const double residue =
          exec == Exec::Serial ? kernels::evaluate_rows_serial(series, w) : kernels::evaluate_rows_omp(series, w);
      if (residue > 1e-12) throw PhaseSpaceError("spinor Wigner sum has an imaginary residue");
    }
  return out;
}

cplx parity_fourier(const LatticeState& psi, Parity parity, double k) {
  cplx s{};
  const long want = parity == Parity::Even ? 0 : 1;
  for (long mu = psi.n_min(); mu <= psi.n_max(); ++mu) {
    if (((mu % 2) + 2) % 2 != want) continue;
    const double ph = -k * static_cast<double>(mu);
    s += psi(mu) * cplx(std::cos(ph), std::sin(ph));
  }
  return s;
}

cplx full_fourier(const LatticeState& psi, double k) {
  return parity_fourier(psi, Parity::Even, k) + parity_fourier(psi, Parity::Odd, k);
}

std::array<std::vector<double>, 2> position_marginals(const SpinorField& w) {
  std::array<std::vector<double>, 2> out;
  for (int p = 0; p < 2; ++p) {
    out[p].assign(w[0].rows(), 0.0);
    for (int s = 0; s < 2; ++s) {
      const auto m = marginal_position(w[2 * s + p]);
      for (std::size_t r = 0; r < m.size(); ++r) out[p][r] += m[r];
    }
  }
  return out;
}

std::array<std::vector<double>, 2> momentum_marginals(const SpinorField& w) {
  std::array<std::vector<double>, 2> out;
  for (int s = 0; s < 2; ++s) {
    out[s].assign(w[0].cols(), 0.0);
    for (int p = 0; p < 2; ++p) {
      const auto& f = w[2 * s + p];
      for (std::size_t r = 0; r < f.rows(); ++r) {
        auto row = f.row(r);
        for (std::size_t j = 0; j < f.cols(); ++j) out[s][j] += row[j];
      }
    }
  }
  return out;
}

}  // namespace pwig::spinor
