#include "pwig/dynamics.hpp"

#include <cmath>
#include <map>

#include "pwig/bessel.hpp"
#include "pwig/kernels.hpp"

namespace pwig::dynamics {

long wavefront_margin(double t, double vmax) {
  const double reach = std::abs(vmax * t);
  // The Bessel tail beyond the front has an Airy width ~ t^{1/3}.
  return static_cast<long>(std::ceil(reach)) + 20 + 10 * static_cast<long>(std::ceil(std::cbrt(std::abs(t))));
}

LatticeState tb_evolve_state(const LatticeState& psi0, double t) {
  const long pad = wavefront_margin(t);
  const long lo = psi0.n_min() - pad, hi = psi0.n_max() + pad;
  const long width = hi - lo + 1;
  const bessel::Table J(static_cast<int>(width), 2.0 * t);

  std::vector<cplx> out(static_cast<std::size_t>(width));
#pragma omp parallel for schedule(static)
  for (long i = 0; i < width; ++i) {
    const long n = lo + i;
    cplx s{};
    for (long m = psi0.n_min(); m <= psi0.n_max(); ++m) s += J(n - m) * psi0(m);
    out[static_cast<std::size_t>(i)] = s;
  }
  LatticeState psi(lo, std::move(out), false);
  if (std::abs(psi.norm_squared() - psi0.norm_squared()) > 1e-10 * std::max(1.0, psi0.norm_squared()))
    throw PhaseSpaceError("tight-binding evolution lost norm; window too narrow for t");
  psi.require_clean_boundary();
  return psi0.normalized() ? LatticeState(lo, {psi.amplitudes().begin(), psi.amplitudes().end()}, true) : psi;
}

double tb_wigner_closed_form(std::span<const std::pair<long, double>> coeffs, long m_twice, double k, double t) {
  const double x = 4.0 * t * std::cos(k);
  double s = 0.0;
  for (const auto& [m, c] : coeffs) s += c * bessel::jn(static_cast<int>(m_twice + m), x);
  return s;
}

WignerField tb_propagate_wigner(const WignerField& w0, double t) {
  // The sum runs over every M', so the odd rows of W0 are needed too.
  if (w0.mode() != LatticeMode::HalfInteger) throw PhaseSpaceError("tight-binding Wigner propagation needs half mode");
  const long pad = 2 * wavefront_margin(t);
  const long lo = w0.m_min_twice() - pad, hi = w0.m_max_twice() + pad;
  WignerField out(w0.mode(), lo, hi, w0.grid());
  const int order_max = static_cast<int>(hi - lo);
  const std::size_t cols = w0.cols();

#pragma omp parallel for schedule(dynamic)
  for (std::size_t j = 0; j < cols; ++j) {
    const bessel::Table J(order_max, 4.0 * t * std::cos(w0.grid().at(static_cast<int>(j))));
    for (std::size_t r = 0; r < out.rows(); ++r) {
      const long m = out.row_twice(r);
      double s = 0.0;
      for (std::size_t q = 0; q < w0.rows(); ++q) s += J(m - w0.row_twice(q)) * w0(q, j);
      out(r, j) = s;
    }
  }
  return out;
}

namespace {

struct Laplacian {
  double d2t, lap, cos_k;
};

Laplacian second_differences(const std::function<WignerField(double)>& wfun, long m_twice, std::size_t k_index,
                             double t, double dt) {
  const WignerField wm = wfun(t - dt), w0 = wfun(t), wp = wfun(t + dt);
  const auto val = [](const WignerField& w, long m, std::size_t j) { return w.has_row(m) ? w.at_twice(m, j) : 0.0; };
  Laplacian out{};
  out.d2t = (val(wp, m_twice, k_index) - 2.0 * val(w0, m_twice, k_index) + val(wm, m_twice, k_index)) / (dt * dt);
  out.lap = val(w0, m_twice + 2, k_index) + val(w0, m_twice - 2, k_index) - 2.0 * val(w0, m_twice, k_index);
  out.cos_k = std::cos(w0.grid().at(static_cast<int>(k_index)));
  return out;
}

}  // namespace

double wave_equation_residual(const std::function<WignerField(double)>& wfun, long m_twice, std::size_t k_index,
                              double t, double dt) {
  const auto d = second_differences(wfun, m_twice, k_index, t, dt);
  if (std::abs(d.cos_k) < 1e-6) throw PhaseSpaceError("wave-equation residual is singular at cos k = 0");
  return d.d2t / (4.0 * d.cos_k * d.cos_k) - d.lap;
}

double wave_equation_residual_multiplied(const std::function<WignerField(double)>& wfun, long m_twice,
                                         std::size_t k_index, double t, double dt) {
  const auto d = second_differences(wfun, m_twice, k_index, t, dt);
  return d.d2t - 4.0 * d.cos_k * d.cos_k * d.lap;
}

std::pair<double, double> shear_transport_predict(double x, double k, double t) {
  const double v = 2.0 * std::cos(k) * t;
  return {x - v, x + v};
}

double mean_position(const LatticeState& psi) {
  double s = 0.0;
  for (long n = psi.n_min(); n <= psi.n_max(); ++n) s += static_cast<double>(n) * std::norm(psi(n));
  return s;
}

double mean_hopping(const LatticeState& psi) {
  cplx s{};
  for (long n = psi.n_min(); n < psi.n_max(); ++n) s += std::conj(psi(n + 1)) * psi(n);
  return 2.0 * s.real();
}

LatticeState phase_evolve(const LatticeState& psi, const SpectrumModel& spectrum, double t) {
  spectrum.require_defined(psi.n_min(), psi.n_max());
  std::vector<cplx> out(psi.size());
  for (long n = psi.n_min(); n <= psi.n_max(); ++n)
    out[static_cast<std::size_t>(n - psi.n_min())] = psi(n) * std::polar(1.0, -spectrum(n) * t);
  return LatticeState(psi.n_min(), std::move(out), psi.normalized());
}

namespace {

// Sum over 0 < j <= 2N', j = M (mod 2).  With `clip`, terms touching levels
// outside the spectrum's domain are dropped; such terms never meet a nonzero
// harmonic of a field living inside that domain.
double kernel_sum(const SpectrumModel& spectrum, long m_twice, double k, double t, int truncation, bool clip) {
  const bool even = (m_twice % 2) == 0;
  double s = even ? 1.0 : 0.0;
  for (long j = even ? 2 : 1; j <= 2L * truncation; j += 2) {
    const long a = (m_twice + j) / 2, b = (m_twice - j) / 2;
    if (clip && !spectrum.defined_on(b, a)) continue;
    s += 2.0 * std::cos(t * (spectrum(a) - spectrum(b)) + static_cast<double>(j) * k);
  }
  return s / kTwoPi;
}

std::vector<double> kernel_samples(const SpectrumModel& spectrum, long m_twice, const QuasiMomentumGrid& grid,
                                   double t, int truncation, bool clip) {
  std::vector<double> v(static_cast<std::size_t>(grid.count()));
  for (int j = 0; j < grid.count(); ++j) v[j] = kernel_sum(spectrum, m_twice, grid.at(j), t, truncation, clip);
  return v;
}

void require_alias_free(const QuasiMomentumGrid& grid, int truncation) {
  if (grid.count() < 2 * (2 * truncation + 1))
    throw PhaseSpaceError("k_count " + std::to_string(grid.count()) + " aliases a kernel truncated at N'=" +
                          std::to_string(truncation) + "; need at least " + std::to_string(2 * (2 * truncation + 1)));
}

}  // namespace

double kernel_value(const SpectrumModel& spectrum, long m_twice, double k, double t, int truncation) {
  if (truncation < 0) throw PhaseSpaceError("kernel truncation must be non-negative");
  return kernel_sum(spectrum, m_twice, k, t, truncation, false);
}

double kernel_value_restricted(const SpectrumModel& spectrum, long m_twice, double k, double t, int n_prime_lo,
                               int n_prime_hi) {
  if (m_twice % 2 != 0) throw PhaseSpaceError("restricted kernel is defined on integer rows");
  const long n = m_twice / 2;
  double s = 0.0;
  for (long q = std::max(1, n_prime_lo); q <= n_prime_hi; ++q)
    s += std::cos(t * (spectrum(n + q) - spectrum(n - q)) + 2.0 * static_cast<double>(q) * k);
  return s / kPi;
}

PropagatorKernel kernel(const SpectrumModel& spectrum, long m_twice, const QuasiMomentumGrid& grid, double t,
                        int truncation) {
  if (truncation < 0) throw PhaseSpaceError("kernel truncation must be non-negative");
  if (m_twice % 2 != 0 && grid.period() != Period::TwoPi)
    throw PhaseSpaceError("half-integer kernel rows need the 2pi period");
  return {m_twice, t, truncation, grid, kernel_samples(spectrum, m_twice, grid, t, truncation, false),
          spectrum.name()};
}

WignerField propagate_wigner(const WignerField& w0, const SpectrumModel& spectrum, double t,
                             const PropagateOptions& opt) {
  const long width = (w0.m_max_twice() - w0.m_min_twice()) / 2 + 1;
  const int truncation = opt.truncation >= 0 ? opt.truncation : static_cast<int>((width + 1) / 2);
  const auto& grid = w0.grid();
  require_alias_free(grid, truncation);

  std::vector<std::vector<double>> ker(w0.rows());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t r = 0; r < w0.rows(); ++r)
    ker[r] = kernel_samples(spectrum, w0.row_twice(r), grid, t, truncation, true);

  // int_0^{2pi} dk' becomes (2pi / period) * dk * sum over one period.
  const double scale = kTwoPi / grid.length() * grid.spacing();
  WignerField out(w0.mode(), w0.m_min_twice(), w0.m_max_twice(), grid);
  if (opt.exec == Exec::Parallel && opt.use_fft)
    kernels::cyclic_convolve_fft(w0, ker, scale, out);
  else
    kernels::cyclic_convolve_serial(w0, ker, scale, out);
  return out;
}

WignerField propagate_delta_field(const DeltaField& field, const SpectrumModel& spectrum, double t,
                                  const QuasiMomentumGrid& grid, int truncation) {
  if (field.mode() == LatticeMode::HalfInteger && grid.period() != Period::TwoPi)
    throw PhaseSpaceError("half-integer fields need the 2pi period");
  WignerField out(field.mode(), field.m_lo_twice(), field.m_hi_twice(), grid);
#pragma omp parallel for schedule(dynamic)
  for (std::size_t r = 0; r < out.rows(); ++r) {
    const long m = out.row_twice(r);
    for (std::size_t j = 0; j < out.cols(); ++j) {
      const double k = grid.at(static_cast<int>(j));
      double s = 0.0;
      for (const auto& line : field.lines())
        if (line.weight[r] != 0.0) s += line.weight[r] * kernel_sum(spectrum, m, k - line.k_center, t, truncation, false);
      out(r, j) = s;
    }
  }
  return out;
}

namespace {

using SparseOp = std::map<std::pair<long, long>, cplx>;

// (1/2pi) sum_{a+b=M, |a-b| <= max_offset} e^{-ik(b-a)} e^{it(eps_a - eps_b)} |a><b|
SparseOp wigner_operator(const SpectrumModel* spectrum, long m_twice, double k, double t, long max_offset) {
  SparseOp op;
  for (long j = -max_offset; j <= max_offset; ++j) {
    if (((m_twice + j) % 2) != 0) continue;
    const long a = (m_twice + j) / 2, b = (m_twice - j) / 2;
    double phase = -k * static_cast<double>(b - a);
    if (spectrum) phase += t * ((*spectrum)(a) - (*spectrum)(b));
    op[{a, b}] += std::polar(1.0 / kTwoPi, phase);
  }
  return op;
}

}  // namespace

double kernel_trace_identity_check(const SpectrumModel& spectrum, long n_twice, long n2_twice, double k, double k2,
                                   double t, int truncation) {
  const long reach = 2L * truncation;
  // The static operator is taken wider so that the truncation lives in the
  // evolved factor only.
  const SparseOp a = wigner_operator(nullptr, n2_twice, k2, 0.0, reach + 4);
  const SparseOp b = wigner_operator(&spectrum, n_twice, k, t, reach);
  cplx tr{};
  for (const auto& [ij, va] : a) {
    const auto it = b.find({ij.second, ij.first});
    if (it != b.end()) tr += va * it->second;
  }
  const double rhs = n_twice == n2_twice ? kernel_value(spectrum, n_twice, k - k2, t, truncation) : 0.0;
  return std::abs(kTwoPi * tr - rhs);
}

}  // namespace pwig::dynamics
