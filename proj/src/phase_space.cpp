#include "pwig/phase_space.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace pwig {

namespace {

constexpr double kResidueTol = 1e-12;

void fill(std::span<const kernels::RowSeries> series, WignerField& w, Exec exec) {
  const double residue =
      exec == Exec::Serial ? kernels::evaluate_rows_serial(series, w) : kernels::evaluate_rows_omp(series, w);
  if (residue > kResidueTol)
    throw PhaseSpaceError("Wigner sum has imaginary residue " + std::to_string(residue));
}

double quadrature_weight(const QuasiMomentumGrid& g) { return g.spacing(); }

}  // namespace

std::vector<kernels::RowSeries> row_series(const LatticeState& psi, long m_lo, long m_hi, int step) {
  std::vector<kernels::RowSeries> out;
  for (long m = m_lo; m <= m_hi; m += step) {
    kernels::RowSeries s;
    const long a_lo = std::max(psi.n_min(), m - psi.n_max());
    const long a_hi = std::min(psi.n_max(), m - psi.n_min());
    for (long a = a_lo; a <= a_hi; ++a) {
      const long b = m - a;
      s.harmonic.push_back(b - a);
      s.coef.push_back(std::conj(psi(a)) * psi(b));
    }
    out.push_back(std::move(s));
  }
  return out;
}

WignerField wigner_from_state(const LatticeState& psi, const QuasiMomentumGrid& grid, LatticeMode mode,
                              Exec exec) {
  if (!psi.normalized()) throw PhaseSpaceError("wigner_from_state needs a normalized state");
  psi.require_clean_boundary();
  WignerField w(mode, 2 * psi.n_min(), 2 * psi.n_max(), grid);
  const auto series = row_series(psi, w.m_min_twice(), w.m_max_twice(), w.row_step());
  fill(series, w, exec);
  return w;
}

WignerField wigner_from_density(const DensityWindow& rho, const QuasiMomentumGrid& grid, LatticeMode mode,
                                Exec exec) {
  rho.require_hermitian();
  const long lo = rho.n_min(), hi = rho.n_min() + rho.dim() - 1;
  WignerField w(mode, 2 * lo, 2 * hi, grid);
  std::vector<kernels::RowSeries> series;
  for (long m = w.m_min_twice(); m <= w.m_max_twice(); m += w.row_step()) {
    kernels::RowSeries s;
    for (long a = std::max(lo, m - hi); a <= std::min(hi, m - lo); ++a) {
      const long b = m - a;
      s.harmonic.push_back(b - a);
      s.coef.push_back(rho(b, a));
    }
    series.push_back(std::move(s));
  }
  fill(series, w, exec);
  return w;
}

std::vector<double> marginal_position(const WignerField& w) {
  if (w.grid().period() != Period::TwoPi)
    throw PhaseSpaceError("position marginal is unsupported on the reduced pi period");
  const double dk = quadrature_weight(w.grid());
  std::vector<double> p(w.rows(), 0.0);
  for (std::size_t r = 0; r < w.rows(); ++r) {
    double s = 0.0;
    for (double v : w.row(r)) s += v;
    p[r] = s * dk;
  }
  return p;
}

std::vector<double> marginal_momentum(const WignerField& w) {
  if (w.mode() != LatticeMode::HalfInteger)
    throw PhaseSpaceError("momentum marginal needs the half-integer lattice");
  std::vector<double> d(w.cols(), 0.0);
  for (std::size_t r = 0; r < w.rows(); ++r) {
    auto row = w.row(r);
    for (std::size_t j = 0; j < w.cols(); ++j) d[j] += row[j];
  }
  return d;
}

std::vector<cplx> coherence_extract(const WignerField& w, long m_twice) {
  if (w.mode() != LatticeMode::HalfInteger || w.grid().period() != Period::TwoPi)
    throw PhaseSpaceError("coherence extraction needs the half-integer lattice with period 2pi");
  if (std::labs(m_twice) > w.m_max_twice() - w.m_min_twice())
    throw PhaseSpaceError("coherence offset outside the window");
  const double dk = quadrature_weight(w.grid());
  std::vector<cplx> out(w.rows());
  for (std::size_t r = 0; r < w.rows(); ++r) {
    if ((w.row_twice(r) + m_twice) % 2 != 0) continue;
    cplx s{};
    auto row = w.row(r);
    for (std::size_t j = 0; j < w.cols(); ++j) {
      const double ph = static_cast<double>(m_twice) * w.grid().at(static_cast<int>(j));
      s += row[j] * cplx(std::cos(ph), std::sin(ph));
    }
    out[r] = s * dk;
  }
  return out;
}

DensityWindow reconstruct_operator(const std::function<double(long, double)>& sampler, long n_min, int dim,
                                   int k_count) {
  if (k_count < 2 * dim)
    throw PhaseSpaceError("k grid too coarse for reconstruction: need at least " + std::to_string(2 * dim));
  const QuasiMomentumGrid grid(Period::TwoPi, k_count);
  const double dk = grid.spacing();
  DensityWindow rho(n_min, dim);
  const long hi = n_min + dim - 1;
  // Cache the rows once: row M serves every pair a + b = M.
  std::vector<std::vector<double>> rows(static_cast<std::size_t>(2 * (hi - n_min) + 1));
  for (long m = 2 * n_min; m <= 2 * hi; ++m) {
    auto& row = rows[static_cast<std::size_t>(m - 2 * n_min)];
    row.resize(static_cast<std::size_t>(k_count));
    for (int j = 0; j < k_count; ++j) row[j] = sampler(m, grid.at(j));
  }
  for (long a = n_min; a <= hi; ++a)
    for (long b = n_min; b <= hi; ++b) {
      const auto& row = rows[static_cast<std::size_t>(a + b - 2 * n_min)];
      cplx s{};
      for (int j = 0; j < k_count; ++j) {
        const double ph = -static_cast<double>(b - a) * grid.at(j);
        s += row[j] * cplx(std::cos(ph), std::sin(ph));
      }
      rho(a, b) = s * dk;
    }
  return rho;
}

DensityWindow reconstruct_operator(const WignerField& w, long n_min, int dim) {
  if (w.mode() != LatticeMode::HalfInteger || w.grid().period() != Period::TwoPi)
    throw PhaseSpaceError("reconstruction needs the half-integer lattice with period 2pi");
  const QuasiMomentumGrid& g = w.grid();
  auto sampler = [&](long m, double k) {
    if (!w.has_row(m)) return 0.0;
    const int j = static_cast<int>(std::lround(k / g.spacing())) % g.count();
    return w.at_twice(m, static_cast<std::size_t>(j));
  };
  return reconstruct_operator(sampler, n_min, dim, g.count());
}

WignerField cat_position_wigner(long n1, long n2, const QuasiMomentumGrid& grid, LatticeMode mode, long lo,
                                long hi) {
  if (n1 == n2) throw PhaseSpaceError("position cat needs distinct sites");
  if (std::min(n1, n2) <= lo || std::max(n1, n2) >= hi) throw PhaseSpaceError("cat support not inside window");
  WignerField w(mode, 2 * lo, 2 * hi, grid);
  const double stripe = 1.0 / (2.0 * kTwoPi);
  for (std::size_t j = 0; j < w.cols(); ++j) {
    w(w.row_of(2 * n1), j) += stripe;
    w(w.row_of(2 * n2), j) += stripe;
    if (w.has_row(n1 + n2))
      w(w.row_of(n1 + n2), j) += std::cos(grid.at(static_cast<int>(j)) * static_cast<double>(n1 - n2)) / kTwoPi;
  }
  return w;
}

DeltaField::DeltaField(LatticeMode mode, long lo, long hi) : mode_(mode), lo_(lo), hi_(hi) {
  if (hi < lo || (mode == LatticeMode::Integer && (lo % 2 != 0 || hi % 2 != 0)))
    throw PhaseSpaceError("invalid delta-field row range");
}

void DeltaField::add_line(double k_center, std::function<double(long)> weight) {
  Line line{k_center, std::vector<double>(rows())};
  for (std::size_t r = 0; r < rows(); ++r) line.weight[r] = weight(row_twice(r));
  lines_.push_back(std::move(line));
}

WignerField DeltaField::render(const QuasiMomentumGrid& grid) const {
  WignerField w(mode_, lo_, hi_, grid);
  for (const auto& line : lines_) {
    double k = std::fmod(line.k_center, grid.length());
    if (k < 0) k += grid.length();
    const int j = static_cast<int>(std::lround(k / grid.spacing())) % grid.count();
    for (std::size_t r = 0; r < rows(); ++r) w(r, static_cast<std::size_t>(j)) += line.weight[r] / grid.spacing();
  }
  return w;
}

DeltaField momentum_eigenstate_wigner(double k0, LatticeMode mode, long lo, long hi) {
  DeltaField f(mode, 2 * lo, 2 * hi);
  f.add_line(k0, [](long) { return 1.0 / kTwoPi; });
  return f;
}

DeltaField cat_momentum_wigner(double k1, double k2, LatticeMode mode, long lo, long hi) {
  if (std::abs(k1 - k2) < 1e-14) throw PhaseSpaceError("momentum cat needs distinct momenta");
  DeltaField f(mode, 2 * lo, 2 * hi);
  const double side = 1.0 / (2.0 * kTwoPi);
  f.add_line(k1, [side](long) { return side; });
  f.add_line(k2, [side](long) { return side; });
  const double dk = k1 - k2;
  f.add_line(0.5 * (k1 + k2), [dk](long m) { return std::cos(0.5 * static_cast<double>(m) * dk) / kTwoPi; });
  return f;
}

}  // namespace pwig
