#include "pwig/lattice.hpp"

#include <algorithm>
#include <cmath>

namespace pwig {

QuasiMomentumGrid::QuasiMomentumGrid(Period period, int count) : period_(period), count_(count) {
  if (count <= 0 || count % 2 != 0)
    throw PhaseSpaceError("k grid count must be positive and even, got " + std::to_string(count));
}

std::vector<double> QuasiMomentumGrid::samples() const {
  std::vector<double> k(static_cast<std::size_t>(count_));
  for (int j = 0; j < count_; ++j) k[j] = at(j);
  return k;
}

LatticeState::LatticeState(long n_min, std::vector<cplx> amplitudes, bool normalize)
    : n_min_(n_min), amps_(std::move(amplitudes)) {
  if (amps_.empty()) throw PhaseSpaceError("empty lattice state");
  if (normalize) {
    const double nrm = std::sqrt(norm_squared());
    if (nrm == 0.0) throw PhaseSpaceError("cannot normalize the zero state");
    for (auto& a : amps_) a /= nrm;
    normalized_ = true;
  } else {
    normalized_ = std::abs(norm_squared() - 1.0) < 1e-12;
  }
}

LatticeState LatticeState::from_doubled(long offset_twice, std::span<const cplx> doubled,
                                        bool normalize) {
  // Physical kets sit at even doubled indices only.
  long first_even = offset_twice;
  std::size_t start = 0;
  if (first_even % 2 != 0) {
    ++first_even;
    start = 1;
  }
  for (std::size_t i = 0; i < doubled.size(); ++i) {
    const long m = offset_twice + static_cast<long>(i);
    if (m % 2 != 0 && doubled[i] != cplx{})
      throw PhaseSpaceError("nonzero amplitude at half-integer index m=" + std::to_string(m));
  }
  std::vector<cplx> amps;
  for (std::size_t i = start; i < doubled.size(); i += 2) amps.push_back(doubled[i]);
  return LatticeState(first_even / 2, std::move(amps), normalize);
}

LatticeState LatticeState::position(long n, long n_min, long n_max) {
  if (n < n_min || n > n_max) throw PhaseSpaceError("position eigenstate outside window");
  std::vector<cplx> a(static_cast<std::size_t>(n_max - n_min + 1));
  a[static_cast<std::size_t>(n - n_min)] = 1.0;
  return LatticeState(n_min, std::move(a));
}

double LatticeState::norm_squared() const {
  double s = 0.0;
  for (const auto& a : amps_) s += std::norm(a);
  return s;
}

double LatticeState::boundary_amplitude(int width) const {
  double m = 0.0;
  const std::size_t w = std::min<std::size_t>(static_cast<std::size_t>(width), amps_.size());
  for (std::size_t i = 0; i < w; ++i) {
    m = std::max(m, std::abs(amps_[i]));
    m = std::max(m, std::abs(amps_[amps_.size() - 1 - i]));
  }
  return m;
}

void LatticeState::require_clean_boundary(double tol) const {
  const double b = boundary_amplitude();
  if (b > tol)
    throw PhaseSpaceError("window too small: boundary amplitude " + std::to_string(b) +
                          " exceeds " + std::to_string(tol));
}

LatticeState LatticeState::widened(long lo, long hi) const {
  if (lo > n_min_ || hi < n_max()) throw PhaseSpaceError("widened window must contain the state");
  std::vector<cplx> a(static_cast<std::size_t>(hi - lo + 1));
  std::copy(amps_.begin(), amps_.end(), a.begin() + (n_min_ - lo));
  LatticeState out(lo, std::move(a), false);
  out.normalized_ = normalized_;
  return out;
}

WignerField::WignerField(LatticeMode mode, long m_min_twice, long m_max_twice, QuasiMomentumGrid grid)
    : mode_(mode), m_min_(m_min_twice), m_max_(m_max_twice), grid_(grid) {
  if (mode == LatticeMode::Integer && (m_min_ % 2 != 0 || m_max_ % 2 != 0))
    throw PhaseSpaceError("integer-mode rows must have even doubled index");
  if (mode == LatticeMode::HalfInteger && grid.period() != Period::TwoPi)
    throw PhaseSpaceError("half-integer mode requires the 2pi period");
  if (m_max_ < m_min_) throw PhaseSpaceError("empty row range");
  rows_ = static_cast<std::size_t>((m_max_ - m_min_) / row_step() + 1);
  values_.assign(rows_ * cols(), 0.0);
}

bool WignerField::has_row(long m_twice) const {
  return m_twice >= m_min_ && m_twice <= m_max_ && (m_twice - m_min_) % row_step() == 0;
}

std::size_t WignerField::row_of(long m_twice) const {
  if (!has_row(m_twice)) throw PhaseSpaceError("no row at doubled index " + std::to_string(m_twice));
  return static_cast<std::size_t>((m_twice - m_min_) / row_step());
}

double WignerField::max_abs() const {
  double m = 0.0;
  for (double v : values_) m = std::max(m, std::abs(v));
  return m;
}

double WignerField::total_integral() const {
  const double w = grid_.spacing() * (kTwoPi / grid_.length());
  double s = 0.0;
  for (double v : values_) s += v;
  return s * w;
}

WignerField WignerField::cropped(long lo_twice, long hi_twice) const {
  WignerField out(mode_, lo_twice, hi_twice, grid_);
  for (std::size_t r = 0; r < out.rows(); ++r) {
    const long m = out.row_twice(r);
    if (!has_row(m)) continue;
    auto src = row(row_of(m));
    std::copy(src.begin(), src.end(), out.row(r).begin());
  }
  return out;
}

DensityWindow::DensityWindow(long n_min, int dim)
    : n_min_(n_min), dim_(dim), m_(static_cast<std::size_t>(dim) * dim) {
  if (dim <= 0) throw PhaseSpaceError("density window dimension must be positive");
}

DensityWindow DensityWindow::pure(const LatticeState& psi) {
  DensityWindow rho(psi.n_min(), static_cast<int>(psi.size()));
  for (long a = psi.n_min(); a <= psi.n_max(); ++a)
    for (long b = psi.n_min(); b <= psi.n_max(); ++b) rho(a, b) = psi(a) * std::conj(psi(b));
  return rho;
}

cplx DensityWindow::get(long a, long b) const {
  return (contains(a) && contains(b)) ? (*this)(a, b) : cplx{};
}

double DensityWindow::hermiticity_error() const {
  double e = 0.0;
  for (long a = n_min_; a < n_min_ + dim_; ++a)
    for (long b = n_min_; b < n_min_ + dim_; ++b)
      e = std::max(e, std::abs((*this)(a, b) - std::conj((*this)(b, a))));
  return e;
}

cplx DensityWindow::trace() const {
  cplx t{};
  for (long a = n_min_; a < n_min_ + dim_; ++a) t += (*this)(a, a);
  return t;
}

void DensityWindow::require_hermitian(double tol) const {
  const double e = hermiticity_error();
  if (e > tol) throw PhaseSpaceError("density matrix is not Hermitian (error " + std::to_string(e) + ")");
}

double DensityWindow::max_abs_diff(const DensityWindow& o) const {
  const long lo = std::min(n_min_, o.n_min_);
  const long hi = std::max(n_min_ + dim_, o.n_min_ + o.dim_);
  double e = 0.0;
  for (long a = lo; a < hi; ++a)
    for (long b = lo; b < hi; ++b) e = std::max(e, std::abs(get(a, b) - o.get(a, b)));
  return e;
}

}  // namespace pwig
