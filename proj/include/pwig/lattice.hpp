// Phase-space containers: lattice kets, quasi-momentum grids, sampled Wigner
// fields and density windows.
//
// Index convention: phase-space rows are addressed by the doubled index
// M = 2n, so integer and half-integer points are both exact integers.  Kets
// only ever live on integer sites n; the doubled form exists for the rows of
// a WignerField and for LatticeState::from_doubled.
#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace pwig {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Raised for violated preconditions of phase-space operations.
class PhaseSpaceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Integer: rows at integer n only.  HalfInteger: rows at every n in Z/2.
enum class LatticeMode { Integer, HalfInteger };

enum class Period { Pi, TwoPi };

inline double period_length(Period p) { return p == Period::Pi ? kPi : kTwoPi; }

/// Uniform samples k_j = j * period / count on [0, period).
class QuasiMomentumGrid {
 public:
  QuasiMomentumGrid(Period period, int count);

  Period period() const { return period_; }
  int count() const { return count_; }
  double length() const { return period_length(period_); }
  double spacing() const { return length() / count_; }
  double at(int j) const { return j * spacing(); }
  std::vector<double> samples() const;

 private:
  Period period_;
  int count_;
};

/// Complex amplitudes psi_n on the integer window [n_min, n_min + size).
class LatticeState {
 public:
  LatticeState() = default;
  /// Normalizes unless `normalize` is false, in which case the state is
  /// flagged unnormalized.
  LatticeState(long n_min, std::vector<cplx> amplitudes, bool normalize = true);

  /// Builds from a doubled-index array (entry m represents n = m/2).
  /// Odd entries must be exactly zero.
  static LatticeState from_doubled(long offset_twice, std::span<const cplx> doubled,
                                   bool normalize = true);

  static LatticeState position(long n, long n_min, long n_max);

  long n_min() const { return n_min_; }
  long n_max() const { return n_min_ + static_cast<long>(amps_.size()) - 1; }
  long offset_twice() const { return 2 * n_min_; }
  std::size_t size() const { return amps_.size(); }
  bool normalized() const { return normalized_; }

  /// Amplitude at site n; zero outside the window.
  cplx operator()(long n) const {
    const long i = n - n_min_;
    return (i < 0 || i >= static_cast<long>(amps_.size())) ? cplx{} : amps_[i];
  }
  cplx& at(long n) { return amps_.at(static_cast<std::size_t>(n - n_min_)); }

  std::span<const cplx> amplitudes() const { return amps_; }
  double norm_squared() const;
  /// Max |psi| over the outermost `width` sites on each side.
  double boundary_amplitude(int width = 1) const;
  /// Throws if boundary amplitude exceeds `tol`.
  void require_clean_boundary(double tol = 1e-10) const;

  /// Copy on a wider window [lo, hi] (must contain the current one).
  LatticeState widened(long lo, long hi) const;

 private:
  long n_min_ = 0;
  std::vector<cplx> amps_;
  bool normalized_ = false;
};

/// Real samples W(M/2, k_j).  Rows step by 2 in Integer mode, by 1 in
/// HalfInteger mode.
class WignerField {
 public:
  WignerField(LatticeMode mode, long m_min_twice, long m_max_twice, QuasiMomentumGrid grid);

  LatticeMode mode() const { return mode_; }
  const QuasiMomentumGrid& grid() const { return grid_; }
  long m_min_twice() const { return m_min_; }
  long m_max_twice() const { return m_max_; }
  int row_step() const { return mode_ == LatticeMode::Integer ? 2 : 1; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return static_cast<std::size_t>(grid_.count()); }

  long row_twice(std::size_t r) const { return m_min_ + static_cast<long>(r) * row_step(); }
  /// Row index of doubled position M; throws if M is not a row.
  std::size_t row_of(long m_twice) const;
  bool has_row(long m_twice) const;

  double& operator()(std::size_t r, std::size_t j) { return values_[r * cols() + j]; }
  double operator()(std::size_t r, std::size_t j) const { return values_[r * cols() + j]; }
  double at_twice(long m_twice, std::size_t j) const { return (*this)(row_of(m_twice), j); }

  std::span<double> row(std::size_t r) { return {values_.data() + r * cols(), cols()}; }
  std::span<const double> row(std::size_t r) const { return {values_.data() + r * cols(), cols()}; }
  std::span<const double> values() const { return values_; }

  double max_abs() const;
  /// Sum over rows and trapezoid over k (scaled to a 2pi integral).
  double total_integral() const;
  /// Copy restricted to rows [lo_twice, hi_twice].
  WignerField cropped(long lo_twice, long hi_twice) const;

 private:
  LatticeMode mode_;
  long m_min_, m_max_;
  QuasiMomentumGrid grid_;
  std::size_t rows_;
  std::vector<double> values_;
};

/// Hermitian matrix rho_{ab} over the integer window [n_min, n_min + dim).
class DensityWindow {
 public:
  DensityWindow(long n_min, int dim);
  static DensityWindow pure(const LatticeState& psi);

  long n_min() const { return n_min_; }
  int dim() const { return dim_; }
  cplx& operator()(long a, long b) { return m_[idx(a, b)]; }
  cplx operator()(long a, long b) const { return m_[idx(a, b)]; }
  /// Element <a|rho|b>, zero outside the window.
  cplx get(long a, long b) const;
  bool contains(long a) const { return a >= n_min_ && a < n_min_ + dim_; }

  double hermiticity_error() const;
  cplx trace() const;
  void require_hermitian(double tol = 1e-12) const;
  double max_abs_diff(const DensityWindow& other) const;

 private:
  std::size_t idx(long a, long b) const {
    return static_cast<std::size_t>(a - n_min_) * dim_ + static_cast<std::size_t>(b - n_min_);
  }
  long n_min_;
  int dim_;
  std::vector<cplx> m_;
};

}  // namespace pwig
