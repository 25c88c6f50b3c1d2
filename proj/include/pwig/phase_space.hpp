// Discrete Wigner functions on the lattice x quasi-momentum phase space.
//
//   W(n,k) = (1/2pi) sum_{n'} psi*_{n-n'} psi_{n+n'} exp(-2ikn')
//
// In doubled-index form the row M = 2n collects all integer pairs a + b = M:
//   W(M/2, k) = (1/2pi) sum_{a+b=M} rho_{ba} exp(-ik(b-a)).
// Integer mode keeps the even rows (integer n), half-integer mode keeps all.
#pragma once

#include <functional>
#include <vector>

#include "pwig/kernels.hpp"
#include "pwig/lattice.hpp"

namespace pwig {

enum class Exec { Serial, Parallel };

WignerField wigner_from_state(const LatticeState& psi, const QuasiMomentumGrid& grid, LatticeMode mode,
                              Exec exec = Exec::Parallel);

WignerField wigner_from_density(const DensityWindow& rho, const QuasiMomentumGrid& grid, LatticeMode mode,
                                Exec exec = Exec::Parallel);

/// Per-row trigonometric series of a pure state (used by kernels and oracles).
std::vector<kernels::RowSeries> row_series(const LatticeState& psi, long m_lo_twice, long m_hi_twice, int step);

/// k-integral of every row, indexed like the field rows.  Needs period 2pi.
std::vector<double> marginal_position(const WignerField& w);

/// Sum over all rows at every k sample.  Needs half-integer mode.
std::vector<double> marginal_momentum(const WignerField& w);

/// Row r holds int dk exp(2imk) W(n_r, k) = <n_r+m|rho|n_r-m>; rows where
/// n_r +- m is not integer hold zero.  `m_twice` is the doubled offset.
std::vector<cplx> coherence_extract(const WignerField& w, long m_twice);

/// Rebuilds rho_{ab} on [n_min, n_min + dim) from point samples W(M/2, k).
/// `k_count` must be at least twice the window width.
DensityWindow reconstruct_operator(const std::function<double(long m_twice, double k)>& sampler, long n_min,
                                   int dim, int k_count);
/// Same, reading a half-integer field covering the window.
DensityWindow reconstruct_operator(const WignerField& w, long n_min, int dim);

/// Closed-form field of (|n1> + |n2>)/sqrt2 on sites [lo, hi].
WignerField cat_position_wigner(long n1, long n2, const QuasiMomentumGrid& grid, LatticeMode mode, long lo,
                                long hi);

/// A sum of exact momentum deltas: W(n,k) = sum_l weight_l(n) delta(k - k_l).
class DeltaField {
 public:
  struct Line {
    double k_center;
    std::vector<double> weight;  // per row
  };

  DeltaField(LatticeMode mode, long m_lo_twice, long m_hi_twice);

  LatticeMode mode() const { return mode_; }
  long m_lo_twice() const { return lo_; }
  long m_hi_twice() const { return hi_; }
  int row_step() const { return mode_ == LatticeMode::Integer ? 2 : 1; }
  std::size_t rows() const { return static_cast<std::size_t>((hi_ - lo_) / row_step() + 1); }
  long row_twice(std::size_t r) const { return lo_ + static_cast<long>(r) * row_step(); }

  void add_line(double k_center, std::function<double(long m_twice)> weight);
  const std::vector<Line>& lines() const { return lines_; }

  /// Grid rendering for plots: weight / dk in the nearest k sample.
  WignerField render(const QuasiMomentumGrid& grid) const;

 private:
  LatticeMode mode_;
  long lo_, hi_;
  std::vector<Line> lines_;
};

/// W of a Bloch wave |k0>: delta(k - k0) / 2pi on every row.
DeltaField momentum_eigenstate_wigner(double k0, LatticeMode mode, long lo, long hi);

/// Closed-form field of (|k1> + |k2>)/sqrt2 on sites [lo, hi].
DeltaField cat_momentum_wigner(double k1, double k2, LatticeMode mode, long lo, long hi);

}  // namespace pwig
