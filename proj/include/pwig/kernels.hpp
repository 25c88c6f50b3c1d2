// Grid kernels shared by the phase-space and dynamics modules.
//
// Each kernel comes as a serial reference and a parallel variant.  Every
// output sample is produced by one thread with a fixed summation order, so
// both variants return bit-identical results; the serial forms are kept for
// tests and the benchmark.
#pragma once

#include <span>
#include <vector>

#include "pwig/lattice.hpp"

namespace pwig::kernels {

/// A finite trigonometric series sum_i coef_i * exp(-i * harmonic_i * k).
struct RowSeries {
  std::vector<long> harmonic;
  std::vector<cplx> coef;

  cplx evaluate(double k) const;
};

/// Fills `out` with (1/2pi) * series_r(k_j) per row; returns the largest
/// imaginary residue seen.
double evaluate_rows_serial(std::span<const RowSeries> series, WignerField& out);
double evaluate_rows_omp(std::span<const RowSeries> series, WignerField& out);

/// out(r, i) = scale * sum_l kernel_r[(i - l) mod count] * in(r, l)
void cyclic_convolve_serial(const WignerField& in, std::span<const std::vector<double>> kernel,
                            double scale, WignerField& out);
/// Same contract, FFT-based and parallel over rows.
void cyclic_convolve_fft(const WignerField& in, std::span<const std::vector<double>> kernel,
                         double scale, WignerField& out);

}  // namespace pwig::kernels
