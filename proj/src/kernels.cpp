#include "pwig/kernels.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <mutex>

namespace pwig::kernels {

cplx RowSeries::evaluate(double k) const {
  cplx s{};
  for (std::size_t i = 0; i < harmonic.size(); ++i) {
    const double ph = -static_cast<double>(harmonic[i]) * k;
    s += coef[i] * cplx(std::cos(ph), std::sin(ph));
  }
  return s;
}

namespace {

void check_shape(std::span<const RowSeries> series, const WignerField& out) {
  if (series.size() != out.rows()) throw PhaseSpaceError("row series count does not match field rows");
}

}  // namespace

double evaluate_rows_serial(std::span<const RowSeries> series, WignerField& out) {
  check_shape(series, out);
  const double inv = 1.0 / kTwoPi;
  double residue = 0.0;
  for (std::size_t r = 0; r < out.rows(); ++r)
    for (std::size_t j = 0; j < out.cols(); ++j) {
      const cplx v = series[r].evaluate(out.grid().at(static_cast<int>(j))) * inv;
      residue = std::max(residue, std::abs(v.imag()));
      out(r, j) = v.real();
    }
  return residue;
}

double evaluate_rows_omp(std::span<const RowSeries> series, WignerField& out) {
  check_shape(series, out);
  const double inv = 1.0 / kTwoPi;
  const long rows = static_cast<long>(out.rows());
  const long cols = static_cast<long>(out.cols());
  double residue = 0.0;
#pragma omp parallel for collapse(2) reduction(max : residue) schedule(static)
  for (long r = 0; r < rows; ++r)
    for (long j = 0; j < cols; ++j) {
      const cplx v = series[r].evaluate(out.grid().at(static_cast<int>(j))) * inv;
      residue = std::max(residue, std::abs(v.imag()));
      out(r, j) = v.real();
    }
  return residue;
}

void cyclic_convolve_serial(const WignerField& in, std::span<const std::vector<double>> kernel,
                            double scale, WignerField& out) {
  const std::size_t n = in.cols();
  if (kernel.size() != in.rows() || out.rows() != in.rows() || out.cols() != n)
    throw PhaseSpaceError("convolution shape mismatch");
  for (std::size_t r = 0; r < in.rows(); ++r) {
    const auto& kr = kernel[r];
    if (kr.size() != n) throw PhaseSpaceError("kernel row length mismatch");
    auto src = in.row(r);
    for (std::size_t i = 0; i < n; ++i) {
      double s = 0.0;
      for (std::size_t l = 0; l < n; ++l) s += kr[(i + n - l) % n] * src[l];
      out(r, i) = scale * s;
    }
  }
}

namespace {

// FFTW's planner is not thread-safe; execution with new-array functions is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

struct FftPlans {
  fftw_plan forward = nullptr;
  fftw_plan backward = nullptr;
  explicit FftPlans(int n) {
    std::lock_guard lock(planner_mutex());
    double* re = fftw_alloc_real(static_cast<std::size_t>(n));
    fftw_complex* sp = fftw_alloc_complex(static_cast<std::size_t>(n / 2 + 1));
    forward = fftw_plan_dft_r2c_1d(n, re, sp, FFTW_ESTIMATE);
    backward = fftw_plan_dft_c2r_1d(n, sp, re, FFTW_ESTIMATE);
    fftw_free(re);
    fftw_free(sp);
  }
  ~FftPlans() {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(forward);
    fftw_destroy_plan(backward);
  }
  FftPlans(const FftPlans&) = delete;
  FftPlans& operator=(const FftPlans&) = delete;
};

}  // namespace

void cyclic_convolve_fft(const WignerField& in, std::span<const std::vector<double>> kernel,
                         double scale, WignerField& out) {
  const int n = static_cast<int>(in.cols());
  if (kernel.size() != in.rows() || out.rows() != in.rows() || static_cast<int>(out.cols()) != n)
    throw PhaseSpaceError("convolution shape mismatch");
  for (const auto& kr : kernel)
    if (static_cast<int>(kr.size()) != n) throw PhaseSpaceError("kernel row length mismatch");

  const FftPlans plans(n);
  const std::size_t nh = static_cast<std::size_t>(n / 2 + 1);
  const long rows = static_cast<long>(in.rows());
  const double norm = scale / n;

#pragma omp parallel
  {
    double* buf = fftw_alloc_real(static_cast<std::size_t>(n));
    fftw_complex* a = fftw_alloc_complex(nh);
    fftw_complex* b = fftw_alloc_complex(nh);
#pragma omp for schedule(static)
    for (long r = 0; r < rows; ++r) {
      auto src = in.row(static_cast<std::size_t>(r));
      std::copy(src.begin(), src.end(), buf);
      fftw_execute_dft_r2c(plans.forward, buf, a);
      std::copy(kernel[r].begin(), kernel[r].end(), buf);
      fftw_execute_dft_r2c(plans.forward, buf, b);
      for (std::size_t i = 0; i < nh; ++i) {
        const double re = a[i][0] * b[i][0] - a[i][1] * b[i][1];
        const double im = a[i][0] * b[i][1] + a[i][1] * b[i][0];
        a[i][0] = re;
        a[i][1] = im;
      }
      fftw_execute_dft_c2r(plans.backward, a, buf);
      auto dst = out.row(static_cast<std::size_t>(r));
      for (int i = 0; i < n; ++i) dst[i] = norm * buf[i];
    }
    fftw_free(buf);
    fftw_free(a);
    fftw_free(b);
  }
}

}  // namespace pwig::kernels
