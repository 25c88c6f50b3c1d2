// Serial reference vs parallel kernels on acceptance-sized inputs.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>

#include <omp.h>

#include "pwig/dynamics.hpp"
#include "pwig/models.hpp"
#include "pwig/phase_space.hpp"
#include "pwig/verify.hpp"

using namespace pwig;

namespace {

double best_of(int reps, const std::function<void()>& f) {
  double best = 1e300;
  for (int i = 0; i < reps; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

void row(const char* name, double serial, double parallel) {
  std::printf("%-34s serial %9.3f ms   parallel %9.3f ms   speedup %5.2fx\n", name, 1e3 * serial, 1e3 * parallel,
              serial / parallel);
}

}  // namespace

int main() {
  std::printf("threads: %d\n", omp_get_max_threads());
  std::mt19937_64 rng(7);

  const auto psi = verify::random_state(rng, -64, 128);
  const QuasiMomentumGrid grid(Period::TwoPi, 512);
  row("wigner_from_state 130x512 half",
      best_of(3, [&] { wigner_from_state(psi, grid, LatticeMode::HalfInteger, Exec::Serial); }),
      best_of(3, [&] { wigner_from_state(psi, grid, LatticeMode::HalfInteger, Exec::Parallel); }));

  const auto jc = models::jc_spectrum({1.0, 0.5, 1.0});
  const auto w0 = wigner_from_state(psi, grid, LatticeMode::Integer);
  row("propagate_wigner direct vs fft",
      best_of(3, [&] { dynamics::propagate_wigner(w0, jc, 5.0, {.exec = Exec::Serial}); }),
      best_of(3, [&] { dynamics::propagate_wigner(w0, jc, 5.0, {.exec = Exec::Parallel}); }));
  return 0;
}
