#include "pwig/bessel.hpp"

#include <cmath>
#include <cstdlib>

namespace pwig::bessel {

namespace {

constexpr double kAcc = 160.0;
constexpr double kBig = 1e250;
constexpr double kBigInv = 1e-250;

// Nonnegative argument only.
std::vector<double> orders_nonneg(int n_max, double x) {
  std::vector<double> out(static_cast<std::size_t>(n_max) + 1, 0.0);
  if (x == 0.0) {
    out[0] = 1.0;
    return out;
  }
  const double top = std::max<double>(n_max, std::ceil(x));
  int start = static_cast<int>(top + std::ceil(std::sqrt(kAcc * top)) + 20.0);
  if (start % 2 != 0) ++start;

  // Backward sweep; values above n_max are kept only as recurrence state.
  double jp = 0.0, j = 1.0, sum = 0.0;
  const double two_over_x = 2.0 / x;
  for (int k = start; k > 0; --k) {
    const double jm = k * two_over_x * j - jp;
    jp = j;
    j = jm;
    if (k - 1 <= n_max) out[k - 1] = j;
    if ((k - 1) % 2 == 0 && k - 1 > 0) sum += j;
    if (std::abs(j) > kBig) {
      j *= kBigInv;
      jp *= kBigInv;
      sum *= kBigInv;
      for (int i = k - 1; i <= n_max; ++i) out[i] *= kBigInv;
    }
  }
  const double norm = 2.0 * sum + j;  // j is the unnormalized J_0
  for (double& v : out) v /= norm;
  return out;
}

}  // namespace

std::vector<double> orders(int n_max, double x) {
  if (n_max < 0) n_max = 0;
  auto out = orders_nonneg(n_max, std::abs(x));
  if (x < 0.0)
    for (int n = 1; n <= n_max; n += 2) out[n] = -out[n];
  return out;
}

double jn(int n, double x) {
  const int a = std::abs(n);
  const double v = orders(a, x)[a];
  return (n < 0 && (a % 2 != 0)) ? -v : v;
}

Table::Table(int n_max, double x) : n_max_(n_max), pos_(orders(n_max, x)) {}

double Table::operator()(long n) const {
  const long a = std::labs(n);
  if (a > n_max_) return 0.0;
  const double v = pos_[static_cast<std::size_t>(a)];
  return (n < 0 && (a % 2 != 0)) ? -v : v;
}

}  // namespace pwig::bessel
