#include <doctest.h>

#include <cmath>

#include "pwig/bessel.hpp"

using namespace pwig;

TEST_CASE("Miller recurrence matches the standard library") {
  for (double x : {0.0, 1e-3, 0.7, 4.0, 10.0, 20.0, 80.0, 200.0}) {
    const int top = static_cast<int>(x) + 60;
    const auto j = bessel::orders(top, x);
    for (int n = 0; n <= top; ++n) {
      const double ref = std::cyl_bessel_j(static_cast<double>(n), x);
      CHECK(std::abs(j[n] - ref) < 1e-12);
    }
  }
}

TEST_CASE("negative orders and arguments") {
  for (int n : {1, 2, 5, 8}) {
    const double x = 3.3;
    CHECK(bessel::jn(-n, x) == doctest::Approx((n % 2 ? -1.0 : 1.0) * bessel::jn(n, x)).epsilon(1e-14));
    CHECK(bessel::jn(n, -x) == doctest::Approx((n % 2 ? -1.0 : 1.0) * bessel::jn(n, x)).epsilon(1e-14));
  }
  CHECK(bessel::jn(0, 0.0) == 1.0);
  CHECK(bessel::jn(3, 0.0) == 0.0);
}

TEST_CASE("table reads zero past its order limit") {
  const bessel::Table t(10, 2.0);
  CHECK(t(11) == 0.0);
  CHECK(t(-3) == doctest::Approx(-std::cyl_bessel_j(3.0, 2.0)));
}

TEST_CASE("recurrence J_{n-1} + J_{n+1} = (2n/x) J_n") {
  const double x = 13.7;
  const auto j = bessel::orders(60, x);
  for (int n = 1; n < 59; ++n) CHECK(std::abs(j[n - 1] + j[n + 1] - 2.0 * n / x * j[n]) < 1e-13);
}
