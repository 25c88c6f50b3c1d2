// Integer-order Bessel functions of the first kind.
#pragma once

#include <vector>

namespace pwig::bessel {

/// J_0(x) .. J_{n_max}(x) by Miller's backward recurrence, normalized with
/// J_0 + 2 sum_k J_{2k} = 1.  Valid for any real x.
std::vector<double> orders(int n_max, double x);

/// J_n(x) for any integer n (J_{-n} = (-1)^n J_n).
double jn(int n, double x);

/// Table of J_n(x) for |n| <= n_max at a fixed argument.
class Table {
 public:
  Table(int n_max, double x);
  double operator()(long n) const;
  int n_max() const { return n_max_; }

 private:
  int n_max_;
  std::vector<double> pos_;
};

}  // namespace pwig::bessel
