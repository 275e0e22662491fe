#pragma once

// Composite Simpson quadrature used as the integration oracle.

#include <functional>

namespace oracle {

inline double simpson(const std::function<double(double)>& f, double a,
                      double b, int intervals) {
  if (intervals % 2 != 0) ++intervals;
  const double h = (b - a) / double(intervals);
  double acc = f(a) + f(b);
  for (int k = 1; k < intervals; ++k) {
    acc += f(a + h * double(k)) * (k % 2 == 1 ? 4.0 : 2.0);
  }
  return acc * h / 3.0;
}

}  // namespace oracle
