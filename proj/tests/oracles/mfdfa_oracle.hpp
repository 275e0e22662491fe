#pragma once

// Independent brute-force evaluation of the detrended fluctuation formulas,
// written against the same segment convention as the library but with none
// of its machinery: plain loops, Vandermonde normal equations solved by
// Gaussian elimination, no Eigen. Used only to cross-check the production
// path.

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace oracle {

// solve the (m+1)x(m+1) system a * coef = b in place
inline std::vector<double> solve_dense(std::vector<std::vector<double>> a,
                                       std::vector<double> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::fabs(a[r][col]) > std::fabs(a[pivot][col])) pivot = r;
    }
    std::swap(a[col], a[pivot]);
    std::swap(b[col], b[pivot]);
    if (a[col][col] == 0.0) throw std::runtime_error("singular normal equations");
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  std::vector<double> x(n, 0.0);
  for (std::size_t ri = n; ri-- > 0;) {
    double acc = b[ri];
    for (std::size_t c = ri + 1; c < n; ++c) acc -= a[ri][c] * x[c];
    x[ri] = acc / a[ri][ri];
  }
  return x;
}

// least-squares polynomial fit of values over the uniform grid u in [-1, 1],
// returning the fitted values
inline std::vector<double> poly_fit_values(const std::vector<double>& y,
                                           int order) {
  const std::size_t s = y.size();
  std::vector<double> u(s);
  for (std::size_t i = 0; i < s; ++i) {
    u[i] = s > 1 ? -1.0 + 2.0 * double(i) / double(s - 1) : 0.0;
  }
  const int p = order + 1;
  std::vector<std::vector<double>> ata(p, std::vector<double>(p, 0.0));
  std::vector<double> atb(p, 0.0);
  for (std::size_t i = 0; i < s; ++i) {
    std::vector<double> pw(p, 1.0);
    for (int k = 1; k < p; ++k) pw[k] = pw[k - 1] * u[i];
    for (int r = 0; r < p; ++r) {
      for (int c = 0; c < p; ++c) ata[r][c] += pw[r] * pw[c];
      atb[r] += pw[r] * y[i];
    }
  }
  const std::vector<double> coef = solve_dense(ata, atb);
  std::vector<double> fit(s, 0.0);
  for (std::size_t i = 0; i < s; ++i) {
    double pw = 1.0;
    for (int k = 0; k < p; ++k) {
      fit[i] += coef[k] * pw;
      pw *= u[i];
    }
  }
  return fit;
}

// per-segment detrended covariance f2_xy(s, nu) for every segment: the
// first m_s walk from the left, the mirror family walks from the right end
// inward. Pass x == y for the variances.
inline std::vector<double> segment_covariances(const std::vector<double>& x,
                                               const std::vector<double>& y,
                                               int s, int order) {
  const int t = static_cast<int>(x.size());
  const int m_s = t / s;
  std::vector<double> f2;
  f2.reserve(2 * m_s);

  auto detrended = [&](const std::vector<double>& src, int base,
                       int step) {
    std::vector<double> profile(s);
    double run = 0.0;
    for (int i = 0; i < s; ++i) {
      run += src[base + step * i];
      profile[i] = run;
    }
    const std::vector<double> fit = poly_fit_values(profile, order);
    for (int i = 0; i < s; ++i) profile[i] -= fit[i];
    return profile;
  };

  for (int nu = 0; nu < m_s; ++nu) {
    const auto rx = detrended(x, nu * s, +1);
    const auto ry = detrended(y, nu * s, +1);
    double acc = 0.0;
    for (int i = 0; i < s; ++i) acc += rx[i] * ry[i];
    f2.push_back(acc / double(s));
  }
  for (int nu = 0; nu < m_s; ++nu) {
    const auto rx = detrended(x, t - 1 - nu * s, -1);
    const auto ry = detrended(y, t - 1 - nu * s, -1);
    double acc = 0.0;
    for (int i = 0; i < s; ++i) acc += rx[i] * ry[i];
    f2.push_back(acc / double(s));
  }
  return f2;
}

// literal fluctuation function: mean over segments of sign(f2) |f2|^(q/2)
inline double fluctuation(const std::vector<double>& f2, double q) {
  double acc = 0.0;
  for (double v : f2) {
    if (v > 0.0)
      acc += std::pow(v, 0.5 * q);
    else if (v < 0.0)
      acc -= std::pow(-v, 0.5 * q);
  }
  return acc / double(f2.size());
}

// rho(q, s) straight from the definitions
inline double rho(const std::vector<double>& x, const std::vector<double>& y,
                  double q, int s, int order) {
  const auto fxy = segment_covariances(x, y, s, order);
  const auto fxx = segment_covariances(x, x, s, order);
  const auto fyy = segment_covariances(y, y, s, order);
  return fluctuation(fxy, q) /
         std::sqrt(fluctuation(fxx, q) * fluctuation(fyy, q));
}

}  // namespace oracle
