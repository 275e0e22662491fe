#include "detrendcorr/diststats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace detrendcorr {

namespace {

// least squares of y against x; returns (slope, intercept, r2)
struct LineFit {
  double slope = 0.0, intercept = 0.0, r2 = 1.0;
};

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  const int n = static_cast<int>(x.size());
  double mx = 0.0, my = 0.0;
  for (int i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (int i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (!(sxx > 0.0)) throw std::runtime_error("fit_line: degenerate abscissa");
  LineFit f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  double ssr = 0.0;
  for (int i = 0; i < n; ++i) {
    const double e = y[i] - (f.intercept + f.slope * x[i]);
    ssr += e * e;
  }
  f.r2 = syy > 0.0 ? 1.0 - ssr / syy : 1.0;
  return f;
}

double sample_std(const Eigen::ArrayXd& v) {
  const double mean = v.mean();
  const double ss = ((v - mean) * (v - mean)).sum();
  return std::sqrt(ss / double(v.size() - 1));
}

// tail CCDF points (ln x, ln(-ln P)) machinery shared by the two fits
std::vector<double> sorted_tail(const Eigen::ArrayXd& values, double x_min) {
  std::vector<double> tail;
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    if (values[i] > x_min) tail.push_back(values[i]);
  }
  std::sort(tail.begin(), tail.end());
  return tail;
}

}  // namespace

double CcdfCurve::exceedance(double x) const {
  // points hold P(X >= x_k) on ascending x_k; strict exceedance is the
  // value at the next point above x.
  for (const auto& [xk, p] : points) {
    if (xk > x) return p;
  }
  return 0.0;
}

CcdfCurve ccdf(const Eigen::ArrayXd& values, bool normalize) {
  const Eigen::Index n = values.size();
  if (n < 2) throw std::invalid_argument("ccdf: need at least 2 values");

  CcdfCurve curve;
  curve.sigma = 1.0;
  std::vector<double> sorted(values.data(), values.data() + n);
  std::sort(sorted.begin(), sorted.end());
  if (sorted.front() == sorted.back()) {
    throw std::invalid_argument("ccdf: all values identical");
  }
  if (normalize) {
    curve.sigma = sample_std(values);
  }
  for (Eigen::Index k = 0; k < n; ++k) {
    if (k > 0 && sorted[k] == sorted[k - 1]) continue;
    curve.points.emplace_back(sorted[k] / curve.sigma,
                              double(n - k) / double(n));
  }
  return curve;
}

TailFit fit_powerlaw_tail(const Eigen::ArrayXd& values, double x_min) {
  if (!(x_min > 0.0)) throw std::invalid_argument("fit_powerlaw_tail: x_min must be > 0");
  const std::vector<double> tail = sorted_tail(values, x_min);
  const int n = static_cast<int>(tail.size());
  if (n < 50) {
    throw std::runtime_error("fit_powerlaw_tail: fewer than 50 tail samples");
  }
  double log_sum = 0.0;
  for (double x : tail) log_sum += std::log(x / x_min);

  TailFit fit;
  fit.kind = TailKind::power_law;
  fit.x_min = x_min;
  fit.n_tail = n;
  fit.exponent = double(n) / log_sum;  // Hill MLE

  // log-log CCDF slope as a linearity diagnostic
  std::vector<double> lx, lp;
  for (int k = 0; k < n; ++k) {
    if (k > 0 && tail[k] == tail[k - 1]) continue;
    lx.push_back(std::log(tail[k]));
    lp.push_back(std::log(double(n - k) / double(n)));
  }
  if (lx.size() >= 3) {
    const LineFit line = fit_line(lx, lp);
    fit.loglog_slope = line.slope;
    fit.loglog_r2 = line.r2;
    fit.poor_fit = line.r2 < 0.98;
  }
  return fit;
}

TailFit fit_stretched_exp(const Eigen::ArrayXd& values, double x_min) {
  const Eigen::Index n_total = values.size();
  std::vector<double> sorted(values.data(), values.data() + n_total);
  std::sort(sorted.begin(), sorted.end());
  int n = 0;
  for (double v : sorted) n += (v > x_min) ? 1 : 0;
  if (n < 50) {
    throw std::runtime_error("fit_stretched_exp: fewer than 50 tail samples");
  }
  // ln(-ln P) is linear in ln x only for the unconditional CCDF, so P is
  // ranked against the full sample and merely evaluated at tail points.
  std::vector<double> lx, ly;
  for (Eigen::Index k = 0; k < n_total; ++k) {
    if (k > 0 && sorted[k] == sorted[k - 1]) continue;
    if (!(sorted[k] > x_min) || !(sorted[k] > 0.0)) continue;
    const double p = double(n_total - k) / double(n_total);
    if (p >= 1.0 || p <= 0.0) continue;
    lx.push_back(std::log(sorted[k]));
    ly.push_back(std::log(-std::log(p)));
  }
  if (lx.size() < 3) {
    throw std::runtime_error("fit_stretched_exp: degenerate tail");
  }
  const LineFit line = fit_line(lx, ly);
  TailFit fit;
  fit.kind = TailKind::stretched_exp;
  fit.x_min = x_min;
  fit.n_tail = n;
  fit.exponent = line.slope;  // beta
  fit.loglog_slope = line.slope;
  fit.loglog_r2 = line.r2;
  fit.poor_fit = line.r2 < 0.98;
  return fit;
}

double percentile(const Eigen::ArrayXd& values, double pct) {
  if (values.size() == 0) throw std::invalid_argument("percentile: empty input");
  std::vector<double> sorted(values.data(), values.data() + values.size());
  std::sort(sorted.begin(), sorted.end());
  const double rank = pct / 100.0 * double(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(rank));
  const auto hi = static_cast<std::size_t>(std::ceil(rank));
  const double frac = rank - double(lo);
  return sorted[lo] * (1.0 - frac) + sorted[hi] * frac;
}

AcfCurve acf(const Eigen::ArrayXd& x, int max_lag) {
  const int t = static_cast<int>(x.size());
  if (max_lag < 1) throw std::invalid_argument("acf: max_lag must be >= 1");
  if (max_lag >= t / 4) {
    throw std::invalid_argument("acf: max_lag must be below T/4");
  }
  const double mean = x.mean();
  const Eigen::ArrayXd c = x - mean;
  const double var = (c * c).sum() / double(t);  // biased, denominator T
  if (!(var > 0.0)) throw std::invalid_argument("acf: zero variance");

  AcfCurve out;
  out.lags.reserve(max_lag);
  out.values.reserve(max_lag);
  for (int lag = 1; lag <= max_lag; ++lag) {
    double acc = 0.0;
    // the lagged sum only runs over defined products (i + lag <= T)
    for (int i = 0; i + lag < t; ++i) acc += c[i] * c[i + lag];
    out.lags.push_back(lag);
    out.values.push_back(acc / double(t) / var);
  }
  return out;
}

}  // namespace detrendcorr
