#pragma once

#include "detrendcorr/types.hpp"

#include <Eigen/Dense>

#include <utility>
#include <vector>

namespace detrendcorr {

/// Empirical complementary CDF. Points are (x_k, P(X >= x_k)) over the
/// sorted unique values, so P stays in (0, 1]; `exceedance(x)` evaluates
/// the strict tail P(X > x) at an arbitrary point.
struct CcdfCurve {
  std::vector<std::pair<double, double>> points;
  double sigma = 1.0;  // std used for normalization (1 when not normalized)

  double exceedance(double x) const;
};

CcdfCurve ccdf(const Eigen::ArrayXd& values, bool normalize);

enum class TailKind { power_law, stretched_exp };

struct TailFit {
  TailKind kind = TailKind::power_law;
  double exponent = 0.0;  // gamma or beta
  double x_min = 0.0;     // threshold, same units as the fitted values
  int n_tail = 0;
  double loglog_slope = 0.0;  // diagnostic log-log regression slope
  double loglog_r2 = 0.0;     // tail-linearity diagnostic
  bool poor_fit = false;      // loglog_r2 below 0.98
};

/// Hill maximum-likelihood tail exponent over samples above x_min:
///   gamma = n / sum ln(x_i / x_min).
/// Requires at least 50 tail samples.
TailFit fit_powerlaw_tail(const Eigen::ArrayXd& values, double x_min);

/// Stretched-exponential CCDF exp(-x^beta): least squares of ln(-ln P)
/// against ln x on the empirical tail above x_min.
TailFit fit_stretched_exp(const Eigen::ArrayXd& values, double x_min);

double percentile(const Eigen::ArrayXd& values, double pct);

struct AcfCurve {
  std::vector<int> lags;       // 1..max_lag
  std::vector<double> values;  // A(lag)
};

/// Autocorrelation with global mean and biased variance (denominator T);
/// the lagged sum is truncated to the overlapping part of the series.
AcfCurve acf(const Eigen::ArrayXd& x, int max_lag);

}  // namespace detrendcorr
