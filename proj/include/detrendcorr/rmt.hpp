#pragma once

#include "detrendcorr/corrmat.hpp"
#include "detrendcorr/types.hpp"

#include <Eigen/Dense>

namespace detrendcorr {

/// Eigenvalues in descending order with orthonormal eigenvectors as
/// columns. Each eigenvector is oriented so its component sum is >= 0
/// (tie: first nonzero component positive), making the decomposition
/// deterministic.
struct SpectralDecomposition {
  Eigen::VectorXd eigenvalues;
  Eigen::MatrixXd eigenvectors;

  int size() const { return static_cast<int>(eigenvalues.size()); }
};

SpectralDecomposition eigen_sym(const CorrMatrix& m);
SpectralDecomposition eigen_sym(const Eigen::MatrixXd& m);

/// Marchenko-Pastur law for Q = T/I and variance sigma2:
///   lambda_pm = sigma2 (1 + 1/Q +- 2 sqrt(1/Q))
struct MpLaw {
  double q_ratio = 0.0;
  double sigma2 = 1.0;
  double lambda_minus = 0.0;
  double lambda_plus = 0.0;
};

MpLaw mp_law(int t_pts, int i_cols, double sigma2 = 1.0);

/// Density Q sqrt((l+ - l)(l - l-)) / (2 pi sigma2 l) on [l-, l+], else 0.
double mp_density(const MpLaw& law, double lambda);

struct OutlierCount {
  int n_above = 0;
  int n_below = 0;
  double lambda1_ratio = 0.0;  // lambda_1 / lambda_plus
};

OutlierCount count_outliers(const SpectralDecomposition& spec,
                            const MpLaw& law);

/// Market-mode regression filter: Z_1(k) = sum_m v1[m] panel(k, m); every
/// column is regressed on Z_1 by OLS and replaced by its residual, which is
/// orthogonal to Z_1 by construction.
struct FilteredPanel {
  Panel residuals;
  Eigen::VectorXd intercept;  // a per column
  Eigen::VectorXd slope;      // b per column
  Eigen::ArrayXd z1;
};

FilteredPanel filter_market_mode(const Panel& panel,
                                 const Eigen::VectorXd& v1);

}  // namespace detrendcorr
