#include "detrendcorr/rmt.hpp"

#include <cmath>
#include <stdexcept>

namespace detrendcorr {

SpectralDecomposition eigen_sym(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("eigen_sym: not square");
  const double asym = (m - m.transpose()).cwiseAbs().maxCoeff();
  if (asym > 1e-10) {
    throw std::invalid_argument("eigen_sym: matrix not symmetric (max dev " +
                                std::to_string(asym) + ")");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eigen_sym: decomposition failed");
  }
  const int n = static_cast<int>(m.rows());
  SpectralDecomposition out;
  out.eigenvalues.resize(n);
  out.eigenvectors.resize(n, n);
  // Eigen returns ascending order; flip to descending.
  for (int i = 0; i < n; ++i) {
    out.eigenvalues[i] = solver.eigenvalues()[n - 1 - i];
    out.eigenvectors.col(i) = solver.eigenvectors().col(n - 1 - i);
  }
  // Deterministic orientation: component sum >= 0, ties resolved by the
  // sign of the first nonzero component.
  for (int i = 0; i < n; ++i) {
    const double total = out.eigenvectors.col(i).sum();
    bool flip = total < 0.0;
    if (total == 0.0) {
      for (int k = 0; k < n; ++k) {
        const double v = out.eigenvectors(k, i);
        if (v != 0.0) {
          flip = v < 0.0;
          break;
        }
      }
    }
    if (flip) out.eigenvectors.col(i) = -out.eigenvectors.col(i);
  }
  return out;
}

SpectralDecomposition eigen_sym(const CorrMatrix& m) {
  return eigen_sym(m.values);
}

MpLaw mp_law(int t_pts, int i_cols, double sigma2) {
  if (i_cols <= 0 || t_pts <= 0) throw std::invalid_argument("mp_law: sizes must be positive");
  MpLaw law;
  law.q_ratio = double(t_pts) / double(i_cols);
  if (law.q_ratio <= 1.0) {
    throw std::invalid_argument("mp_law: Q = T/I must exceed 1");
  }
  law.sigma2 = sigma2;
  const double inv_q = 1.0 / law.q_ratio;
  const double root = 2.0 * std::sqrt(inv_q);
  law.lambda_minus = sigma2 * (1.0 + inv_q - root);
  law.lambda_plus = sigma2 * (1.0 + inv_q + root);
  return law;
}

double mp_density(const MpLaw& law, double lambda) {
  if (lambda <= law.lambda_minus || lambda >= law.lambda_plus) return 0.0;
  const double num =
      std::sqrt((law.lambda_plus - lambda) * (lambda - law.lambda_minus));
  return law.q_ratio * num / (2.0 * M_PI * law.sigma2 * lambda);
}

OutlierCount count_outliers(const SpectralDecomposition& spec,
                            const MpLaw& law) {
  OutlierCount c;
  for (int i = 0; i < spec.size(); ++i) {
    if (spec.eigenvalues[i] > law.lambda_plus) ++c.n_above;
    if (spec.eigenvalues[i] < law.lambda_minus) ++c.n_below;
  }
  c.lambda1_ratio =
      spec.size() > 0 ? spec.eigenvalues[0] / law.lambda_plus : 0.0;
  return c;
}

FilteredPanel filter_market_mode(const Panel& panel,
                                 const Eigen::VectorXd& v1) {
  const Eigen::Index n = panel.cols();
  if (v1.size() != n) {
    throw std::invalid_argument("filter_market_mode: v1 length != column count");
  }
  FilteredPanel out;
  out.z1 = (panel.data * v1).array();
  const double z_mean = out.z1.mean();
  const Eigen::ArrayXd zc = out.z1 - z_mean;
  const double z_var = (zc * zc).sum();
  if (!(z_var > 0.0)) {
    throw std::runtime_error("filter_market_mode: Z_1 has zero variance");
  }

  out.intercept.resize(n);
  out.slope.resize(n);
  out.residuals = panel;
  for (Eigen::Index j = 0; j < n; ++j) {
    const Eigen::ArrayXd col = panel.data.col(j).array();
    const double c_mean = col.mean();
    const double b = ((col - c_mean) * zc).sum() / z_var;
    const double a = c_mean - b * z_mean;
    out.slope[j] = b;
    out.intercept[j] = a;
    out.residuals.data.col(j) = (col - a - b * out.z1).matrix();
  }
  return out;
}

}  // namespace detrendcorr
