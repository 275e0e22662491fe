#pragma once

#include "detrendcorr/mfdfa.hpp"
#include "detrendcorr/types.hpp"

#include <Eigen/Dense>

#include <string>
#include <vector>

namespace detrendcorr {

enum class CorrKind { pearson, detrended };

/// Symmetric correlation matrix with provenance. For the detrended kind the
/// raw rho(q, s) values are stored; q != 2 entries can leave [-1, 1], so
/// `clamped()` is what feeds the metric-distance transform.
struct CorrMatrix {
  Eigen::MatrixXd values;
  std::vector<std::string> labels;
  CorrKind kind = CorrKind::pearson;
  double q = 0.0;     // detrended only
  int s = 0;          // detrended only, in bins
  Observable observable = Observable::other;
  Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic> flagged;  // undefined cells

  int size() const { return static_cast<int>(values.rows()); }
  bool any_flagged() const;
  Eigen::MatrixXd clamped() const;  // entries clamped to [-1, 1]
};

/// Sample Pearson correlation matrix of the panel columns.
/// Throws if a column has zero variance, naming it.
CorrMatrix pearson_matrix(const Panel& panel);

/// q-dependent detrended correlation coefficient
///   rho(q,s) = F_XY(q,s) / sqrt(F_XX(q,s) F_YY(q,s))
/// evaluated from the literal fluctuation values. Throws on a zero or
/// invalid denominator.
double rho_q(const Eigen::ArrayXd& x, const Eigen::ArrayXd& y, double q,
             int s, const DetrendConfig& cfg = {});

/// All-pairs detrended correlation matrix at a single (q, s). Per-column
/// fluctuations are computed once and shared; undefined cells are flagged
/// (value NaN) instead of aborting the matrix.
CorrMatrix detrended_matrix(const Panel& panel, double q, int s,
                            const DetrendConfig& cfg = {}, int jobs = 1);

/// Batch over several q at one scale, sharing the per-column detrending.
std::vector<CorrMatrix> detrended_matrices(const Panel& panel,
                                           const std::vector<double>& qs,
                                           int s,
                                           const DetrendConfig& cfg = {},
                                           int jobs = 1);

struct OffdiagHistogram {
  Eigen::ArrayXd bin_edges;  // bins + 1
  Eigen::ArrayXi counts;     // bins
  double mu = 0.0;           // moments of the upper-triangle entries
  double sigma = 0.0;
  int n = 0;                 // I (I - 1) / 2
};

OffdiagHistogram offdiag_histogram(const CorrMatrix& m, int bins);

}  // namespace detrendcorr
