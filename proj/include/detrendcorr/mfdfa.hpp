#pragma once

#include <Eigen/Dense>

#include <utility>
#include <vector>

namespace detrendcorr {

/// Configuration of the detrended-fluctuation machinery.
///
/// Scales must satisfy s >= poly_order + 2 (the per-segment polynomial fit
/// needs that many points) and 4 * s <= T (at least four segments per
/// family direction pair).
struct DetrendConfig {
  int poly_order = 2;
  std::vector<double> q_grid;         // empty -> default_q_grid()
  std::vector<int> s_grid;            // empty -> default_s_grid(T)
  int min_valid_segments = 4;
  double degenerate_epsilon = 1e-14;  // f2 below this counts as constant
  double max_excluded_fraction = 0.10;

  std::vector<double> qs() const;
  std::vector<int> scales(int t_pts) const;
  void validate(int t_pts) const;
};

/// -4 .. 4 in steps of 0.5, q = 0 excluded (requested explicitly when
/// needed; it is evaluated through the logarithmic-average limit).
std::vector<double> default_q_grid();

/// About `points` log-spaced integer scales in [s_min, t_pts / 5].
std::vector<int> default_s_grid(int t_pts, int points = 20, int s_min = 10);

enum class GridKind { auto_xx, auto_yy, cross_xy };

/// Fluctuation values over the (q, s) lattice.
///
/// `f` stores the literal power-mean of the per-segment (co)variances:
///   F_ZZ(q,s) = <(f2_ZZ)^{q/2}>,   F_XY(q,s) = <sign(f2_XY) |f2_XY|^{q/2}>,
/// averaged over the included segments. `f_norm` is the companion
/// sign(F) |F|^{1/q} used for scaling fits; at q = 0 it is the
/// logarithmic-average limit exp(<ln f2> / 2).
///
/// Segments whose auto variance falls below the degeneracy threshold are
/// excluded from cells with q <= 0 (counted in `excluded`); a cell is valid
/// when enough segments remain and the excluded fraction stays within the
/// configured bound.
struct FluctuationGrid {
  GridKind kind = GridKind::auto_xx;
  std::vector<double> q;
  std::vector<int> s;
  Eigen::MatrixXd f;        // q.size() x s.size()
  Eigen::MatrixXd f_norm;
  Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic> valid;
  Eigen::ArrayXi segments_total;   // per scale: 2 * M_s
  Eigen::ArrayXi segments_excluded;

  double at(double qv, int sv) const;
  double norm_at(double qv, int sv) const;
};

struct FluctuationTriple {
  FluctuationGrid xx, yy, xy;
};

/// Bivariate fluctuation functions for a series pair. Each series is
/// integrated within every segment, an order-m polynomial is removed by
/// least squares on the segment index rescaled to [-1, 1], and the
/// per-segment variances / covariances are aggregated into F(q, s).
///
/// Segments of length s are taken from both ends: M_s = floor(T/s) windows
/// walking from the left, and the mirror family walking from the right end
/// inward (right-family segments are traversed right-to-left, so reversing
/// both inputs exactly swaps the two families).
FluctuationTriple fluctuation_pair(const Eigen::ArrayXd& x,
                                   const Eigen::ArrayXd& y,
                                   const DetrendConfig& cfg = {});

/// Auto fluctuation function of one series (the XX part alone).
FluctuationGrid fluctuation_single(const Eigen::ArrayXd& x,
                                   const DetrendConfig& cfg = {});

struct ScalingFit {
  double exponent = 0.0;
  double stderr_ = 0.0;
  double r2 = 0.0;
  int n_scales = 0;
};

/// h(q): least-squares slope of ln F_norm(q, s) against ln s over scales in
/// [range.first, range.second]. Needs at least 5 valid scales.
ScalingFit hurst(const FluctuationGrid& grid, double q,
                 std::pair<int, int> range);

struct HurstResult {
  std::vector<double> q;
  std::vector<ScalingFit> fits;
  std::pair<int, int> scaling_range{0, 0};

  double h(double qv) const;
};

HurstResult generalized_hurst(const FluctuationGrid& grid,
                              std::pair<int, int> range);

/// Singularity spectrum via alpha = h + q dh/dq, f = q (alpha - h) + 1,
/// with dh/dq from central finite differences (one-sided at the ends).
struct SingularitySpectrum {
  std::vector<double> alpha;
  std::vector<double> f_alpha;
  std::vector<double> source_q;
  bool folded = false;  // alpha not monotone across q

  double width() const;  // max(alpha) - min(alpha)
};

SingularitySpectrum singularity_spectrum(const HurstResult& h);

/// Full range (smallest scale, largest scale) of a grid.
std::pair<int, int> full_range(const FluctuationGrid& grid);

}  // namespace detrendcorr
