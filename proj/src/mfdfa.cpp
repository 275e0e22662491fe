#include "detrendcorr/mfdfa.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace detrendcorr {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

// sign(v) * |v|^p with sign(0) = 0, so exactly-zero covariances drop out
// of the aggregation for every q.
inline double signed_pow(double v, double p) {
  if (v > 0.0) return std::pow(v, p);
  if (v < 0.0) return -std::pow(-v, p);
  return 0.0;
}

// Orthonormal basis of polynomials up to `order` sampled on the uniform
// grid u_i in [-1, 1] of length s. Residual = z - Q (Q^T z).
Eigen::MatrixXd segment_basis(int s, int order) {
  Eigen::MatrixXd vand(s, order + 1);
  const double step = s > 1 ? 2.0 / double(s - 1) : 0.0;
  for (int i = 0; i < s; ++i) {
    const double u = -1.0 + step * double(i);
    double p = 1.0;
    for (int k = 0; k <= order; ++k) {
      vand(i, k) = p;
      p *= u;
    }
  }
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(vand);
  return qr.householderQ() * Eigen::MatrixXd::Identity(s, order + 1);
}

// Integrate the series inside each segment and remove the least-squares
// polynomial. Columns 0..M-1 walk from the left end; columns M..2M-1 are
// the mirror family, integrated from the right end inward so that
// reversing the input swaps the two families exactly.
Eigen::MatrixXd detrend_at_scale(const Eigen::ArrayXd& x, int s,
                                 const Eigen::MatrixXd& basis) {
  const int t = static_cast<int>(x.size());
  const int m = t / s;
  Eigen::MatrixXd resid(s, 2 * m);
  Eigen::VectorXd profile(s);
  for (int seg = 0; seg < m; ++seg) {
    const int base = seg * s;
    double run = 0.0;
    for (int i = 0; i < s; ++i) {
      run += x[base + i];
      profile[i] = run;
    }
    resid.col(seg) = profile - basis * (basis.transpose() * profile);
  }
  for (int seg = 0; seg < m; ++seg) {
    const int base = t - 1 - seg * s;
    double run = 0.0;
    for (int i = 0; i < s; ++i) {
      run += x[base - i];
      profile[i] = run;
    }
    resid.col(m + seg) = profile - basis * (basis.transpose() * profile);
  }
  return resid;
}

struct CellValue {
  double literal = kNan;
  double norm = kNan;
  bool valid = false;
};

// Aggregate per-segment (co)variances into the literal fluctuation value
// and its normalized companion for one q. Degenerate segments (flagged in
// `excluded`) are skipped for q <= 0.
CellValue aggregate_cell(const Eigen::ArrayXd& f2,
                         const std::vector<char>& excluded, double q,
                         const DetrendConfig& cfg) {
  const int n_total = static_cast<int>(f2.size());
  const bool apply_exclusions = q <= 0.0;
  int used = 0;
  CellValue out;

  if (q == 0.0) {
    // Limit form: literal F -> mean of signs; normalized F -> geometric
    // mean exp(<ln f2>/2) over nonzero segments, carrying the sign of the
    // mean sign.
    double sign_sum = 0.0;
    double log_sum = 0.0;
    int n_log = 0;
    for (int v = 0; v < n_total; ++v) {
      if (apply_exclusions && excluded[v]) continue;
      ++used;
      const double f = f2[v];
      sign_sum += (f > 0.0) ? 1.0 : (f < 0.0 ? -1.0 : 0.0);
      if (f != 0.0) {
        log_sum += std::log(std::abs(f));
        ++n_log;
      }
    }
    if (used == 0) return out;
    out.literal = sign_sum / double(used);
    if (n_log > 0) {
      const double mag = std::exp(0.5 * log_sum / double(n_log));
      const double s = (out.literal > 0.0) ? 1.0 : (out.literal < 0.0 ? -1.0 : 0.0);
      out.norm = s * mag;
    } else {
      out.norm = 0.0;
    }
  } else {
    const double half_q = 0.5 * q;
    double sum = 0.0;
    for (int v = 0; v < n_total; ++v) {
      if (apply_exclusions && excluded[v]) continue;
      ++used;
      sum += signed_pow(f2[v], half_q);
    }
    if (used == 0) return out;
    out.literal = sum / double(used);
    out.norm = signed_pow(out.literal, 1.0 / q);
  }

  const int n_excluded = n_total - used;
  const bool exclusion_ok =
      !apply_exclusions ||
      double(n_excluded) <= cfg.max_excluded_fraction * double(n_total);
  out.valid = std::isfinite(out.literal) && used >= cfg.min_valid_segments &&
              exclusion_ok;
  return out;
}

int find_scale(const std::vector<int>& s, int sv) {
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i] == sv) return static_cast<int>(i);
  throw std::out_of_range("scale " + std::to_string(sv) + " not in grid");
}

int find_q(const std::vector<double>& q, double qv) {
  for (std::size_t i = 0; i < q.size(); ++i)
    if (std::abs(q[i] - qv) < 1e-12) return static_cast<int>(i);
  throw std::out_of_range("q value not in grid");
}

FluctuationGrid make_grid(GridKind kind, const std::vector<double>& qs,
                          const std::vector<int>& ss) {
  FluctuationGrid g;
  g.kind = kind;
  g.q = qs;
  g.s = ss;
  const auto nq = static_cast<Eigen::Index>(qs.size());
  const auto ns = static_cast<Eigen::Index>(ss.size());
  g.f.setConstant(nq, ns, kNan);
  g.f_norm.setConstant(nq, ns, kNan);
  g.valid.setConstant(nq, ns, false);
  g.segments_total.setZero(ns);
  g.segments_excluded.setZero(ns);
  return g;
}

}  // namespace

std::vector<double> default_q_grid() {
  std::vector<double> q;
  for (int k = -8; k <= 8; ++k) {
    if (k == 0) continue;
    q.push_back(0.5 * k);
  }
  return q;
}

std::vector<int> default_s_grid(int t_pts, int points, int s_min) {
  const int s_max = t_pts / 5;
  if (s_max < s_min) {
    throw std::invalid_argument("series too short for the default scale grid");
  }
  std::vector<int> out;
  const double lo = std::log(double(s_min));
  const double hi = std::log(double(s_max));
  for (int k = 0; k < points; ++k) {
    const double f = points > 1 ? double(k) / double(points - 1) : 0.0;
    const int s = static_cast<int>(std::lround(std::exp(lo + f * (hi - lo))));
    if (out.empty() || s > out.back()) out.push_back(s);
  }
  return out;
}

std::vector<double> DetrendConfig::qs() const {
  return q_grid.empty() ? default_q_grid() : q_grid;
}

std::vector<int> DetrendConfig::scales(int t_pts) const {
  return s_grid.empty() ? default_s_grid(t_pts) : s_grid;
}

void DetrendConfig::validate(int t_pts) const {
  if (poly_order < 0) throw std::invalid_argument("polynomial order must be >= 0");
  for (int s : scales(t_pts)) {
    if (s < poly_order + 2) {
      std::ostringstream msg;
      msg << "scale " << s << " too small for polynomial order " << poly_order;
      throw std::invalid_argument(msg.str());
    }
    if (4 * s > t_pts) {
      std::ostringstream msg;
      msg << "scale " << s << " exceeds T/4 = " << t_pts / 4;
      throw std::invalid_argument(msg.str());
    }
  }
}

double FluctuationGrid::at(double qv, int sv) const {
  return f(find_q(q, qv), find_scale(s, sv));
}

double FluctuationGrid::norm_at(double qv, int sv) const {
  return f_norm(find_q(q, qv), find_scale(s, sv));
}

FluctuationTriple fluctuation_pair(const Eigen::ArrayXd& x,
                                   const Eigen::ArrayXd& y,
                                   const DetrendConfig& cfg) {
  const int t = static_cast<int>(x.size());
  if (y.size() != t) throw std::invalid_argument("series lengths differ");
  cfg.validate(t);
  const auto qs = cfg.qs();
  const auto ss = cfg.scales(t);

  FluctuationTriple r{make_grid(GridKind::auto_xx, qs, ss),
                      make_grid(GridKind::auto_yy, qs, ss),
                      make_grid(GridKind::cross_xy, qs, ss)};

  for (std::size_t si = 0; si < ss.size(); ++si) {
    const int s = ss[si];
    const Eigen::MatrixXd basis = segment_basis(s, cfg.poly_order);
    const Eigen::MatrixXd rx = detrend_at_scale(x, s, basis);
    const Eigen::MatrixXd ry = detrend_at_scale(y, s, basis);
    const int n_seg = static_cast<int>(rx.cols());
    const double inv_s = 1.0 / double(s);

    Eigen::ArrayXd f2xx(n_seg), f2yy(n_seg), f2xy(n_seg);
    std::vector<char> degenerate(n_seg, 0);
    int n_degen = 0;
    for (int v = 0; v < n_seg; ++v) {
      f2xx[v] = rx.col(v).dot(rx.col(v)) * inv_s;
      f2yy[v] = ry.col(v).dot(ry.col(v)) * inv_s;
      f2xy[v] = rx.col(v).dot(ry.col(v)) * inv_s;
      if (f2xx[v] < cfg.degenerate_epsilon || f2yy[v] < cfg.degenerate_epsilon) {
        degenerate[v] = 1;
        ++n_degen;
      }
    }
    r.xx.segments_total[si] = n_seg;
    r.yy.segments_total[si] = n_seg;
    r.xy.segments_total[si] = n_seg;
    r.xx.segments_excluded[si] = n_degen;
    r.yy.segments_excluded[si] = n_degen;
    r.xy.segments_excluded[si] = n_degen;

    for (std::size_t qi = 0; qi < qs.size(); ++qi) {
      const double q = qs[qi];
      const CellValue xx = aggregate_cell(f2xx, degenerate, q, cfg);
      const CellValue yy = aggregate_cell(f2yy, degenerate, q, cfg);
      const CellValue xy = aggregate_cell(f2xy, degenerate, q, cfg);
      r.xx.f(qi, si) = xx.literal;
      r.xx.f_norm(qi, si) = xx.norm;
      r.xx.valid(qi, si) = xx.valid;
      r.yy.f(qi, si) = yy.literal;
      r.yy.f_norm(qi, si) = yy.norm;
      r.yy.valid(qi, si) = yy.valid;
      r.xy.f(qi, si) = xy.literal;
      r.xy.f_norm(qi, si) = xy.norm;
      r.xy.valid(qi, si) = xy.valid;
    }
  }
  return r;
}

FluctuationGrid fluctuation_single(const Eigen::ArrayXd& x,
                                   const DetrendConfig& cfg) {
  const int t = static_cast<int>(x.size());
  cfg.validate(t);
  const auto qs = cfg.qs();
  const auto ss = cfg.scales(t);
  FluctuationGrid g = make_grid(GridKind::auto_xx, qs, ss);

  for (std::size_t si = 0; si < ss.size(); ++si) {
    const int s = ss[si];
    const Eigen::MatrixXd basis = segment_basis(s, cfg.poly_order);
    const Eigen::MatrixXd rx = detrend_at_scale(x, s, basis);
    const int n_seg = static_cast<int>(rx.cols());
    const double inv_s = 1.0 / double(s);

    Eigen::ArrayXd f2(n_seg);
    std::vector<char> degenerate(n_seg, 0);
    int n_degen = 0;
    for (int v = 0; v < n_seg; ++v) {
      f2[v] = rx.col(v).dot(rx.col(v)) * inv_s;
      if (f2[v] < cfg.degenerate_epsilon) {
        degenerate[v] = 1;
        ++n_degen;
      }
    }
    g.segments_total[si] = n_seg;
    g.segments_excluded[si] = n_degen;
    for (std::size_t qi = 0; qi < qs.size(); ++qi) {
      const CellValue c = aggregate_cell(f2, degenerate, qs[qi], cfg);
      g.f(qi, si) = c.literal;
      g.f_norm(qi, si) = c.norm;
      g.valid(qi, si) = c.valid;
    }
  }
  return g;
}

ScalingFit hurst(const FluctuationGrid& grid, double q,
                 std::pair<int, int> range) {
  const int qi = find_q(grid.q, q);
  std::vector<double> lx, ly;
  for (std::size_t si = 0; si < grid.s.size(); ++si) {
    const int s = grid.s[si];
    if (s < range.first || s > range.second) continue;
    if (!grid.valid(qi, si)) continue;
    const double fn = std::abs(grid.f_norm(qi, si));
    if (!(fn > 0.0) || !std::isfinite(fn)) continue;
    lx.push_back(std::log(double(s)));
    ly.push_back(std::log(fn));
  }
  const int n = static_cast<int>(lx.size());
  if (n < 5) {
    throw std::runtime_error("hurst: fewer than 5 valid scales in range");
  }
  double mx = 0.0, my = 0.0;
  for (int i = 0; i < n; ++i) {
    mx += lx[i];
    my += ly[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (int i = 0; i < n; ++i) {
    const double dx = lx[i] - mx;
    const double dy = ly[i] - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  ScalingFit fit;
  fit.n_scales = n;
  fit.exponent = sxy / sxx;
  double ssr = 0.0;
  for (int i = 0; i < n; ++i) {
    const double pred = my + fit.exponent * (lx[i] - mx);
    const double e = ly[i] - pred;
    ssr += e * e;
  }
  fit.stderr_ = n > 2 ? std::sqrt(ssr / double(n - 2) / sxx) : 0.0;
  fit.r2 = syy > 0.0 ? 1.0 - ssr / syy : 1.0;
  return fit;
}

HurstResult generalized_hurst(const FluctuationGrid& grid,
                              std::pair<int, int> range) {
  HurstResult out;
  out.scaling_range = range;
  for (double qv : grid.q) {
    try {
      const ScalingFit fit = hurst(grid, qv, range);
      out.q.push_back(qv);
      out.fits.push_back(fit);
    } catch (const std::runtime_error&) {
      // too few valid scales at this q: skipped
    }
  }
  if (out.q.empty()) {
    throw std::runtime_error("generalized_hurst: no q with enough valid scales");
  }
  return out;
}

double HurstResult::h(double qv) const {
  return fits[find_q(q, qv)].exponent;
}

SingularitySpectrum singularity_spectrum(const HurstResult& h) {
  const int n = static_cast<int>(h.q.size());
  if (n < 5) {
    throw std::invalid_argument(
        "singularity_spectrum: need h(q) on at least 5 q points");
  }
  SingularitySpectrum out;
  out.alpha.resize(n);
  out.f_alpha.resize(n);
  out.source_q = h.q;
  for (int k = 0; k < n; ++k) {
    const int lo = k == 0 ? 0 : k - 1;
    const int hi = k == n - 1 ? n - 1 : k + 1;
    const double dh =
        (h.fits[hi].exponent - h.fits[lo].exponent) / (h.q[hi] - h.q[lo]);
    const double hq = h.fits[k].exponent;
    out.alpha[k] = hq + h.q[k] * dh;
    out.f_alpha[k] = h.q[k] * (out.alpha[k] - hq) + 1.0;
  }
  // h(q) nonincreasing makes alpha decrease with q; flag folds
  for (int k = 1; k < n; ++k) {
    if (out.alpha[k] > out.alpha[k - 1] + 1e-12) {
      out.folded = true;
      break;
    }
  }
  return out;
}

double SingularitySpectrum::width() const {
  const auto [lo, hi] = std::minmax_element(alpha.begin(), alpha.end());
  return *hi - *lo;
}

std::pair<int, int> full_range(const FluctuationGrid& grid) {
  return {grid.s.front(), grid.s.back()};
}

}  // namespace detrendcorr
