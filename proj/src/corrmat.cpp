#include "detrendcorr/corrmat.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <thread>
#include <vector>

namespace detrendcorr {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

inline double signed_pow(double v, double p) {
  if (v > 0.0) return std::pow(v, p);
  if (v < 0.0) return -std::pow(-v, p);
  return 0.0;
}

void run_parallel(int jobs, int n_items, const std::function<void(int)>& fn) {
  jobs = std::max(1, jobs);
  if (jobs == 1 || n_items <= 1) {
    for (int i = 0; i < n_items; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(jobs);
  for (int w = 0; w < jobs; ++w) {
    pool.emplace_back([&, w] {
      for (int i = w; i < n_items; i += jobs) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace

bool CorrMatrix::any_flagged() const {
  return flagged.size() > 0 && flagged.any();
}

Eigen::MatrixXd CorrMatrix::clamped() const {
  return values.cwiseMax(-1.0).cwiseMin(1.0);
}

CorrMatrix pearson_matrix(const Panel& panel) {
  const Eigen::Index t = panel.rows();
  const Eigen::Index n = panel.cols();
  if (n < 2) throw std::invalid_argument("pearson_matrix: need at least 2 columns");
  if (t < 2) throw std::invalid_argument("pearson_matrix: need at least 2 rows");

  Eigen::MatrixXd z(t, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    const Eigen::VectorXd col = panel.data.col(j);
    const double mean = col.mean();
    const Eigen::VectorXd centered = col.array() - mean;
    const double var = centered.squaredNorm() / double(t - 1);
    if (!(var > 0.0)) {
      throw std::runtime_error("pearson_matrix: zero-variance column '" +
                               panel.ids[j] + "'");
    }
    z.col(j) = centered / std::sqrt(var);
  }

  CorrMatrix out;
  out.kind = CorrKind::pearson;
  out.labels = panel.ids;
  out.observable = panel.observable;
  out.values = (z.transpose() * z) / double(t - 1);
  // enforce exact symmetry and unit diagonal
  out.values = 0.5 * (out.values + out.values.transpose()).eval();
  out.values.diagonal().setOnes();
  out.flagged.setConstant(n, n, false);
  return out;
}

double rho_q(const Eigen::ArrayXd& x, const Eigen::ArrayXd& y, double q,
             int s, const DetrendConfig& cfg) {
  DetrendConfig local = cfg;
  local.q_grid = {q};
  local.s_grid = {s};
  const FluctuationTriple f = fluctuation_pair(x, y, local);
  const double fxx = f.xx.f(0, 0);
  const double fyy = f.yy.f(0, 0);
  const double fxy = f.xy.f(0, 0);
  const double denom = std::sqrt(fxx * fyy);
  if (!std::isfinite(denom) || denom <= 0.0 || !std::isfinite(fxy)) {
    throw std::runtime_error("rho_q: undefined cell at (q=" +
                             std::to_string(q) + ", s=" + std::to_string(s) +
                             ")");
  }
  return fxy / denom;
}

std::vector<CorrMatrix> detrended_matrices(const Panel& panel,
                                           const std::vector<double>& qs,
                                           int s, const DetrendConfig& cfg,
                                           int jobs) {
  const int t = static_cast<int>(panel.rows());
  const int n = static_cast<int>(panel.cols());
  if (n < 2) throw std::invalid_argument("detrended_matrices: need >= 2 columns");
  if (qs.empty()) throw std::invalid_argument("detrended_matrices: empty q list");
  DetrendConfig local = cfg;
  local.s_grid = {s};
  local.q_grid = qs;
  local.validate(t);

  const int nq = static_cast<int>(qs.size());

  // Per-column fluctuations at this scale, via the pair path with x == y
  // so every code path matches rho_q exactly.
  struct ColumnStats {
    Eigen::MatrixXd resid;       // s x 2M
    Eigen::ArrayXd f2;           // per segment
    std::vector<char> degenerate;
    Eigen::MatrixXd pow_table;   // nq x 2M: signed_pow(f2, q/2)
  };
  std::vector<ColumnStats> cols(n);

  // The basis is identical for every column.
  const Eigen::MatrixXd basis = [&] {
    Eigen::MatrixXd vand(s, local.poly_order + 1);
    const double step = s > 1 ? 2.0 / double(s - 1) : 0.0;
    for (int i = 0; i < s; ++i) {
      const double u = -1.0 + step * double(i);
      double p = 1.0;
      for (int k = 0; k <= local.poly_order; ++k) {
        vand(i, k) = p;
        p *= u;
      }
    }
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(vand);
    return Eigen::MatrixXd(qr.householderQ() *
                           Eigen::MatrixXd::Identity(s, local.poly_order + 1));
  }();

  const int m_s = t / s;
  const int n_seg = 2 * m_s;
  const double inv_s = 1.0 / double(s);

  run_parallel(jobs, n, [&](int j) {
    ColumnStats& c = cols[j];
    const Eigen::ArrayXd x = panel.data.col(j).array();
    c.resid.resize(s, n_seg);
    Eigen::VectorXd profile(s);
    for (int seg = 0; seg < m_s; ++seg) {
      const int base = seg * s;
      double run = 0.0;
      for (int i = 0; i < s; ++i) {
        run += x[base + i];
        profile[i] = run;
      }
      c.resid.col(seg) = profile - basis * (basis.transpose() * profile);
    }
    for (int seg = 0; seg < m_s; ++seg) {
      const int base = t - 1 - seg * s;
      double run = 0.0;
      for (int i = 0; i < s; ++i) {
        run += x[base - i];
        profile[i] = run;
      }
      c.resid.col(m_s + seg) =
          profile - basis * (basis.transpose() * profile);
    }
    c.f2.resize(n_seg);
    c.degenerate.assign(n_seg, 0);
    for (int v = 0; v < n_seg; ++v) {
      c.f2[v] = c.resid.col(v).dot(c.resid.col(v)) * inv_s;
      if (c.f2[v] < local.degenerate_epsilon) c.degenerate[v] = 1;
    }
    c.pow_table.resize(nq, n_seg);
    for (int qi = 0; qi < nq; ++qi) {
      const double q = qs[qi];
      for (int v = 0; v < n_seg; ++v) {
        c.pow_table(qi, v) = q == 0.0 ? 0.0 : signed_pow(c.f2[v], 0.5 * q);
      }
    }
  });

  std::vector<CorrMatrix> mats(nq);
  for (int qi = 0; qi < nq; ++qi) {
    CorrMatrix& m = mats[qi];
    m.kind = CorrKind::detrended;
    m.labels = panel.ids;
    m.observable = panel.observable;
    m.q = qs[qi];
    m.s = s;
    m.values.setConstant(n, n, kNan);
    m.values.diagonal().setOnes();
    m.flagged.setConstant(n, n, false);
  }

  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(std::size_t(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);

  run_parallel(jobs, static_cast<int>(pairs.size()), [&](int p) {
    const auto [i, j] = pairs[p];
    const ColumnStats& a = cols[i];
    const ColumnStats& b = cols[j];

    Eigen::ArrayXd f2xy(n_seg);
    std::vector<char> degen(n_seg, 0);
    int n_degen = 0;
    for (int v = 0; v < n_seg; ++v) {
      f2xy[v] = a.resid.col(v).dot(b.resid.col(v)) * inv_s;
      if (a.degenerate[v] || b.degenerate[v]) {
        degen[v] = 1;
        ++n_degen;
      }
    }

    for (int qi = 0; qi < nq; ++qi) {
      const double q = qs[qi];
      const bool excl = q <= 0.0;
      const int used = excl ? (n_seg - n_degen) : n_seg;
      bool valid = used >= local.min_valid_segments &&
                   (!excl || double(n_degen) <=
                                 local.max_excluded_fraction * double(n_seg));
      double fxx = kNan, fyy = kNan, fxy = kNan;
      if (used > 0) {
        if (q == 0.0) {
          // Limit form of Eq. 6/7: the literal value tends to the mean of
          // segment signs, which is 1 for the nonnegative auto variances.
          double sgn = 0.0;
          for (int v = 0; v < n_seg; ++v) {
            if (excl && degen[v]) continue;
            sgn += (f2xy[v] > 0.0) ? 1.0 : (f2xy[v] < 0.0 ? -1.0 : 0.0);
          }
          fxx = 1.0;
          fyy = 1.0;
          fxy = sgn / double(used);
        } else {
          const double half_q = 0.5 * q;
          double sxx = 0.0, syy = 0.0, sxy = 0.0;
          for (int v = 0; v < n_seg; ++v) {
            if (excl && degen[v]) continue;
            sxx += a.pow_table(qi, v);
            syy += b.pow_table(qi, v);
            sxy += signed_pow(f2xy[v], half_q);
          }
          fxx = sxx / double(used);
          fyy = syy / double(used);
          fxy = sxy / double(used);
        }
      }
      const double denom = std::sqrt(fxx * fyy);
      double rho = kNan;
      if (std::isfinite(denom) && denom > 0.0 && std::isfinite(fxy)) {
        rho = fxy / denom;
      } else {
        valid = false;
      }
      CorrMatrix& m = mats[qi];
      m.values(i, j) = rho;
      m.values(j, i) = rho;
      if (!valid || !std::isfinite(rho)) {
        m.flagged(i, j) = true;
        m.flagged(j, i) = true;
      }
    }
  });

  return mats;
}

CorrMatrix detrended_matrix(const Panel& panel, double q, int s,
                            const DetrendConfig& cfg, int jobs) {
  return detrended_matrices(panel, {q}, s, cfg, jobs).front();
}

OffdiagHistogram offdiag_histogram(const CorrMatrix& m, int bins) {
  const int n = m.size();
  if (n < 3) throw std::invalid_argument("offdiag_histogram: need I >= 3");
  if (bins < 1) throw std::invalid_argument("offdiag_histogram: bins >= 1");

  std::vector<double> vals;
  vals.reserve(std::size_t(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (std::isfinite(m.values(i, j))) vals.push_back(m.values(i, j));
  if (vals.empty()) throw std::runtime_error("offdiag_histogram: no finite entries");

  OffdiagHistogram h;
  h.n = static_cast<int>(vals.size());
  double mu = 0.0;
  for (double v : vals) mu += v;
  mu /= double(h.n);
  double ss = 0.0;
  for (double v : vals) ss += (v - mu) * (v - mu);
  h.mu = mu;
  h.sigma = h.n > 1 ? std::sqrt(ss / double(h.n - 1)) : 0.0;

  double lo = *std::min_element(vals.begin(), vals.end());
  double hi = *std::max_element(vals.begin(), vals.end());
  if (!(hi > lo)) {
    lo -= 0.5;
    hi += 0.5;
  }
  h.bin_edges.resize(bins + 1);
  for (int k = 0; k <= bins; ++k)
    h.bin_edges[k] = lo + (hi - lo) * double(k) / double(bins);
  h.counts.setZero(bins);
  for (double v : vals) {
    int k = static_cast<int>(double(bins) * (v - lo) / (hi - lo));
    k = std::clamp(k, 0, bins - 1);
    ++h.counts[k];
  }
  return h;
}

}  // namespace detrendcorr
