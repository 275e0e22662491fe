#include "detrendcorr/series.hpp"

#include <cmath>
#include <stdexcept>

namespace detrendcorr {

namespace {

int panel_points(const Window& w, double dt_seconds) {
  return static_cast<int>(std::floor(w.seconds() / dt_seconds));
}

}  // namespace

std::string observable_name(Observable o) {
  switch (o) {
    case Observable::cap_increment: return "cap_increment";
    case Observable::tx_count: return "tx_count";
    case Observable::capitalization: return "capitalization";
    case Observable::other: return "other";
  }
  return "other";
}

Observable observable_from_name(const std::string& name) {
  if (name == "cap_increment" || name == "c") return Observable::cap_increment;
  if (name == "tx_count" || name == "n") return Observable::tx_count;
  if (name == "capitalization") return Observable::capitalization;
  if (name == "other") return Observable::other;
  throw std::invalid_argument("unknown observable '" + name + "'");
}

Eigen::Index Panel::index_of(const std::string& id) const {
  for (std::size_t j = 0; j < ids.size(); ++j) {
    if (ids[j] == id) return static_cast<Eigen::Index>(j);
  }
  return -1;
}

Series build_capitalization(const TickTable& table,
                            const std::string& collection_id, double supply,
                            double dt_seconds) {
  if (dt_seconds <= 0.0) throw std::invalid_argument("dt must be positive");
  const int t_pts = panel_points(table.window, dt_seconds);
  if (t_pts < 1) throw std::invalid_argument("window shorter than one bin");

  Series out;
  out.dt = dt_seconds;
  out.t0 = table.window.t_start;
  out.observable = Observable::capitalization;
  out.values.resize(t_pts);

  // records for this collection, already in canonical time order
  std::vector<const TickRecord*> ticks;
  for (const auto& r : table.records) {
    if (r.collection_id == collection_id) ticks.push_back(&r);
  }
  if (ticks.empty()) {
    throw std::runtime_error("build_capitalization: no ticks for '" +
                             collection_id + "'");
  }

  std::size_t next = 0;
  double price = ticks.front()->price;  // carry-back before the first trade
  for (int k = 0; k < t_pts; ++k) {
    const double bin_end =
        double(out.t0) + double(k + 1) * dt_seconds;  // exclusive
    while (next < ticks.size() && double(ticks[next]->timestamp) < bin_end) {
      price = ticks[next]->price;  // last record in file order wins
      ++next;
    }
    out.values[k] = supply * price;
  }
  return out;
}

Series log_increments(const Series& capitalization) {
  const Eigen::Index t = capitalization.size();
  if (t < 2) throw std::invalid_argument("log_increments: need at least 2 bins");
  Series out;
  out.dt = capitalization.dt;
  out.t0 = capitalization.t0;
  out.observable = Observable::cap_increment;
  out.values.resize(t - 1);
  for (Eigen::Index k = 0; k + 1 < t; ++k) {
    const double a = capitalization.values[k];
    const double b = capitalization.values[k + 1];
    if (!(a > 0.0) || !(b > 0.0)) {
      throw std::runtime_error("log_increments: nonpositive capitalization at bin " +
                               std::to_string(k));
    }
    out.values[k] = std::log(b) - std::log(a);
  }
  return out;
}

Series tx_counts(const TickTable& table, const std::string& collection_id,
                 double dt_seconds) {
  if (dt_seconds <= 0.0) throw std::invalid_argument("dt must be positive");
  const int t_pts = panel_points(table.window, dt_seconds);
  if (t_pts < 1) throw std::invalid_argument("window shorter than one bin");

  Series out;
  out.dt = dt_seconds;
  out.t0 = table.window.t_start;
  out.observable = Observable::tx_count;
  out.values = Eigen::ArrayXd::Zero(t_pts);
  for (const auto& r : table.records) {
    if (r.collection_id != collection_id) continue;
    const auto k = static_cast<std::int64_t>(
        std::floor(double(r.timestamp - table.window.t_start) / dt_seconds));
    if (k >= 0 && k < t_pts) out.values[k] += 1.0;
  }
  return out;
}

Eigen::ArrayXd daily_pattern(const Series& hourly, int* truncated) {
  if (hourly.dt != 3600.0) {
    throw std::invalid_argument("daily_pattern: series must use dt = 3600");
  }
  const Eigen::Index t = hourly.size();
  if (t < 24) throw std::invalid_argument("daily_pattern: series shorter than one day");
  const Eigen::Index whole = t - t % 24;
  if (truncated) *truncated = static_cast<int>(t - whole);

  Eigen::ArrayXd sum = Eigen::ArrayXd::Zero(24);
  Eigen::ArrayXd count = Eigen::ArrayXd::Zero(24);
  for (Eigen::Index k = 0; k < whole; ++k) {
    const std::int64_t ts = hourly.t0 + std::int64_t(k) * 3600;
    std::int64_t sec = ts % 86400;
    if (sec < 0) sec += 86400;
    const auto hour = static_cast<int>(sec / 3600);
    sum[hour] += hourly.values[k];
    count[hour] += 1.0;
  }
  for (int h = 0; h < 24; ++h) {
    sum[h] = count[h] > 0.0 ? sum[h] / count[h] : 0.0;
  }
  return sum;
}

Eigen::ArrayXd standardize(const Eigen::ArrayXd& v) {
  const Eigen::Index t = v.size();
  if (t < 2) throw std::invalid_argument("standardize: need at least 2 values");
  const double mean = v.mean();
  const Eigen::ArrayXd centered = v - mean;
  const double sd = std::sqrt((centered * centered).sum() / double(t - 1));
  if (!(sd > 0.0)) throw std::runtime_error("standardize: zero variance");
  return centered / sd;
}

Series standardize(const Series& s) {
  Series out = s;
  out.values = standardize(s.values);
  return out;
}

Panel build_panel(const TickTable& table,
                  const std::vector<std::string>& collections,
                  Observable observable,
                  const std::map<std::string, std::int64_t>& supplies,
                  double dt_seconds) {
  if (collections.size() < 1) {
    throw std::invalid_argument("build_panel: no collections requested");
  }
  Panel p;
  p.dt = dt_seconds;
  p.t0 = table.window.t_start;
  p.observable = observable;
  p.ids = collections;

  const int t_pts = panel_points(table.window, dt_seconds);
  const int rows = observable == Observable::cap_increment ? t_pts - 1 : t_pts;
  p.data.resize(rows, static_cast<Eigen::Index>(collections.size()));

  for (std::size_t j = 0; j < collections.size(); ++j) {
    const std::string& id = collections[j];
    if (observable == Observable::tx_count) {
      p.data.col(j) = tx_counts(table, id, dt_seconds).values.matrix();
    } else if (observable == Observable::cap_increment ||
               observable == Observable::capitalization) {
      const auto it = supplies.find(id);
      if (it == supplies.end()) {
        throw std::runtime_error("build_panel: no supply for '" + id + "'");
      }
      Series cap = build_capitalization(table, id, double(it->second), dt_seconds);
      if (observable == Observable::capitalization) {
        p.data.col(j) = cap.values.matrix();
      } else {
        p.data.col(j) = log_increments(cap).values.matrix();
      }
    } else {
      throw std::invalid_argument("build_panel: unsupported observable");
    }
  }
  return p;
}

}  // namespace detrendcorr
