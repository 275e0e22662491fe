#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace detrendcorr {

enum class Observable { cap_increment, tx_count, capitalization, other };

std::string observable_name(Observable o);
Observable observable_from_name(const std::string& name);

/// One evenly sampled time series. `values[k]` belongs to the bin starting
/// at `t0 + k*dt` (half-open bins, boundary ticks fall into the later bin).
struct Series {
  Eigen::ArrayXd values;
  double dt = 0.0;         // sampling interval, seconds
  std::int64_t t0 = 0;     // epoch seconds of the first bin
  Observable observable = Observable::other;

  Eigen::Index size() const { return values.size(); }
};

/// Time-aligned multivariate panel: column j of `data` is the series for
/// `ids[j]`. All columns share dt, t0 and the observable.
struct Panel {
  std::vector<std::string> ids;
  Eigen::MatrixXd data;    // T_pts x I
  double dt = 0.0;
  std::int64_t t0 = 0;
  Observable observable = Observable::other;

  Eigen::Index rows() const { return data.rows(); }
  Eigen::Index cols() const { return data.cols(); }

  Series column(Eigen::Index j) const {
    return Series{data.col(j).array(), dt, t0, observable};
  }
  Eigen::Index index_of(const std::string& id) const;
};

}  // namespace detrendcorr
