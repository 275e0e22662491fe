#pragma once

#include "detrendcorr/ingest.hpp"
#include "detrendcorr/types.hpp"

#include <Eigen/Dense>

#include <map>
#include <string>
#include <vector>

namespace detrendcorr {

/// K(t) = supply * last trade price at or before the end of each bin,
/// carried forward across inactive bins; bins before the first trade carry
/// the first price back. Throws if the collection has no ticks.
Series build_capitalization(const TickTable& table,
                            const std::string& collection_id, double supply,
                            double dt_seconds);

/// Logarithmic increments c(t) = ln K(t + dt) - ln K(t); length T - 1.
/// Throws when K is not strictly positive.
Series log_increments(const Series& capitalization);

/// Transactions per bin (half-open bins, boundary ticks to the later bin).
Series tx_counts(const TickTable& table, const std::string& collection_id,
                 double dt_seconds);

/// Mean transaction count by UTC hour over whole days (a trailing partial
/// day is truncated; the truncated bin count is reported via `truncated`).
Eigen::ArrayXd daily_pattern(const Series& hourly, int* truncated = nullptr);

/// Mean 0 and unit sample standard deviation (denominator T - 1).
Series standardize(const Series& s);
Eigen::ArrayXd standardize(const Eigen::ArrayXd& v);

/// Aligned panel of one observable over the given collections.
/// observable: cap_increment needs `supplies`; tx_count does not.
Panel build_panel(const TickTable& table,
                  const std::vector<std::string>& collections,
                  Observable observable,
                  const std::map<std::string, std::int64_t>& supplies,
                  double dt_seconds);

}  // namespace detrendcorr
