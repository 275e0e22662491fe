#pragma once

#include "detrendcorr/types.hpp"

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace detrendcorr {

struct TickRecord {
  std::string collection_id;
  std::int64_t timestamp = 0;  // Unix seconds, UTC
  double price = 0.0;          // USD, >= 0
};

struct Window {
  std::int64_t t_start = 0;
  int duration_days = 0;

  std::int64_t t_end() const { return t_start + std::int64_t(duration_days) * 86400; }
  double seconds() const { return double(duration_days) * 86400.0; }
  bool contains(std::int64_t t) const { return t >= t_start && t < t_end(); }
};

/// Records sorted ascending by (collection_id, timestamp); duplicate
/// timestamps within a collection are allowed and keep file order.
struct TickTable {
  std::vector<TickRecord> records;
  Window window;

  std::vector<std::string> collection_ids() const;  // sorted unique
  std::int64_t count_for(const std::string& id) const;
};

struct ParseReport {
  std::size_t parsed = 0;
  std::size_t dropped_outside_window = 0;
};

/// Parse the tick file format (header `collection_id,timestamp,price_usd`).
/// Records outside the window are dropped and counted; malformed lines or
/// negative prices raise an error naming the line number.
TickTable parse_ticks(std::istream& in, const Window& window,
                      ParseReport* report = nullptr);

/// Canonical serialization; parse(serialize(parse(x))) == parse(x).
void serialize_ticks(std::ostream& out, const TickTable& table);

/// Collections averaging at least `min_avg_tx_per_day` transactions per
/// calendar day of the window (boundary inclusive).
std::set<std::string> liquidity_filter(const TickTable& table,
                                       double min_avg_tx_per_day);

struct CollectionMeta {
  std::string collection_id;
  std::optional<double> capitalization_last_day;  // supply * last price
  std::int64_t n_total = 0;
  std::optional<std::int64_t> supply;
  double zero_fraction_1h = 0.0;
};

/// One entry per collection in the table. zero_fraction_1h is the share of
/// hours without transactions in `panel_1h` (an N_dt panel at dt = 3600
/// built from this table). Missing supplies leave the dependent fields
/// unset.
std::vector<CollectionMeta> collection_metadata(
    const TickTable& table,
    const std::map<std::string, std::int64_t>& supplies,
    const Panel& panel_1h);

std::map<std::string, std::int64_t> parse_supplies(std::istream& in);

/// Strict UTC ISO-8601 parser: YYYY-MM-DD[Thh:mm:ss[Z]].
std::int64_t parse_iso8601_utc(const std::string& text);
std::string format_iso8601_utc(std::int64_t epoch_seconds);

}  // namespace detrendcorr
