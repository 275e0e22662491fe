#include "detrendcorr/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace detrendcorr {

namespace {

[[noreturn]] void parse_fail(std::size_t line_no, const std::string& what) {
  throw std::runtime_error("tick parse error at line " +
                           std::to_string(line_no) + ": " + what);
}

bool parse_int64(const std::string& text, std::int64_t& out) {
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

bool parse_double(const std::string& text, double& out) {
  if (text.empty()) return false;
  try {
    std::size_t pos = 0;
    out = std::stod(text, &pos);
    return pos == text.size();
  } catch (const std::exception&) {
    return false;
  }
}

constexpr std::int64_t kSecondsPerDay = 86400;

// days since 1970-01-01 for a civil date (Howard Hinnant's algorithm)
std::int64_t days_from_civil(int y, int m, int d) {
  y -= m <= 2;
  const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
  const unsigned yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy = (153u * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

void civil_from_days(std::int64_t z, int& y, unsigned& m, unsigned& d) {
  z += 719468;
  const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
  const unsigned doe = static_cast<unsigned>(z - era * 146097);
  const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
  const std::int64_t yy = static_cast<std::int64_t>(yoe) + era * 400;
  const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
  const unsigned mp = (5 * doy + 2) / 153;
  d = doy - (153 * mp + 2) / 5 + 1;
  m = mp + (mp < 10 ? 3 : -9);
  y = static_cast<int>(yy + (m <= 2));
}

}  // namespace

TickTable parse_ticks(std::istream& in, const Window& window,
                      ParseReport* report) {
  if (window.duration_days <= 0) {
    throw std::invalid_argument("parse_ticks: window duration must be positive");
  }
  TickTable table;
  table.window = window;
  ParseReport local;

  std::string line;
  std::size_t line_no = 0;
  bool saw_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (!saw_header) {
      if (line != "collection_id,timestamp,price_usd") {
        parse_fail(line_no, "missing header 'collection_id,timestamp,price_usd'");
      }
      saw_header = true;
      continue;
    }
    const auto c1 = line.find(',');
    const auto c2 = line.find(',', c1 == std::string::npos ? c1 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos ||
        line.find(',', c2 + 1) != std::string::npos) {
      parse_fail(line_no, "expected 3 comma-separated fields");
    }
    TickRecord rec;
    rec.collection_id = line.substr(0, c1);
    if (rec.collection_id.empty()) parse_fail(line_no, "empty collection_id");
    if (!parse_int64(line.substr(c1 + 1, c2 - c1 - 1), rec.timestamp)) {
      parse_fail(line_no, "timestamp is not an integer");
    }
    if (!parse_double(line.substr(c2 + 1), rec.price) ||
        !std::isfinite(rec.price)) {
      parse_fail(line_no, "price is not a decimal number");
    }
    if (rec.price < 0.0) parse_fail(line_no, "negative price");
    if (!window.contains(rec.timestamp)) {
      ++local.dropped_outside_window;
      continue;
    }
    ++local.parsed;
    table.records.push_back(std::move(rec));
  }
  if (!saw_header) parse_fail(line_no == 0 ? 1 : line_no, "empty input");
  if (table.records.empty()) {
    throw std::runtime_error("parse_ticks: no records inside the window");
  }
  // canonical order; equal timestamps keep file order (last one wins
  // downstream as the most recent price)
  std::stable_sort(table.records.begin(), table.records.end(),
                   [](const TickRecord& a, const TickRecord& b) {
                     if (a.collection_id != b.collection_id)
                       return a.collection_id < b.collection_id;
                     return a.timestamp < b.timestamp;
                   });
  if (report) *report = local;
  return table;
}

void serialize_ticks(std::ostream& out, const TickTable& table) {
  out << "collection_id,timestamp,price_usd\n";
  char buf[64];
  for (const auto& r : table.records) {
    std::snprintf(buf, sizeof(buf), "%.17g", r.price);
    out << r.collection_id << ',' << r.timestamp << ',' << buf << '\n';
  }
}

std::vector<std::string> TickTable::collection_ids() const {
  std::vector<std::string> ids;
  for (const auto& r : records) {
    if (ids.empty() || ids.back() != r.collection_id) {
      ids.push_back(r.collection_id);
    }
  }
  return ids;
}

std::int64_t TickTable::count_for(const std::string& id) const {
  std::int64_t n = 0;
  for (const auto& r : records) n += (r.collection_id == id) ? 1 : 0;
  return n;
}

std::set<std::string> liquidity_filter(const TickTable& table,
                                       double min_avg_tx_per_day) {
  if (table.window.duration_days <= 0) {
    throw std::invalid_argument("liquidity_filter: window duration must be positive");
  }
  std::map<std::string, std::int64_t> counts;
  for (const auto& r : table.records) ++counts[r.collection_id];
  std::set<std::string> kept;
  for (const auto& [id, n] : counts) {
    if (double(n) / double(table.window.duration_days) >= min_avg_tx_per_day) {
      kept.insert(id);
    }
  }
  return kept;
}

std::vector<CollectionMeta> collection_metadata(
    const TickTable& table, const std::map<std::string, std::int64_t>& supplies,
    const Panel& panel_1h) {
  if (panel_1h.dt != 3600.0) {
    throw std::invalid_argument("collection_metadata: panel_1h must use dt = 3600");
  }
  std::vector<CollectionMeta> out;
  for (const auto& id : table.collection_ids()) {
    CollectionMeta meta;
    meta.collection_id = id;
    meta.n_total = table.count_for(id);

    const auto it = supplies.find(id);
    if (it != supplies.end()) {
      meta.supply = it->second;
      // last in-window price; records are sorted so it is the last entry
      double last_price = 0.0;
      for (const auto& r : table.records) {
        if (r.collection_id == id) last_price = r.price;
      }
      meta.capitalization_last_day = double(it->second) * last_price;
    }

    const Eigen::Index col = panel_1h.index_of(id);
    if (col >= 0) {
      const Eigen::ArrayXd n = panel_1h.data.col(col).array();
      const auto zero_hours = (n == 0.0).count();
      meta.zero_fraction_1h =
          n.size() > 0 ? double(zero_hours) / double(n.size()) : 0.0;
    }
    out.push_back(std::move(meta));
  }
  return out;
}

std::map<std::string, std::int64_t> parse_supplies(std::istream& in) {
  std::map<std::string, std::int64_t> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line_no == 1 && line == "collection_id,supply") continue;
    const auto c = line.find(',');
    if (c == std::string::npos) {
      throw std::runtime_error("supplies parse error at line " +
                               std::to_string(line_no));
    }
    std::int64_t supply = 0;
    if (!parse_int64(line.substr(c + 1), supply)) {
      throw std::runtime_error("supplies parse error at line " +
                               std::to_string(line_no) + ": bad count");
    }
    out[line.substr(0, c)] = supply;
  }
  return out;
}

std::int64_t parse_iso8601_utc(const std::string& text) {
  int y = 0, mo = 0, d = 0, h = 0, mi = 0, s = 0;
  const int fields =
      std::sscanf(text.c_str(), "%d-%d-%dT%d:%d:%d", &y, &mo, &d, &h, &mi, &s);
  if (fields != 3 && fields != 6) {
    throw std::invalid_argument("not an ISO-8601 UTC timestamp: '" + text + "'");
  }
  if (mo < 1 || mo > 12 || d < 1 || d > 31 || h < 0 || h > 23 || mi < 0 ||
      mi > 59 || s < 0 || s > 60) {
    throw std::invalid_argument("timestamp field out of range: '" + text + "'");
  }
  return days_from_civil(y, mo, d) * kSecondsPerDay + h * 3600 + mi * 60 + s;
}

std::string format_iso8601_utc(std::int64_t epoch_seconds) {
  std::int64_t days = epoch_seconds / kSecondsPerDay;
  std::int64_t rem = epoch_seconds % kSecondsPerDay;
  if (rem < 0) {
    rem += kSecondsPerDay;
    --days;
  }
  int y;
  unsigned m, d;
  civil_from_days(days, y, m, d);
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%04d-%02u-%02uT%02lld:%02lld:%02lldZ", y, m,
                d, static_cast<long long>(rem / 3600),
                static_cast<long long>((rem % 3600) / 60),
                static_cast<long long>(rem % 60));
  return buf;
}

}  // namespace detrendcorr
