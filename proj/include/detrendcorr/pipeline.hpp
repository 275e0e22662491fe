#pragma once

#include "detrendcorr/synthlab.hpp"
#include "detrendcorr/types.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace detrendcorr {

/// Declarative run description; a run is fully determined by the config
/// plus its input files. JSON round-trip via parse_run_config / to_json.
struct RunConfig {
  // input: either tick files ...
  std::string ticks_path;
  std::string supplies_path;
  std::string start_iso;  // ISO-8601 UTC
  int days = 0;
  // ... or a synthetic panel
  std::optional<GeneratorSpec> synthetic;

  double dt_seconds = 86400.0;
  Observable observable = Observable::cap_increment;
  std::vector<double> q_values{1.0, 2.0, 4.0};
  std::vector<int> scales;                  // bins
  std::vector<std::string> matrix_kinds{"pearson", "detrended"};
  std::string out_dir = "out";
  std::uint64_t seed = 42;
  int jobs = 1;
  int mfdfa_order = 2;

  double liquidity_min_tx_per_day = 2.0;
  double max_zero_fraction_1h = 0.5;  // applied when dt = 1h
  double xmin_pct = 90.0;
  int max_lag = 100;
};

RunConfig parse_run_config(const std::string& json_text);
std::string run_config_json(const RunConfig& cfg);

/// Number of bins for an "Nd" / "Nh" / plain-integer scale token.
int parse_scale_token(const std::string& token, double dt_seconds);
double parse_dt_token(const std::string& token);

struct Artifact {
  std::string path;  // relative to out_dir
  std::string hash;  // fnv1a of the content
  std::uint64_t bytes = 0;
};

struct Manifest {
  std::vector<Artifact> artifacts;
  std::string config_json;

  const Artifact* find(const std::string& path) const;
};

std::string manifest_json(const Manifest& m);
Manifest parse_manifest(const std::string& json_text);

/// Execute ingest -> panel -> dist -> mfdfa -> corr -> rmt -> mst and write
/// every artifact plus manifest.json under cfg.out_dir. A stage failure
/// aborts with the stage name; files of the failed stage keep a
/// ".partial" suffix. Returns the manifest.
Manifest run_pipeline(const RunConfig& cfg, std::ostream& log);

/// Render SVG figures from the artifacts listed in a manifest file.
/// Missing artifacts are skipped with a warning. Returns files written.
std::vector<std::string> render_figures(const std::string& manifest_path,
                                        std::ostream& log);

}  // namespace detrendcorr
