#include "detrendcorr/pipeline.hpp"

#include "detrendcorr/diststats.hpp"
#include "detrendcorr/ingest.hpp"
#include "detrendcorr/io.hpp"
#include "detrendcorr/series.hpp"
#include "detrendcorr/svg.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace detrendcorr {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

GeneratorSpec parse_generator(const json& j) {
  GeneratorSpec g;
  g.kind = j.at("kind").get<std::string>();
  g.t_pts = j.value("T", 0);
  g.i_cols = j.value("I", 1);
  g.seed = j.value("seed", std::uint64_t(0));
  g.hurst = j.value("H", 0.5);
  g.loading = j.value("loading", 0.0);
  g.idio_sigma = j.value("idio_sigma", 1.0);
  g.gamma = j.value("gamma", 1.5);
  g.depth = j.value("depth", 14);
  g.weight = j.value("weight", 0.3);
  return g;
}

json generator_json(const GeneratorSpec& g) {
  json j;
  j["kind"] = g.kind;
  j["T"] = g.t_pts;
  j["I"] = g.i_cols;
  j["seed"] = g.seed;
  if (g.kind == "fgn") j["H"] = g.hurst;
  if (g.kind == "one_factor") {
    j["loading"] = g.loading;
    j["idio_sigma"] = g.idio_sigma;
  }
  if (g.kind == "pareto") j["gamma"] = g.gamma;
  if (g.kind == "cascade") {
    j["depth"] = g.depth;
    j["weight"] = g.weight;
  }
  return j;
}

// Writes artifacts as "<name>.partial" and renames them when the stage
// completes, so an aborted stage leaves only marked files behind.
class StageWriter {
 public:
  StageWriter(const fs::path& dir, Manifest& manifest)
      : dir_(dir), manifest_(manifest) {}

  void write(const std::string& rel, const std::string& content) {
    const fs::path final_path = dir_ / rel;
    fs::create_directories(final_path.parent_path());
    write_file((final_path.string() + ".partial"), content);
    pending_.push_back(rel);
    hashes_.push_back(fnv1a_hex(content));
    sizes_.push_back(content.size());
  }

  void commit() {
    for (std::size_t i = 0; i < pending_.size(); ++i) {
      const fs::path partial = dir_ / (pending_[i] + ".partial");
      const fs::path final_path = dir_ / pending_[i];
      fs::rename(partial, final_path);
      manifest_.artifacts.push_back(
          {pending_[i], hashes_[i], static_cast<std::uint64_t>(sizes_[i])});
    }
    pending_.clear();
    hashes_.clear();
    sizes_.clear();
  }

 private:
  fs::path dir_;
  Manifest& manifest_;
  std::vector<std::string> pending_;
  std::vector<std::string> hashes_;
  std::vector<std::size_t> sizes_;
};

std::string scale_tag(double q, int s) {
  std::ostringstream ss;
  ss << "q" << q << "_s" << s;
  std::string tag = ss.str();
  for (char& c : tag) {
    if (c == '.') c = 'p';
    if (c == '-') c = 'm';
  }
  return tag;
}

}  // namespace

int parse_scale_token(const std::string& token, double dt_seconds) {
  if (token.empty()) throw std::invalid_argument("empty scale token");
  const char suffix = token.back();
  if (suffix == 'd' || suffix == 'h') {
    const double count = std::stod(token.substr(0, token.size() - 1));
    const double seconds = count * (suffix == 'd' ? 86400.0 : 3600.0);
    const double bins = seconds / dt_seconds;
    const int s = static_cast<int>(std::lround(bins));
    if (s < 1 || std::abs(bins - double(s)) > 1e-9) {
      throw std::invalid_argument("scale '" + token +
                                  "' is not a whole number of bins at this dt");
    }
    return s;
  }
  const int s = std::stoi(token);
  if (s < 1) throw std::invalid_argument("scale must be positive");
  return s;
}

double parse_dt_token(const std::string& token) {
  if (token == "1h") return 3600.0;
  if (token == "24h" || token == "1d") return 86400.0;
  const double dt = std::stod(token);
  if (!(dt > 0.0)) throw std::invalid_argument("dt must be positive");
  return dt;
}

RunConfig parse_run_config(const std::string& json_text) {
  const json j = json::parse(json_text);
  RunConfig cfg;
  if (j.contains("synthetic")) {
    cfg.synthetic = parse_generator(j.at("synthetic"));
  }
  cfg.ticks_path = j.value("ticks", "");
  cfg.supplies_path = j.value("supplies", "");
  cfg.start_iso = j.value("start", "");
  cfg.days = j.value("days", 0);
  if (j.contains("dt")) {
    if (j.at("dt").is_string())
      cfg.dt_seconds = parse_dt_token(j.at("dt").get<std::string>());
    else
      cfg.dt_seconds = j.at("dt").get<double>();
  }
  cfg.observable = observable_from_name(j.value("observable", "c"));
  if (j.contains("q")) cfg.q_values = j.at("q").get<std::vector<double>>();
  if (j.contains("scales")) {
    cfg.scales.clear();
    for (const auto& item : j.at("scales")) {
      if (item.is_string()) {
        cfg.scales.push_back(
            parse_scale_token(item.get<std::string>(), cfg.dt_seconds));
      } else {
        cfg.scales.push_back(item.get<int>());
      }
    }
  }
  if (j.contains("matrix_kinds")) {
    cfg.matrix_kinds = j.at("matrix_kinds").get<std::vector<std::string>>();
  }
  cfg.out_dir = j.value("out", cfg.out_dir);
  cfg.seed = j.value("seed", cfg.seed);
  cfg.jobs = j.value("jobs", cfg.jobs);
  cfg.mfdfa_order = j.value("mfdfa_order", cfg.mfdfa_order);
  cfg.liquidity_min_tx_per_day =
      j.value("liquidity_min_tx_per_day", cfg.liquidity_min_tx_per_day);
  cfg.max_zero_fraction_1h =
      j.value("max_zero_fraction_1h", cfg.max_zero_fraction_1h);
  cfg.xmin_pct = j.value("xmin_pct", cfg.xmin_pct);
  cfg.max_lag = j.value("max_lag", cfg.max_lag);
  return cfg;
}

std::string run_config_json(const RunConfig& cfg) {
  json j;
  if (cfg.synthetic) j["synthetic"] = generator_json(*cfg.synthetic);
  if (!cfg.ticks_path.empty()) j["ticks"] = cfg.ticks_path;
  if (!cfg.supplies_path.empty()) j["supplies"] = cfg.supplies_path;
  if (!cfg.start_iso.empty()) j["start"] = cfg.start_iso;
  if (cfg.days > 0) j["days"] = cfg.days;
  j["dt"] = cfg.dt_seconds;
  j["observable"] = observable_name(cfg.observable);
  j["q"] = cfg.q_values;
  j["scales"] = cfg.scales;
  j["matrix_kinds"] = cfg.matrix_kinds;
  j["out"] = cfg.out_dir;
  j["seed"] = cfg.seed;
  j["jobs"] = cfg.jobs;
  j["mfdfa_order"] = cfg.mfdfa_order;
  j["liquidity_min_tx_per_day"] = cfg.liquidity_min_tx_per_day;
  j["max_zero_fraction_1h"] = cfg.max_zero_fraction_1h;
  j["xmin_pct"] = cfg.xmin_pct;
  j["max_lag"] = cfg.max_lag;
  return j.dump(2) + "\n";
}

const Artifact* Manifest::find(const std::string& path) const {
  for (const auto& a : artifacts) {
    if (a.path == path) return &a;
  }
  return nullptr;
}

std::string manifest_json(const Manifest& m) {
  json j;
  j["config"] = json::parse(m.config_json);
  json arts = json::array();
  for (const auto& a : m.artifacts) {
    arts.push_back({{"path", a.path}, {"hash", a.hash}, {"bytes", a.bytes}});
  }
  j["artifacts"] = arts;
  return j.dump(2) + "\n";
}

Manifest parse_manifest(const std::string& json_text) {
  const json j = json::parse(json_text);
  Manifest m;
  m.config_json = j.at("config").dump();
  for (const auto& a : j.at("artifacts")) {
    m.artifacts.push_back({a.at("path").get<std::string>(),
                           a.at("hash").get<std::string>(),
                           a.value("bytes", std::uint64_t(0))});
  }
  return m;
}

Manifest run_pipeline(const RunConfig& cfg, std::ostream& log) {
  Manifest manifest;
  manifest.config_json = run_config_json(cfg);
  const fs::path out_dir(cfg.out_dir);
  fs::create_directories(out_dir);

  std::string stage = "setup";
  try {
    Panel panel;
    std::map<std::string, double> node_size;

    if (cfg.synthetic) {
      stage = "synth";
      StageWriter w(out_dir, manifest);
      panel = generate_panel(*cfg.synthetic);
      panel.dt = cfg.dt_seconds;
      panel.observable = cfg.observable;
      std::ostringstream csv;
      write_panel_csv(csv, panel);
      w.write("panel.csv", csv.str());
      w.commit();
      log << "[synth] " << panel.cols() << " columns x " << panel.rows()
          << " rows\n";
    } else {
      stage = "ingest";
      if (cfg.ticks_path.empty() || cfg.start_iso.empty() || cfg.days <= 0) {
        throw std::runtime_error("config needs ticks/start/days or a synthetic block");
      }
      StageWriter w(out_dir, manifest);
      std::ifstream ticks_in(cfg.ticks_path);
      if (!ticks_in) throw std::runtime_error("cannot open '" + cfg.ticks_path + "'");
      const Window window{parse_iso8601_utc(cfg.start_iso), cfg.days};
      ParseReport report;
      const TickTable table = parse_ticks(ticks_in, window, &report);
      log << "[ingest] " << report.parsed << " records, "
          << report.dropped_outside_window << " outside window\n";

      std::map<std::string, std::int64_t> supplies;
      if (!cfg.supplies_path.empty()) {
        std::ifstream sup_in(cfg.supplies_path);
        if (!sup_in) throw std::runtime_error("cannot open '" + cfg.supplies_path + "'");
        supplies = parse_supplies(sup_in);
      }

      const auto liquid = liquidity_filter(table, cfg.liquidity_min_tx_per_day);
      if (liquid.empty()) throw std::runtime_error("no collection passes the liquidity filter");
      std::vector<std::string> ids(liquid.begin(), liquid.end());

      // hourly activity panel for the metadata table
      Panel n1h = build_panel(table, ids, Observable::tx_count, supplies, 3600.0);
      const auto metas = collection_metadata(table, supplies, n1h);

      std::ostringstream canon;
      serialize_ticks(canon, table);
      w.write("ticks.canonical.csv", canon.str());

      std::ostringstream meta_csv;
      meta_csv << "collection_id,capitalization_last_day,n_total,supply,zero_fraction_1h\n";
      for (const auto& m : metas) {
        meta_csv << csv_escape(m.collection_id) << ','
                 << (m.capitalization_last_day
                         ? format_double(*m.capitalization_last_day)
                         : "")
                 << ',' << m.n_total << ','
                 << (m.supply ? std::to_string(*m.supply) : "") << ','
                 << format_double(m.zero_fraction_1h) << '\n';
        if (!liquid.count(m.collection_id)) continue;
        node_size[m.collection_id] =
            cfg.observable == Observable::tx_count
                ? double(m.n_total)
                : m.capitalization_last_day.value_or(1.0);
      }
      w.write("collections.csv", meta_csv.str());

      // daily pattern from the aggregate hourly activity
      Series total{n1h.data.rowwise().sum().array(), 3600.0, n1h.t0,
                   Observable::tx_count};
      if (total.size() >= 24) {
        const Eigen::ArrayXd pattern = daily_pattern(total);
        std::ostringstream pat;
        pat << "hour_utc,mean_tx\n";
        for (int h = 0; h < 24; ++h)
          pat << h << ',' << format_double(pattern[h]) << '\n';
        w.write("daily_pattern.csv", pat.str());
      }
      w.commit();

      stage = "panel";
      StageWriter wp(out_dir, manifest);
      if (cfg.dt_seconds == 3600.0 && cfg.max_zero_fraction_1h < 1.0) {
        std::vector<std::string> keep;
        for (const auto& m : metas) {
          if (liquid.count(m.collection_id) &&
              m.zero_fraction_1h < cfg.max_zero_fraction_1h) {
            keep.push_back(m.collection_id);
          }
        }
        ids = keep;
        if (ids.size() < 2) {
          throw std::runtime_error("fewer than 2 collections pass the 1h activity cut");
        }
      }
      panel = build_panel(table, ids, cfg.observable, supplies, cfg.dt_seconds);
      std::ostringstream csv;
      write_panel_csv(csv, panel);
      wp.write("panel.csv", csv.str());
      wp.commit();
      log << "[panel] " << panel.cols() << " columns x " << panel.rows()
          << " rows\n";
    }

    const int t_rows = static_cast<int>(panel.rows());
    const int n_cols = static_cast<int>(panel.cols());

    {
      stage = "dist";
      StageWriter w(out_dir, manifest);
      json report = json::array();
      std::ostringstream ccdf_csv;
      ccdf_csv << "label,x,p\n";
      const int max_cols = std::min(n_cols, 16);
      for (int j = 0; j < max_cols; ++j) {
        const Eigen::ArrayXd col = panel.data.col(j).array();
        const Eigen::ArrayXd mag = col.abs();
        json entry;
        entry["label"] = panel.ids[j];
        try {
          const CcdfCurve curve = ccdf(mag, true);
          const std::size_t step = std::max<std::size_t>(1, curve.points.size() / 200);
          for (std::size_t k = 0; k < curve.points.size(); k += step) {
            ccdf_csv << csv_escape(panel.ids[j]) << ','
                     << format_double(curve.points[k].first) << ','
                     << format_double(curve.points[k].second) << '\n';
          }
          const double x_min = percentile(mag / curve.sigma, cfg.xmin_pct);
          const Eigen::ArrayXd scaled = mag / curve.sigma;
          try {
            const TailFit pl = fit_powerlaw_tail(scaled, std::max(x_min, 1e-12));
            entry["powerlaw"] = {{"gamma", pl.exponent},
                                 {"x_min", pl.x_min},
                                 {"n_tail", pl.n_tail},
                                 {"loglog_r2", pl.loglog_r2},
                                 {"poor_fit", pl.poor_fit}};
          } catch (const std::exception& e) {
            entry["powerlaw"] = {{"error", e.what()}};
          }
          try {
            const TailFit se = fit_stretched_exp(scaled, std::max(x_min, 1e-12));
            entry["stretched_exp"] = {{"beta", se.exponent},
                                      {"x_min", se.x_min},
                                      {"n_tail", se.n_tail},
                                      {"r2", se.loglog_r2}};
          } catch (const std::exception& e) {
            entry["stretched_exp"] = {{"error", e.what()}};
          }
          const int lag = std::min(cfg.max_lag, t_rows / 4 - 1);
          if (lag >= 1) {
            const AcfCurve a = acf(mag, lag);
            entry["acf_abs_lag1"] = a.values.front();
            entry["acf_abs_last"] = a.values.back();
          }
        } catch (const std::exception& e) {
          entry["error"] = e.what();
        }
        report.push_back(entry);
      }
      w.write("dist_report.json", report.dump(2) + "\n");
      w.write("ccdf.csv", ccdf_csv.str());
      w.commit();
      log << "[dist] " << max_cols << " columns analyzed\n";
    }

    {
      stage = "mfdfa";
      StageWriter w(out_dir, manifest);
      DetrendConfig dcfg;
      dcfg.poly_order = cfg.mfdfa_order;
      const Eigen::ArrayXd x = panel.data.col(0).array();
      const FluctuationGrid grid = fluctuation_single(x, dcfg);
      std::ostringstream grid_csv;
      write_grid_csv(grid_csv, grid);
      w.write("fluctuation_xx.csv", grid_csv.str());

      json hj;
      try {
        const HurstResult hr = generalized_hurst(grid, full_range(grid));
        json hq = json::array();
        for (std::size_t i = 0; i < hr.q.size(); ++i) {
          hq.push_back({{"q", hr.q[i]},
                        {"h", hr.fits[i].exponent},
                        {"stderr", hr.fits[i].stderr_},
                        {"r2", hr.fits[i].r2}});
        }
        hj["h_of_q"] = hq;
        try {
          const ScalingFit h2 = hurst(grid, 2.0, full_range(grid));
          hj["H"] = h2.exponent;
          hj["H_stderr"] = h2.stderr_;
        } catch (const std::exception&) {
        }
        const SingularitySpectrum spec = singularity_spectrum(hr);
        json sp = json::array();
        for (std::size_t i = 0; i < spec.alpha.size(); ++i) {
          sp.push_back({{"alpha", spec.alpha[i]},
                        {"f", spec.f_alpha[i]},
                        {"q", spec.source_q[i]}});
        }
        hj["singularity_spectrum"] = sp;
        hj["alpha_width"] = spec.width();
        hj["folded"] = spec.folded;
      } catch (const std::exception& e) {
        hj["error"] = e.what();
      }
      w.write("hurst.json", hj.dump(2) + "\n");
      w.commit();
      log << "[mfdfa] grid over " << grid.q.size() << " q x " << grid.s.size()
          << " scales\n";
    }

    std::vector<std::pair<std::string, CorrMatrix>> matrices;
    {
      stage = "corr";
      StageWriter w(out_dir, manifest);
      const bool want_pearson =
          std::count(cfg.matrix_kinds.begin(), cfg.matrix_kinds.end(), "pearson") > 0;
      const bool want_detrended =
          std::count(cfg.matrix_kinds.begin(), cfg.matrix_kinds.end(), "detrended") > 0;
      if (want_pearson) {
        matrices.emplace_back("pearson", pearson_matrix(panel));
      }
      if (want_detrended) {
        std::vector<int> scales = cfg.scales;
        if (scales.empty()) {
          scales = default_s_grid(t_rows, 10, std::max(7, cfg.mfdfa_order + 2));
        }
        DetrendConfig dcfg;
        dcfg.poly_order = cfg.mfdfa_order;
        for (int s : scales) {
          auto mats = detrended_matrices(panel, cfg.q_values, s, dcfg, cfg.jobs);
          for (auto& m : mats) {
            matrices.emplace_back("detrended_" + scale_tag(m.q, m.s),
                                  std::move(m));
          }
        }
      }
      for (const auto& [name, m] : matrices) {
        std::ostringstream csv;
        write_matrix_csv(csv, m);
        w.write("corr_" + name + ".csv", csv.str());
        w.write("corr_" + name + ".json", matrix_sidecar_json(m));
        const OffdiagHistogram h = offdiag_histogram(m, 41);
        std::ostringstream hist;
        hist << "bin_lo,bin_hi,count\n";
        for (int k = 0; k < h.counts.size(); ++k) {
          hist << format_double(h.bin_edges[k]) << ','
               << format_double(h.bin_edges[k + 1]) << ',' << h.counts[k]
               << '\n';
        }
        w.write("offdiag_" + name + ".csv", hist.str());
      }
      w.commit();
      log << "[corr] " << matrices.size() << " matrices\n";
    }

    {
      stage = "rmt";
      StageWriter w(out_dir, manifest);
      const MpLaw law = mp_law(t_rows, n_cols, 1.0);
      for (const auto& [name, m] : matrices) {
        if (m.any_flagged()) {
          log << "[rmt] skipping " << name << " (flagged cells)\n";
          continue;
        }
        const SpectralDecomposition spec = eigen_sym(m);
        w.write("spectrum_" + name + ".json", spectrum_report_json(spec, law));
        if (name == "pearson") {
          std::ostringstream v1, v2;
          write_eigenvector_csv(v1, m.labels, spec.eigenvectors.col(0));
          w.write("v1_pearson.csv", v1.str());
          if (spec.size() > 1) {
            write_eigenvector_csv(v2, m.labels, spec.eigenvectors.col(1));
            w.write("v2_pearson.csv", v2.str());
          }
          // market-mode filtering and the filtered matrix C'
          const FilteredPanel filtered =
              filter_market_mode(panel, spec.eigenvectors.col(0));
          const CorrMatrix cprime = pearson_matrix(filtered.residuals);
          const SpectralDecomposition spec2 = eigen_sym(cprime);
          w.write("spectrum_pearson_filtered.json",
                  spectrum_report_json(spec2, law));
          std::ostringstream v2f;
          write_eigenvector_csv(v2f, m.labels, spec2.eigenvectors.col(0));
          w.write("v2_pearson_filtered.csv", v2f.str());
        }
      }
      w.commit();
      log << "[rmt] spectra written\n";
    }

    {
      stage = "mst";
      StageWriter w(out_dir, manifest);
      for (const auto& [name, m] : matrices) {
        if (m.any_flagged()) {
          log << "[mst] skipping " << name << " (flagged cells)\n";
          continue;
        }
        const DistanceMatrix dm = distance_matrix(m);
        const Tree tree = mst(dm);
        const Communities comms = louvain(tree);
        std::vector<double> sizes(tree.node_count, 1.0);
        for (int v = 0; v < tree.node_count; ++v) {
          const auto it = node_size.find(tree.labels[v]);
          if (it != node_size.end()) sizes[v] = it->second;
        }
        std::ostringstream edges, nodes;
        write_tree_edges_csv(edges, tree);
        write_tree_nodes_csv(nodes, tree, sizes, &comms);
        w.write("mst_" + name + "_edges.csv", edges.str());
        w.write("mst_" + name + "_nodes.csv", nodes.str());

        json tj;
        tj["total_weight"] = tree.total_weight();
        tj["communities"] = comms.count;
        tj["modularity"] = comms.modularity;
        const DegreeDistribution dd = degree_distribution(tree);
        tj["max_degree"] = dd.degree.maxCoeff();
        try {
          const DegreeTailFit fit = degree_tail_fit(dd);
          tj["degree_ccdf_slope"] = fit.slope;
          tj["degree_ccdf_r2"] = fit.r2;
        } catch (const std::exception& e) {
          tj["degree_ccdf_slope_error"] = e.what();
        }
        w.write("mst_" + name + ".json", tj.dump(2) + "\n");
      }
      w.commit();
      log << "[mst] trees written\n";
    }

    stage = "manifest";
    std::sort(manifest.artifacts.begin(), manifest.artifacts.end(),
              [](const Artifact& a, const Artifact& b) { return a.path < b.path; });
    write_file((out_dir / "manifest.json").string(), manifest_json(manifest));
    log << "[done] " << manifest.artifacts.size() << " artifacts\n";
    return manifest;
  } catch (const std::exception& e) {
    throw std::runtime_error("stage '" + stage + "' failed: " + e.what());
  }
}

std::vector<std::string> render_figures(const std::string& manifest_path,
                                        std::ostream& log) {
  const fs::path dir = fs::path(manifest_path).parent_path();
  const Manifest manifest = parse_manifest(read_file(manifest_path));
  std::vector<std::string> written;

  auto have = [&](const std::string& rel) {
    return manifest.find(rel) != nullptr && fs::exists(dir / rel);
  };
  auto emit = [&](const std::string& rel, const std::string& content) {
    write_file((dir / rel).string(), content);
    written.push_back(rel);
  };

  if (have("fluctuation_xx.csv")) {
    std::istringstream in(read_file((dir / "fluctuation_xx.csv").string()));
    const auto rows = read_csv(in);
    std::map<double, PlotCurve> by_q;
    for (std::size_t r = 1; r < rows.size(); ++r) {
      const double q = std::stod(rows[r][0]);
      const int s = std::stoi(rows[r][1]);
      const double fn = std::stod(rows[r][3]);
      const bool valid = rows[r][5] == "1";
      if (!valid || !(fn > 0.0)) continue;
      auto& c = by_q[q];
      if (c.label.empty()) c.label = "q=" + rows[r][0];
      c.x.push_back(double(s));
      c.y.push_back(fn);
    }
    std::vector<PlotCurve> curves;
    for (auto& [q, c] : by_q) curves.push_back(std::move(c));
    emit("fig_fluctuation.svg",
         svg_loglog("Fluctuation functions F(q,s)", "s", "F(q,s)", curves));
  } else {
    log << "[render] fluctuation_xx.csv missing, skipped\n";
  }

  if (have("ccdf.csv")) {
    std::istringstream in(read_file((dir / "ccdf.csv").string()));
    const auto rows = read_csv(in);
    std::map<std::string, PlotCurve> by_label;
    for (std::size_t r = 1; r < rows.size(); ++r) {
      auto& c = by_label[rows[r][0]];
      if (c.label.empty()) c.label = rows[r][0];
      c.x.push_back(std::stod(rows[r][1]));
      c.y.push_back(std::stod(rows[r][2]));
    }
    std::vector<PlotCurve> curves;
    for (auto& [k, c] : by_label) curves.push_back(std::move(c));
    emit("fig_ccdf.svg", svg_loglog("CCDF P(X > x)", "x / sigma", "P", curves));
  } else {
    log << "[render] ccdf.csv missing, skipped\n";
  }

  for (const auto& a : manifest.artifacts) {
    if (a.path.rfind("spectrum_", 0) == 0 &&
        a.path.size() > 5 + 9 &&
        a.path.substr(a.path.size() - 5) == ".json" && have(a.path)) {
      const json j = json::parse(read_file((dir / a.path).string()));
      const auto evs = j.at("eigenvalues").get<std::vector<double>>();
      Eigen::VectorXd lambda(static_cast<Eigen::Index>(evs.size()));
      for (std::size_t i = 0; i < evs.size(); ++i) lambda[i] = evs[i];
      MpLaw law;
      law.q_ratio = j.at("q_ratio").get<double>();
      law.sigma2 = j.at("sigma2").get<double>();
      law.lambda_minus = j.at("mp_bounds")[0].get<double>();
      law.lambda_plus = j.at("mp_bounds")[1].get<double>();
      const std::string base = a.path.substr(0, a.path.size() - 5);
      emit("fig_" + base + ".svg",
           svg_eigenvalue_histogram("Eigenvalues vs Marchenko-Pastur: " + base,
                                    lambda, law));
    }
  }

  for (const auto& a : manifest.artifacts) {
    const std::string suffix = "_edges.csv";
    if (a.path.rfind("mst_", 0) == 0 &&
        a.path.size() > suffix.size() &&
        a.path.substr(a.path.size() - suffix.size()) == suffix) {
      const std::string base = a.path.substr(0, a.path.size() - suffix.size());
      if (!have(a.path) || !have(base + "_nodes.csv")) {
        log << "[render] " << base << " artifacts missing, skipped\n";
        continue;
      }
      std::istringstream ein(read_file((dir / a.path).string()));
      std::istringstream nin(read_file((dir / (base + "_nodes.csv")).string()));
      const auto erows = read_csv(ein);
      const auto nrows = read_csv(nin);
      Tree tree;
      Communities comms;
      std::vector<double> sizes;
      std::map<std::string, int> index;
      for (std::size_t r = 1; r < nrows.size(); ++r) {
        index[nrows[r][0]] = static_cast<int>(r - 1);
        tree.labels.push_back(nrows[r][0]);
        sizes.push_back(std::stod(nrows[r][1]));
        comms.node_community.push_back(std::stoi(nrows[r][2]));
      }
      tree.node_count = static_cast<int>(tree.labels.size());
      comms.count =
          1 + *std::max_element(comms.node_community.begin(),
                                comms.node_community.end());
      for (std::size_t r = 1; r < erows.size(); ++r) {
        tree.edges.push_back({index.at(erows[r][0]), index.at(erows[r][1]),
                              std::stod(erows[r][2])});
      }
      emit("fig_" + base + ".svg", svg_mst("MST: " + base, tree, sizes, &comms));
    }
  }

  if (have("daily_pattern.csv")) {
    std::istringstream in(read_file((dir / "daily_pattern.csv").string()));
    const auto rows = read_csv(in);
    std::vector<double> values;
    for (std::size_t r = 1; r < rows.size(); ++r) {
      values.push_back(std::stod(rows[r][1]));
    }
    emit("fig_daily_pattern.svg",
         svg_line_chart("Mean transactions by UTC hour", "hour (UTC)",
                        "mean N", values));
  }

  log << "[render] " << written.size() << " figures\n";
  return written;
}

}  // namespace detrendcorr
