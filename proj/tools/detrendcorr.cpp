#include "detrendcorr/diststats.hpp"
#include "detrendcorr/ingest.hpp"
#include "detrendcorr/io.hpp"
#include "detrendcorr/pipeline.hpp"
#include "detrendcorr/series.hpp"
#include "detrendcorr/svg.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace dc = detrendcorr;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

int env_jobs() {
  if (const char* v = std::getenv("DETRENDCORR_JOBS")) {
    try {
      return std::max(1, std::stoi(v));
    } catch (const std::exception&) {
    }
  }
  return 1;
}

std::vector<double> parse_q_spec(const std::string& spec) {
  // "a:b:step" range or comma-separated list
  std::vector<double> out;
  const auto c1 = spec.find(':');
  if (c1 != std::string::npos) {
    const auto c2 = spec.find(':', c1 + 1);
    if (c2 == std::string::npos) throw std::runtime_error("bad q range '" + spec + "'");
    const double lo = std::stod(spec.substr(0, c1));
    const double hi = std::stod(spec.substr(c1 + 1, c2 - c1 - 1));
    const double step = std::stod(spec.substr(c2 + 1));
    if (!(step > 0.0)) throw std::runtime_error("q step must be positive");
    for (double q = lo; q <= hi + 1e-9; q += step) {
      const double rounded = std::round(q / step) * step;
      if (std::abs(rounded) < 1e-12) continue;  // q = 0 on request only
      out.push_back(rounded);
    }
    return out;
  }
  std::stringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(std::stod(tok));
  return out;
}

std::vector<int> parse_scales_spec(const std::string& spec, double dt,
                                   int t_pts) {
  // "lo:hi:logN", "lo:hi:N" (linear), or comma list of tokens ("14", "7d")
  const auto c1 = spec.find(':');
  if (c1 != std::string::npos) {
    const auto c2 = spec.find(':', c1 + 1);
    if (c2 == std::string::npos) throw std::runtime_error("bad scale range '" + spec + "'");
    const int lo = dc::parse_scale_token(spec.substr(0, c1), dt);
    int hi = dc::parse_scale_token(spec.substr(c1 + 1, c2 - c1 - 1), dt);
    hi = std::min(hi, t_pts / 4);
    std::string count = spec.substr(c2 + 1);
    bool log_spaced = false;
    if (count.rfind("log", 0) == 0) {
      log_spaced = true;
      count = count.substr(3);
    }
    const int n = std::stoi(count);
    std::vector<int> out;
    for (int k = 0; k < n; ++k) {
      const double f = n > 1 ? double(k) / double(n - 1) : 0.0;
      const double v = log_spaced
                           ? std::exp(std::log(double(lo)) +
                                      f * (std::log(double(hi)) - std::log(double(lo))))
                           : double(lo) + f * double(hi - lo);
      const int s = static_cast<int>(std::lround(v));
      if (out.empty() || s > out.back()) out.push_back(s);
    }
    return out;
  }
  std::vector<int> out;
  std::stringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(dc::parse_scale_token(tok, dt));
  return out;
}

dc::Panel load_panel(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return dc::read_panel_csv(in);
}

dc::CorrMatrix load_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  dc::CorrMatrix m = dc::read_matrix_csv(in);
  const std::string sidecar = path.substr(0, path.rfind('.')) + ".json";
  if (fs::exists(sidecar)) {
    dc::apply_matrix_sidecar(m, dc::read_file(sidecar));
  }
  return m;
}

void save(const std::string& path, const std::string& content) {
  dc::write_file(path, content);
  std::cout << "wrote " << path << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Detrended correlation and spectral analysis of tick panels"};
  app.require_subcommand(1);
  int jobs = env_jobs();
  app.add_option("--jobs", jobs, "worker threads (env DETRENDCORR_JOBS)");

  // ---- ingest ----
  auto* cmd_ingest = app.add_subcommand("ingest", "parse tick files into canonical form");
  std::string ticks_path, supplies_path, start_iso, out_dir = "out";
  int days = 0;
  double min_tx = 2.0;
  cmd_ingest->add_option("--ticks", ticks_path, "tick CSV path")->required();
  cmd_ingest->add_option("--start", start_iso, "window start (ISO-8601 UTC)")->required();
  cmd_ingest->add_option("--days", days, "window length in days")->required();
  cmd_ingest->add_option("--supplies", supplies_path, "collection_id,supply file");
  cmd_ingest->add_option("--min-tx-per-day", min_tx, "liquidity threshold");
  cmd_ingest->add_option("--out", out_dir, "output directory");

  // ---- panel ----
  auto* cmd_panel = app.add_subcommand("panel", "build an aligned observable panel");
  std::string observable = "c", dt_token = "24h", panel_out = "panel.csv";
  cmd_panel->add_option("--ticks", ticks_path)->required();
  cmd_panel->add_option("--start", start_iso)->required();
  cmd_panel->add_option("--days", days)->required();
  cmd_panel->add_option("--supplies", supplies_path);
  cmd_panel->add_option("--observable", observable, "c (cap increments) or n (tx counts)");
  cmd_panel->add_option("--dt", dt_token, "1h or 24h (or seconds)");
  cmd_panel->add_option("--min-tx-per-day", min_tx);
  cmd_panel->add_option("--out", panel_out, "output CSV");

  // ---- dist ----
  auto* cmd_dist = app.add_subcommand("dist", "CCDF and tail fits of panel columns");
  std::string panel_path, fit_kind = "powerlaw", column_id, dist_out = "dist";
  double xmin_pct = 90.0;
  bool use_abs = true;
  cmd_dist->add_option("--panel", panel_path)->required();
  cmd_dist->add_option("--fit", fit_kind, "powerlaw or stretched");
  cmd_dist->add_option("--xmin-pct", xmin_pct, "tail threshold percentile");
  cmd_dist->add_option("--column", column_id, "restrict to one column");
  cmd_dist->add_flag("--abs,!--no-abs", use_abs, "fit |values| (default on)");
  cmd_dist->add_option("--out", dist_out, "output prefix");

  // ---- mfdfa ----
  auto* cmd_mfdfa = app.add_subcommand("mfdfa", "fluctuation functions and h(q)");
  std::string pair_spec, q_spec = "-4:4:0.5", scales_spec, mfdfa_out = "mfdfa";
  int order = 2;
  cmd_mfdfa->add_option("--panel", panel_path)->required();
  cmd_mfdfa->add_option("--pair", pair_spec, "A,B column labels (default: first column alone)");
  cmd_mfdfa->add_option("--q", q_spec, "q grid 'lo:hi:step' or list");
  cmd_mfdfa->add_option("--scales", scales_spec, "'lo:hi:logN' or token list");
  cmd_mfdfa->add_option("--order", order, "detrending polynomial order");
  cmd_mfdfa->add_option("--out", mfdfa_out, "output prefix");

  // ---- corr ----
  auto* cmd_corr = app.add_subcommand("corr", "correlation matrix of a panel");
  std::string corr_kind = "pearson", s_token = "14", corr_out = "corr";
  double q_value = 2.0;
  cmd_corr->add_option("--panel", panel_path)->required();
  cmd_corr->add_option("--kind", corr_kind, "pearson or detrended");
  cmd_corr->add_option("--q", q_value, "q for the detrended kind");
  cmd_corr->add_option("--s", s_token, "scale in bins, or '7d'/'14d'");
  cmd_corr->add_option("--order", order);
  cmd_corr->add_option("--out", corr_out, "output prefix");

  // ---- rmt ----
  auto* cmd_rmt = app.add_subcommand("rmt", "eigenvalue spectrum vs Marchenko-Pastur");
  std::string matrix_path, rmt_out = "spectrum";
  std::string rmt_panel;
  int rmt_t = 0;
  bool filter_top = false;
  cmd_rmt->add_option("--matrix", matrix_path)->required();
  cmd_rmt->add_option("--panel", rmt_panel, "panel (needed for --filter-top and Q)");
  cmd_rmt->add_option("--T", rmt_t, "series length for Q = T/I (when no panel given)");
  cmd_rmt->add_flag("--filter-top", filter_top, "regress out the market mode");
  cmd_rmt->add_flag("--allow-flagged", "accept matrices with flagged cells");
  cmd_rmt->add_option("--out", rmt_out, "output prefix");

  // ---- mst ----
  auto* cmd_mst = app.add_subcommand("mst", "minimal spanning tree of a matrix");
  std::string svg_path, mst_out = "mst";
  bool communities_flag = false, full_graph = false;
  cmd_mst->add_option("--matrix", matrix_path)->required();
  cmd_mst->add_flag("--communities", communities_flag, "run Louvain on the tree");
  cmd_mst->add_flag("--full-graph", full_graph,
                    "Louvain on the complete weighted graph instead of the tree");
  cmd_mst->add_option("--svg", svg_path, "also draw the tree");
  cmd_mst->add_flag("--allow-flagged", "accept matrices with flagged cells");
  cmd_mst->add_option("--out", mst_out, "output prefix");

  // ---- synth ----
  auto* cmd_synth = app.add_subcommand("synth", "seeded synthetic panels");
  dc::GeneratorSpec gen;
  std::string synth_out = "panel.csv";
  cmd_synth->add_option("--kind", gen.kind,
                        "gaussian_iid | fgn | one_factor | pareto | cascade")
      ->required();
  cmd_synth->add_option("--T", gen.t_pts, "points per series");
  cmd_synth->add_option("--I", gen.i_cols, "number of columns");
  cmd_synth->add_option("--seed", gen.seed);
  cmd_synth->add_option("--H", gen.hurst, "fgn Hurst exponent");
  cmd_synth->add_option("--loading", gen.loading, "one_factor loading");
  cmd_synth->add_option("--idio-sigma", gen.idio_sigma, "one_factor idiosyncratic sigma");
  cmd_synth->add_option("--gamma", gen.gamma, "pareto exponent");
  cmd_synth->add_option("--depth", gen.depth, "cascade depth");
  cmd_synth->add_option("--weight", gen.weight, "cascade weight");
  cmd_synth->add_option("--out", synth_out, "output CSV");

  // ---- run ----
  auto* cmd_run = app.add_subcommand("run", "full pipeline from a JSON config");
  std::string config_path, run_out_override;
  cmd_run->add_option("--config", config_path)->required();
  cmd_run->add_option("--out", run_out_override, "override the config out dir");

  // ---- render ----
  auto* cmd_render = app.add_subcommand("render", "SVG figures from a manifest");
  std::string manifest_path;
  cmd_render->add_option("--manifest", manifest_path)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*cmd_ingest) {
      dc::RunConfig cfg;
      cfg.ticks_path = ticks_path;
      cfg.supplies_path = supplies_path;
      cfg.start_iso = start_iso;
      cfg.days = days;
      cfg.liquidity_min_tx_per_day = min_tx;

      std::ifstream in(ticks_path);
      if (!in) throw std::runtime_error("cannot open '" + ticks_path + "'");
      const dc::Window window{dc::parse_iso8601_utc(start_iso), days};
      dc::ParseReport report;
      const dc::TickTable table = dc::parse_ticks(in, window, &report);
      std::cout << "parsed " << report.parsed << " records ("
                << report.dropped_outside_window << " outside window)\n";

      std::map<std::string, std::int64_t> supplies;
      if (!supplies_path.empty()) {
        std::ifstream sup(supplies_path);
        if (!sup) throw std::runtime_error("cannot open '" + supplies_path + "'");
        supplies = dc::parse_supplies(sup);
      }
      fs::create_directories(out_dir);
      std::ostringstream canon;
      dc::serialize_ticks(canon, table);
      save(out_dir + "/ticks.canonical.csv", canon.str());

      const auto liquid = dc::liquidity_filter(table, min_tx);
      std::vector<std::string> ids(liquid.begin(), liquid.end());
      if (!ids.empty()) {
        const dc::Panel n1h =
            dc::build_panel(table, ids, dc::Observable::tx_count, supplies, 3600.0);
        const auto metas = dc::collection_metadata(table, supplies, n1h);
        std::ostringstream meta;
        meta << "collection_id,capitalization_last_day,n_total,supply,zero_fraction_1h\n";
        for (const auto& m : metas) {
          meta << dc::csv_escape(m.collection_id) << ','
               << (m.capitalization_last_day
                       ? dc::format_double(*m.capitalization_last_day)
                       : "")
               << ',' << m.n_total << ','
               << (m.supply ? std::to_string(*m.supply) : "") << ','
               << dc::format_double(m.zero_fraction_1h) << '\n';
        }
        save(out_dir + "/collections.csv", meta.str());
      }
      std::cout << liquid.size() << " collections pass the liquidity filter\n";
      return 0;
    }

    if (*cmd_panel) {
      std::ifstream in(ticks_path);
      if (!in) throw std::runtime_error("cannot open '" + ticks_path + "'");
      const dc::Window window{dc::parse_iso8601_utc(start_iso), days};
      const dc::TickTable table = dc::parse_ticks(in, window, nullptr);
      std::map<std::string, std::int64_t> supplies;
      if (!supplies_path.empty()) {
        std::ifstream sup(supplies_path);
        if (!sup) throw std::runtime_error("cannot open '" + supplies_path + "'");
        supplies = dc::parse_supplies(sup);
      }
      const auto liquid = dc::liquidity_filter(table, min_tx);
      if (liquid.empty()) throw std::runtime_error("no collection passes the liquidity filter");
      const std::vector<std::string> ids(liquid.begin(), liquid.end());
      const dc::Panel panel =
          dc::build_panel(table, ids, dc::observable_from_name(observable),
                          supplies, dc::parse_dt_token(dt_token));
      std::ostringstream csv;
      dc::write_panel_csv(csv, panel);
      save(panel_out, csv.str());
      return 0;
    }

    if (*cmd_dist) {
      const dc::Panel panel = load_panel(panel_path);
      json report = json::array();
      std::vector<dc::PlotCurve> curves;
      for (Eigen::Index j = 0; j < panel.cols(); ++j) {
        if (!column_id.empty() && panel.ids[j] != column_id) continue;
        Eigen::ArrayXd v = panel.data.col(j).array();
        if (use_abs) v = v.abs();
        json entry;
        entry["label"] = panel.ids[j];
        try {
          const dc::CcdfCurve curve = dc::ccdf(v, true);
          dc::PlotCurve pc;
          pc.label = panel.ids[j];
          for (const auto& [x, p] : curve.points) {
            pc.x.push_back(x);
            pc.y.push_back(p);
          }
          curves.push_back(std::move(pc));
          const Eigen::ArrayXd scaled = v / curve.sigma;
          const double x_min = dc::percentile(scaled, xmin_pct);
          if (fit_kind == "powerlaw") {
            const dc::TailFit f = dc::fit_powerlaw_tail(scaled, std::max(x_min, 1e-12));
            entry["gamma"] = f.exponent;
            entry["x_min"] = f.x_min;
            entry["n_tail"] = f.n_tail;
            entry["loglog_r2"] = f.loglog_r2;
            entry["poor_fit"] = f.poor_fit;
          } else {
            const dc::TailFit f = dc::fit_stretched_exp(scaled, std::max(x_min, 1e-12));
            entry["beta"] = f.exponent;
            entry["x_min"] = f.x_min;
            entry["n_tail"] = f.n_tail;
            entry["r2"] = f.loglog_r2;
          }
        } catch (const std::exception& e) {
          entry["error"] = e.what();
        }
        report.push_back(entry);
      }
      save(dist_out + "_report.json", report.dump(2) + "\n");
      save(dist_out + "_ccdf.svg",
           dc::svg_loglog("CCDF P(X > x)", "x / sigma", "P", curves));
      return 0;
    }

    if (*cmd_mfdfa) {
      const dc::Panel panel = load_panel(panel_path);
      dc::DetrendConfig dcfg;
      dcfg.poly_order = order;
      dcfg.q_grid = parse_q_spec(q_spec);
      if (!scales_spec.empty()) {
        dcfg.s_grid = parse_scales_spec(scales_spec, panel.dt,
                                        static_cast<int>(panel.rows()));
      }
      std::string a_label = panel.ids.front(), b_label;
      if (!pair_spec.empty()) {
        const auto comma = pair_spec.find(',');
        if (comma == std::string::npos) {
          a_label = pair_spec;
        } else {
          a_label = pair_spec.substr(0, comma);
          b_label = pair_spec.substr(comma + 1);
        }
      }
      const Eigen::Index ai = panel.index_of(a_label);
      if (ai < 0) throw std::runtime_error("column '" + a_label + "' not in panel");
      const Eigen::ArrayXd x = panel.data.col(ai).array();

      auto dump_hurst = [&](const dc::FluctuationGrid& g, const std::string& name) {
        std::ostringstream csv;
        dc::write_grid_csv(csv, g);
        save(mfdfa_out + "_" + name + ".csv", csv.str());
        json hj;
        try {
          const dc::HurstResult hr = dc::generalized_hurst(g, dc::full_range(g));
          json hq = json::array();
          for (std::size_t i = 0; i < hr.q.size(); ++i) {
            hq.push_back({{"q", hr.q[i]},
                          {"h", hr.fits[i].exponent},
                          {"stderr", hr.fits[i].stderr_},
                          {"r2", hr.fits[i].r2}});
          }
          hj["h_of_q"] = hq;
          const dc::SingularitySpectrum sp = dc::singularity_spectrum(hr);
          json spj = json::array();
          for (std::size_t i = 0; i < sp.alpha.size(); ++i) {
            spj.push_back({{"alpha", sp.alpha[i]}, {"f", sp.f_alpha[i]}});
          }
          hj["singularity_spectrum"] = spj;
          hj["alpha_width"] = sp.width();
        } catch (const std::exception& e) {
          hj["error"] = e.what();
        }
        save(mfdfa_out + "_" + name + "_hurst.json", hj.dump(2) + "\n");
      };

      if (b_label.empty()) {
        dump_hurst(dc::fluctuation_single(x, dcfg), "xx");
      } else {
        const Eigen::Index bi = panel.index_of(b_label);
        if (bi < 0) throw std::runtime_error("column '" + b_label + "' not in panel");
        const Eigen::ArrayXd y = panel.data.col(bi).array();
        const dc::FluctuationTriple f = dc::fluctuation_pair(x, y, dcfg);
        dump_hurst(f.xx, "xx");
        dump_hurst(f.yy, "yy");
        std::ostringstream csv;
        dc::write_grid_csv(csv, f.xy);
        save(mfdfa_out + "_xy.csv", csv.str());
        // rho(q, s) table from the three grids
        std::ostringstream rho;
        rho << "q,s,rho\n";
        for (std::size_t qi = 0; qi < f.xy.q.size(); ++qi) {
          for (std::size_t si = 0; si < f.xy.s.size(); ++si) {
            const auto i = static_cast<Eigen::Index>(qi);
            const auto k = static_cast<Eigen::Index>(si);
            const double denom = std::sqrt(f.xx.f(i, k) * f.yy.f(i, k));
            const double value = denom > 0.0 ? f.xy.f(i, k) / denom
                                             : std::numeric_limits<double>::quiet_NaN();
            rho << dc::format_double(f.xy.q[qi]) << ',' << f.xy.s[si] << ','
                << dc::format_double(value) << '\n';
          }
        }
        save(mfdfa_out + "_rho.csv", rho.str());
      }
      return 0;
    }

    if (*cmd_corr) {
      const dc::Panel panel = load_panel(panel_path);
      dc::CorrMatrix m;
      if (corr_kind == "pearson") {
        m = dc::pearson_matrix(panel);
      } else if (corr_kind == "detrended") {
        dc::DetrendConfig dcfg;
        dcfg.poly_order = order;
        const int s = dc::parse_scale_token(s_token, panel.dt);
        m = dc::detrended_matrix(panel, q_value, s, dcfg, jobs);
      } else {
        throw std::runtime_error("unknown matrix kind '" + corr_kind + "'");
      }
      std::ostringstream csv;
      dc::write_matrix_csv(csv, m);
      save(corr_out + ".csv", csv.str());
      save(corr_out + ".json", dc::matrix_sidecar_json(m));
      return 0;
    }

    if (*cmd_rmt) {
      dc::CorrMatrix m = load_matrix(matrix_path);
      if (m.any_flagged() && !cmd_rmt->count("--allow-flagged")) {
        throw std::runtime_error("matrix has flagged cells (use --allow-flagged)");
      }
      dc::Panel panel;
      int t_pts = rmt_t;
      if (!rmt_panel.empty()) {
        panel = load_panel(rmt_panel);
        t_pts = static_cast<int>(panel.rows());
      }
      if (t_pts <= m.size()) {
        throw std::runtime_error("need T > I: pass --panel or --T");
      }
      const dc::MpLaw law = dc::mp_law(t_pts, m.size(), 1.0);
      const dc::SpectralDecomposition spec = dc::eigen_sym(m);
      save(rmt_out + ".json", dc::spectrum_report_json(spec, law));
      std::ostringstream v1, v2;
      dc::write_eigenvector_csv(v1, m.labels, spec.eigenvectors.col(0));
      save(rmt_out + "_v1.csv", v1.str());
      if (spec.size() > 1) {
        dc::write_eigenvector_csv(v2, m.labels, spec.eigenvectors.col(1));
        save(rmt_out + "_v2.csv", v2.str());
      }
      if (filter_top) {
        if (rmt_panel.empty()) {
          throw std::runtime_error("--filter-top needs --panel");
        }
        const dc::FilteredPanel filtered =
            dc::filter_market_mode(panel, spec.eigenvectors.col(0));
        const dc::CorrMatrix cprime = dc::pearson_matrix(filtered.residuals);
        const dc::SpectralDecomposition spec2 = dc::eigen_sym(cprime);
        save(rmt_out + "_filtered.json", dc::spectrum_report_json(spec2, law));
        std::ostringstream csv;
        dc::write_panel_csv(csv, filtered.residuals);
        save(rmt_out + "_residuals.csv", csv.str());
      }
      return 0;
    }

    if (*cmd_mst) {
      const dc::CorrMatrix m = load_matrix(matrix_path);
      if (m.any_flagged() && !cmd_mst->count("--allow-flagged")) {
        throw std::runtime_error("matrix has flagged cells (use --allow-flagged)");
      }
      const dc::DistanceMatrix dm = dc::distance_matrix(m);
      const dc::Tree tree = dc::mst(dm);
      dc::Communities comms;
      bool have_comms = false;
      if (communities_flag || !svg_path.empty()) {
        if (full_graph) {
          dc::WeightedGraph g;
          g.n = static_cast<int>(dm.d.rows());
          g.adj.resize(g.n);
          for (int i = 0; i < g.n; ++i)
            for (int j2 = i + 1; j2 < g.n; ++j2)
              g.add_edge(i, j2, 2.0 - dm.d(i, j2));
          comms = dc::louvain(g);
        } else {
          comms = dc::louvain(tree);
        }
        have_comms = true;
        std::cout << comms.count << " communities, modularity "
                  << comms.modularity << "\n";
      }
      std::vector<double> sizes(tree.node_count, 1.0);
      std::ostringstream edges, nodes;
      dc::write_tree_edges_csv(edges, tree);
      dc::write_tree_nodes_csv(nodes, tree, sizes, have_comms ? &comms : nullptr);
      save(mst_out + "_edges.csv", edges.str());
      save(mst_out + "_nodes.csv", nodes.str());
      if (!svg_path.empty()) {
        save(svg_path, dc::svg_mst("MST", tree, sizes,
                                   have_comms ? &comms : nullptr));
      }
      return 0;
    }

    if (*cmd_synth) {
      const dc::Panel panel = dc::generate_panel(gen);
      std::ostringstream csv;
      dc::write_panel_csv(csv, panel);
      save(synth_out, csv.str());
      return 0;
    }

    if (*cmd_run) {
      dc::RunConfig cfg = dc::parse_run_config(dc::read_file(config_path));
      if (!run_out_override.empty()) cfg.out_dir = run_out_override;
      if (cmd_run->count("--jobs") || app.count("--jobs")) cfg.jobs = jobs;
      const dc::Manifest manifest = dc::run_pipeline(cfg, std::cout);
      std::cout << "manifest: " << cfg.out_dir << "/manifest.json ("
                << manifest.artifacts.size() << " artifacts)\n";
      return 0;
    }

    if (*cmd_render) {
      dc::render_figures(manifest_path, std::cout);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
