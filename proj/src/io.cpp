#include "detrendcorr/io.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace detrendcorr {

using nlohmann::json;

std::vector<std::vector<std::string>> read_csv(std::istream& in) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false;
  bool any = false;
  int c;
  while ((c = in.get()) != EOF) {
    any = true;
    const char ch = static_cast<char>(c);
    if (quoted) {
      if (ch == '"') {
        if (in.peek() == '"') {
          field.push_back('"');
          in.get();
        } else {
          quoted = false;
        }
      } else {
        field.push_back(ch);
      }
      continue;
    }
    switch (ch) {
      case '"':
        quoted = true;
        break;
      case ',':
        row.push_back(std::move(field));
        field.clear();
        break;
      case '\r':
        break;
      case '\n':
        row.push_back(std::move(field));
        field.clear();
        rows.push_back(std::move(row));
        row.clear();
        break;
      default:
        field.push_back(ch);
    }
  }
  if (quoted) throw std::runtime_error("read_csv: unterminated quoted field");
  if (any && (!field.empty() || !row.empty())) {
    row.push_back(std::move(field));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += "\"\"";
    else out.push_back(c);
  }
  out += '"';
  return out;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_panel_csv(std::ostream& out, const Panel& panel) {
  out << "t";
  for (const auto& id : panel.ids) out << ',' << csv_escape(id);
  out << '\n';
  for (Eigen::Index r = 0; r < panel.rows(); ++r) {
    out << (panel.t0 + static_cast<std::int64_t>(double(r) * panel.dt));
    for (Eigen::Index j = 0; j < panel.cols(); ++j) {
      out << ',' << format_double(panel.data(r, j));
    }
    out << '\n';
  }
}

Panel read_panel_csv(std::istream& in) {
  const auto rows = read_csv(in);
  if (rows.size() < 2 || rows.front().size() < 2 || rows.front()[0] != "t") {
    throw std::runtime_error("read_panel_csv: malformed panel file");
  }
  Panel p;
  const std::size_t n_cols = rows.front().size() - 1;
  for (std::size_t j = 1; j < rows.front().size(); ++j) {
    p.ids.push_back(rows.front()[j]);
  }
  const std::size_t n_rows = rows.size() - 1;
  p.data.resize(static_cast<Eigen::Index>(n_rows),
                static_cast<Eigen::Index>(n_cols));
  std::vector<std::int64_t> ts(n_rows);
  for (std::size_t r = 0; r < n_rows; ++r) {
    const auto& row = rows[r + 1];
    if (row.size() != n_cols + 1) {
      throw std::runtime_error("read_panel_csv: ragged row " + std::to_string(r + 2));
    }
    ts[r] = std::stoll(row[0]);
    for (std::size_t j = 0; j < n_cols; ++j) {
      p.data(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(j)) =
          std::stod(row[j + 1]);
    }
  }
  p.t0 = ts.front();
  p.dt = n_rows > 1 ? double(ts[1] - ts[0]) : 1.0;
  p.observable = Observable::other;
  return p;
}

void write_matrix_csv(std::ostream& out, const CorrMatrix& m) {
  out << "label";
  for (const auto& l : m.labels) out << ',' << csv_escape(l);
  out << '\n';
  for (int i = 0; i < m.size(); ++i) {
    out << csv_escape(m.labels[i]);
    for (int j = 0; j < m.size(); ++j) out << ',' << format_double(m.values(i, j));
    out << '\n';
  }
}

CorrMatrix read_matrix_csv(std::istream& in) {
  const auto rows = read_csv(in);
  if (rows.size() < 2 || rows.front().size() != rows.size()) {
    throw std::runtime_error("read_matrix_csv: malformed matrix file");
  }
  const int n = static_cast<int>(rows.size()) - 1;
  CorrMatrix m;
  m.labels.assign(rows.front().begin() + 1, rows.front().end());
  m.values.resize(n, n);
  m.flagged.setConstant(n, n, false);
  for (int i = 0; i < n; ++i) {
    const auto& row = rows[i + 1];
    if (static_cast<int>(row.size()) != n + 1 || row[0] != m.labels[i]) {
      throw std::runtime_error("read_matrix_csv: bad row " + std::to_string(i + 2));
    }
    for (int j = 0; j < n; ++j) {
      m.values(i, j) = std::stod(row[j + 1]);
      if (!std::isfinite(m.values(i, j))) m.flagged(i, j) = true;
    }
  }
  return m;
}

std::string matrix_sidecar_json(const CorrMatrix& m) {
  json j;
  j["kind"] = m.kind == CorrKind::pearson ? "pearson" : "detrended";
  j["q"] = m.q;
  j["s"] = m.s;
  j["observable"] = observable_name(m.observable);
  j["flagged_cells"] = m.flagged.count() / 2;
  return j.dump(2) + "\n";
}

void apply_matrix_sidecar(CorrMatrix& m, const std::string& json_text) {
  const json j = json::parse(json_text);
  m.kind = j.value("kind", "pearson") == std::string("detrended")
               ? CorrKind::detrended
               : CorrKind::pearson;
  m.q = j.value("q", 0.0);
  m.s = j.value("s", 0);
  m.observable = observable_from_name(j.value("observable", "other"));
}

void write_grid_csv(std::ostream& out, const FluctuationGrid& grid) {
  out << "q,s,F,F_norm,segments_used,valid\n";
  for (std::size_t qi = 0; qi < grid.q.size(); ++qi) {
    for (std::size_t si = 0; si < grid.s.size(); ++si) {
      const auto i = static_cast<Eigen::Index>(qi);
      const auto k = static_cast<Eigen::Index>(si);
      out << format_double(grid.q[qi]) << ',' << grid.s[si] << ','
          << format_double(grid.f(i, k)) << ',' << format_double(grid.f_norm(i, k))
          << ',' << (grid.segments_total[k] - grid.segments_excluded[k]) << ','
          << (grid.valid(i, k) ? 1 : 0) << '\n';
    }
  }
}

void write_tree_edges_csv(std::ostream& out, const Tree& t) {
  out << "src,dst,distance,weight\n";
  for (const auto& e : t.edges) {
    const std::string a =
        t.labels.empty() ? std::to_string(e.src) : t.labels[e.src];
    const std::string b =
        t.labels.empty() ? std::to_string(e.dst) : t.labels[e.dst];
    out << csv_escape(a) << ',' << csv_escape(b) << ','
        << format_double(e.distance) << ',' << format_double(2.0 - e.distance)
        << '\n';
  }
}

void write_tree_nodes_csv(std::ostream& out, const Tree& t,
                          const std::vector<double>& size,
                          const Communities* communities) {
  out << "id,size,community,degree\n";
  const Eigen::ArrayXi deg = degrees(t);
  for (int v = 0; v < t.node_count; ++v) {
    const std::string id = t.labels.empty() ? std::to_string(v) : t.labels[v];
    const double sz = v < static_cast<int>(size.size()) ? size[v] : 1.0;
    const int comm = communities ? communities->node_community[v] : 0;
    out << csv_escape(id) << ',' << format_double(sz) << ',' << comm << ','
        << deg[v] << '\n';
  }
}

std::string spectrum_report_json(const SpectralDecomposition& spec,
                                 const MpLaw& law) {
  const OutlierCount oc = count_outliers(spec, law);
  json j;
  j["eigenvalues"] = std::vector<double>(
      spec.eigenvalues.data(), spec.eigenvalues.data() + spec.eigenvalues.size());
  j["mp_bounds"] = {law.lambda_minus, law.lambda_plus};
  j["q_ratio"] = law.q_ratio;
  j["sigma2"] = law.sigma2;
  j["n_above"] = oc.n_above;
  j["n_below"] = oc.n_below;
  j["lambda1_ratio"] = oc.lambda1_ratio;
  return j.dump(2) + "\n";
}

void write_eigenvector_csv(std::ostream& out,
                           const std::vector<std::string>& labels,
                           const Eigen::VectorXd& v) {
  out << "label,component\n";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const std::string id =
        i < static_cast<Eigen::Index>(labels.size()) ? labels[i] : std::to_string(i);
    out << csv_escape(id) << ',' << format_double(v[i]) << '\n';
  }
}

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[20];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << content;
  if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

}  // namespace detrendcorr
