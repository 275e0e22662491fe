#include "detrendcorr/svg.hpp"

#include "detrendcorr/rng.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace detrendcorr {

namespace {

constexpr int kWidth = 640;
constexpr int kHeight = 480;
constexpr int kMarginL = 70;
constexpr int kMarginR = 20;
constexpr int kMarginT = 40;
constexpr int kMarginB = 50;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f",
                          "#bcbd22", "#e377c2"};
constexpr int kPaletteSize = 10;

std::string num(double v) {
  std::ostringstream ss;
  ss << v;
  return ss.str();
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

struct Frame {
  double x_lo, x_hi, y_lo, y_hi;  // data coordinates (already log10 if log)

  double px(double x) const {
    return kMarginL + (x - x_lo) / (x_hi - x_lo) * (kWidth - kMarginL - kMarginR);
  }
  double py(double y) const {
    return kHeight - kMarginB -
           (y - y_lo) / (y_hi - y_lo) * (kHeight - kMarginT - kMarginB);
  }
};

void svg_open(std::ostringstream& out, const std::string& title) {
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
      << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << ' '
      << kHeight << "\">\n";
  out << "<rect x=\"0\" y=\"0\" width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" fill=\"white\"/>\n";
  out << "<text x=\"" << kWidth / 2 << "\" y=\"24\" text-anchor=\"middle\" "
      << "font-family=\"sans-serif\" font-size=\"15\">" << xml_escape(title)
      << "</text>\n";
}

void draw_axes(std::ostringstream& out, const std::string& x_label,
               const std::string& y_label) {
  out << "<line x1=\"" << kMarginL << "\" y1=\"" << kHeight - kMarginB
      << "\" x2=\"" << kWidth - kMarginR << "\" y2=\"" << kHeight - kMarginB
      << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << kMarginL << "\" y1=\"" << kMarginT << "\" x2=\""
      << kMarginL << "\" y2=\"" << kHeight - kMarginB
      << "\" stroke=\"black\"/>\n";
  out << "<text x=\"" << (kMarginL + kWidth - kMarginR) / 2 << "\" y=\""
      << kHeight - 12
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">"
      << xml_escape(x_label) << "</text>\n";
  out << "<text x=\"16\" y=\"" << (kMarginT + kHeight - kMarginB) / 2
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\" "
      << "transform=\"rotate(-90 16 " << (kMarginT + kHeight - kMarginB) / 2
      << ")\">" << xml_escape(y_label) << "</text>\n";
}

// decade ticks for a log10 frame axis
void log_ticks(std::ostringstream& out, const Frame& f, bool x_axis) {
  const double lo = x_axis ? f.x_lo : f.y_lo;
  const double hi = x_axis ? f.x_hi : f.y_hi;
  for (int k = static_cast<int>(std::ceil(lo)); k <= static_cast<int>(std::floor(hi)); ++k) {
    if (x_axis) {
      const double px = f.px(double(k));
      out << "<line x1=\"" << px << "\" y1=\"" << kHeight - kMarginB
          << "\" x2=\"" << px << "\" y2=\"" << kHeight - kMarginB + 5
          << "\" stroke=\"black\"/>\n";
      out << "<text x=\"" << px << "\" y=\"" << kHeight - kMarginB + 18
          << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
          << "font-size=\"11\">10^" << k << "</text>\n";
    } else {
      const double py = f.py(double(k));
      out << "<line x1=\"" << kMarginL - 5 << "\" y1=\"" << py << "\" x2=\""
          << kMarginL << "\" y2=\"" << py << "\" stroke=\"black\"/>\n";
      out << "<text x=\"" << kMarginL - 8 << "\" y=\"" << py + 4
          << "\" text-anchor=\"end\" font-family=\"sans-serif\" "
          << "font-size=\"11\">10^" << k << "</text>\n";
    }
  }
}

}  // namespace

std::string svg_loglog(const std::string& title, const std::string& x_label,
                       const std::string& y_label,
                       const std::vector<PlotCurve>& curves) {
  double x_lo = std::numeric_limits<double>::infinity(), x_hi = -x_lo;
  double y_lo = x_lo, y_hi = -x_lo;
  for (const auto& c : curves) {
    for (std::size_t i = 0; i < c.x.size(); ++i) {
      if (!(c.x[i] > 0.0) || !(c.y[i] > 0.0)) continue;
      x_lo = std::min(x_lo, std::log10(c.x[i]));
      x_hi = std::max(x_hi, std::log10(c.x[i]));
      y_lo = std::min(y_lo, std::log10(c.y[i]));
      y_hi = std::max(y_hi, std::log10(c.y[i]));
    }
  }
  if (!(x_hi > x_lo)) { x_lo -= 0.5; x_hi += 0.5; }
  if (!(y_hi > y_lo)) { y_lo -= 0.5; y_hi += 0.5; }
  const Frame f{x_lo - 0.05 * (x_hi - x_lo), x_hi + 0.05 * (x_hi - x_lo),
                y_lo - 0.05 * (y_hi - y_lo), y_hi + 0.05 * (y_hi - y_lo)};

  std::ostringstream out;
  svg_open(out, title);
  draw_axes(out, x_label, y_label);
  log_ticks(out, f, true);
  log_ticks(out, f, false);

  int ci = 0;
  double legend_y = kMarginT + 8;
  for (const auto& c : curves) {
    const char* color = kPalette[ci % kPaletteSize];
    out << "<polyline fill=\"none\" stroke=\"" << color
        << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < c.x.size(); ++i) {
      if (!(c.x[i] > 0.0) || !(c.y[i] > 0.0)) continue;
      out << num(f.px(std::log10(c.x[i]))) << ',' << num(f.py(std::log10(c.y[i])))
          << ' ';
    }
    out << "\"/>\n";
    if (!c.label.empty() && curves.size() <= 12) {
      out << "<text x=\"" << kWidth - kMarginR - 4 << "\" y=\"" << legend_y
          << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"10\" "
          << "fill=\"" << color << "\">" << xml_escape(c.label) << "</text>\n";
      legend_y += 12;
    }
    ++ci;
  }
  out << "</svg>\n";
  return out.str();
}

std::string svg_eigenvalue_histogram(const std::string& title,
                                     const Eigen::VectorXd& eigenvalues,
                                     const MpLaw& law, int bins) {
  const int n = static_cast<int>(eigenvalues.size());
  double lo = std::min(0.0, law.lambda_minus);
  double hi = std::max(eigenvalues.maxCoeff(), law.lambda_plus) * 1.05;
  std::vector<int> counts(bins, 0);
  for (int i = 0; i < n; ++i) {
    int k = static_cast<int>(double(bins) * (eigenvalues[i] - lo) / (hi - lo));
    k = std::clamp(k, 0, bins - 1);
    ++counts[k];
  }
  const double bin_w = (hi - lo) / double(bins);
  // density normalization: count / (n * bin width)
  double y_max = 0.0;
  for (int c : counts) y_max = std::max(y_max, double(c) / (double(n) * bin_w));
  // MP density peak
  for (int k = 0; k <= 200; ++k) {
    const double l = law.lambda_minus +
                     (law.lambda_plus - law.lambda_minus) * double(k) / 200.0;
    y_max = std::max(y_max, mp_density(law, l));
  }
  const Frame f{lo, hi, 0.0, y_max * 1.1 + 1e-12};

  std::ostringstream out;
  svg_open(out, title);
  draw_axes(out, "lambda", "density");
  for (int k = 0; k < bins; ++k) {
    if (counts[k] == 0) continue;
    const double x0 = lo + bin_w * k;
    const double d = double(counts[k]) / (double(n) * bin_w);
    out << "<rect class=\"hist-bin\" x=\"" << num(f.px(x0)) << "\" y=\""
        << num(f.py(d)) << "\" width=\"" << num(f.px(x0 + bin_w) - f.px(x0))
        << "\" height=\"" << num(f.py(0.0) - f.py(d))
        << "\" fill=\"#9ecae1\" stroke=\"#3182bd\"/>\n";
  }
  // axis ticks: a few linear labels
  for (int k = 0; k <= 4; ++k) {
    const double x = lo + (hi - lo) * k / 4.0;
    out << "<text x=\"" << num(f.px(x)) << "\" y=\"" << kHeight - kMarginB + 18
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">"
        << num(std::round(x * 100.0) / 100.0) << "</text>\n";
  }
  out << "<polyline class=\"mp-curve\" fill=\"none\" stroke=\"#d62728\" "
      << "stroke-width=\"2\" stroke-dasharray=\"6 3\" points=\"";
  for (int k = 0; k <= 400; ++k) {
    const double l = law.lambda_minus +
                     (law.lambda_plus - law.lambda_minus) * double(k) / 400.0;
    out << num(f.px(l)) << ',' << num(f.py(mp_density(law, l))) << ' ';
  }
  out << "\"/>\n</svg>\n";
  return out.str();
}

std::string svg_mst(const std::string& title, const Tree& tree,
                    const std::vector<double>& node_size,
                    const Communities* communities, std::uint64_t seed) {
  const int n = tree.node_count;
  // seeded circular start, then a fixed number of Fruchterman-Reingold steps
  CounterRng rng(seed, 0);
  std::vector<double> x(n), y(n);
  for (int v = 0; v < n; ++v) {
    const double ang = 2.0 * M_PI * double(v) / double(n);
    x[v] = std::cos(ang) + 0.05 * (rng.next_unit() - 0.5);
    y[v] = std::sin(ang) + 0.05 * (rng.next_unit() - 0.5);
  }
  const double k_opt = std::sqrt(4.0 / double(n));
  std::vector<double> dx(n), dy(n);
  for (int iter = 0; iter < 250; ++iter) {
    std::fill(dx.begin(), dx.end(), 0.0);
    std::fill(dy.begin(), dy.end(), 0.0);
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        double ux = x[a] - x[b], uy = y[a] - y[b];
        double d2 = ux * ux + uy * uy + 1e-9;
        const double rep = k_opt * k_opt / d2;
        dx[a] += ux * rep;
        dy[a] += uy * rep;
        dx[b] -= ux * rep;
        dy[b] -= uy * rep;
      }
    }
    for (const auto& e : tree.edges) {
      double ux = x[e.src] - x[e.dst], uy = y[e.src] - y[e.dst];
      const double d = std::sqrt(ux * ux + uy * uy) + 1e-9;
      const double att = d / k_opt * 0.05;
      dx[e.src] -= ux * att;
      dy[e.src] -= uy * att;
      dx[e.dst] += ux * att;
      dy[e.dst] += uy * att;
    }
    const double temp = 0.1 * (1.0 - double(iter) / 250.0) + 0.002;
    for (int v = 0; v < n; ++v) {
      const double d = std::sqrt(dx[v] * dx[v] + dy[v] * dy[v]) + 1e-12;
      const double step = std::min(d, temp);
      x[v] += dx[v] / d * step;
      y[v] += dy[v] / d * step;
    }
  }
  double x_lo = *std::min_element(x.begin(), x.end());
  double x_hi = *std::max_element(x.begin(), x.end());
  double y_lo = *std::min_element(y.begin(), y.end());
  double y_hi = *std::max_element(y.begin(), y.end());
  const double pad_x = 0.05 * (x_hi - x_lo + 1e-9);
  const double pad_y = 0.05 * (y_hi - y_lo + 1e-9);
  const Frame f{x_lo - pad_x, x_hi + pad_x, y_lo - pad_y, y_hi + pad_y};

  double max_size = 1.0;
  for (double s : node_size) max_size = std::max(max_size, s);

  std::ostringstream out;
  svg_open(out, title);
  for (const auto& e : tree.edges) {
    const double corr = 1.0 - e.distance * e.distance / 2.0;
    const double w = 0.5 + 2.5 * std::max(0.0, corr);
    out << "<line class=\"edge\" x1=\"" << num(f.px(x[e.src])) << "\" y1=\""
        << num(f.py(y[e.src])) << "\" x2=\"" << num(f.px(x[e.dst]))
        << "\" y2=\"" << num(f.py(y[e.dst])) << "\" stroke=\"#999\" "
        << "stroke-width=\"" << num(w) << "\"/>\n";
  }
  for (int v = 0; v < n; ++v) {
    const double sz = v < static_cast<int>(node_size.size()) ? node_size[v] : 1.0;
    const double r = 3.0 + 12.0 * std::sqrt(std::max(0.0, sz) / max_size);
    const int comm = communities ? communities->node_community[v] : 0;
    out << "<circle class=\"node\" cx=\"" << num(f.px(x[v])) << "\" cy=\""
        << num(f.py(y[v])) << "\" r=\"" << num(r) << "\" fill=\""
        << kPalette[comm % kPaletteSize] << "\" stroke=\"black\" "
        << "stroke-width=\"0.5\"/>\n";
    if (n <= 40) {
      const std::string lbl =
          tree.labels.empty() ? std::to_string(v) : tree.labels[v];
      out << "<text x=\"" << num(f.px(x[v]) + r + 2) << "\" y=\""
          << num(f.py(y[v]) + 3)
          << "\" font-family=\"sans-serif\" font-size=\"9\">" << xml_escape(lbl)
          << "</text>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

std::string svg_line_chart(const std::string& title, const std::string& x_label,
                           const std::string& y_label,
                           const std::vector<double>& values) {
  const int n = static_cast<int>(values.size());
  double y_hi = 0.0;
  for (double v : values) y_hi = std::max(y_hi, v);
  const Frame f{0.0, double(std::max(1, n - 1)), 0.0, y_hi * 1.1 + 1e-12};

  std::ostringstream out;
  svg_open(out, title);
  draw_axes(out, x_label, y_label);
  out << "<polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"2\" points=\"";
  for (int i = 0; i < n; ++i) {
    out << num(f.px(double(i))) << ',' << num(f.py(values[i])) << ' ';
  }
  out << "\"/>\n";
  for (int i = 0; i < n; ++i) {
    out << "<circle cx=\"" << num(f.px(double(i))) << "\" cy=\""
        << num(f.py(values[i])) << "\" r=\"2.5\" fill=\"#1f77b4\"/>\n";
  }
  for (int i = 0; i < n; i += std::max(1, n / 8)) {
    out << "<text x=\"" << num(f.px(double(i))) << "\" y=\""
        << kHeight - kMarginB + 18
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">"
        << i << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace detrendcorr
