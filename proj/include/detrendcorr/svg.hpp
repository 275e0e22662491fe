#pragma once

#include "detrendcorr/corrmat.hpp"
#include "detrendcorr/mstnet.hpp"
#include "detrendcorr/rmt.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <string>
#include <vector>

namespace detrendcorr {

struct PlotCurve {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

/// Log-log plot with decade tick labels ("10^k") on both axes.
std::string svg_loglog(const std::string& title, const std::string& x_label,
                       const std::string& y_label,
                       const std::vector<PlotCurve>& curves);

/// Histogram of eigenvalues with the Marchenko-Pastur density overlaid as a
/// polyline (class "mp-curve") spanning [lambda_minus, lambda_plus].
std::string svg_eigenvalue_histogram(const std::string& title,
                                     const Eigen::VectorXd& eigenvalues,
                                     const MpLaw& law, int bins = 40);

/// Force-directed tree drawing with one circle per node (class "node",
/// radius ~ sqrt(size)) and one line per edge (class "edge", width ~
/// correlation strength 1 - d^2/2). Layout is seeded and deterministic.
std::string svg_mst(const std::string& title, const Tree& tree,
                    const std::vector<double>& node_size,
                    const Communities* communities, std::uint64_t seed = 7);

/// Simple linear-axis line chart (daily activity pattern and similar).
std::string svg_line_chart(const std::string& title,
                           const std::string& x_label,
                           const std::string& y_label,
                           const std::vector<double>& values);

}  // namespace detrendcorr
