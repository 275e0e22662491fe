#pragma once

#include "detrendcorr/mstnet.hpp"
#include "detrendcorr/types.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <string>

namespace detrendcorr {

/// Seeded generators backing the synthetic verification oracles. Identical
/// (kind, params, seed) always reproduce the same output; panel columns use
/// substream = column index so parallel generation cannot reorder draws.

Panel gaussian_iid(int t_pts, int i_cols, std::uint64_t seed);

/// Fractional Gaussian noise by spectral synthesis: Gaussian spectral
/// amplitudes with power ~ f^(1-2H), inverse FFT, scaled so the expected
/// variance is 1. t_pts must be a power of two, H in (0, 1).
Eigen::ArrayXd fgn(int t_pts, double hurst, std::uint64_t seed);

/// column_i = loading * Z + idio_sigma * eps_i with Z, eps iid N(0,1).
Panel one_factor(int t_pts, int i_cols, double loading, double idio_sigma,
                 std::uint64_t seed);

/// Pareto samples with CCDF x^-gamma on [1, inf), by inverse CDF.
Eigen::ArrayXd pareto(int t_pts, double gamma, std::uint64_t seed);

/// Binomial multiplicative cascade of the given depth (series length
/// 2^depth): each cell splits its mass into fractions (w, 1-w), the side
/// receiving w chosen by one random bit per split.
Eigen::ArrayXd cascade(int depth, std::uint64_t seed, double weight = 0.3);

/// Preferential-attachment (Barabasi-Albert, m = 1) random tree.
Tree pa_tree(int i_nodes, std::uint64_t seed);

/// Declarative form used by the CLI and the pipeline config.
struct GeneratorSpec {
  std::string kind;        // gaussian_iid | fgn | one_factor | pareto | cascade | pa_tree
  int t_pts = 0;
  int i_cols = 1;
  std::uint64_t seed = 0;
  double hurst = 0.5;      // fgn
  double loading = 0.0;    // one_factor
  double idio_sigma = 1.0; // one_factor
  double gamma = 1.5;      // pareto
  int depth = 14;          // cascade
  double weight = 0.3;     // cascade
};

/// Materialize a spec as a panel (single-series kinds give a 1-column
/// panel; pa_tree is not panel-shaped and is rejected here).
Panel generate_panel(const GeneratorSpec& spec);

}  // namespace detrendcorr
