#include "detrendcorr/synthlab.hpp"

#include "detrendcorr/fft.hpp"
#include "detrendcorr/rng.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

namespace detrendcorr {

namespace {

Panel empty_panel(int t_pts, int i_cols, Observable obs) {
  Panel p;
  p.data.resize(t_pts, i_cols);
  p.ids.reserve(i_cols);
  for (int j = 0; j < i_cols; ++j) p.ids.push_back("S" + std::to_string(j));
  p.dt = 1.0;
  p.t0 = 0;
  p.observable = obs;
  return p;
}

}  // namespace

Panel gaussian_iid(int t_pts, int i_cols, std::uint64_t seed) {
  if (t_pts < 1 || i_cols < 1) throw std::invalid_argument("gaussian_iid: bad shape");
  Panel p = empty_panel(t_pts, i_cols, Observable::other);
  for (int j = 0; j < i_cols; ++j) {
    CounterRng rng(seed, static_cast<std::uint64_t>(j));
    p.data.col(j) = rng.normals(t_pts).matrix();
  }
  return p;
}

Eigen::ArrayXd fgn(int t_pts, double hurst, std::uint64_t seed) {
  if (!(hurst > 0.0 && hurst < 1.0)) {
    throw std::invalid_argument("fgn: H must lie in (0, 1)");
  }
  if (!is_power_of_two(static_cast<std::size_t>(t_pts)) || t_pts < 8) {
    throw std::invalid_argument("fgn: T must be a power of two >= 8");
  }
  const int n = t_pts;
  const int half = n / 2;
  const double spectral_exp = 1.0 - 2.0 * hurst;  // power ~ f^(1-2H)

  // expected total spectral power, for unit process variance
  double power_sum = 0.0;
  for (int k = 1; k < half; ++k) power_sum += 2.0 * std::pow(double(k), spectral_exp);
  power_sum += std::pow(double(half), spectral_exp);
  const double scale = double(n) * double(n) / power_sum;

  CounterRng rng(seed, 0);
  std::vector<std::complex<double>> spec(n, {0.0, 0.0});
  for (int k = 1; k < half; ++k) {
    const double sd = std::sqrt(0.5 * scale * std::pow(double(k), spectral_exp));
    const std::complex<double> a(sd * rng.next_normal(), sd * rng.next_normal());
    spec[k] = a;
    spec[n - k] = std::conj(a);
  }
  // Nyquist bin must be real
  spec[half] = {std::sqrt(scale * std::pow(double(half), spectral_exp)) *
                    rng.next_normal(),
                0.0};

  fft_radix2(spec, true);
  Eigen::ArrayXd out(n);
  for (int i = 0; i < n; ++i) out[i] = spec[i].real();
  return out;
}

Panel one_factor(int t_pts, int i_cols, double loading, double idio_sigma,
                 std::uint64_t seed) {
  if (!(loading >= 0.0 && loading < 1.0)) {
    throw std::invalid_argument("one_factor: loading must lie in [0, 1)");
  }
  Panel p = empty_panel(t_pts, i_cols, Observable::other);
  CounterRng factor_rng(seed, 0xfac708ULL);
  const Eigen::ArrayXd z = factor_rng.normals(t_pts);
  for (int j = 0; j < i_cols; ++j) {
    CounterRng rng(seed, static_cast<std::uint64_t>(j));
    p.data.col(j) = (loading * z + idio_sigma * rng.normals(t_pts)).matrix();
  }
  return p;
}

Eigen::ArrayXd pareto(int t_pts, double gamma, std::uint64_t seed) {
  if (!(gamma > 0.0)) throw std::invalid_argument("pareto: gamma must be > 0");
  CounterRng rng(seed, 0);
  Eigen::ArrayXd out(t_pts);
  for (int i = 0; i < t_pts; ++i) {
    out[i] = std::pow(rng.next_unit(), -1.0 / gamma);
  }
  return out;
}

Eigen::ArrayXd cascade(int depth, std::uint64_t seed, double weight) {
  if (depth < 1 || depth > 26) throw std::invalid_argument("cascade: depth out of range");
  if (!(weight > 0.0 && weight < 1.0)) {
    throw std::invalid_argument("cascade: weight must lie in (0, 1)");
  }
  CounterRng rng(seed, 0);
  const int n = 1 << depth;
  Eigen::ArrayXd mass = Eigen::ArrayXd::Constant(n, 1.0);
  for (int level = 0; level < depth; ++level) {
    const int cells = 1 << level;
    const int width = n >> level;
    for (int c = 0; c < cells; ++c) {
      const bool swap = (rng.next_u64() & 1ULL) != 0;
      const double wl = swap ? 1.0 - weight : weight;
      const double wr = swap ? weight : 1.0 - weight;
      const int lo = c * width;
      const int mid = lo + width / 2;
      for (int i = lo; i < mid; ++i) mass[i] *= wl;
      for (int i = mid; i < lo + width; ++i) mass[i] *= wr;
    }
  }
  return mass * double(n);  // mean mass ~ 1
}

Tree pa_tree(int i_nodes, std::uint64_t seed) {
  if (i_nodes < 2) throw std::invalid_argument("pa_tree: need at least 2 nodes");
  CounterRng rng(seed, 0);
  Tree t;
  t.node_count = i_nodes;
  t.edges.reserve(i_nodes - 1);
  std::vector<int> endpoints;  // every edge endpoint once: degree-weighted
  endpoints.reserve(2 * (i_nodes - 1));
  t.edges.push_back({0, 1, 1.0});
  endpoints.push_back(0);
  endpoints.push_back(1);
  for (int v = 2; v < i_nodes; ++v) {
    const auto pick = static_cast<std::size_t>(
        rng.next_unit() * double(endpoints.size()));
    const int target = endpoints[std::min(pick, endpoints.size() - 1)];
    t.edges.push_back({target, v, 1.0});
    endpoints.push_back(target);
    endpoints.push_back(v);
  }
  for (int v = 0; v < i_nodes; ++v) t.labels.push_back("N" + std::to_string(v));
  return t;
}

Panel generate_panel(const GeneratorSpec& spec) {
  if (spec.kind == "gaussian_iid") {
    return gaussian_iid(spec.t_pts, spec.i_cols, spec.seed);
  }
  if (spec.kind == "one_factor") {
    return one_factor(spec.t_pts, spec.i_cols, spec.loading, spec.idio_sigma,
                      spec.seed);
  }
  if (spec.kind == "fgn") {
    Panel p = empty_panel(spec.t_pts, spec.i_cols, Observable::other);
    for (int j = 0; j < spec.i_cols; ++j) {
      p.data.col(j) =
          fgn(spec.t_pts, spec.hurst,
              CounterRng::at(spec.seed, 0x5eedULL, static_cast<std::uint64_t>(j)))
              .matrix();
    }
    return p;
  }
  if (spec.kind == "pareto") {
    Panel p = empty_panel(spec.t_pts, spec.i_cols, Observable::other);
    for (int j = 0; j < spec.i_cols; ++j) {
      p.data.col(j) =
          pareto(spec.t_pts, spec.gamma,
                 CounterRng::at(spec.seed, 0x5eedULL, static_cast<std::uint64_t>(j)))
              .matrix();
    }
    return p;
  }
  if (spec.kind == "cascade") {
    const int n = 1 << spec.depth;
    Panel p = empty_panel(n, spec.i_cols, Observable::other);
    for (int j = 0; j < spec.i_cols; ++j) {
      p.data.col(j) =
          cascade(spec.depth,
                  CounterRng::at(spec.seed, 0x5eedULL, static_cast<std::uint64_t>(j)),
                  spec.weight)
              .matrix();
    }
    return p;
  }
  throw std::invalid_argument("generate_panel: unsupported kind '" + spec.kind +
                              "'");
}

}  // namespace detrendcorr
