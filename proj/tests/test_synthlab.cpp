#include "detrendcorr/synthlab.hpp"

#include "detrendcorr/diststats.hpp"
#include "detrendcorr/fft.hpp"
#include "detrendcorr/rmt.hpp"
#include "detrendcorr/rng.hpp"
#include "detrendcorr/corrmat.hpp"
#include "oracles/quadrature.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

using namespace detrendcorr;

TEST_CASE("fft matches a naive DFT") {
  CounterRng rng(1, 0);
  const int n = 16;
  std::vector<std::complex<double>> a(n);
  for (auto& v : a) v = {rng.next_normal(), rng.next_normal()};
  auto b = a;
  fft_radix2(b, false);
  for (int k = 0; k < n; ++k) {
    std::complex<double> ref(0.0, 0.0);
    for (int t = 0; t < n; ++t) {
      const double ang = -2.0 * M_PI * k * t / n;
      ref += a[t] * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    CHECK(std::abs(b[k] - ref) < 1e-10);
  }
  fft_radix2(b, true);
  for (int t = 0; t < n; ++t) CHECK(std::abs(b[t] - a[t]) < 1e-12);
}

TEST_CASE("gaussian_iid: seeded determinism and CLT column means") {
  const Panel a = gaussian_iid(5000, 4, 42);
  const Panel b = gaussian_iid(5000, 4, 42);
  CHECK((a.data - b.data).cwiseAbs().maxCoeff() == 0.0);

  const Panel c = gaussian_iid(5000, 4, 43);
  CHECK((a.data - c.data).cwiseAbs().maxCoeff() > 0.0);

  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    CHECK(std::abs(a.data.col(j).mean()) < 4.0 / std::sqrt(5000.0));
  }
}

TEST_CASE("gaussian_iid eigenvalues follow Marchenko-Pastur") {
  const Panel p = gaussian_iid(5000, 90, 7);
  const SpectralDecomposition spec = eigen_sym(pearson_matrix(p));
  const MpLaw law = mp_law(5000, 90, 1.0);
  // Kolmogorov distance between the empirical eigenvalue CDF and the MP CDF
  auto mp_cdf = [&](double x) {
    if (x <= law.lambda_minus) return 0.0;
    if (x >= law.lambda_plus) return 1.0;
    return oracle::simpson([&](double l) { return mp_density(law, l); },
                           law.lambda_minus, x, 4000);
  };
  double dist = 0.0;
  const int n = spec.size();
  for (int i = 0; i < n; ++i) {
    const double lambda = spec.eigenvalues[n - 1 - i];  // ascending
    const double cdf = mp_cdf(lambda);
    dist = std::max(dist, std::abs(double(i + 1) / n - cdf));
    dist = std::max(dist, std::abs(double(i) / n - cdf));
  }
  CHECK(dist < 0.05);
}

TEST_CASE("fgn: white-noise limit, variance, determinism") {
  const Eigen::ArrayXd x = fgn(1 << 16, 0.5, 99);
  const AcfCurve a = acf(x, 3);
  CHECK(std::abs(a.values[0]) < 3.0 / std::sqrt(double(x.size())));

  const double mean = x.mean();
  const double var = (x - mean).square().sum() / double(x.size() - 1);
  CHECK(var == doctest::Approx(1.0).epsilon(0.05));

  const Eigen::ArrayXd y = fgn(1 << 16, 0.5, 99);
  CHECK((x - y).abs().maxCoeff() == 0.0);

  CHECK_THROWS(fgn(1000, 0.5, 1));  // not a power of two
  CHECK_THROWS(fgn(1 << 10, 1.5, 1));
}

TEST_CASE("one_factor: pairwise correlation and top eigenvalue") {
  const double b = 0.6, sigma = 0.8;
  const double rho = b * b / (b * b + sigma * sigma);  // = 0.36
  const Panel p = one_factor(10000, 90, b, sigma, 11);
  const CorrMatrix c = pearson_matrix(p);
  double mean_off = 0.0;
  int n = 0;
  for (int i = 0; i < 90; ++i)
    for (int j = i + 1; j < 90; ++j) {
      mean_off += c.values(i, j);
      ++n;
    }
  mean_off /= n;
  CHECK(std::abs(mean_off - rho) < 0.02);

  // rank-one perturbation: lambda_1 ~ I rho + (1 - rho)
  const SpectralDecomposition spec = eigen_sym(c);
  const double expected = 90.0 * rho + (1.0 - rho);
  CHECK(spec.eigenvalues[0] == doctest::Approx(expected).epsilon(0.10));
}

TEST_CASE("one_factor with zero loading reduces to iid statistics") {
  const Panel p = one_factor(4000, 10, 0.0, 1.0, 3);
  const CorrMatrix c = pearson_matrix(p);
  for (int i = 0; i < 10; ++i)
    for (int j = i + 1; j < 10; ++j)
      CHECK(std::abs(c.values(i, j)) < 5.0 / std::sqrt(4000.0));
}

TEST_CASE("pareto: Hill estimator consistency") {
  const Eigen::ArrayXd v = pareto(100000, 1.5, 21);
  const TailFit f = fit_powerlaw_tail(v, percentile(v, 90.0));
  CHECK(std::abs(f.exponent - 1.5) < 0.1);
}

TEST_CASE("cascade: mass conservation and determinism") {
  const Eigen::ArrayXd m = cascade(10, 5);
  CHECK(m.size() == 1024);
  CHECK(m.sum() == doctest::Approx(1024.0).epsilon(1e-12));
  CHECK((m > 0.0).all());
  const Eigen::ArrayXd m2 = cascade(10, 5);
  CHECK((m - m2).abs().maxCoeff() == 0.0);
  CHECK((m - cascade(10, 6)).abs().maxCoeff() > 0.0);
}

TEST_CASE("pa_tree: hubs emerge, handshake holds, output deterministic") {
  const Tree t = pa_tree(500, 12);
  REQUIRE(static_cast<int>(t.edges.size()) == 499);
  const Eigen::ArrayXi deg = degrees(t);
  CHECK(deg.sum() == 2 * 499);

  std::vector<int> sorted(deg.data(), deg.data() + deg.size());
  std::sort(sorted.begin(), sorted.end());
  const int median = sorted[sorted.size() / 2];
  CHECK(sorted.back() > 3 * median);

  const Tree t2 = pa_tree(500, 12);
  REQUIRE(t2.edges.size() == t.edges.size());
  for (std::size_t i = 0; i < t.edges.size(); ++i) {
    CHECK(t.edges[i].src == t2.edges[i].src);
    CHECK(t.edges[i].dst == t2.edges[i].dst);
  }
}

TEST_CASE("generate_panel dispatches on kind") {
  GeneratorSpec spec;
  spec.kind = "one_factor";
  spec.t_pts = 100;
  spec.i_cols = 3;
  spec.loading = 0.5;
  spec.idio_sigma = 1.0;
  spec.seed = 9;
  const Panel p = generate_panel(spec);
  CHECK(p.rows() == 100);
  CHECK(p.cols() == 3);

  spec.kind = "bogus";
  CHECK_THROWS(generate_panel(spec));
}
