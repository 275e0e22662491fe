#pragma once

// Brute-force symmetric eigensolver: classical cyclic Jacobi rotations on a
// plain 2-D array. Independent of the production path (which goes through
// Eigen's tridiagonalization). Small matrices only.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace oracle {

struct EigenPairs {
  std::vector<double> values;               // descending
  std::vector<std::vector<double>> vectors; // vectors[k] belongs to values[k]
};

inline EigenPairs jacobi_eigen(std::vector<std::vector<double>> a) {
  const int n = static_cast<int>(a.size());
  std::vector<std::vector<double>> v(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i) v[i][i] = 1.0;

  for (int sweep = 0; sweep < 200; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += a[p][q] * a[p][q];
    if (off < 1e-26) break;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        if (a[p][q] == 0.0) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
        for (int k = 0; k < n; ++k) {
          const double vkp = v[k][p], vkq = v[k][q];
          v[k][p] = c * vkp - s * vkq;
          v[k][q] = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return a[i][i] > a[j][j]; });
  EigenPairs out;
  out.values.resize(n);
  out.vectors.assign(n, std::vector<double>(n, 0.0));
  for (int k = 0; k < n; ++k) {
    out.values[k] = a[order[k]][order[k]];
    for (int i = 0; i < n; ++i) out.vectors[k][i] = v[i][order[k]];
  }
  return out;
}

}  // namespace oracle
