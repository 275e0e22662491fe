#pragma once

// Exhaustive maximum modularity over all partitions of up to ~12 nodes,
// enumerated as restricted growth strings (Bell-number many).

#include <functional>
#include <vector>

namespace oracle {

// visits every set partition of {0..n-1} as an assignment vector
inline void for_each_partition(
    int n, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> a(n, 0);
  std::function<void(int, int)> rec = [&](int i, int max_used) {
    if (i == n) {
      visit(a);
      return;
    }
    for (int c = 0; c <= max_used + 1; ++c) {
      a[i] = c;
      rec(i + 1, std::max(max_used, c));
    }
  };
  rec(0, -1);
}

// maximum modularity over all partitions of a weighted graph given as a
// dense symmetric weight matrix (0 where no edge)
inline double max_modularity(const std::vector<std::vector<double>>& w) {
  const int n = static_cast<int>(w.size());
  double two_m = 0.0;
  std::vector<double> k(n, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) k[i] += w[i][j];
    two_m += k[i];
  }
  double best = -1e300;
  for_each_partition(n, [&](const std::vector<int>& part) {
    double q = 0.0;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (part[i] != part[j]) continue;
        q += w[i][j] / two_m - k[i] * k[j] / (two_m * two_m);
      }
    }
    if (q > best) best = q;
  });
  return best;
}

}  // namespace oracle
