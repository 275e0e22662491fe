#pragma once

// Exhaustive spanning-tree minimum for small n: every labeled tree on n
// nodes is enumerated through its Pruefer sequence (n^(n-2) trees).

#include <vector>

namespace oracle {

// decode a Pruefer sequence into the tree's edge list
inline std::vector<std::pair<int, int>> pruefer_decode(
    const std::vector<int>& seq, int n) {
  std::vector<int> degree(n, 1);
  for (int v : seq) ++degree[v];
  std::vector<std::pair<int, int>> edges;
  edges.reserve(n - 1);
  std::vector<bool> used(n, false);
  for (int v : seq) {
    for (int leaf = 0; leaf < n; ++leaf) {
      if (degree[leaf] == 1 && !used[leaf]) {
        edges.emplace_back(leaf, v);
        used[leaf] = true;
        --degree[v];
        break;
      }
    }
  }
  int a = -1, b = -1;
  for (int i = 0; i < n; ++i) {
    if (!used[i] && degree[i] == 1) {
      if (a < 0)
        a = i;
      else
        b = i;
    }
  }
  edges.emplace_back(a, b);
  return edges;
}

// minimum total weight over every spanning tree of the complete graph
inline double exhaustive_mst_weight(const std::vector<std::vector<double>>& d) {
  const int n = static_cast<int>(d.size());
  if (n == 2) return d[0][1];
  std::vector<int> seq(n - 2, 0);
  double best = 1e300;
  while (true) {
    const auto edges = pruefer_decode(seq, n);
    double w = 0.0;
    for (const auto& [a, b] : edges) w += d[a][b];
    if (w < best) best = w;
    int pos = n - 3;
    while (pos >= 0) {
      if (++seq[pos] < n) break;
      seq[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  return best;
}

}  // namespace oracle
