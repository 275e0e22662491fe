#pragma once

#include "detrendcorr/corrmat.hpp"

#include <Eigen/Dense>

#include <string>
#include <utility>
#include <vector>

namespace detrendcorr {

/// Metric distances d_ij = sqrt(2 (1 - rho_ij)); rho clamped to [-1, 1]
/// before the transform so d stays real in [0, 2].
struct DistanceMatrix {
  Eigen::MatrixXd d;
  std::vector<std::string> labels;
};

struct TreeEdge {
  int src = 0;
  int dst = 0;
  double distance = 0.0;
};

struct Tree {
  int node_count = 0;
  std::vector<TreeEdge> edges;        // exactly node_count - 1 entries
  std::vector<std::string> labels;    // optional, size node_count or empty

  double total_weight() const;
};

struct DegreeDistribution {
  Eigen::ArrayXi degree;                       // per node
  std::vector<std::pair<int, double>> ccdf;    // (delta, P(X >= delta))
};

/// Plain weighted undirected graph used by the community detector.
struct WeightedGraph {
  int n = 0;
  std::vector<std::vector<std::pair<int, double>>> adj;  // (neighbor, w)

  void add_edge(int a, int b, double w);
  double total_weight() const;  // sum of edge weights, loops once
};

struct Communities {
  std::vector<int> node_community;  // dense ids 0..count-1
  int count = 0;
  double modularity = 0.0;
};

DistanceMatrix distance_matrix(const CorrMatrix& c);

/// Kruskal MST with union-find; ties broken by (d, min(i,j), max(i,j)).
Tree mst(const DistanceMatrix& d);

Eigen::ArrayXi degrees(const Tree& t);
DegreeDistribution degree_distribution(const Tree& t);
DegreeDistribution degree_distribution(const Eigen::ArrayXi& degree);

/// Louvain modularity optimization, deterministic: nodes are swept in
/// ascending index order and a node takes the first strictly improving
/// community (candidates visited in ascending community id).
Communities louvain(const WeightedGraph& g);

/// Tree variant; edge weights w_ij = 2 - d_ij.
Communities louvain(const Tree& t);

WeightedGraph tree_graph(const Tree& t);  // w = 2 - d

double modularity(const WeightedGraph& g, const std::vector<int>& assignment);

struct DegreeTailFit {
  double slope = 0.0;   // log-log CCDF slope (negative for heavy tails)
  double r2 = 0.0;
  int n_points = 0;
};

/// Least-squares slope of log P(X >= delta) against log delta.
/// Requires at least 4 distinct degree values.
DegreeTailFit degree_tail_fit(const DegreeDistribution& dd);

}  // namespace detrendcorr
