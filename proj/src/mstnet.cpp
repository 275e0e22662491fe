#include "detrendcorr/mstnet.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

namespace detrendcorr {

namespace {

struct UnionFind {
  std::vector<int> parent;

  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    // smaller root index wins, keeping merges deterministic
    if (a < b)
      parent[b] = a;
    else
      parent[a] = b;
    return true;
  }
};

}  // namespace

double Tree::total_weight() const {
  double w = 0.0;
  for (const auto& e : edges) w += e.distance;
  return w;
}

void WeightedGraph::add_edge(int a, int b, double w) {
  adj[a].emplace_back(b, w);
  if (a != b) adj[b].emplace_back(a, w);
}

double WeightedGraph::total_weight() const {
  double sum = 0.0;
  for (int v = 0; v < n; ++v) {
    for (const auto& [u, w] : adj[v]) {
      if (u == v)
        sum += w;  // self-loop stored once
      else if (u > v)
        sum += w;
    }
  }
  return sum;
}

DistanceMatrix distance_matrix(const CorrMatrix& c) {
  DistanceMatrix out;
  out.labels = c.labels;
  const Eigen::MatrixXd rho = c.clamped();
  out.d = (2.0 * (1.0 - rho.array())).sqrt().matrix();
  out.d.diagonal().setZero();
  return out;
}

Tree mst(const DistanceMatrix& dm) {
  const int n = static_cast<int>(dm.d.rows());
  if (n < 2) throw std::invalid_argument("mst: need at least 2 nodes");

  struct Candidate {
    double d;
    int i, j;
    bool operator<(const Candidate& o) const {
      if (d != o.d) return d < o.d;
      if (i != o.i) return i < o.i;
      return j < o.j;
    }
  };
  std::vector<Candidate> edges;
  edges.reserve(std::size_t(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.push_back({dm.d(i, j), i, j});
  std::sort(edges.begin(), edges.end());

  Tree tree;
  tree.node_count = n;
  tree.labels = dm.labels;
  UnionFind uf(n);
  for (const auto& e : edges) {
    if (uf.unite(e.i, e.j)) {
      tree.edges.push_back({e.i, e.j, e.d});
      if (static_cast<int>(tree.edges.size()) == n - 1) break;
    }
  }
  return tree;
}

Eigen::ArrayXi degrees(const Tree& t) {
  Eigen::ArrayXi deg = Eigen::ArrayXi::Zero(t.node_count);
  for (const auto& e : t.edges) {
    ++deg[e.src];
    ++deg[e.dst];
  }
  return deg;
}

DegreeDistribution degree_distribution(const Eigen::ArrayXi& degree) {
  DegreeDistribution dd;
  dd.degree = degree;
  const int n = static_cast<int>(degree.size());
  std::vector<int> sorted(degree.data(), degree.data() + n);
  std::sort(sorted.begin(), sorted.end());
  for (int k = 0; k < n; ++k) {
    if (k > 0 && sorted[k] == sorted[k - 1]) continue;
    // #{X >= sorted[k]} = n - k
    dd.ccdf.emplace_back(sorted[k], double(n - k) / double(n));
  }
  return dd;
}

DegreeDistribution degree_distribution(const Tree& t) {
  return degree_distribution(degrees(t));
}

WeightedGraph tree_graph(const Tree& t) {
  WeightedGraph g;
  g.n = t.node_count;
  g.adj.resize(g.n);
  for (const auto& e : t.edges) g.add_edge(e.src, e.dst, 2.0 - e.distance);
  return g;
}

double modularity(const WeightedGraph& g, const std::vector<int>& assignment) {
  if (static_cast<int>(assignment.size()) != g.n) {
    throw std::invalid_argument("modularity: assignment size mismatch");
  }
  const double two_m = 2.0 * g.total_weight();
  if (!(two_m > 0.0)) throw std::invalid_argument("modularity: empty graph");

  std::map<int, double> inside;  // sum of intra-community edge weights * 2
  std::map<int, double> total;   // sum of degrees
  for (int v = 0; v < g.n; ++v) {
    for (const auto& [u, w] : g.adj[v]) {
      total[assignment[v]] += w;
      if (assignment[u] == assignment[v]) inside[assignment[v]] += w;
    }
  }
  double q = 0.0;
  for (const auto& [c, tot] : total) {
    const double in = inside.count(c) ? inside.at(c) : 0.0;
    q += in / two_m - (tot / two_m) * (tot / two_m);
  }
  return q;
}

namespace {

// One level of local moving on an aggregated graph. Nodes are swept in
// ascending order; a node takes the first strictly improving community,
// candidates visited in ascending community id.
struct LouvainLevel {
  std::vector<int> community;
  bool moved_any = false;
};

LouvainLevel local_moving(const WeightedGraph& g) {
  const int n = g.n;
  const double two_m = 2.0 * g.total_weight();
  std::vector<double> k(n, 0.0);        // weighted degree incl. loops twice
  std::vector<double> loop(n, 0.0);
  for (int v = 0; v < n; ++v) {
    for (const auto& [u, w] : g.adj[v]) {
      if (u == v) {
        k[v] += 2.0 * w;
        loop[v] += w;
      } else {
        k[v] += w;
      }
    }
  }
  LouvainLevel lvl;
  lvl.community.resize(n);
  std::iota(lvl.community.begin(), lvl.community.end(), 0);
  std::vector<double> sigma_tot(k);  // per community sum of degrees

  bool improved = true;
  const double eps = 1e-12;
  while (improved) {
    improved = false;
    for (int v = 0; v < n; ++v) {
      const int home = lvl.community[v];
      // weight between v and each neighboring community
      std::map<int, double> links;
      links[home];  // staying is always a candidate
      for (const auto& [u, w] : g.adj[v]) {
        if (u == v) continue;
        links[lvl.community[u]] += w;
      }
      sigma_tot[home] -= k[v];
      const double base_gain =
          links[home] - sigma_tot[home] * k[v] / two_m;
      int best = home;
      for (const auto& [c, w_in] : links) {
        if (c == home) continue;
        const double gain = w_in - sigma_tot[c] * k[v] / two_m;
        if (gain > base_gain + eps) {
          best = c;
          break;  // first improvement in ascending community id
        }
      }
      sigma_tot[best] += k[v];
      if (best != home) {
        lvl.community[v] = best;
        improved = true;
        lvl.moved_any = true;
      }
    }
  }
  return lvl;
}

WeightedGraph aggregate(const WeightedGraph& g, const std::vector<int>& comm,
                        std::vector<int>& dense_id) {
  // compact community labels in ascending order of their id
  std::map<int, int> remap;
  for (int c : comm) remap.emplace(c, 0);
  int next = 0;
  for (auto& [c, id] : remap) id = next++;
  dense_id.resize(comm.size());
  for (std::size_t v = 0; v < comm.size(); ++v) dense_id[v] = remap[comm[v]];

  WeightedGraph out;
  out.n = next;
  out.adj.resize(out.n);
  std::map<std::pair<int, int>, double> acc;
  for (int v = 0; v < g.n; ++v) {
    for (const auto& [u, w] : g.adj[v]) {
      const int a = dense_id[v];
      const int b = dense_id[u];
      if (u == v) {
        acc[{a, a}] += w;
      } else if (u > v) {
        if (a == b)
          acc[{a, a}] += w;
        else
          acc[{std::min(a, b), std::max(a, b)}] += w;
      }
    }
  }
  for (const auto& [key, w] : acc) out.add_edge(key.first, key.second, w);
  return out;
}

}  // namespace

Communities louvain(const WeightedGraph& g) {
  if (g.n == 0) throw std::invalid_argument("louvain: empty graph");
  for (int v = 0; v < g.n; ++v) {
    for (const auto& [u, w] : g.adj[v]) {
      if (!(w > 0.0)) throw std::invalid_argument("louvain: weights must be positive");
    }
  }

  std::vector<int> node_to_comm(g.n);
  std::iota(node_to_comm.begin(), node_to_comm.end(), 0);
  WeightedGraph level = g;

  while (true) {
    const LouvainLevel lvl = local_moving(level);
    if (!lvl.moved_any) break;
    std::vector<int> dense;
    level = aggregate(level, lvl.community, dense);
    for (auto& c : node_to_comm) c = dense[lvl.community[c]];
    if (level.n == 1) break;
  }

  // compact final ids in first-appearance order for stable output
  std::map<int, int> remap;
  int next = 0;
  for (int& c : node_to_comm) {
    auto [it, fresh] = remap.emplace(c, next);
    if (fresh) ++next;
    c = it->second;
  }
  Communities out;
  out.node_community = node_to_comm;
  out.count = next;
  out.modularity = modularity(g, node_to_comm);
  return out;
}

Communities louvain(const Tree& t) { return louvain(tree_graph(t)); }

DegreeTailFit degree_tail_fit(const DegreeDistribution& dd) {
  if (dd.ccdf.size() < 4) {
    throw std::invalid_argument(
        "degree_tail_fit: need at least 4 distinct degree values");
  }
  const int n = static_cast<int>(dd.ccdf.size());
  double mx = 0.0, my = 0.0;
  std::vector<double> lx(n), ly(n);
  for (int i = 0; i < n; ++i) {
    lx[i] = std::log(double(dd.ccdf[i].first));
    ly[i] = std::log(dd.ccdf[i].second);
    mx += lx[i];
    my += ly[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (int i = 0; i < n; ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
    syy += (ly[i] - my) * (ly[i] - my);
  }
  if (!(sxx > 0.0)) throw std::invalid_argument("degree_tail_fit: degenerate degrees");
  DegreeTailFit fit;
  fit.n_points = n;
  fit.slope = sxy / sxx;
  double ssr = 0.0;
  for (int i = 0; i < n; ++i) {
    const double e = (ly[i] - my) - fit.slope * (lx[i] - mx);
    ssr += e * e;
  }
  fit.r2 = syy > 0.0 ? 1.0 - ssr / syy : 1.0;
  return fit;
}

}  // namespace detrendcorr
