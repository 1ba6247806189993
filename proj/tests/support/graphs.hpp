#pragma once

// Small graph families and brute-force oracles shared by the test suites.
// Oracles here deliberately avoid the library's algorithms.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "vne/graph.hpp"

namespace vne::testing {

using EdgeList = std::vector<std::pair<NodeIndex, NodeIndex>>;

inline Graph path(std::size_t n) {
  EdgeList e;
  for (NodeIndex i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edges(n, e);
}

inline Graph cycle(std::size_t n) {
  EdgeList e;
  for (NodeIndex i = 0; i < n; ++i) e.emplace_back(i, static_cast<NodeIndex>((i + 1) % n));
  return Graph::from_edges(n, e);
}

inline Graph complete(std::size_t n) {
  EdgeList e;
  for (NodeIndex i = 0; i < n; ++i)
    for (NodeIndex j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph::from_edges(n, e);
}

/// Center "0" plus leaves "1".."leaves".
inline Graph star(std::size_t leaves) {
  EdgeList e;
  for (NodeIndex i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return Graph::from_edges(leaves + 1, e);
}

/// Rim v1..v6 in a cycle, hub v7 joined to every rim node.
inline Graph wheel6() {
  std::vector<std::string> labels{"v1", "v2", "v3", "v4", "v5", "v6", "v7"};
  EdgeList e;
  for (NodeIndex i = 0; i < 6; ++i) {
    e.emplace_back(i, static_cast<NodeIndex>((i + 1) % 6));
    e.emplace_back(6, i);
  }
  return Graph::from_edges(labels, e);
}

/// G(n, p) with the given engine; may contain isolated nodes.
template <typename Engine>
Graph random_gnp(std::size_t n, double p, Engine& rng) {
  std::bernoulli_distribution coin(p);
  EdgeList e;
  for (NodeIndex i = 0; i < n; ++i)
    for (NodeIndex j = i + 1; j < n; ++j)
      if (coin(rng)) e.emplace_back(i, j);
  return Graph::from_edges(n, e);
}

/// Every labelled simple graph on n nodes, as bitmasks over the pair list.
inline std::vector<Graph> all_graphs(std::size_t n) {
  EdgeList pairs;
  for (NodeIndex i = 0; i < n; ++i)
    for (NodeIndex j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  std::vector<Graph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    EdgeList e;
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if (mask >> k & 1) e.push_back(pairs[k]);
    out.push_back(Graph::from_edges(n, e));
  }
  return out;
}

inline bool is_connected_oracle(const Graph& g) {
  if (g.empty()) return true;
  std::vector<bool> seen(g.node_count(), false);
  std::vector<NodeIndex> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const NodeIndex v = stack.back();
    stack.pop_back();
    for (NodeIndex w = 0; w < g.node_count(); ++w)
      if (!seen[w] && g.has_edge(v, w)) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
  }
  return count == g.node_count();
}

/// Relabels node i as labels[perm[i]] while keeping the same structure.
inline Graph permuted(const Graph& g, const std::vector<NodeIndex>& perm) {
  std::vector<std::string> labels(g.node_count());
  EdgeList e;
  for (NodeIndex v = 0; v < g.node_count(); ++v) labels[perm[v]] = g.label(v);
  for (const auto& [u, v] : g.edges()) e.emplace_back(perm[u], perm[v]);
  return Graph::from_edges(labels, e);
}

/// Floyd-Warshall distances; -1 for unreachable.
inline std::vector<std::vector<int>> all_pairs_distances(const Graph& g) {
  const std::size_t n = g.node_count();
  constexpr int kInf = 1 << 28;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, kInf));
  for (NodeIndex i = 0; i < n; ++i) {
    d[i][i] = 0;
    for (NodeIndex j = 0; j < n; ++j)
      if (g.has_edge(i, j)) d[i][j] = 1;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  for (auto& row : d)
    for (auto& x : row)
      if (x >= kInf) x = -1;
  return d;
}

/// Betweenness from path counting: sigma_st(v) = sigma_sv * sigma_vt when v
/// lies on a shortest s-t path.
inline std::vector<double> betweenness_oracle(const Graph& g) {
  const std::size_t n = g.node_count();
  const auto d = all_pairs_distances(g);
  // sigma[s][t] by dynamic programming over distance layers
  std::vector<std::vector<double>> sigma(n, std::vector<double>(n, 0.0));
  for (std::size_t s = 0; s < n; ++s) {
    sigma[s][s] = 1.0;
    int maxd = 0;
    for (std::size_t t = 0; t < n; ++t) maxd = std::max(maxd, d[s][t]);
    for (int layer = 1; layer <= maxd; ++layer)
      for (std::size_t t = 0; t < n; ++t)
        if (d[s][t] == layer)
          for (std::size_t u = 0; u < n; ++u)
            if (d[s][u] == layer - 1 && g.has_edge(static_cast<NodeIndex>(u), static_cast<NodeIndex>(t)))
              sigma[s][t] += sigma[s][u];
  }
  std::vector<double> bc(n, 0.0);
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = s + 1; t < n; ++t) {
      if (d[s][t] < 0) continue;
      for (std::size_t v = 0; v < n; ++v) {
        if (v == s || v == t || d[s][v] < 0 || d[v][t] < 0) continue;
        if (d[s][v] + d[v][t] == d[s][t]) bc[v] += sigma[s][v] * sigma[v][t] / sigma[s][t];
      }
    }
  return bc;
}

/// Clustering from explicit triangle enumeration.
inline double clustering_oracle(const Graph& g, NodeIndex v) {
  const std::size_t n = g.node_count();
  std::size_t d = 0;
  std::size_t tri = 0;
  for (NodeIndex j = 0; j < n; ++j) {
    if (!g.has_edge(v, j)) continue;
    ++d;
    for (NodeIndex k = j + 1; k < n; ++k)
      if (g.has_edge(v, k) && g.has_edge(j, k)) ++tri;
  }
  if (d < 2) return 0.0;
  return 2.0 * static_cast<double>(tri) / static_cast<double>(d * (d - 1));
}

/// Truncated-series entropy from eigenvalues: sum over t = lambda/2 of
/// t(1-t) for order 1, plus t(1-t)^2/2 for order 2.
inline double truncated_series(const std::vector<double>& eigenvalues, int order) {
  double s = 0.0;
  for (double lambda : eigenvalues) {
    const double t = lambda / 2.0;
    s += t * (1.0 - t);
    if (order >= 2) s += t * (1.0 - t) * (1.0 - t) / 2.0;
  }
  return s;
}

}  // namespace vne::testing
