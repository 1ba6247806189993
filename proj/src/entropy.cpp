#include <algorithm>
#include <cmath>
#include <string>

#include "vne/error.hpp"
#include "vne/spectral.hpp"

namespace vne {

namespace {

void require_no_isolated(const Graph& g, const char* what) {
  for (NodeIndex v = 0; v < g.node_count(); ++v)
    if (g.degree(v) == 0)
      throw DomainError(std::string(what) + " is undefined with isolated node '" + g.label(v) + "'");
}

// sum over ordered adjacent pairs of 1/(d_i d_j)
double ordered_pair_sum(const Graph& g) {
  double sum = 0.0;
  for (const auto& [u, v] : g.edges())
    sum += 2.0 / (static_cast<double>(g.degree(u)) * static_cast<double>(g.degree(v)));
  return sum;
}

// sum over ordered triangles (each counted 6 times) of 1/(d_i d_j d_k)
double ordered_triangle_sum(const Graph& g) {
  double sum = 0.0;
  for (NodeIndex u = 0; u < g.node_count(); ++u) {
    const auto nu = g.neighbors(u);
    for (NodeIndex v : nu) {
      if (v <= u) continue;
      const auto nv = g.neighbors(v);
      // common neighbors w > v
      auto a = std::upper_bound(nu.begin(), nu.end(), v);
      auto b = std::upper_bound(nv.begin(), nv.end(), v);
      while (a != nu.end() && b != nv.end()) {
        if (*a < *b) {
          ++a;
        } else if (*b < *a) {
          ++b;
        } else {
          sum += 6.0 / (static_cast<double>(g.degree(u)) * static_cast<double>(g.degree(v)) *
                        static_cast<double>(g.degree(*a)));
          ++a;
          ++b;
        }
      }
    }
  }
  return sum;
}

}  // namespace

SymmetricMatrix normalized_laplacian(const Graph& g) {
  const std::size_t n = g.node_count();
  SymmetricMatrix m(n);
  std::vector<double> inv_sqrt(n, 0.0);
  for (NodeIndex v = 0; v < n; ++v)
    if (g.degree(v) > 0) inv_sqrt[v] = 1.0 / std::sqrt(static_cast<double>(g.degree(v)));
  for (NodeIndex v = 0; v < n; ++v) {
    if (g.degree(v) == 0) continue;
    m.set(v, v, 1.0);
    for (NodeIndex w : g.neighbors(v))
      if (w < v) m.set(v, w, -inv_sqrt[v] * inv_sqrt[w]);
  }
  return m;
}

constexpr double kNoiseFloor = 1e-12;

double entropy_from_spectrum(std::span<const double> eigenvalues) {
  double s = 0.0;
  for (double lambda : eigenvalues) {
    const double t = lambda / 2.0;
    // Eigenvalues at 0 and 2 come back with +-1e-16 noise; within 1e-12 of
    // either end a term is under 3e-11 anyway.
    if (t <= kNoiseFloor || std::abs(1.0 - t) <= kNoiseFloor) continue;
    s -= t * std::log(t);
  }
  return s;
}

double von_neumann_entropy(const Graph& g) {
  const auto spectrum = symmetric_eigenvalues(normalized_laplacian(g));
  return entropy_from_spectrum(spectrum.eigenvalues);
}

double entropy_centrality_exact(const Graph& g, NodeIndex v) {
  if (v >= g.node_count()) throw LookupError("node index " + std::to_string(v) + " out of range");
  return std::abs(von_neumann_entropy(g) - von_neumann_entropy(g.remove_node(v)));
}

double entropy_centrality_subgraph(const Graph& g, std::span<const NodeIndex> s) {
  std::vector<NodeIndex> unique(s.begin(), s.end());
  std::sort(unique.begin(), unique.end());
  unique.erase(std::unique(unique.begin(), unique.end()), unique.end());
  if (!unique.empty() && unique.back() >= g.node_count())
    throw LookupError("node index " + std::to_string(unique.back()) + " out of range");
  if (unique.size() == g.node_count())
    throw DomainError("subnetwork covers every node; the remainder would be empty");
  return std::abs(von_neumann_entropy(g) - von_neumann_entropy(g.remove_nodes(unique)));
}

double entropy_s1(const Graph& g) {
  require_no_isolated(g, "S1");
  return static_cast<double>(g.node_count()) / 4.0 - ordered_pair_sum(g) / 4.0;
}

double trace_power(const Graph& g, int t) {
  if (t < 1 || t > 3) throw DomainError("trace_power supports t in {1,2,3}, got " + std::to_string(t));
  require_no_isolated(g, "trace_power");
  const double n = static_cast<double>(g.node_count());
  switch (t) {
    case 1:
      return n;
    case 2:
      return n + ordered_pair_sum(g);
    default:
      return n + 3.0 * ordered_pair_sum(g) - ordered_triangle_sum(g);
  }
}

double entropy_s2(const Graph& g) {
  require_no_isolated(g, "S2");
  const double n = static_cast<double>(g.node_count());
  return 5.0 / 16.0 * n - 5.0 / 16.0 * ordered_pair_sum(g) - ordered_triangle_sum(g) / 16.0;
}

double entropy_s2_published(const Graph& g) {
  require_no_isolated(g, "S2");
  const double n = static_cast<double>(g.node_count());
  return 5.0 / 16.0 * n - 11.0 / 16.0 * ordered_pair_sum(g) + ordered_triangle_sum(g) / 16.0;
}

double entropy_centrality_approx(const Graph& g, NodeIndex v) {
  if (v >= g.node_count()) throw LookupError("node index " + std::to_string(v) + " out of range");
  const double dv = static_cast<double>(g.degree(v));
  if (dv == 0.0)
    throw DomainError("approximate entropy centrality is undefined for isolated node '" +
                      g.label(v) + "'");
  double score = 0.25;
  for (NodeIndex j : g.neighbors(v)) {
    const double dj = static_cast<double>(g.degree(j));
    score -= 1.0 / (4.0 * dv * dj);
    if (g.degree(j) < 2) continue;
    double far = 0.0;
    for (NodeIndex k : g.neighbors(j))
      if (k != v) far += 1.0 / static_cast<double>(g.degree(k));
    score += far / (4.0 * (dj - 1.0) * dj);
  }
  return score;
}

}  // namespace vne
