#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vne/graph.hpp"

namespace vne {

enum class Method { DC, BC, CC, EC, PR, KC, CLC, CI, CE_exact, CE_approx };

/// Canonical upper-case tag, e.g. "DC", "CE_exact". Used in CSV headers.
std::string_view method_tag(Method m);
/// Accepts tags case-insensitively, with '-' or '_' ("ce-approx", "CE_APPROX").
std::optional<Method> parse_method(std::string_view text);
const std::vector<Method>& all_methods();

/// One score per node of the graph it was computed on.
class CentralityScores {
 public:
  /// Relative difference under which two scores are ranked as tied.
  static constexpr double kTieTolerance = 1e-12;

  CentralityScores(Method method, std::shared_ptr<const std::vector<std::string>> labels,
                   std::vector<double> values);

  Method method() const noexcept { return method_; }
  std::size_t size() const noexcept { return values_.size(); }
  double operator[](NodeIndex v) const { return values_[v]; }
  /// Throws LookupError for an unknown label.
  double at(std::string_view label) const;
  const std::vector<double>& values() const noexcept { return values_; }
  const std::string& label(NodeIndex v) const { return (*labels_)[v]; }
  const std::vector<std::string>& labels() const noexcept { return *labels_; }

  /// Node indices by descending score; near-ties resolved by ascending label.
  std::vector<NodeIndex> ranking() const;
  NodeIndex top() const;
  /// Dense rank per node (1, 2, 2, 3, ...), ties share a rank.
  std::vector<std::size_t> dense_ranks() const;
  /// Labels of the first k entries of ranking().
  std::vector<std::string> top_labels(std::size_t k) const;

  static bool tied(double a, double b);

 private:
  Method method_;
  std::shared_ptr<const std::vector<std::string>> labels_;
  std::vector<double> values_;
};

struct CentralityOptions {
  double damping = 0.85;
  double pagerank_tolerance = 1e-10;
  double eigenvector_tolerance = 1e-10;
  std::size_t max_iterations = 100000;
  std::size_t ci_radius = 2;
};

CentralityScores degree_centrality(const Graph& g);

/// Raw (unnormalized) shortest-path betweenness, Brandes accumulation. Each
/// unordered pair counts once.
CentralityScores betweenness_centrality(const Graph& g);

/// (reachable - 1) / sum of distances to reachable nodes; isolated nodes
/// score 0.
CentralityScores closeness_centrality(const Graph& g);

/// Principal adjacency eigenvector of the largest component, max-normalized
/// to 1; nodes outside it score 0. Requires at least one edge.
CentralityScores eigenvector_centrality(const Graph& g, const CentralityOptions& options = {});

/// Random walk with uniform teleport; isolated nodes redistribute uniformly.
CentralityScores pagerank(const Graph& g, double damping = 0.85, double tolerance = 1e-10,
                          std::size_t max_iterations = 100000);

/// Core number by minimum-degree peeling.
CentralityScores k_core(const Graph& g);

CentralityScores clustering_centrality(const Graph& g);

/// (d_v - 1) * sum over nodes u at distance exactly `radius` of (d_u - 1).
CentralityScores collective_influence(const Graph& g, std::size_t radius = 2);

/// Exact entropy centrality of every node; requires at least two nodes.
CentralityScores entropy_centrality_all(const Graph& g);

/// Degree-local approximation for every node; isolated nodes score 0.
CentralityScores entropy_centrality_approx_all(const Graph& g);

/// Dispatches on the method tag.
CentralityScores compute_centrality(const Graph& g, Method method,
                                    const CentralityOptions& options = {});

}  // namespace vne
