#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace vne {

using NodeIndex = std::uint32_t;

/// Orders labels naturally: two integer labels compare numerically, anything
/// else falls back to lexicographic order (integers sort before words).
bool label_less(std::string_view a, std::string_view b);

/// Immutable undirected simple graph over opaque string labels.
///
/// Nodes are stored densely as 0..N-1 in first-seen order; adjacency is kept
/// as sorted neighbor lists (CSR). Mutation always produces a new graph.
class Graph {
 public:
  Graph();

  std::size_t node_count() const noexcept { return degrees_.size(); }
  std::size_t edge_count() const noexcept { return neighbors_.size() / 2; }
  bool empty() const noexcept { return degrees_.empty(); }

  std::size_t degree(NodeIndex v) const { return degrees_[v]; }
  std::span<const NodeIndex> neighbors(NodeIndex v) const {
    return {neighbors_.data() + offsets_[v], degrees_[v]};
  }
  bool has_edge(NodeIndex u, NodeIndex v) const;

  const std::string& label(NodeIndex v) const { return (*labels_)[v]; }
  const std::vector<std::string>& labels() const noexcept { return *labels_; }
  std::shared_ptr<const std::vector<std::string>> shared_labels() const noexcept { return labels_; }

  std::optional<NodeIndex> find(std::string_view label) const;
  /// Throws LookupError for an unknown label.
  NodeIndex index_of(std::string_view label) const;

  /// Edges as (u, v) with u < v, ordered by u then v.
  std::vector<std::pair<NodeIndex, NodeIndex>> edges() const;

  /// G \ s: drops the nodes in `removed` and every incident edge. Surviving
  /// nodes keep their labels and relative order.
  Graph remove_nodes(std::span<const NodeIndex> removed) const;
  Graph remove_node(NodeIndex v) const { return remove_nodes(std::span<const NodeIndex>(&v, 1)); }
  Graph remove_labels(std::span<const std::string> removed) const;

  /// Throws ValidationError if adjacency is asymmetric, unsorted, has
  /// duplicates or self-loops.
  void check_invariants() const;

  /// Builds from a dense edge list over indices 0..labels.size()-1.
  /// Duplicate edges are merged; self-loops throw ValidationError.
  static Graph from_edges(std::vector<std::string> labels,
                          std::span<const std::pair<NodeIndex, NodeIndex>> edges);

  /// Convenience: nodes labelled "0".."n-1".
  static Graph from_edges(std::size_t n, std::span<const std::pair<NodeIndex, NodeIndex>> edges);

 private:
  std::shared_ptr<const std::vector<std::string>> labels_;
  std::shared_ptr<const std::unordered_map<std::string, NodeIndex>> index_;
  std::vector<std::size_t> offsets_;
  std::vector<std::size_t> degrees_;
  std::vector<NodeIndex> neighbors_;
};

/// Incremental, label-based construction.
class GraphBuilder {
 public:
  NodeIndex add_node(std::string_view label);
  /// Self-loops throw ValidationError naming the node.
  void add_edge(std::string_view a, std::string_view b);
  Graph build() const;

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, NodeIndex> index_;
  std::vector<std::pair<NodeIndex, NodeIndex>> edges_;
};

struct ComponentPartition {
  std::vector<std::size_t> labels;  // component id per node
  std::vector<std::size_t> sizes;   // indexed by component id, descending

  std::size_t count() const noexcept { return sizes.size(); }
  std::size_t largest() const noexcept { return sizes.empty() ? 0 : sizes.front(); }
};

/// BFS labelling; component ids are assigned in descending size order
/// (ties by lowest node index).
ComponentPartition connected_components(const Graph& g);

/// |largest component| / original_node_count.
double giant_component_fraction(const Graph& g, std::size_t original_node_count);

/// Fraction of neighbor pairs that are linked; 0 when degree < 2.
double local_clustering(const Graph& g, NodeIndex v);
double average_clustering(const Graph& g);

/// Nodes at shortest-path distance exactly `radius` from v, ascending index.
std::vector<NodeIndex> ball_boundary(const Graph& g, NodeIndex v, std::size_t radius);

/// Shannon entropy (nats) of the empirical degree distribution.
double degree_distribution_entropy(const Graph& g);

/// Unweighted single-source shortest-path distances; -1 marks unreachable.
std::vector<int> bfs_distances(const Graph& g, NodeIndex source);

}  // namespace vne
