#include "vne/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <numeric>
#include <queue>

#include "vne/error.hpp"

namespace vne {

namespace {

std::optional<long long> as_integer(std::string_view s) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

}  // namespace

bool label_less(std::string_view a, std::string_view b) {
  const auto ia = as_integer(a);
  const auto ib = as_integer(b);
  if (ia && ib) {
    if (*ia != *ib) return *ia < *ib;
    return a < b;  // "07" vs "7"
  }
  if (ia != ib && (ia || ib)) return ia.has_value();
  return a < b;
}

Graph::Graph()
    : labels_(std::make_shared<const std::vector<std::string>>()),
      index_(std::make_shared<const std::unordered_map<std::string, NodeIndex>>()),
      offsets_{0} {}

bool Graph::has_edge(NodeIndex u, NodeIndex v) const {
  const auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::optional<NodeIndex> Graph::find(std::string_view label) const {
  const auto it = index_->find(std::string(label));
  if (it == index_->end()) return std::nullopt;
  return it->second;
}

NodeIndex Graph::index_of(std::string_view label) const {
  if (auto idx = find(label)) return *idx;
  throw LookupError("unknown node '" + std::string(label) + "'");
}

std::vector<std::pair<NodeIndex, NodeIndex>> Graph::edges() const {
  std::vector<std::pair<NodeIndex, NodeIndex>> out;
  out.reserve(edge_count());
  for (NodeIndex u = 0; u < node_count(); ++u)
    for (NodeIndex v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph Graph::from_edges(std::vector<std::string> labels,
                        std::span<const std::pair<NodeIndex, NodeIndex>> edges) {
  const std::size_t n = labels.size();
  auto index = std::make_shared<std::unordered_map<std::string, NodeIndex>>();
  index->reserve(n);
  for (NodeIndex i = 0; i < n; ++i) {
    if (!index->emplace(labels[i], i).second)
      throw ValidationError("duplicate node label '" + labels[i] + "'");
  }

  std::vector<std::size_t> count(n, 0);
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) throw LookupError("edge endpoint out of range");
    if (u == v) throw ValidationError("self-loop on node '" + labels[u] + "'");
    ++count[u];
    ++count[v];
  }

  Graph g;
  g.offsets_.assign(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) g.offsets_[i + 1] = g.offsets_[i] + count[i];
  g.neighbors_.resize(g.offsets_[n]);
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const auto& [u, v] : edges) {
    g.neighbors_[fill[u]++] = v;
    g.neighbors_[fill[v]++] = u;
  }

  // Sort and deduplicate each list, then compact.
  std::vector<NodeIndex> packed;
  packed.reserve(g.neighbors_.size());
  g.degrees_.assign(n, 0);
  std::vector<std::size_t> offsets(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    auto first = g.neighbors_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[i]);
    auto last = g.neighbors_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[i + 1]);
    std::sort(first, last);
    last = std::unique(first, last);
    offsets[i] = packed.size();
    packed.insert(packed.end(), first, last);
    g.degrees_[i] = static_cast<std::size_t>(last - first);
  }
  offsets[n] = packed.size();
  g.neighbors_ = std::move(packed);
  g.offsets_ = std::move(offsets);
  g.labels_ = std::make_shared<const std::vector<std::string>>(std::move(labels));
  g.index_ = std::move(index);
  return g;
}

Graph Graph::from_edges(std::size_t n, std::span<const std::pair<NodeIndex, NodeIndex>> edges) {
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = std::to_string(i);
  return from_edges(std::move(labels), edges);
}

Graph Graph::remove_nodes(std::span<const NodeIndex> removed) const {
  const std::size_t n = node_count();
  std::vector<bool> gone(n, false);
  for (NodeIndex v : removed) {
    if (v >= n) throw LookupError("node index " + std::to_string(v) + " out of range");
    gone[v] = true;
  }
  constexpr auto kNone = static_cast<NodeIndex>(-1);
  std::vector<NodeIndex> remap(n, kNone);
  std::vector<std::string> labels;
  labels.reserve(n);
  for (NodeIndex v = 0; v < n; ++v) {
    if (gone[v]) continue;
    remap[v] = static_cast<NodeIndex>(labels.size());
    labels.push_back(label(v));
  }

  const std::size_t kept = labels.size();
  Graph g;
  g.degrees_.assign(kept, 0);
  g.offsets_.assign(kept + 1, 0);
  g.neighbors_.reserve(neighbors_.size());
  for (NodeIndex v = 0; v < n; ++v) {
    if (gone[v]) continue;
    const NodeIndex nv = remap[v];
    for (NodeIndex w : neighbors(v))
      if (!gone[w]) g.neighbors_.push_back(remap[w]);  // remap is monotone, stays sorted
    g.offsets_[nv + 1] = g.neighbors_.size();
    g.degrees_[nv] = g.offsets_[nv + 1] - g.offsets_[nv];
  }

  auto index = std::make_shared<std::unordered_map<std::string, NodeIndex>>();
  index->reserve(kept);
  for (NodeIndex i = 0; i < kept; ++i) index->emplace(labels[i], i);
  g.labels_ = std::make_shared<const std::vector<std::string>>(std::move(labels));
  g.index_ = std::move(index);
  return g;
}

Graph Graph::remove_labels(std::span<const std::string> removed) const {
  std::vector<NodeIndex> idx;
  idx.reserve(removed.size());
  for (const auto& l : removed) idx.push_back(index_of(l));
  return remove_nodes(idx);
}

void Graph::check_invariants() const {
  const std::size_t n = node_count();
  if (labels_->size() != n || offsets_.size() != n + 1)
    throw ValidationError("inconsistent graph storage");
  std::size_t total = 0;
  for (NodeIndex v = 0; v < n; ++v) {
    const auto nb = neighbors(v);
    total += nb.size();
    for (std::size_t k = 0; k < nb.size(); ++k) {
      if (nb[k] >= n) throw ValidationError("neighbor out of range");
      if (nb[k] == v) throw ValidationError("self-loop on node '" + label(v) + "'");
      if (k > 0 && nb[k - 1] >= nb[k]) throw ValidationError("unsorted or duplicate adjacency");
      if (!has_edge(nb[k], v)) throw ValidationError("asymmetric adjacency at '" + label(v) + "'");
    }
  }
  if (total % 2 != 0) throw ValidationError("odd degree sum");
}

NodeIndex GraphBuilder::add_node(std::string_view label) {
  if (label.empty()) throw ValidationError("empty node label");
  auto [it, inserted] = index_.emplace(std::string(label), static_cast<NodeIndex>(labels_.size()));
  if (inserted) labels_.emplace_back(label);
  return it->second;
}

void GraphBuilder::add_edge(std::string_view a, std::string_view b) {
  if (a == b) throw ValidationError("self-loop on node '" + std::string(a) + "'");
  const NodeIndex u = add_node(a);
  const NodeIndex v = add_node(b);
  edges_.emplace_back(u, v);
}

Graph GraphBuilder::build() const { return Graph::from_edges(labels_, edges_); }

std::vector<int> bfs_distances(const Graph& g, NodeIndex source) {
  std::vector<int> dist(g.node_count(), -1);
  std::vector<NodeIndex> queue;
  queue.reserve(g.node_count());
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const NodeIndex v = queue[head];
    for (NodeIndex w : g.neighbors(v)) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

ComponentPartition connected_components(const Graph& g) {
  const std::size_t n = g.node_count();
  constexpr auto kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> raw(n, kUnset);
  std::vector<std::size_t> raw_sizes;
  std::vector<NodeIndex> queue;
  queue.reserve(n);
  for (NodeIndex s = 0; s < n; ++s) {
    if (raw[s] != kUnset) continue;
    const std::size_t id = raw_sizes.size();
    queue.clear();
    queue.push_back(s);
    raw[s] = id;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (NodeIndex w : g.neighbors(queue[head])) {
        if (raw[w] == kUnset) {
          raw[w] = id;
          queue.push_back(w);
        }
      }
    }
    raw_sizes.push_back(queue.size());
  }

  std::vector<std::size_t> order(raw_sizes.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return raw_sizes[a] > raw_sizes[b]; });
  std::vector<std::size_t> rank(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) rank[order[k]] = k;

  ComponentPartition out;
  out.labels.resize(n);
  for (std::size_t v = 0; v < n; ++v) out.labels[v] = rank[raw[v]];
  out.sizes.resize(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) out.sizes[k] = raw_sizes[order[k]];
  return out;
}

double giant_component_fraction(const Graph& g, std::size_t original_node_count) {
  if (original_node_count == 0) throw DomainError("original node count must be positive");
  return static_cast<double>(connected_components(g).largest()) /
         static_cast<double>(original_node_count);
}

double local_clustering(const Graph& g, NodeIndex v) {
  if (v >= g.node_count()) throw LookupError("node index " + std::to_string(v) + " out of range");
  const auto nb = g.neighbors(v);
  const std::size_t d = nb.size();
  if (d < 2) return 0.0;
  std::size_t links = 0;
  for (std::size_t a = 0; a < d; ++a) {
    const auto na = g.neighbors(nb[a]);
    // count neighbors of nb[a] that are also neighbors of v with larger position
    auto it = na.begin();
    for (std::size_t b = a + 1; b < d; ++b) {
      it = std::lower_bound(it, na.end(), nb[b]);
      if (it == na.end()) break;
      if (*it == nb[b]) ++links;
    }
  }
  return 2.0 * static_cast<double>(links) / (static_cast<double>(d) * static_cast<double>(d - 1));
}

double average_clustering(const Graph& g) {
  if (g.empty()) throw DomainError("average clustering of an empty graph");
  double sum = 0.0;
  for (NodeIndex v = 0; v < g.node_count(); ++v) sum += local_clustering(g, v);
  return sum / static_cast<double>(g.node_count());
}

std::vector<NodeIndex> ball_boundary(const Graph& g, NodeIndex v, std::size_t radius) {
  if (v >= g.node_count()) throw LookupError("node index " + std::to_string(v) + " out of range");
  std::vector<NodeIndex> frontier{v};
  std::vector<bool> seen(g.node_count(), false);
  seen[v] = true;
  for (std::size_t r = 0; r < radius && !frontier.empty(); ++r) {
    std::vector<NodeIndex> next;
    for (NodeIndex u : frontier)
      for (NodeIndex w : g.neighbors(u))
        if (!seen[w]) {
          seen[w] = true;
          next.push_back(w);
        }
    frontier = std::move(next);
  }
  std::sort(frontier.begin(), frontier.end());
  return frontier;
}

double degree_distribution_entropy(const Graph& g) {
  if (g.empty()) throw DomainError("degree entropy of an empty graph");
  std::map<std::size_t, std::size_t> histogram;
  for (NodeIndex v = 0; v < g.node_count(); ++v) ++histogram[g.degree(v)];
  const double n = static_cast<double>(g.node_count());
  double h = 0.0;
  for (const auto& [degree, count] : histogram) {
    const double p = static_cast<double>(count) / n;
    h -= p * std::log(p);
  }
  return h;
}

}  // namespace vne
