#include "vne/centrality.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>

#include "vne/error.hpp"
#include "vne/parallel.hpp"
#include "vne/spectral.hpp"

namespace vne {

namespace {

struct MethodName {
  Method method;
  std::string_view tag;
};

constexpr MethodName kMethodNames[] = {
    {Method::DC, "DC"},   {Method::BC, "BC"},   {Method::CC, "CC"},
    {Method::EC, "EC"},   {Method::PR, "PR"},   {Method::KC, "KC"},
    {Method::CLC, "CLC"}, {Method::CI, "CI"},   {Method::CE_exact, "CE_exact"},
    {Method::CE_approx, "CE_approx"},
};

// Fixed chunk count keeps floating-point reductions independent of the
// number of worker threads.
constexpr std::size_t kReductionChunks = 64;

}  // namespace

std::string_view method_tag(Method m) {
  for (const auto& entry : kMethodNames)
    if (entry.method == m) return entry.tag;
  return "?";
}

std::optional<Method> parse_method(std::string_view text) {
  std::string norm;
  for (char c : text) norm.push_back(c == '-' ? '_' : static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  for (const auto& entry : kMethodNames) {
    std::string tag;
    for (char c : entry.tag) tag.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    if (tag == norm) return entry.method;
  }
  return std::nullopt;
}

const std::vector<Method>& all_methods() {
  static const std::vector<Method> methods = [] {
    std::vector<Method> out;
    for (const auto& entry : kMethodNames) out.push_back(entry.method);
    return out;
  }();
  return methods;
}

CentralityScores::CentralityScores(Method method,
                                   std::shared_ptr<const std::vector<std::string>> labels,
                                   std::vector<double> values)
    : method_(method), labels_(std::move(labels)), values_(std::move(values)) {
  if (labels_->size() != values_.size())
    throw DomainError("score vector does not cover every node");
}

double CentralityScores::at(std::string_view label) const {
  for (NodeIndex v = 0; v < labels_->size(); ++v)
    if ((*labels_)[v] == label) return values_[v];
  throw LookupError("unknown node '" + std::string(label) + "'");
}

bool CentralityScores::tied(double a, double b) {
  const double scale = std::max({1.0, std::abs(a), std::abs(b)});
  return std::abs(a - b) <= kTieTolerance * scale;
}

std::vector<NodeIndex> CentralityScores::ranking() const {
  std::vector<NodeIndex> order(values_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](NodeIndex a, NodeIndex b) {
    if (values_[a] != values_[b]) return values_[a] > values_[b];
    return label_less((*labels_)[a], (*labels_)[b]);
  });
  // Regroup runs of near-equal scores by label.
  std::size_t start = 0;
  while (start < order.size()) {
    std::size_t end = start + 1;
    while (end < order.size() && tied(values_[order[start]], values_[order[end]])) ++end;
    if (end - start > 1)
      std::sort(order.begin() + static_cast<std::ptrdiff_t>(start),
                order.begin() + static_cast<std::ptrdiff_t>(end),
                [&](NodeIndex a, NodeIndex b) { return label_less((*labels_)[a], (*labels_)[b]); });
    start = end;
  }
  return order;
}

NodeIndex CentralityScores::top() const {
  if (values_.empty()) throw DomainError("no scores to rank");
  return ranking().front();
}

std::vector<std::size_t> CentralityScores::dense_ranks() const {
  const auto order = ranking();
  std::vector<std::size_t> ranks(values_.size(), 0);
  std::size_t rank = 0;
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (k == 0 || !tied(values_[order[k - 1]], values_[order[k]])) ++rank;
    ranks[order[k]] = rank;
  }
  return ranks;
}

std::vector<std::string> CentralityScores::top_labels(std::size_t k) const {
  const auto order = ranking();
  std::vector<std::string> out;
  for (std::size_t i = 0; i < std::min(k, order.size()); ++i) out.push_back(label(order[i]));
  return out;
}

CentralityScores degree_centrality(const Graph& g) {
  std::vector<double> values(g.node_count());
  for (NodeIndex v = 0; v < g.node_count(); ++v) values[v] = static_cast<double>(g.degree(v));
  return {Method::DC, g.shared_labels(), std::move(values)};
}

CentralityScores betweenness_centrality(const Graph& g) {
  const std::size_t n = g.node_count();
  const std::size_t chunks = std::min(kReductionChunks, std::max<std::size_t>(n, 1));
  std::vector<std::vector<double>> partial(chunks, std::vector<double>(n, 0.0));

  parallel_for(chunks, [&](std::size_t chunk) {
    auto& acc = partial[chunk];
    std::vector<NodeIndex> stack;
    std::vector<int> dist(n);
    std::vector<double> sigma(n);
    std::vector<double> delta(n);
    stack.reserve(n);
    for (std::size_t s = chunk; s < n; s += chunks) {
      std::fill(dist.begin(), dist.end(), -1);
      std::fill(sigma.begin(), sigma.end(), 0.0);
      std::fill(delta.begin(), delta.end(), 0.0);
      stack.clear();
      dist[s] = 0;
      sigma[s] = 1.0;
      stack.push_back(static_cast<NodeIndex>(s));
      // the stack doubles as the BFS queue: nodes are appended in visit order
      for (std::size_t head = 0; head < stack.size(); ++head) {
        const NodeIndex v = stack[head];
        for (NodeIndex w : g.neighbors(v)) {
          if (dist[w] < 0) {
            dist[w] = dist[v] + 1;
            stack.push_back(w);
          }
          if (dist[w] == dist[v] + 1) sigma[w] += sigma[v];
        }
      }
      for (std::size_t k = stack.size(); k-- > 1;) {
        const NodeIndex w = stack[k];
        for (NodeIndex v : g.neighbors(w))
          if (dist[v] == dist[w] - 1) delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
        acc[w] += delta[w];
      }
    }
  });

  std::vector<double> values(n, 0.0);
  for (const auto& acc : partial)
    for (std::size_t v = 0; v < n; ++v) values[v] += acc[v];
  for (auto& x : values) x /= 2.0;  // each unordered pair was counted from both ends
  return {Method::BC, g.shared_labels(), std::move(values)};
}

CentralityScores closeness_centrality(const Graph& g) {
  const std::size_t n = g.node_count();
  std::vector<double> values(n, 0.0);
  parallel_for(n, [&](std::size_t v) {
    const auto dist = bfs_distances(g, static_cast<NodeIndex>(v));
    std::size_t reached = 0;
    long long total = 0;
    for (int d : dist)
      if (d > 0) {
        ++reached;
        total += d;
      }
    values[v] = reached == 0 ? 0.0 : static_cast<double>(reached) / static_cast<double>(total);
  });
  return {Method::CC, g.shared_labels(), std::move(values)};
}

CentralityScores eigenvector_centrality(const Graph& g, const CentralityOptions& options) {
  if (g.edge_count() == 0) throw DomainError("eigenvector centrality needs at least one edge");
  const std::size_t n = g.node_count();
  const auto parts = connected_components(g);
  std::vector<NodeIndex> members;
  for (NodeIndex v = 0; v < n; ++v)
    if (parts.labels[v] == 0) members.push_back(v);

  // (A + I) shares A's principal eigenvector and is not periodic on
  // bipartite components.
  std::vector<double> x(n, 0.0);
  std::vector<double> next(n, 0.0);
  for (NodeIndex v : members) x[v] = 1.0;
  for (std::size_t it = 0; it < options.max_iterations; ++it) {
    double peak = 0.0;
    for (NodeIndex v : members) {
      double acc = x[v];
      for (NodeIndex w : g.neighbors(v)) acc += x[w];
      next[v] = acc;
      peak = std::max(peak, acc);
    }
    double change = 0.0;
    for (NodeIndex v : members) {
      next[v] /= peak;
      change = std::max(change, std::abs(next[v] - x[v]));
    }
    std::swap(x, next);
    if (change < options.eigenvector_tolerance) return {Method::EC, g.shared_labels(), std::move(x)};
  }
  throw NumericalError("eigenvector centrality did not converge in " +
                       std::to_string(options.max_iterations) + " iterations");
}

CentralityScores pagerank(const Graph& g, double damping, double tolerance,
                          std::size_t max_iterations) {
  const std::size_t n = g.node_count();
  if (n == 0) throw DomainError("PageRank of an empty graph");
  if (!(damping > 0.0 && damping < 1.0)) throw DomainError("damping must lie in (0, 1)");
  const double uniform = 1.0 / static_cast<double>(n);
  std::vector<double> x(n, uniform);
  std::vector<double> next(n);
  for (std::size_t it = 0; it < max_iterations; ++it) {
    double dangling = 0.0;
    for (NodeIndex v = 0; v < n; ++v)
      if (g.degree(v) == 0) dangling += x[v];
    const double base = (1.0 - damping) * uniform + damping * dangling * uniform;
    double change = 0.0;
    double total = 0.0;
    for (NodeIndex v = 0; v < n; ++v) {
      double acc = 0.0;
      for (NodeIndex w : g.neighbors(v)) acc += x[w] / static_cast<double>(g.degree(w));
      next[v] = base + damping * acc;
      total += next[v];
    }
    for (NodeIndex v = 0; v < n; ++v) {
      next[v] /= total;  // guards drift; the update preserves mass exactly in exact arithmetic
      change += std::abs(next[v] - x[v]);
    }
    std::swap(x, next);
    if (change < tolerance) return {Method::PR, g.shared_labels(), std::move(x)};
  }
  throw NumericalError("PageRank did not converge in " + std::to_string(max_iterations) +
                       " iterations");
}

CentralityScores k_core(const Graph& g) {
  // Batagelj-Zaversnik bucket peeling.
  const std::size_t n = g.node_count();
  std::vector<std::size_t> deg(n);
  std::size_t max_deg = 0;
  for (NodeIndex v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    max_deg = std::max(max_deg, deg[v]);
  }
  std::vector<std::size_t> bin(max_deg + 1, 0);
  for (auto d : deg) ++bin[d];
  std::size_t start = 0;
  for (auto& b : bin) {
    const std::size_t count = b;
    b = start;
    start += count;
  }
  std::vector<NodeIndex> vert(n);
  std::vector<std::size_t> pos(n);
  for (NodeIndex v = 0; v < n; ++v) {
    pos[v] = bin[deg[v]]++;
    vert[pos[v]] = v;
  }
  for (std::size_t d = max_deg; d > 0; --d) bin[d] = bin[d - 1];
  if (!bin.empty()) bin[0] = 0;

  for (std::size_t i = 0; i < n; ++i) {
    const NodeIndex v = vert[i];
    for (NodeIndex u : g.neighbors(v)) {
      if (deg[u] > deg[v]) {
        const std::size_t du = deg[u];
        const std::size_t pu = pos[u];
        const std::size_t pw = bin[du];
        const NodeIndex w = vert[pw];
        if (u != w) {
          pos[u] = pw;
          vert[pu] = w;
          pos[w] = pu;
          vert[pw] = u;
        }
        ++bin[du];
        --deg[u];
      }
    }
  }
  std::vector<double> values(n);
  for (NodeIndex v = 0; v < n; ++v) values[v] = static_cast<double>(deg[v]);
  return {Method::KC, g.shared_labels(), std::move(values)};
}

CentralityScores clustering_centrality(const Graph& g) {
  std::vector<double> values(g.node_count());
  for (NodeIndex v = 0; v < g.node_count(); ++v) values[v] = local_clustering(g, v);
  return {Method::CLC, g.shared_labels(), std::move(values)};
}

CentralityScores collective_influence(const Graph& g, std::size_t radius) {
  if (radius == 0) throw DomainError("collective influence radius must be positive");
  std::vector<double> values(g.node_count(), 0.0);
  parallel_for(g.node_count(), [&](std::size_t v) {
    const double dv = static_cast<double>(g.degree(static_cast<NodeIndex>(v)));
    if (dv <= 1.0) return;
    double boundary = 0.0;
    for (NodeIndex u : ball_boundary(g, static_cast<NodeIndex>(v), radius))
      boundary += static_cast<double>(g.degree(u)) - 1.0;
    values[v] = (dv - 1.0) * boundary;
  });
  return {Method::CI, g.shared_labels(), std::move(values)};
}

CentralityScores entropy_centrality_all(const Graph& g) {
  const std::size_t n = g.node_count();
  if (n < 2) throw DomainError("entropy centrality needs at least two nodes");
  const double base = von_neumann_entropy(g);
  std::vector<double> values(n, 0.0);
  parallel_for(n, [&](std::size_t v) {
    values[v] = std::abs(base - von_neumann_entropy(g.remove_node(static_cast<NodeIndex>(v))));
  });
  return {Method::CE_exact, g.shared_labels(), std::move(values)};
}

CentralityScores entropy_centrality_approx_all(const Graph& g) {
  std::vector<double> values(g.node_count(), 0.0);
  for (NodeIndex v = 0; v < g.node_count(); ++v)
    if (g.degree(v) > 0) values[v] = entropy_centrality_approx(g, v);
  return {Method::CE_approx, g.shared_labels(), std::move(values)};
}

CentralityScores compute_centrality(const Graph& g, Method method, const CentralityOptions& options) {
  switch (method) {
    case Method::DC:
      return degree_centrality(g);
    case Method::BC:
      return betweenness_centrality(g);
    case Method::CC:
      return closeness_centrality(g);
    case Method::EC:
      return eigenvector_centrality(g, options);
    case Method::PR:
      return pagerank(g, options.damping, options.pagerank_tolerance, options.max_iterations);
    case Method::KC:
      return k_core(g);
    case Method::CLC:
      return clustering_centrality(g);
    case Method::CI:
      return collective_influence(g, options.ci_radius);
    case Method::CE_exact:
      return entropy_centrality_all(g);
    case Method::CE_approx:
      return entropy_centrality_approx_all(g);
  }
  throw DomainError("unknown centrality method");
}

}  // namespace vne
