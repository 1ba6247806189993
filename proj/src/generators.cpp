#include "vne/generators.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "vne/error.hpp"

namespace vne {

namespace {

constexpr int kMaxSimplifyAttempts = 100;
constexpr int kRadiusBisections = 200;

std::uint64_t pair_key(NodeIndex a, NodeIndex b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

std::string format_real(double x) {
  std::ostringstream out;
  out.precision(12);
  out << x;
  return out.str();
}

// Maps a pair id in [0, n(n-1)/2) to (i, j), i < j, row by row.
std::pair<NodeIndex, NodeIndex> pair_from_id(std::uint64_t id, std::uint64_t n) {
  // row i holds n-1-i pairs; find the row by solving the triangular offset
  const double nd = static_cast<double>(n);
  auto offset = [&](std::uint64_t i) { return i * (2 * n - i - 1) / 2; };
  auto i = static_cast<std::uint64_t>(
      std::floor((2.0 * nd - 1.0 - std::sqrt((2.0 * nd - 1.0) * (2.0 * nd - 1.0) - 8.0 * static_cast<double>(id))) / 2.0));
  if (i >= n - 1) i = n - 2;
  while (i > 0 && offset(i) > id) --i;
  while (i + 1 < n - 1 && offset(i + 1) <= id) ++i;
  const std::uint64_t j = i + 1 + (id - offset(i));
  return {static_cast<NodeIndex>(i), static_cast<NodeIndex>(j)};
}

// Degree-preserving cleanup of self-loops and multi-edges. Returns false when
// the swap budget runs out.
bool simplify(std::vector<std::pair<NodeIndex, NodeIndex>>& edges, Rng& rng) {
  std::unordered_map<std::uint64_t, int> multiplicity;
  multiplicity.reserve(edges.size() * 2);
  for (const auto& [a, b] : edges) ++multiplicity[pair_key(a, b)];
  auto bad = [&](std::size_t k) {
    const auto& [a, b] = edges[k];
    return a == b || multiplicity[pair_key(a, b)] > 1;
  };

  const std::size_t budget = 100 * edges.size() + 1000;
  for (std::size_t attempt = 0; attempt < budget; ++attempt) {
    std::vector<std::size_t> offenders;
    for (std::size_t k = 0; k < edges.size(); ++k)
      if (bad(k)) offenders.push_back(k);
    if (offenders.empty()) return true;
    for (std::size_t k : offenders) {
      if (!bad(k)) continue;
      const std::size_t other = static_cast<std::size_t>(rng.below(edges.size()));
      if (other == k) continue;
      auto [a, b] = edges[k];
      auto [c, d] = edges[other];
      if (rng.below(2) == 1) std::swap(c, d);
      // (a,b),(c,d) -> (a,c),(b,d)
      if (a == c || b == d) continue;
      if (multiplicity[pair_key(a, c)] > 0 || multiplicity[pair_key(b, d)] > 0) continue;
      --multiplicity[pair_key(a, b)];
      --multiplicity[pair_key(c, d)];
      edges[k] = {a, c};
      edges[other] = {b, d};
      ++multiplicity[pair_key(a, c)];
      ++multiplicity[pair_key(b, d)];
    }
    attempt += offenders.size();
  }
  return false;
}

}  // namespace

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw DomainError("Rng::below needs a positive bound");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

std::uint64_t Rng::derive(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::string model_tag(GraphModel m) {
  switch (m) {
    case GraphModel::ER_GNM:
      return "ER_GNM";
    case GraphModel::SF_CONFIG:
      return "SF_CONFIG";
    case GraphModel::RGG:
      return "RGG";
  }
  return "?";
}

GraphModel parse_model(const std::string& text) {
  std::string t;
  for (char c : text) t.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  if (t == "ER" || t == "ER_GNM") return GraphModel::ER_GNM;
  if (t == "SF" || t == "SF_CONFIG") return GraphModel::SF_CONFIG;
  if (t == "RGG") return GraphModel::RGG;
  throw DomainError("unknown graph model '" + text + "' (expected er, sf or rgg)");
}

void GeneratorConfig::validate() const {
  if (n < 1) throw DomainError("n must be at least 1");
  switch (model) {
    case GraphModel::ER_GNM:
      if (m > n * (n - 1) / 2)
        throw DomainError("m = " + std::to_string(m) + " exceeds n(n-1)/2 for n = " + std::to_string(n));
      break;
    case GraphModel::SF_CONFIG:
      if (!(gamma > 2.0)) throw DomainError("gamma must exceed 2");
      if (k_min < 1) throw DomainError("k_min must be at least 1");
      break;
    case GraphModel::RGG:
      if (dim < 1) throw DomainError("dim must be at least 1");
      if (!(mean_degree > 0.0) || mean_degree > static_cast<double>(n) - 1.0)
        throw DomainError("mean_degree must lie in (0, n-1]");
      break;
  }
}

Metadata GeneratorConfig::metadata() const {
  Metadata meta{{"model", model_tag(model)}, {"n", std::to_string(n)}};
  switch (model) {
    case GraphModel::ER_GNM:
      meta.emplace_back("m", std::to_string(m));
      break;
    case GraphModel::SF_CONFIG:
      meta.emplace_back("gamma", format_real(gamma));
      meta.emplace_back("k_min", std::to_string(k_min));
      meta.emplace_back("k_max", std::to_string(static_cast<std::size_t>(std::floor(std::sqrt(static_cast<double>(n))))));
      break;
    case GraphModel::RGG:
      meta.emplace_back("dim", std::to_string(dim));
      meta.emplace_back("mean_degree", format_real(mean_degree));
      meta.emplace_back("boundary", "hard");
      break;
  }
  meta.emplace_back("seed", std::to_string(seed));
  meta.emplace_back("rng", "mt19937_64");
  return meta;
}

Graph erdos_renyi_gnm(std::size_t n, std::size_t m, std::uint64_t seed) {
  GeneratorConfig{.model = GraphModel::ER_GNM, .n = n, .m = m}.validate();
  const std::uint64_t total = static_cast<std::uint64_t>(n) * (n - 1) / 2;
  Rng rng(seed);
  // Floyd's algorithm: m distinct ids from [0, total), each subset equally likely.
  std::unordered_set<std::uint64_t> chosen;
  chosen.reserve(m * 2);
  std::vector<std::uint64_t> ids;
  ids.reserve(m);
  for (std::uint64_t j = total - m; j < total; ++j) {
    const std::uint64_t t = rng.below(j + 1);
    const std::uint64_t pick = chosen.count(t) ? j : t;
    chosen.insert(pick);
    ids.push_back(pick);
  }
  std::sort(ids.begin(), ids.end());
  std::vector<std::pair<NodeIndex, NodeIndex>> edges;
  edges.reserve(m);
  for (auto id : ids) edges.push_back(pair_from_id(id, n));
  return Graph::from_edges(n, edges);
}

Graph scale_free_configuration(std::size_t n, double gamma, std::size_t k_min, std::uint64_t seed) {
  GeneratorConfig{.model = GraphModel::SF_CONFIG, .n = n, .gamma = gamma, .k_min = k_min}.validate();
  const auto k_max = std::max(k_min, static_cast<std::size_t>(std::floor(std::sqrt(static_cast<double>(n)))));
  if (k_min >= n) throw DomainError("k_min must be below n");

  std::vector<double> cdf;
  double total = 0.0;
  for (std::size_t k = k_min; k <= k_max; ++k) {
    total += std::pow(static_cast<double>(k), -gamma);
    cdf.push_back(total);
  }
  for (auto& c : cdf) c /= total;

  for (int attempt = 0; attempt < kMaxSimplifyAttempts; ++attempt) {
    Rng rng(Rng::derive(seed, static_cast<std::uint64_t>(attempt)));
    std::vector<std::size_t> degree(n);
    std::size_t stubs = 0;
    for (auto& d : degree) {
      const double u = rng.uniform();
      const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
      d = k_min + static_cast<std::size_t>(std::min<std::ptrdiff_t>(it - cdf.begin(), static_cast<std::ptrdiff_t>(cdf.size()) - 1));
      stubs += d;
    }
    // parity: redraw one node until the stub count is even
    while (stubs % 2 == 1) {
      const std::size_t v = static_cast<std::size_t>(rng.below(n));
      stubs -= degree[v];
      const auto it = std::upper_bound(cdf.begin(), cdf.end(), rng.uniform());
      degree[v] = k_min + static_cast<std::size_t>(std::min<std::ptrdiff_t>(it - cdf.begin(), static_cast<std::ptrdiff_t>(cdf.size()) - 1));
      stubs += degree[v];
    }

    std::vector<NodeIndex> pool;
    pool.reserve(stubs);
    for (NodeIndex v = 0; v < n; ++v) pool.insert(pool.end(), degree[v], v);
    for (std::size_t i = pool.size(); i > 1; --i) std::swap(pool[i - 1], pool[rng.below(i)]);
    std::vector<std::pair<NodeIndex, NodeIndex>> edges;
    edges.reserve(stubs / 2);
    for (std::size_t i = 0; i + 1 < pool.size(); i += 2) edges.emplace_back(pool[i], pool[i + 1]);

    if (!simplify(edges, rng)) continue;
    for (auto& e : edges)
      if (e.first > e.second) std::swap(e.first, e.second);
    std::sort(edges.begin(), edges.end());
    return Graph::from_edges(n, edges);
  }
  throw GenerationError("configuration model could not be simplified after " +
                        std::to_string(kMaxSimplifyAttempts) + " attempts");
}

Graph random_geometric(std::size_t n, std::size_t dim, double mean_degree, std::uint64_t seed) {
  GeneratorConfig{.model = GraphModel::RGG, .n = n, .dim = dim, .mean_degree = mean_degree}.validate();
  Rng rng(seed);
  std::vector<double> points(n * dim);
  for (auto& x : points) x = rng.uniform();

  struct Pair {
    double dist2;
    NodeIndex a, b;
  };
  std::vector<Pair> pairs;
  pairs.reserve(n * (n - 1) / 2);
  for (NodeIndex a = 0; a < n; ++a)
    for (NodeIndex b = a + 1; b < n; ++b) {
      double d2 = 0.0;
      for (std::size_t k = 0; k < dim; ++k) {
        const double diff = points[a * dim + k] - points[b * dim + k];
        d2 += diff * diff;
      }
      pairs.push_back({d2, a, b});
    }
  std::sort(pairs.begin(), pairs.end(), [](const Pair& x, const Pair& y) {
    if (x.dist2 != y.dist2) return x.dist2 < y.dist2;
    return std::tie(x.a, x.b) < std::tie(y.a, y.b);
  });

  // links with distance < r, i.e. squared distance < r^2
  auto links_below = [&](double r) {
    const double r2 = r * r;
    return static_cast<std::size_t>(
        std::lower_bound(pairs.begin(), pairs.end(), r2, [](const Pair& p, double v) { return p.dist2 < v; }) -
        pairs.begin());
  };
  const double target_edges = mean_degree * static_cast<double>(n) / 2.0;
  double lo = 0.0;
  double hi = std::sqrt(static_cast<double>(dim)) + 1.0;
  for (int it = 0; it < kRadiusBisections; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (static_cast<double>(links_below(mid)) < target_edges) lo = mid;
    else hi = mid;
  }
  // pick whichever end of the bracket lands closer to the target
  const std::size_t below = links_below(lo);
  const std::size_t above = links_below(hi);
  const double r = std::abs(static_cast<double>(below) - target_edges) <
                           std::abs(static_cast<double>(above) - target_edges)
                       ? lo
                       : hi;
  const std::size_t count = links_below(r);
  const double realized = 2.0 * static_cast<double>(count) / static_cast<double>(n);
  if (std::abs(realized - mean_degree) > 0.05 * mean_degree)
    throw GenerationError("radius bisection reached mean degree " + format_real(realized) +
                          ", outside 5% of " + format_real(mean_degree));

  std::vector<std::pair<NodeIndex, NodeIndex>> edges;
  edges.reserve(count);
  for (std::size_t k = 0; k < count; ++k) edges.emplace_back(pairs[k].a, pairs[k].b);
  std::sort(edges.begin(), edges.end());
  return Graph::from_edges(n, edges);
}

Graph generate(const GeneratorConfig& config) {
  config.validate();
  switch (config.model) {
    case GraphModel::ER_GNM:
      return erdos_renyi_gnm(config.n, config.m, config.seed);
    case GraphModel::SF_CONFIG:
      return scale_free_configuration(config.n, config.gamma, config.k_min, config.seed);
    case GraphModel::RGG:
      return random_geometric(config.n, config.dim, config.mean_degree, config.seed);
  }
  throw DomainError("unknown graph model");
}

}  // namespace vne
