#include <cmath>
#include <map>
#include <sstream>

#include "doctest.h"
#include "vne/edge_list.hpp"
#include "vne/error.hpp"
#include "vne/generators.hpp"

using namespace vne;

namespace {

double mean_degree(const Graph& g) {
  return 2.0 * static_cast<double>(g.edge_count()) / static_cast<double>(g.node_count());
}

std::string serialize(const Graph& g, const Metadata& meta = {}) {
  std::ostringstream out;
  write_edge_list(out, g, meta);
  return out.str();
}

}  // namespace

TEST_CASE("rng helpers") {
  Rng a(1), b(1);
  for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
  Rng r(5);
  for (int i = 0; i < 1000; ++i) {
    const double u = r.uniform();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    CHECK(r.below(7) < 7);
  }
  CHECK(Rng::derive(1, 0) != Rng::derive(1, 1));
  CHECK(Rng::derive(1, 0) == Rng::derive(1, 0));
  CHECK_THROWS_AS(r.below(0), DomainError);
}

TEST_CASE("model tags") {
  CHECK(parse_model("er") == GraphModel::ER_GNM);
  CHECK(parse_model("SF") == GraphModel::SF_CONFIG);
  CHECK(parse_model("rgg") == GraphModel::RGG);
  CHECK(parse_model(model_tag(GraphModel::RGG)) == GraphModel::RGG);
  CHECK_THROWS_AS(parse_model("ba"), DomainError);
}

TEST_CASE("Erdos-Renyi G(n, m)") {
  const Graph k10 = erdos_renyi_gnm(10, 45, 3);
  CHECK(k10.edge_count() == 45);
  for (NodeIndex v = 0; v < 10; ++v) CHECK(k10.degree(v) == 9);
  const Graph empty = erdos_renyi_gnm(10, 0, 3);
  CHECK(empty.node_count() == 10);
  CHECK(empty.edge_count() == 0);
  CHECK_THROWS_AS(erdos_renyi_gnm(10, 46, 3), DomainError);

  const Graph big = erdos_renyi_gnm(5000, 10000, 1);
  CHECK(big.node_count() == 5000);
  CHECK(big.edge_count() == 10000);
  CHECK(mean_degree(big) == 4.0);
  big.check_invariants();
}

TEST_CASE("Erdos-Renyi edges are spread uniformly over pairs") {
  // each of the 10 pairs of K5 appears with probability 3/10
  std::map<std::pair<NodeIndex, NodeIndex>, int> hits;
  const int runs = 20000;
  for (int s = 0; s < runs; ++s)
    for (const auto& e : erdos_renyi_gnm(5, 3, static_cast<std::uint64_t>(s)).edges()) ++hits[e];
  CHECK(hits.size() == 10);
  for (const auto& [pair, count] : hits) CHECK(std::abs(count / double(runs) - 0.3) < 0.02);
}

TEST_CASE("scale-free configuration model") {
  double sampled = 0.0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = scale_free_configuration(1000, 2.5, 2, seed);
    g.check_invariants();
    CHECK(g.node_count() == 1000);
    std::size_t kmax = 0;
    for (NodeIndex v = 0; v < g.node_count(); ++v) {
      CHECK(g.degree(v) >= 2);
      kmax = std::max(kmax, g.degree(v));
    }
    CHECK(kmax <= 31);  // floor(sqrt(1000))
    sampled += mean_degree(g);
  }
  // P(k) ~ k^-2.5 on [2, 31] has mean about 3.9
  CHECK(sampled / 20 > 3.0);
  CHECK(sampled / 20 < 5.0);
  CHECK_THROWS_AS(scale_free_configuration(100, 2.0, 2, 1), DomainError);
  CHECK_THROWS_AS(scale_free_configuration(100, 2.5, 0, 1), DomainError);
}

TEST_CASE("scale-free degree tail follows the truncated power law") {
  // least-squares slope of log CCDF against log k over k in [3, 30]
  auto fit = [](const std::vector<double>& ccdf) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int points = 0;
    for (std::size_t k = 3; k <= 30; ++k) {
      if (ccdf[k] <= 0.0) continue;
      const double x = std::log(static_cast<double>(k));
      const double y = std::log(ccdf[k]);
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
      ++points;
    }
    return (points * sxy - sx * sy) / (points * sxx - sx * sx);
  };
  // P(k) ~ k^-2.5 on [2, 70] gives about -1.72 here, steeper than the
  // untruncated -1.5 because of the cutoff.
  std::vector<double> expected(71, 0.0);
  double z = 0.0;
  for (int k = 2; k <= 70; ++k) z += std::pow(k, -2.5);
  for (int k = 70; k >= 2; --k) expected[static_cast<std::size_t>(k)] = (k < 70 ? expected[static_cast<std::size_t>(k) + 1] : 0.0) + std::pow(k, -2.5) / z;
  const double target = fit(expected);
  CHECK(target == doctest::Approx(-1.716).epsilon(1e-3));

  double mean = 0.0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = scale_free_configuration(5000, 2.5, 2, seed);
    std::vector<double> ccdf(72, 0.0);
    for (NodeIndex v = 0; v < g.node_count(); ++v) ccdf[std::min<std::size_t>(g.degree(v), 71)] += 1.0 / 5000.0;
    for (std::size_t k = 70; k-- > 0;) ccdf[k] += ccdf[k + 1];
    mean += fit(ccdf) / 20.0;
  }
  MESSAGE("mean CCDF slope " << mean << " vs " << target);
  CHECK(std::abs(mean - target) < 0.1);
}

TEST_CASE("random geometric graph") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Graph g = random_geometric(1000, 3, 4.0, seed);
    g.check_invariants();
    CHECK(mean_degree(g) >= 0.95 * 4.0);
    CHECK(mean_degree(g) <= 1.05 * 4.0);
  }
  const Graph two = random_geometric(2, 1, 1.0, 9);
  CHECK(two.edge_count() == 1);
  CHECK_THROWS_AS(random_geometric(10, 0, 4.0, 1), DomainError);
  CHECK_THROWS_AS(random_geometric(10, 3, 0.0, 1), DomainError);
  CHECK_THROWS_AS(random_geometric(10, 3, 10.0, 1), DomainError);
}

TEST_CASE("geometric graphs are more clustered than random ones") {
  const Graph rgg = random_geometric(1000, 3, 4.0, 2);
  const Graph er = erdos_renyi_gnm(1000, rgg.edge_count(), 2);
  CHECK(average_clustering(rgg) > 5.0 * average_clustering(er));
  CHECK(average_clustering(rgg) > 0.3);
}

TEST_CASE("same seed gives the same bytes") {
  for (GraphModel model : {GraphModel::ER_GNM, GraphModel::SF_CONFIG, GraphModel::RGG}) {
    GeneratorConfig c;
    c.model = model;
    c.n = 300;
    c.m = 600;
    c.seed = 77;
    const std::string a = serialize(generate(c), c.metadata());
    const std::string b = serialize(generate(c), c.metadata());
    CHECK(a == b);
    c.seed = 78;
    CHECK(serialize(generate(c), c.metadata()) != a);
  }
}

TEST_CASE("config validation and metadata") {
  GeneratorConfig c;
  c.n = 0;
  CHECK_THROWS_AS(c.validate(), DomainError);
  c.n = 5;
  c.m = 11;
  CHECK_THROWS_AS(c.validate(), DomainError);
  c.m = 10;
  c.validate();
  c.seed = 42;
  const auto meta = c.metadata();
  bool has_seed = false;
  for (const auto& [k, v] : meta) has_seed |= k == "seed" && v == "42";
  CHECK(has_seed);
}
