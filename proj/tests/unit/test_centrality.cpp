#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "doctest.h"
#include "support/graphs.hpp"
#include "vne/centrality.hpp"
#include "vne/error.hpp"
#include "vne/io.hpp"

using namespace vne;
using namespace vne::testing;

namespace {

Eigen::MatrixXd adjacency(const Graph& g) {
  const auto n = static_cast<Eigen::Index>(g.node_count());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (const auto& [u, v] : g.edges()) a(u, v) = a(v, u) = 1.0;
  return a;
}

// Stationary vector of the teleporting walk, solved directly.
std::vector<double> pagerank_oracle(const Graph& g, double d) {
  const auto n = static_cast<Eigen::Index>(g.node_count());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);  // column-stochastic transition
  for (Eigen::Index j = 0; j < n; ++j) {
    const auto deg = g.degree(static_cast<NodeIndex>(j));
    for (Eigen::Index i = 0; i < n; ++i)
      m(i, j) = deg == 0 ? 1.0 / static_cast<double>(n)
                         : (g.has_edge(static_cast<NodeIndex>(i), static_cast<NodeIndex>(j)) ? 1.0 / static_cast<double>(deg) : 0.0);
  }
  const Eigen::MatrixXd lhs = Eigen::MatrixXd::Identity(n, n) - d * m;
  const Eigen::VectorXd rhs = Eigen::VectorXd::Constant(n, (1.0 - d) / static_cast<double>(n));
  const Eigen::VectorXd x = lhs.colPivHouseholderQr().solve(rhs);
  return {x.data(), x.data() + n};
}

// Core numbers by repeated k-threshold pruning.
std::vector<double> core_oracle(const Graph& g) {
  const std::size_t n = g.node_count();
  std::vector<double> core(n, 0.0);
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<bool> alive(n, true);
    bool changed = true;
    while (changed) {
      changed = false;
      for (NodeIndex v = 0; v < n; ++v) {
        if (!alive[v]) continue;
        std::size_t d = 0;
        for (NodeIndex w : g.neighbors(v)) d += alive[w];
        if (d < k) {
          alive[v] = false;
          changed = true;
        }
      }
    }
    for (NodeIndex v = 0; v < n; ++v)
      if (alive[v]) core[v] = static_cast<double>(k);
  }
  return core;
}

// By value, so range-for over a temporary's scores stays valid.
std::vector<double> values_of(const CentralityScores& s) { return s.values(); }

std::vector<NodeIndex> random_perm(std::size_t n, std::mt19937_64& rng) {
  std::vector<NodeIndex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

}  // namespace

TEST_CASE("method tags") {
  CHECK(method_tag(Method::CE_approx) == "CE_approx");
  CHECK(parse_method("ce-approx") == Method::CE_approx);
  CHECK(parse_method("CE_EXACT") == Method::CE_exact);
  CHECK(parse_method("pr") == Method::PR);
  CHECK_FALSE(parse_method("foo").has_value());
  for (Method m : all_methods()) CHECK(parse_method(method_tag(m)) == m);
}

TEST_CASE("ranking ties break by label and dense ranks are shared") {
  const auto labels = std::make_shared<const std::vector<std::string>>(std::vector<std::string>{"b", "10", "a", "9"});
  const CentralityScores s(Method::DC, labels, {2.0, 1.0, 2.0, 1.0});
  const auto order = s.ranking();
  CHECK(s.label(order[0]) == "a");
  CHECK(s.label(order[1]) == "b");
  CHECK(s.label(order[2]) == "9");
  CHECK(s.label(order[3]) == "10");
  CHECK(s.dense_ranks() == std::vector<std::size_t>{1, 2, 1, 2});
  CHECK(s.at("10") == 1.0);
  CHECK_THROWS_AS(s.at("zz"), LookupError);
  CHECK(s.top_labels(2) == std::vector<std::string>{"a", "b"});

  // round-off sized differences count as ties
  const CentralityScores near(Method::BC, labels, {1.0, 1.0 + 1e-15, 0.5, 0.0});
  CHECK(near.label(near.ranking()[0]) == "10");
  CHECK(near.dense_ranks()[0] == near.dense_ranks()[1]);
}

TEST_CASE("degree") {
  const auto s = degree_centrality(star(3));
  CHECK(s[0] == 3.0);
  CHECK(s[1] == 1.0);
  const Graph gift = load_dataset("gift");
  const auto g = degree_centrality(gift);
  CHECK(g.label(g.top()) == "17");
  CHECK(g.at("17") == 6.0);
  const Graph karate = load_dataset("karate");
  CHECK(degree_centrality(karate).at("34") == 17.0);
  CHECK(degree_centrality(karate).at("1") == 16.0);
}

TEST_CASE("betweenness") {
  const auto p = betweenness_centrality(path(3));
  CHECK(p[1] == doctest::Approx(1.0));
  CHECK(p[0] == 0.0);
  const auto s = betweenness_centrality(star(3));
  CHECK(s[0] == doctest::Approx(3.0));
  CHECK(s[2] == 0.0);
  const auto gift = betweenness_centrality(load_dataset("gift"));
  CHECK(gift.top_labels(5) == std::vector<std::string>{"11", "7", "17", "12", "5"});
}

TEST_CASE("betweenness matches path counting on every graph with N <= 5") {
  for (std::size_t n = 1; n <= 5; ++n)
    for (const Graph& g : all_graphs(n)) {
      const auto ours = betweenness_centrality(g);
      const auto ref = betweenness_oracle(g);
      for (NodeIndex v = 0; v < n; ++v) CHECK(ours[v] == doctest::Approx(ref[v]).epsilon(1e-12));
    }
}

TEST_CASE("betweenness matches path counting on random graphs with N <= 8") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = 6 + static_cast<std::size_t>(trial % 3);
    const Graph g = random_gnp(n, 0.15 + 0.1 * (trial % 5), rng);
    const auto ours = betweenness_centrality(g);
    const auto ref = betweenness_oracle(g);
    for (NodeIndex v = 0; v < n; ++v) CHECK(ours[v] == doctest::Approx(ref[v]).epsilon(1e-12));
  }
}

TEST_CASE("closeness") {
  const auto p = closeness_centrality(path(3));
  CHECK(p[1] == doctest::Approx(1.0));
  CHECK(p[0] == doctest::Approx(2.0 / 3.0));
  const auto iso = closeness_centrality(Graph::from_edges(3, EdgeList{{0, 1}}));
  CHECK(iso[2] == 0.0);
  CHECK(iso[0] == doctest::Approx(1.0));

  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = random_gnp(12, 0.2, rng);
    const auto d = all_pairs_distances(g);
    const auto ours = closeness_centrality(g);
    for (NodeIndex v = 0; v < g.node_count(); ++v) {
      double reached = 0, total = 0;
      for (int x : d[v])
        if (x > 0) {
          reached += 1;
          total += x;
        }
      CHECK(ours[v] == doctest::Approx(reached == 0 ? 0.0 : reached / total));
    }
  }
}

TEST_CASE("Florentine: Medici leads degree, betweenness and closeness") {
  const Graph f = load_dataset("florentine");
  for (Method m : {Method::DC, Method::BC, Method::CC}) {
    const auto s = compute_centrality(f, m);
    CHECK(s.label(s.top()) == "Medici");
  }
  CHECK(closeness_centrality(f).at("Pucci") == 0.0);
}

TEST_CASE("eigenvector") {
  for (double x : values_of(eigenvector_centrality(cycle(7)))) CHECK(x == doctest::Approx(1.0));
  const auto s = eigenvector_centrality(star(3));
  CHECK(s[0] == doctest::Approx(1.0));
  for (NodeIndex leaf = 1; leaf <= 3; ++leaf) CHECK(s[leaf] == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-8));
  for (double x : values_of(eigenvector_centrality(complete(2)))) CHECK(x == doctest::Approx(1.0));
  CHECK_THROWS_AS(eigenvector_centrality(Graph::from_edges(3, EdgeList{})), DomainError);

  const Graph two = Graph::from_edges(5, EdgeList{{0, 1}, {1, 2}, {3, 4}});
  const auto t = eigenvector_centrality(two);
  CHECK(t[3] == 0.0);
  CHECK(t[4] == 0.0);
  CHECK(t[1] == doctest::Approx(1.0));

  std::mt19937_64 rng(14);
  int checked = 0;
  while (checked < 30) {
    const Graph g = random_gnp(15, 0.3, rng);
    if (!is_connected_oracle(g)) continue;
    ++checked;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(adjacency(g));
    Eigen::VectorXd ref = solver.eigenvectors().col(g.node_count() - 1).cwiseAbs();
    ref /= ref.maxCoeff();
    const auto ours = eigenvector_centrality(g);
    for (NodeIndex v = 0; v < g.node_count(); ++v) CHECK(ours[v] == doctest::Approx(ref(v)).epsilon(1e-7));
  }
}

TEST_CASE("pagerank") {
  for (double x : values_of(pagerank(cycle(5)))) CHECK(x == doctest::Approx(0.2));
  const auto s = pagerank(star(3));
  for (NodeIndex leaf = 1; leaf <= 3; ++leaf) CHECK(s[0] > s[leaf]);
  CHECK_THROWS_AS(pagerank(Graph()), DomainError);
  CHECK_THROWS_AS(pagerank(path(3), 1.0), DomainError);

  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = random_gnp(14, 0.15, rng);
    const auto ours = pagerank(g);
    const auto ref = pagerank_oracle(g, 0.85);
    const double sum = std::accumulate(ours.values().begin(), ours.values().end(), 0.0);
    CHECK(std::abs(sum - 1.0) < 1e-9);
    for (NodeIndex v = 0; v < g.node_count(); ++v) CHECK(std::abs(ours[v] - ref[v]) < 1e-9);
  }
}

TEST_CASE("k-core") {
  for (double x : values_of(k_core(cycle(6)))) CHECK(x == 2.0);
  for (double x : values_of(k_core(complete(4)))) CHECK(x == 3.0);
  const auto karate = k_core(load_dataset("karate"));
  CHECK(*std::max_element(karate.values().begin(), karate.values().end()) == 4.0);

  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = random_gnp(12, 0.1 + 0.05 * (trial % 8), rng);
    CHECK(k_core(g).values() == core_oracle(g));
  }
}

TEST_CASE("k-core does not depend on input edge order") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = random_gnp(20, 0.2, rng);
    auto edges = g.edges();
    std::shuffle(edges.begin(), edges.end(), rng);
    GraphBuilder b;
    for (const auto& l : g.labels()) b.add_node(l);
    for (const auto& [u, v] : edges) b.add_edge(g.label(v), g.label(u));
    CHECK(k_core(b.build()).values() == k_core(g).values());
  }
}

TEST_CASE("clustering centrality") {
  const Graph w = wheel6();
  const auto s = clustering_centrality(w);
  CHECK(s.at("v1") == doctest::Approx(2.0 / 3.0));
  CHECK(s.at("v7") == doctest::Approx(2.0 / 5.0));
  for (double x : values_of(clustering_centrality(path(6)))) CHECK(x == 0.0);
  for (double x : values_of(clustering_centrality(complete(4)))) CHECK(x == 1.0);
}

TEST_CASE("collective influence") {
  for (std::size_t l = 1; l <= 3; ++l) CHECK(collective_influence(star(4), l)[0] == 0.0);
  for (double x : values_of(collective_influence(cycle(8), 1))) CHECK(x == 2.0);
  const auto p = collective_influence(path(3), 1);
  CHECK(p[1] == 0.0);
  CHECK(p[0] == 0.0);
  // P5 middle at radius 2: (2-1) * ((1-1) + (1-1)); node 1 at radius 2: (2-1) * (2-1) for node 3
  const auto p5 = collective_influence(path(5), 2);
  CHECK(p5[2] == 0.0);
  CHECK(p5[1] == 1.0);
  CHECK_THROWS_AS(collective_influence(path(3), 0), DomainError);
}

TEST_CASE("entropy centrality batch") {
  const auto k3 = entropy_centrality_all(complete(3));
  CHECK(k3[0] == doctest::Approx(k3[1]));
  CHECK(k3[1] == doctest::Approx(k3[2]));
  CHECK_THROWS_AS(entropy_centrality_all(Graph::from_edges(1, EdgeList{})), DomainError);

  const auto f = entropy_centrality_all(load_dataset("florentine"));
  CHECK(f.top_labels(3) == std::vector<std::string>{"Medici", "Guadagni", "Albizzi"});
  const auto gift = entropy_centrality_all(load_dataset("gift"));
  CHECK(gift.top_labels(5) == std::vector<std::string>{"17", "11", "12", "7", "5"});
}

TEST_CASE("Florentine entropy top-3 does not depend on the isolated node") {
  const Graph f = load_dataset("florentine");
  const Graph without = f.remove_node(f.index_of("Pucci"));
  CHECK(entropy_centrality_all(without).top_labels(3) == entropy_centrality_all(f).top_labels(3));
}

TEST_CASE("every method is permutation equivariant") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 10; ++trial) {
    Graph g = random_gnp(16, 0.25, rng);
    while (g.edge_count() == 0) g = random_gnp(16, 0.25, rng);
    const auto perm = random_perm(g.node_count(), rng);
    const Graph h = permuted(g, perm);
    for (Method m : all_methods()) {
      const auto a = compute_centrality(g, m);
      const auto b = compute_centrality(h, m);
      for (NodeIndex v = 0; v < g.node_count(); ++v) CHECK(b[perm[v]] == doctest::Approx(a[v]).epsilon(1e-9));
      CHECK(a.top_labels(g.node_count()).size() == g.node_count());
    }
  }
}
