#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "vne/centrality.hpp"
#include "vne/generators.hpp"
#include "vne/trace.hpp"

namespace vne {

struct DismantleOptions {
  /// Recompute scores on the current graph before every removal. When false,
  /// nodes are removed in the ranking of the intact graph.
  bool adaptive = true;
  CentralityOptions centrality;
  /// Methods correlated against the strategy's scores after each removal.
  std::vector<Method> track;
};

/// Fractional (average) ranks, 1-based, ties share the mean rank.
std::vector<double> average_ranks(std::span<const double> values);

/// Spearman rank correlation; throws DomainError for mismatched node sets,
/// fewer than two nodes, or a constant score vector.
double spearman(const CentralityScores& x, const CentralityScores& y);
double spearman(std::span<const double> x, std::span<const double> y);
/// Same, but a zero-variance input yields nullopt instead of an error.
std::optional<double> spearman_or_absent(std::span<const double> x, std::span<const double> y);

/// Strategy scores on a possibly degenerate graph: edgeless graphs score 0
/// under EC, single nodes score 0 under CE_exact.
CentralityScores strategy_scores(const Graph& g, Method method, const CentralityOptions& options);

/// Greedy removal of the top-ranked node until ceil(stop_q * N0) nodes are
/// gone, recording G(q) and average clustering after each step.
DismantleTrace dismantle(const Graph& g, Method strategy, double stop_q,
                         const DismantleOptions& options = {});

/// dismantle() driven by an entropy strategy, recording Spearman
/// correlations against `others` after each removal.
DismantleTrace correlation_trace(const Graph& g, Method driver, std::vector<Method> others,
                                 double stop_q, const DismantleOptions& options = {});

enum class Track { Giant, Clustering, Spearman };

std::string track_tag(Track t);
Track parse_track(const std::string& text);

struct ExperimentConfig {
  std::string name = "experiment";
  GeneratorConfig generator;
  std::size_t replicates = 20;
  std::vector<Method> strategies;  // Giant / Clustering tracks
  Track track = Track::Giant;
  double stop_q = 0.2;
  Method driver = Method::CE_approx;  // Spearman track
  std::vector<Method> methods;        // Spearman track
  bool adaptive = true;
  CentralityOptions centrality;

  void validate() const;
  Metadata metadata() const;
};

/// Pointwise ensemble means over the shared q grid.
struct ExperimentResult {
  std::vector<double> q;
  std::vector<std::string> columns;                       // e.g. "G_DC", "spearman_KC"
  std::vector<std::vector<std::optional<double>>> values;  // [column][step]
  std::vector<std::uint64_t> seeds;                        // per replicate
  std::vector<std::vector<DismantleTrace>> traces;         // [replicate][strategy]
};

/// Replicate seed r is Rng::derive(config.generator.seed, r).
std::uint64_t replicate_seed(const ExperimentConfig& config, std::size_t replicate);

/// Runs every replicate (concurrently) and averages the traces.
ExperimentResult run_experiment(const ExperimentConfig& config);

/// run_experiment plus files in `out_dir`: <name>.csv (averaged), <name>.meta,
/// per-replicate traces <name>_r<k>_<TAG>.csv, and <name>.svg when `svg`.
/// Returns the paths written.
std::vector<std::filesystem::path> run_figure_experiment(const ExperimentConfig& config,
                                                          const std::filesystem::path& out_dir,
                                                          bool svg = false,
                                                          ExperimentResult* result = nullptr);

}  // namespace vne
