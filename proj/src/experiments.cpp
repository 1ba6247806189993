#include "vne/experiments.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <numeric>

#include "vne/error.hpp"
#include "vne/io.hpp"
#include "vne/parallel.hpp"
#include "vne/spectral.hpp"
#include "vne/version.hpp"

namespace vne {

namespace {

std::size_t step_count(double stop_q, std::size_t n0) {
  if (!(stop_q > 0.0 && stop_q <= 1.0)) throw DomainError("stop_q must lie in (0, 1]");
  // tolerate q values such as 0.2 that are not exact in binary
  const double raw = stop_q * static_cast<double>(n0);
  const auto steps = static_cast<std::size_t>(std::ceil(raw - 1e-9));
  return std::min(std::max<std::size_t>(steps, 1), n0);
}

std::string column_prefix(Track t) {
  switch (t) {
    case Track::Giant:
      return "G_";
    case Track::Clustering:
      return "C_";
    case Track::Spearman:
      return "spearman_";
  }
  return "";
}

}  // namespace

std::vector<double> average_ranks(std::span<const double> values) {
  const std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<double> ranks(n);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i + 1;
    while (j < n && values[order[j]] == values[order[i]]) ++j;
    const double mean = 0.5 * static_cast<double>(i + 1 + j);  // ranks i+1..j
    for (std::size_t k = i; k < j; ++k) ranks[order[k]] = mean;
    i = j;
  }
  return ranks;
}

std::optional<double> spearman_or_absent(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw DomainError("spearman inputs differ in length");
  if (x.size() < 2) throw DomainError("spearman needs at least two observations");
  const auto rx = average_ranks(x);
  const auto ry = average_ranks(y);
  const double n = static_cast<double>(x.size());
  const double mean = (n + 1.0) / 2.0;
  double sxy = 0.0;
  double sxx = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < rx.size(); ++i) {
    const double dx = rx[i] - mean;
    const double dy = ry[i] - mean;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) return std::nullopt;
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

double spearman(std::span<const double> x, std::span<const double> y) {
  if (auto r = spearman_or_absent(x, y)) return *r;
  throw DomainError("spearman undefined: a score vector is constant");
}

double spearman(const CentralityScores& x, const CentralityScores& y) {
  if (x.labels() != y.labels()) throw DomainError("spearman inputs cover different node sets");
  return spearman(x.values(), y.values());
}

CentralityScores strategy_scores(const Graph& g, Method method, const CentralityOptions& options) {
  if (method == Method::EC && g.edge_count() == 0)
    return {method, g.shared_labels(), std::vector<double>(g.node_count(), 0.0)};
  if (method == Method::CE_exact && g.node_count() < 2)
    return {method, g.shared_labels(), std::vector<double>(g.node_count(), 0.0)};
  return compute_centrality(g, method, options);
}

DismantleTrace dismantle(const Graph& g, Method strategy, double stop_q, const DismantleOptions& options) {
  const std::size_t n0 = g.node_count();
  if (n0 == 0) throw DomainError("cannot dismantle an empty graph");
  const std::size_t steps = step_count(stop_q, n0);

  DismantleTrace trace;
  trace.strategy = strategy;
  trace.adaptive = options.adaptive;
  trace.original_nodes = n0;
  trace.tracked = options.track;
  trace.config = {{"strategy", std::string(method_tag(strategy))},
                  {"adaptive", options.adaptive ? "true" : "false"},
                  {"original_nodes", std::to_string(n0)},
                  {"original_edges", std::to_string(g.edge_count())},
                  {"stop_q", format_real(stop_q)},
                  {"ci_radius", std::to_string(options.centrality.ci_radius)}};

  Graph current = g;
  auto scores = strategy_scores(current, strategy, options.centrality);
  std::vector<std::string> static_order;
  if (!options.adaptive)
    for (NodeIndex v : scores.ranking()) static_order.push_back(current.label(v));

  trace.steps.reserve(steps);
  for (std::size_t k = 1; k <= steps; ++k) {
    const NodeIndex victim =
        options.adaptive ? scores.top() : current.index_of(static_order[k - 1]);
    DismantleStep record;
    record.step = k;
    record.q = static_cast<double>(k) / static_cast<double>(n0);
    record.removed = current.label(victim);
    current = current.remove_node(victim);
    record.giant_fraction = giant_component_fraction(current, n0);
    if (!current.empty()) record.avg_clustering = average_clustering(current);

    const bool need_scores = options.adaptive || !options.track.empty();
    if (need_scores && !current.empty()) scores = strategy_scores(current, strategy, options.centrality);
    for (Method other : options.track) {
      std::optional<double> r;
      if (current.node_count() >= 2) {
        const auto theirs = strategy_scores(current, other, options.centrality);
        r = spearman_or_absent(scores.values(), theirs.values());
      }
      record.spearman.push_back(r);
    }
    trace.steps.push_back(std::move(record));
  }
  return trace;
}

DismantleTrace correlation_trace(const Graph& g, Method driver, std::vector<Method> others, double stop_q,
                                 const DismantleOptions& options) {
  if (driver != Method::CE_exact && driver != Method::CE_approx)
    throw DomainError("correlation traces are driven by CE_exact or CE_approx, not " +
                      std::string(method_tag(driver)));
  DismantleOptions opts = options;
  opts.track = std::move(others);
  return dismantle(g, driver, stop_q, opts);
}

std::string track_tag(Track t) {
  switch (t) {
    case Track::Giant:
      return "giant";
    case Track::Clustering:
      return "clustering";
    case Track::Spearman:
      return "spearman";
  }
  return "?";
}

Track parse_track(const std::string& text) {
  std::string t;
  for (char c : text) t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (t == "giant" || t == "g" || t == "g(q)") return Track::Giant;
  if (t == "clustering" || t == "c" || t == "avg_clustering") return Track::Clustering;
  if (t == "spearman" || t == "correlation") return Track::Spearman;
  throw DomainError("unknown track '" + text + "' (expected giant, clustering or spearman)");
}

void ExperimentConfig::validate() const {
  generator.validate();
  if (replicates < 1) throw DomainError("replicates must be at least 1");
  if (!(stop_q > 0.0 && stop_q <= 1.0)) throw DomainError("stop_q must lie in (0, 1]");
  if (track == Track::Spearman) {
    if (driver != Method::CE_exact && driver != Method::CE_approx)
      throw DomainError("spearman track needs driver ce_exact or ce_approx");
    if (methods.empty()) throw DomainError("spearman track needs at least one method");
  } else if (strategies.empty()) {
    throw DomainError("experiment needs at least one strategy");
  }
  if (name.empty() || name.find('/') != std::string::npos) throw DomainError("invalid experiment name");
}

Metadata ExperimentConfig::metadata() const {
  Metadata meta{{"name", name}, {"track", track_tag(track)}};
  for (auto& kv : generator.metadata()) meta.push_back(kv);
  meta.emplace_back("replicates", std::to_string(replicates));
  meta.emplace_back("stop_q", format_real(stop_q));
  meta.emplace_back("adaptive", adaptive ? "true" : "false");
  meta.emplace_back("ci_radius", std::to_string(centrality.ci_radius));
  auto join = [](const std::vector<Method>& ms) {
    std::string out;
    for (Method m : ms) out += (out.empty() ? "" : ",") + std::string(method_tag(m));
    return out;
  };
  if (track == Track::Spearman) {
    meta.emplace_back("driver", std::string(method_tag(driver)));
    meta.emplace_back("methods", join(methods));
  } else {
    meta.emplace_back("strategies", join(strategies));
  }
  meta.emplace_back("tool_version", std::string(kVersion));
  return meta;
}

std::uint64_t replicate_seed(const ExperimentConfig& config, std::size_t replicate) {
  return Rng::derive(config.generator.seed, replicate);
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
  config.validate();
  const std::size_t n0 = config.generator.n;
  const std::size_t steps = step_count(config.stop_q, n0);
  const std::vector<Method> runs =
      config.track == Track::Spearman ? std::vector<Method>{config.driver} : config.strategies;

  ExperimentResult result;
  result.seeds.resize(config.replicates);
  result.traces.resize(config.replicates);
  for (std::size_t r = 0; r < config.replicates; ++r) result.seeds[r] = replicate_seed(config, r);

  parallel_for(config.replicates, [&](std::size_t r) {
    GeneratorConfig gen = config.generator;
    gen.seed = result.seeds[r];
    const Graph g = generate(gen);
    DismantleOptions options;
    options.adaptive = config.adaptive;
    options.centrality = config.centrality;
    if (config.track == Track::Spearman) options.track = config.methods;
    for (Method m : runs) {
      auto trace = dismantle(g, m, config.stop_q, options);
      trace.config.emplace_back("replicate", std::to_string(r));
      trace.config.emplace_back("seed", std::to_string(gen.seed));
      result.traces[r].push_back(std::move(trace));
    }
  });

  result.q.resize(steps);
  for (std::size_t k = 0; k < steps; ++k) result.q[k] = static_cast<double>(k + 1) / static_cast<double>(n0);

  auto average = [&](auto&& pick) {
    std::vector<std::optional<double>> column(steps);
    for (std::size_t k = 0; k < steps; ++k) {
      double sum = 0.0;
      std::size_t count = 0;
      for (std::size_t r = 0; r < config.replicates; ++r)
        if (auto v = pick(r, k)) {
          sum += *v;
          ++count;
        }
      if (count > 0) column[k] = sum / static_cast<double>(count);
    }
    return column;
  };

  const std::string prefix = column_prefix(config.track);
  if (config.track == Track::Spearman) {
    for (std::size_t i = 0; i < config.methods.size(); ++i) {
      result.columns.push_back(prefix + std::string(method_tag(config.methods[i])));
      result.values.push_back(average([&](std::size_t r, std::size_t k) {
        return result.traces[r][0].steps[k].spearman[i];
      }));
    }
  } else {
    for (std::size_t s = 0; s < runs.size(); ++s) {
      result.columns.push_back(prefix + std::string(method_tag(runs[s])));
      result.values.push_back(average([&](std::size_t r, std::size_t k) -> std::optional<double> {
        const auto& step = result.traces[r][s].steps[k];
        if (config.track == Track::Giant) return step.giant_fraction;
        return step.avg_clustering;
      }));
    }
  }
  return result;
}

std::vector<std::filesystem::path> run_figure_experiment(const ExperimentConfig& config,
                                                          const std::filesystem::path& out_dir,
                                                          bool svg, ExperimentResult* out) {
  auto result = run_experiment(config);
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw IoError("cannot create '" + out_dir.string() + "': " + ec.message());

  std::vector<std::filesystem::path> written;
  const auto csv_path = out_dir / (config.name + ".csv");
  write_result_csv_file(csv_path, result);
  written.push_back(csv_path);

  Metadata meta = config.metadata();
  for (std::size_t r = 0; r < result.seeds.size(); ++r)
    meta.emplace_back("seed_r" + std::to_string(r), std::to_string(result.seeds[r]));
  const auto meta_path = out_dir / (config.name + ".meta");
  write_metadata_file(meta_path, meta);
  written.push_back(meta_path);

  for (std::size_t r = 0; r < result.traces.size(); ++r)
    for (const auto& trace : result.traces[r]) {
      const auto path =
          out_dir / (config.name + "_r" + std::to_string(r) + "_" + std::string(method_tag(trace.strategy)) + ".csv");
      write_trace_csv_file(path, trace);
      written.push_back(path);
    }

  if (svg) {
    const auto svg_path = out_dir / (config.name + ".svg");
    write_line_chart_file(svg_path, result, config.name + " (" + track_tag(config.track) + ")");
    written.push_back(svg_path);
  }
  if (out) *out = std::move(result);
  return written;
}

}  // namespace vne
