// vne: command-line front end for the entropy-centrality library.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "vne/centrality.hpp"
#include "vne/edge_list.hpp"
#include "vne/error.hpp"
#include "vne/experiments.hpp"
#include "vne/generators.hpp"
#include "vne/io.hpp"
#include "vne/spectral.hpp"
#include "vne/version.hpp"

namespace {

using namespace vne;

struct InputArgs {
  std::string data;
  std::string input;

  void attach(CLI::App* cmd) {
    auto* d = cmd->add_option("--data", data, "Bundled dataset: karate, florentine, gift");
    auto* i = cmd->add_option("--input", input, "Edge-list file");
    d->excludes(i);
  }

  Graph load() const {
    if (!data.empty()) return load_dataset(data);
    if (!input.empty()) return load_edge_list_file(input);
    throw DomainError("one of --data or --input is required");
  }
};

Method method_from(const std::string& text) {
  const auto m = parse_method(text);
  if (!m) throw DomainError("unknown method '" + text + "'");
  return *m;
}

// Writes to `path`, or stdout when empty or "-".
template <typename Body>
void emit(const std::string& path, Body&& body) {
  if (path.empty() || path == "-") {
    body(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path + "'");
  body(out);
  out.flush();
  if (!out) throw IoError("write failed for '" + path + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"von Neumann entropy centrality toolkit"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  // centrality
  InputArgs c_in;
  std::string c_method = "ce_exact";
  std::string c_out;
  CentralityOptions c_opts;
  auto* centrality = app.add_subcommand("centrality", "Score every node");
  c_in.attach(centrality);
  centrality->add_option("--method", c_method, "dc, bc, cc, ec, pr, kc, clc, ci, ce_exact, ce_approx")
      ->capture_default_str();
  centrality->add_option("--output,-o", c_out, "CSV destination (default stdout)");
  centrality->add_option("--ci-radius", c_opts.ci_radius, "Collective influence radius")->capture_default_str();
  centrality->add_option("--damping", c_opts.damping, "PageRank damping")->capture_default_str();

  // entropy
  InputArgs e_in;
  std::string e_level = "exact";
  auto* entropy = app.add_subcommand("entropy", "Report the graph entropy");
  e_in.attach(entropy);
  entropy->add_option("--level", e_level, "exact, s1, s2 or s2-published")
      ->check(CLI::IsMember({"exact", "s1", "s2", "s2-published"}))
      ->capture_default_str();

  // dismantle
  InputArgs d_in;
  std::string d_strategy = "ce_approx";
  double d_stop = 0.2;
  std::vector<std::string> d_track;
  bool d_static = false;
  std::string d_out;
  CentralityOptions d_opts;
  auto* dismantle_cmd = app.add_subcommand("dismantle", "Greedy node removal trace");
  d_in.attach(dismantle_cmd);
  dismantle_cmd->add_option("--strategy", d_strategy, "Removal strategy (method tag)")->capture_default_str();
  dismantle_cmd->add_option("--stop-q", d_stop, "Fraction of nodes to remove")->capture_default_str();
  dismantle_cmd->add_option("--track", d_track, "Methods to correlate against after each removal")
      ->delimiter(',');
  dismantle_cmd->add_flag("--static", d_static, "Rank once on the intact graph");
  dismantle_cmd->add_option("--output,-o", d_out, "CSV destination (default stdout)");
  dismantle_cmd->add_option("--ci-radius", d_opts.ci_radius, "Collective influence radius")->capture_default_str();

  // generate
  GeneratorConfig g_cfg;
  std::string g_model = "er";
  std::string g_out;
  auto* generate_cmd = app.add_subcommand("generate", "Sample a random graph");
  generate_cmd->add_option("--model", g_model, "er, sf or rgg")->capture_default_str();
  generate_cmd->add_option("--n", g_cfg.n, "Node count")->required();
  generate_cmd->add_option("--m", g_cfg.m, "Edge count (er)");
  generate_cmd->add_option("--gamma", g_cfg.gamma, "Degree exponent (sf)")->capture_default_str();
  generate_cmd->add_option("--k-min", g_cfg.k_min, "Minimum degree (sf)")->capture_default_str();
  generate_cmd->add_option("--dim", g_cfg.dim, "Dimension (rgg)")->capture_default_str();
  generate_cmd->add_option("--mean-degree", g_cfg.mean_degree, "Target mean degree (rgg)")->capture_default_str();
  generate_cmd->add_option("--seed", g_cfg.seed, "RNG seed")->required();
  generate_cmd->add_option("--output,-o", g_out, "Edge-list destination (default stdout)");

  // experiment
  std::string x_config;
  std::string x_dir = ".";
  std::string x_format = "csv";
  std::optional<std::uint64_t> x_seed;
  auto* experiment = app.add_subcommand("experiment", "Run an ensemble experiment from a config file");
  experiment->add_option("--config", x_config, "key=value descriptor")->required();
  experiment->add_option("--output-dir,-o", x_dir, "Directory for CSV, metadata and charts")->capture_default_str();
  experiment->add_option("--format", x_format, "csv or svg (svg also writes the CSVs)")
      ->check(CLI::IsMember({"csv", "svg"}))
      ->capture_default_str();
  experiment->add_option("--seed", x_seed, "Override the config seed");

  // spearman
  InputArgs s_in;
  std::string s_a = "ce_exact";
  std::string s_b = "ce_approx";
  auto* spearman_cmd = app.add_subcommand("spearman", "Rank correlation between two methods");
  s_in.attach(spearman_cmd);
  spearman_cmd->add_option("--method-a", s_a, "First method")->capture_default_str();
  spearman_cmd->add_option("--method-b", s_b, "Second method")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*centrality) {
      const Graph g = c_in.load();
      const auto scores = compute_centrality(g, method_from(c_method), c_opts);
      emit(c_out, [&](std::ostream& out) { write_scores_csv(out, scores); });
    } else if (*entropy) {
      const Graph g = e_in.load();
      double value = 0.0;
      if (e_level == "exact") {
        const auto spectrum = symmetric_eigenvalues(normalized_laplacian(g));
        value = entropy_from_spectrum(spectrum.eigenvalues);
        std::cout << "entropy " << format_real(value) << '\n'
                  << "nodes " << g.node_count() << '\n'
                  << "edges " << g.edge_count() << '\n';
        if (spectrum.size() > 0)
          std::cout << "lambda_min " << format_real(spectrum.eigenvalues.front()) << '\n'
                    << "lambda_max " << format_real(spectrum.eigenvalues.back()) << '\n';
        std::cout << "zero_eigenvalues " << spectrum.zero_count() << '\n';
      } else {
        if (e_level == "s1")
          value = entropy_s1(g);
        else if (e_level == "s2")
          value = entropy_s2(g);
        else
          value = entropy_s2_published(g);
        const double exact = von_neumann_entropy(g);
        std::cout << "entropy " << format_real(value) << '\n'
                  << "nodes " << g.node_count() << '\n'
                  << "edges " << g.edge_count() << '\n'
                  << "exact " << format_real(exact) << '\n'
                  << "abs_error " << format_real(std::abs(exact - value)) << '\n';
      }
    } else if (*dismantle_cmd) {
      const Graph g = d_in.load();
      DismantleOptions options;
      options.adaptive = !d_static;
      options.centrality = d_opts;
      for (const auto& t : d_track) options.track.push_back(method_from(t));
      const auto trace = dismantle(g, method_from(d_strategy), d_stop, options);
      emit(d_out, [&](std::ostream& out) { write_trace_csv(out, trace); });
    } else if (*generate_cmd) {
      g_cfg.model = parse_model(g_model);
      g_cfg.validate();
      const Graph g = generate(g_cfg);
      emit(g_out, [&](std::ostream& out) { write_edge_list(out, g, g_cfg.metadata()); });
    } else if (*experiment) {
      auto config = load_experiment_config(x_config);
      if (x_seed) config.generator.seed = *x_seed;
      const auto files = run_figure_experiment(config, x_dir, x_format == "svg");
      for (const auto& f : files) std::cout << f.string() << '\n';
    } else if (*spearman_cmd) {
      const Graph g = s_in.load();
      const auto a = compute_centrality(g, method_from(s_a));
      const auto b = compute_centrality(g, method_from(s_b));
      const auto r = spearman_or_absent(a.values(), b.values());
      std::cout << "spearman " << (r ? format_real(*r) : std::string("absent")) << '\n';
    }
  } catch (const Error& e) {
    std::cerr << "vne: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "vne: unexpected error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
