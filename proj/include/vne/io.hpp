#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "vne/centrality.hpp"
#include "vne/edge_list.hpp"
#include "vne/experiments.hpp"
#include "vne/trace.hpp"

namespace vne {

/// 12 significant digits, the precision of every real written to disk.
std::string format_real(double x);

// Score tables ------------------------------------------------------------

/// Header "node,score,rank"; rows sorted by descending score then label,
/// dense ranks.
void write_scores_csv(std::ostream& out, const CentralityScores& scores);

// Dismantling traces -------------------------------------------------------

/// Header: step,q,removed_node,giant_fraction,avg_clustering then one
/// spearman_<TAG> column per tracked method. Absent values are empty cells.
void write_trace_csv(std::ostream& out, const DismantleTrace& trace);
void write_trace_csv_file(const std::filesystem::path& path, const DismantleTrace& trace);

/// Parses the rows written by write_trace_csv. Strategy, adaptivity and the
/// original node count are not part of the CSV and are left at defaults.
DismantleTrace read_trace_csv(std::istream& in);

/// Averaged experiment table: q followed by result.columns.
void write_result_csv_file(const std::filesystem::path& path, const ExperimentResult& result);

// Metadata sidecars ---------------------------------------------------------

void write_metadata(std::ostream& out, const Metadata& meta);
void write_metadata_file(const std::filesystem::path& path, const Metadata& meta);
Metadata read_metadata(std::istream& in);

// SVG -----------------------------------------------------------------------

/// Minimal line chart: one polyline per result column over q.
void write_line_chart(std::ostream& out, const ExperimentResult& result, const std::string& title);
void write_line_chart_file(const std::filesystem::path& path, const ExperimentResult& result,
                           const std::string& title);

// Experiment descriptors ----------------------------------------------------

/// key=value lines, '#' comments. Recognized keys: name, model, n, m, gamma,
/// k_min, dim, mean_degree, seed, replicates, strategies, track, stop_q,
/// driver, methods, adaptive, ci_radius, damping. Errors carry line numbers.
ExperimentConfig parse_experiment_config(std::istream& in);
ExperimentConfig load_experiment_config(const std::filesystem::path& path);

// Bundled datasets ----------------------------------------------------------

struct DatasetInfo {
  std::string name;
  std::string file;
  std::size_t nodes;
  std::size_t edges;
  std::uint64_t fnv1a;  // of the file bytes
};

const std::vector<DatasetInfo>& bundled_datasets();

/// VNE_DATA_DIR if set, otherwise the data directory of the source tree.
std::filesystem::path data_directory();

/// Loads "karate", "florentine" or "gift" (alias "taro"), checking the
/// pinned node count, edge count and content hash.
Graph load_dataset(std::string_view name);

std::uint64_t fnv1a64(std::string_view bytes);

}  // namespace vne
