#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "vne/centrality.hpp"
#include "vne/edge_list.hpp"

namespace vne {

struct DismantleStep {
  std::size_t step = 0;  // 1-based removal count
  double q = 0.0;        // step / original node count
  std::string removed;
  double giant_fraction = 0.0;
  std::optional<double> avg_clustering;          // absent once no node is left
  std::vector<std::optional<double>> spearman;   // aligned with DismantleTrace::tracked
};

/// Ordered removal log of one dismantling run.
struct DismantleTrace {
  Method strategy = Method::DC;
  bool adaptive = true;
  std::size_t original_nodes = 0;
  std::vector<Method> tracked;
  Metadata config;
  std::vector<DismantleStep> steps;
};

}  // namespace vne
