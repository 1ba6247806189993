#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "vne/graph.hpp"

namespace vne {

using Metadata = std::vector<std::pair<std::string, std::string>>;

/// Parses the line-oriented edge-list format:
///
///   # comment            (a "# key=value" comment is also collected as metadata)
///   a b                  edge between labels a and b
///   node x               declares x, possibly isolated
///
/// Repeated edges are merged. Self-loops raise ValidationError, malformed
/// lines raise ParseError with the offending line number.
Graph load_edge_list(std::istream& in, Metadata* metadata = nullptr);
Graph load_edge_list(const std::string& text, Metadata* metadata = nullptr);
Graph load_edge_list_file(const std::filesystem::path& path, Metadata* metadata = nullptr);

/// Inverse of load_edge_list: metadata header, isolated-node declarations,
/// then one line per edge in index order.
void write_edge_list(std::ostream& out, const Graph& g, const Metadata& metadata = {});
void write_edge_list_file(const std::filesystem::path& path, const Graph& g,
                          const Metadata& metadata = {});

}  // namespace vne
