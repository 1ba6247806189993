#include "vne/edge_list.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "vne/error.hpp"

namespace vne {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  while (pos < s.size()) {
    const auto start = s.find_first_not_of(" \t", pos);
    if (start == std::string_view::npos) break;
    auto end = s.find_first_of(" \t", start);
    if (end == std::string_view::npos) end = s.size();
    tokens.push_back(s.substr(start, end - start));
    pos = end;
  }
  return tokens;
}

}  // namespace

Graph load_edge_list(std::istream& in, Metadata* metadata) {
  GraphBuilder builder;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = trim(raw);
    if (line.empty()) continue;
    if (line.front() == '#') {
      if (metadata) {
        const auto body = trim(line.substr(1));
        const auto eq = body.find('=');
        if (eq != std::string_view::npos && eq > 0)
          metadata->emplace_back(std::string(trim(body.substr(0, eq))),
                                 std::string(trim(body.substr(eq + 1))));
      }
      continue;
    }
    const auto tokens = split_ws(line);
    if (tokens.size() == 2 && tokens[0] == "node") {
      builder.add_node(tokens[1]);
      continue;
    }
    if (tokens.size() != 2)
      throw ParseError(line_no, "expected two node labels, got " + std::to_string(tokens.size()) +
                                    " tokens: '" + std::string(line) + "'");
    if (tokens[0] == tokens[1])
      throw ValidationError("line " + std::to_string(line_no) + ": self-loop on node '" +
                            std::string(tokens[0]) + "'");
    builder.add_edge(tokens[0], tokens[1]);
  }
  return builder.build();
}

Graph load_edge_list(const std::string& text, Metadata* metadata) {
  std::istringstream in(text);
  return load_edge_list(in, metadata);
}

Graph load_edge_list_file(const std::filesystem::path& path, Metadata* metadata) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  try {
    return load_edge_list(in, metadata);
  } catch (const ParseError& e) {
    throw ParseError(e.line(), path.string() + ": " + e.detail());
  } catch (const ValidationError& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
}

void write_edge_list(std::ostream& out, const Graph& g, const Metadata& metadata) {
  for (const auto& [key, value] : metadata) out << "# " << key << '=' << value << '\n';
  for (NodeIndex v = 0; v < g.node_count(); ++v)
    if (g.degree(v) == 0) out << "node " << g.label(v) << '\n';
  for (const auto& [u, v] : g.edges()) out << g.label(u) << ' ' << g.label(v) << '\n';
}

void write_edge_list_file(const std::filesystem::path& path, const Graph& g,
                          const Metadata& metadata) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  write_edge_list(out, g, metadata);
  if (!out) throw IoError("write failed for '" + path.string() + "'");
}

}  // namespace vne
