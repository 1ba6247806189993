#include "vne/io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iterator>
#include <sstream>

#include "vne/error.hpp"

#ifndef VNE_DEFAULT_DATA_DIR
#define VNE_DEFAULT_DATA_DIR "data"
#endif

namespace vne {

namespace {

std::ofstream open_for_write(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  return out;
}

void finish(std::ofstream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) throw IoError("write failed for '" + path.string() + "'");
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.emplace_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string cell(const std::optional<double>& v) { return v ? format_real(*v) : std::string(); }

double parse_double(const std::string& text, std::size_t line, const std::string& key) {
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size())
    throw ParseError(line, "'" + key + "' expects a number, got '" + text + "'");
  return v;
}

std::uint64_t parse_unsigned(const std::string& text, std::size_t line, const std::string& key) {
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw ParseError(line, "'" + key + "' expects a non-negative integer, got '" + text + "'");
  return std::stoull(text);
}

bool parse_bool(const std::string& text, std::size_t line, const std::string& key) {
  std::string t;
  for (char c : text) t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (t == "true" || t == "yes" || t == "1") return true;
  if (t == "false" || t == "no" || t == "0") return false;
  throw ParseError(line, "'" + key + "' expects true or false, got '" + text + "'");
}

std::vector<Method> parse_method_list(const std::string& text, std::size_t line, const std::string& key) {
  std::vector<Method> out;
  for (const auto& raw : split(text, ',')) {
    const auto token = trim(raw);
    if (token.empty()) continue;
    const auto m = parse_method(token);
    if (!m) throw ParseError(line, "unknown method '" + token + "' in '" + key + "'");
    out.push_back(*m);
  }
  return out;
}

}  // namespace

std::string format_real(double x) {
  if (std::isnan(x)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

void write_scores_csv(std::ostream& out, const CentralityScores& scores) {
  const auto order = scores.ranking();
  const auto ranks = scores.dense_ranks();
  out << "node,score,rank\n";
  for (NodeIndex v : order) out << scores.label(v) << ',' << format_real(scores[v]) << ',' << ranks[v] << '\n';
}

void write_trace_csv(std::ostream& out, const DismantleTrace& trace) {
  out << "step,q,removed_node,giant_fraction,avg_clustering";
  for (Method m : trace.tracked) out << ",spearman_" << method_tag(m);
  out << '\n';
  for (const auto& s : trace.steps) {
    out << s.step << ',' << format_real(s.q) << ',' << s.removed << ',' << format_real(s.giant_fraction) << ','
        << cell(s.avg_clustering);
    for (const auto& r : s.spearman) out << ',' << cell(r);
    out << '\n';
  }
}

void write_trace_csv_file(const std::filesystem::path& path, const DismantleTrace& trace) {
  auto out = open_for_write(path);
  write_trace_csv(out, trace);
  finish(out, path);
}

DismantleTrace read_trace_csv(std::istream& in) {
  DismantleTrace trace;
  std::string line;
  std::size_t line_no = 0;
  if (!std::getline(in, line)) throw ParseError(1, "missing trace header");
  ++line_no;
  const auto header = split(trim(line), ',');
  const std::vector<std::string> fixed{"step", "q", "removed_node", "giant_fraction", "avg_clustering"};
  if (header.size() < fixed.size() || !std::equal(fixed.begin(), fixed.end(), header.begin()))
    throw ParseError(1, "unexpected trace header '" + line + "'");
  for (std::size_t c = fixed.size(); c < header.size(); ++c) {
    const std::string prefix = "spearman_";
    if (header[c].rfind(prefix, 0) != 0) throw ParseError(1, "unexpected column '" + header[c] + "'");
    const auto m = parse_method(header[c].substr(prefix.size()));
    if (!m) throw ParseError(1, "unknown method column '" + header[c] + "'");
    trace.tracked.push_back(*m);
  }
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto cells = split(trim(line), ',');
    if (cells.size() != header.size())
      throw ParseError(line_no, "expected " + std::to_string(header.size()) + " cells");
    DismantleStep s;
    s.step = parse_unsigned(cells[0], line_no, "step");
    s.q = parse_double(cells[1], line_no, "q");
    s.removed = cells[2];
    s.giant_fraction = parse_double(cells[3], line_no, "giant_fraction");
    if (!cells[4].empty()) s.avg_clustering = parse_double(cells[4], line_no, "avg_clustering");
    for (std::size_t c = fixed.size(); c < cells.size(); ++c)
      s.spearman.push_back(cells[c].empty() ? std::nullopt
                                            : std::optional<double>(parse_double(cells[c], line_no, header[c])));
    trace.steps.push_back(std::move(s));
  }
  return trace;
}

void write_result_csv_file(const std::filesystem::path& path, const ExperimentResult& result) {
  auto out = open_for_write(path);
  out << "q";
  for (const auto& c : result.columns) out << ',' << c;
  out << '\n';
  for (std::size_t k = 0; k < result.q.size(); ++k) {
    out << format_real(result.q[k]);
    for (const auto& column : result.values) out << ',' << cell(column[k]);
    out << '\n';
  }
  finish(out, path);
}

void write_metadata(std::ostream& out, const Metadata& meta) {
  for (const auto& [key, value] : meta) out << key << '=' << value << '\n';
}

void write_metadata_file(const std::filesystem::path& path, const Metadata& meta) {
  auto out = open_for_write(path);
  write_metadata(out, meta);
  finish(out, path);
}

Metadata read_metadata(std::istream& in) {
  Metadata meta;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos || eq == 0) throw ParseError(line_no, "expected key=value, got '" + t + "'");
    meta.emplace_back(trim(t.substr(0, eq)), trim(t.substr(eq + 1)));
  }
  return meta;
}

void write_line_chart(std::ostream& out, const ExperimentResult& result, const std::string& title) {
  constexpr double kWidth = 640, kHeight = 420, kLeft = 60, kRight = 160, kTop = 40, kBottom = 50;
  constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd",
                                      "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  double q_max = result.q.empty() ? 1.0 : result.q.back();
  double y_min = 0.0;
  double y_max = 1.0;
  for (const auto& column : result.values)
    for (const auto& v : column)
      if (v) {
        y_min = std::min(y_min, *v);
        y_max = std::max(y_max, *v);
      }
  if (q_max <= 0.0) q_max = 1.0;
  auto sx = [&](double q) { return kLeft + plot_w * q / q_max; };
  auto sy = [&](double y) { return kTop + plot_h * (1.0 - (y - y_min) / (y_max - y_min)); };

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << kLeft << "\" y=\"24\" font-size=\"14\">" << title << "</text>\n";
  out << "<line x1=\"" << kLeft << "\" y1=\"" << sy(y_min) << "\" x2=\"" << kLeft + plot_w << "\" y2=\"" << sy(y_min)
      << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft << "\" y2=\"" << kTop + plot_h
      << "\" stroke=\"black\"/>\n";
  for (int t = 0; t <= 4; ++t) {
    const double q = q_max * t / 4.0;
    const double y = y_min + (y_max - y_min) * t / 4.0;
    out << "<text x=\"" << sx(q) << "\" y=\"" << kTop + plot_h + 18 << "\" text-anchor=\"middle\">"
        << format_real(std::round(q * 1000) / 1000) << "</text>\n";
    out << "<text x=\"" << kLeft - 6 << "\" y=\"" << sy(y) + 4 << "\" text-anchor=\"end\">"
        << format_real(std::round(y * 1000) / 1000) << "</text>\n";
  }
  out << "<text x=\"" << kLeft + plot_w / 2 << "\" y=\"" << kHeight - 10 << "\" text-anchor=\"middle\">q</text>\n";
  for (std::size_t c = 0; c < result.values.size(); ++c) {
    const char* colour = kPalette[c % std::size(kPalette)];
    // absent values split the curve into separate polylines
    std::string points;
    auto flush = [&] {
      if (!points.empty())
        out << "<polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"1.5\" points=\"" << points
            << "\"/>\n";
      points.clear();
    };
    for (std::size_t k = 0; k < result.q.size(); ++k) {
      if (!result.values[c][k]) {
        flush();
        continue;
      }
      points += format_real(sx(result.q[k])) + "," + format_real(sy(*result.values[c][k])) + " ";
    }
    flush();
    const double ly = kTop + 16.0 * static_cast<double>(c);
    out << "<line x1=\"" << kLeft + plot_w + 12 << "\" y1=\"" << ly << "\" x2=\"" << kLeft + plot_w + 32
        << "\" y2=\"" << ly << "\" stroke=\"" << colour << "\" stroke-width=\"2\"/>\n";
    out << "<text x=\"" << kLeft + plot_w + 38 << "\" y=\"" << ly + 4 << "\">" << result.columns[c] << "</text>\n";
  }
  out << "</svg>\n";
}

void write_line_chart_file(const std::filesystem::path& path, const ExperimentResult& result,
                           const std::string& title) {
  auto out = open_for_write(path);
  write_line_chart(out, result, title);
  finish(out, path);
}

ExperimentConfig parse_experiment_config(std::istream& in) {
  ExperimentConfig config;
  config.strategies.clear();
  bool seen_seed = false;
  bool seen_n = false;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos || eq == 0) throw ParseError(line_no, "expected key=value, got '" + t + "'");
    const auto key = trim(t.substr(0, eq));
    const auto value = trim(t.substr(eq + 1));
    try {
      if (key == "name") {
        config.name = value;
      } else if (key == "model") {
        config.generator.model = parse_model(value);
      } else if (key == "n") {
        config.generator.n = parse_unsigned(value, line_no, key);
        seen_n = true;
      } else if (key == "m") {
        config.generator.m = parse_unsigned(value, line_no, key);
      } else if (key == "gamma") {
        config.generator.gamma = parse_double(value, line_no, key);
      } else if (key == "k_min") {
        config.generator.k_min = parse_unsigned(value, line_no, key);
      } else if (key == "dim") {
        config.generator.dim = parse_unsigned(value, line_no, key);
      } else if (key == "mean_degree") {
        config.generator.mean_degree = parse_double(value, line_no, key);
      } else if (key == "seed") {
        config.generator.seed = parse_unsigned(value, line_no, key);
        seen_seed = true;
      } else if (key == "replicates") {
        config.replicates = parse_unsigned(value, line_no, key);
      } else if (key == "strategies") {
        config.strategies = parse_method_list(value, line_no, key);
      } else if (key == "track") {
        config.track = parse_track(value);
      } else if (key == "stop_q") {
        config.stop_q = parse_double(value, line_no, key);
      } else if (key == "driver") {
        const auto m = parse_method(value);
        if (!m) throw ParseError(line_no, "unknown method '" + value + "'");
        config.driver = *m;
      } else if (key == "methods") {
        config.methods = parse_method_list(value, line_no, key);
      } else if (key == "adaptive") {
        config.adaptive = parse_bool(value, line_no, key);
      } else if (key == "ci_radius") {
        config.centrality.ci_radius = parse_unsigned(value, line_no, key);
      } else if (key == "damping") {
        config.centrality.damping = parse_double(value, line_no, key);
      } else {
        throw ParseError(line_no, "unknown key '" + key + "'");
      }
    } catch (const DomainError& e) {
      throw ParseError(line_no, e.what());
    }
  }
  if (!seen_n) throw ParseError(line_no, "missing required key 'n'");
  if (!seen_seed) throw ParseError(line_no, "missing required key 'seed'");
  try {
    config.validate();
  } catch (const DomainError& e) {
    throw ParseError(line_no, e.what());
  }
  return config;
}

ExperimentConfig load_experiment_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  try {
    return parse_experiment_config(in);
  } catch (const ParseError& e) {
    throw ParseError(e.line(), path.string() + ": " + e.detail());
  }
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

const std::vector<DatasetInfo>& bundled_datasets() {
  static const std::vector<DatasetInfo> datasets{
      {"karate", "karate.edges", 34, 78, 0x5bee5b7b5b005e18ULL},
      {"florentine", "florentine.edges", 16, 20, 0x1cd0462cd0db3c33ULL},
      {"gift", "gift.edges", 22, 39, 0x01b59fa94219b539ULL},
  };
  return datasets;
}

std::filesystem::path data_directory() {
  if (const char* env = std::getenv("VNE_DATA_DIR"); env && *env) return env;
  return VNE_DEFAULT_DATA_DIR;
}

Graph load_dataset(std::string_view name) {
  std::string key(name);
  std::transform(key.begin(), key.end(), key.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (key == "taro" || key == "gift-giving" || key == "gift_giving") key = "gift";
  const auto& all = bundled_datasets();
  const auto it = std::find_if(all.begin(), all.end(), [&](const DatasetInfo& d) { return d.name == key; });
  if (it == all.end()) throw LookupError("unknown dataset '" + std::string(name) + "' (karate, florentine, gift)");

  const auto path = data_directory() / it->file;
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open dataset '" + path.string() + "'");
  const std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (fnv1a64(bytes) != it->fnv1a)
    throw ValidationError("dataset '" + path.string() + "' does not match its pinned content hash");
  const Graph g = load_edge_list(bytes);
  if (g.node_count() != it->nodes || g.edge_count() != it->edges)
    throw ValidationError("dataset '" + path.string() + "' has unexpected size");
  return g;
}

}  // namespace vne
