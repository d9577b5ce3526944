#include "rankvc/dimacs.hpp"

#include <charconv>
#include <map>
#include <sstream>
#include <vector>

#include "rankvc/errors.hpp"

namespace rankvc {

namespace {

constexpr std::uint64_t kMaxDimacsVertices = std::uint64_t{1} << 20;

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::uint64_t parse_count(std::string_view field, std::size_t line, const char* what) {
  std::uint64_t value = 0;
  const auto* first = field.data();
  const auto* last = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw ParseError(line, std::string("expected a non-negative integer for ") + what + ", got '" +
                               std::string(field) + "'");
  }
  return value;
}

}  // namespace

Graph parse_dimacs(std::string_view text) {
  Graph g;
  bool have_header = false;
  std::uint64_t n = 0, m = 0, seen_edges = 0;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    const auto fields = split_fields(line);
    if (fields.empty() || fields[0] == "c") continue;
    if (fields[0] == "p") {
      if (have_header) throw ParseError(line_no, "second problem line");
      if (fields.size() != 4 || fields[1] != "edge") {
        throw ParseError(line_no, "expected 'p edge <vertices> <edges>'");
      }
      n = parse_count(fields[2], line_no, "vertex count");
      m = parse_count(fields[3], line_no, "edge count");
      if (n > kMaxDimacsVertices) throw ParseError(line_no, "vertex count too large");
      g = Graph::with_vertices(static_cast<std::size_t>(n));
      have_header = true;
    } else if (fields[0] == "e") {
      if (!have_header) throw ParseError(line_no, "edge line before problem line");
      if (fields.size() != 3) throw ParseError(line_no, "expected 'e <u> <v>'");
      const auto u = parse_count(fields[1], line_no, "endpoint");
      const auto v = parse_count(fields[2], line_no, "endpoint");
      if (u < 1 || u > n || v < 1 || v > n) {
        throw ParseError(line_no, "endpoint out of range 1.." + std::to_string(n));
      }
      if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
      if (g.has_edge(static_cast<Vertex>(u), static_cast<Vertex>(v))) {
        throw ParseError(line_no, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
      }
      g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
      ++seen_edges;
    } else {
      throw ParseError(line_no, "unknown line type '" + std::string(fields[0]) + "'");
    }
  }
  if (!have_header) throw ParseError(0, "missing problem line");
  if (seen_edges != m) {
    throw ParseError(0, "header declares " + std::to_string(m) + " edges, found " +
                            std::to_string(seen_edges));
  }
  return g;
}

std::string emit_dimacs(const Graph& g) {
  std::map<Vertex, std::size_t> number;
  for (Vertex v : g.vertices()) number.emplace(v, number.size() + 1);
  std::ostringstream out;
  out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << "e " << number[u] << ' ' << number[v] << '\n';
  return out.str();
}

}  // namespace rankvc
