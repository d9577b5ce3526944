#include <charconv>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "rankvc/errors.hpp"
#include "rankvc/instance.hpp"

namespace rankvc {

std::string serialize(const RvcInstance& inst) {
  const Graph& g = inst.pair.graph();
  const LinearMatroid& m = inst.pair.matroid();
  const ExactMatrix& rep = m.representation();

  std::ostringstream out;
  out << "RVC1\n";
  out << "domain " << m.domain().to_string() << '\n';
  out << "n " << g.vertex_count() << " m " << g.edge_count() << " r " << rep.rows() << " l " << inst.budget
      << '\n';
  out << 'v';
  for (Vertex v : g.vertices()) out << ' ' << v;
  out << '\n';
  for (const auto& [u, v] : g.edges()) out << "e " << u << ' ' << v << '\n';
  for (std::size_t c = 0; c < rep.cols(); ++c) {
    out << m.labels()[c];
    for (std::size_t r = 0; r < rep.rows(); ++r) out << ' ' << rep.at(r, c).get_str();
    out << '\n';
  }
  return out.str();
}

namespace {

struct LineReader {
  std::string_view text;
  std::size_t pos = 0;
  std::size_t line_no = 0;

  bool next(std::vector<std::string_view>& fields) {
    if (pos >= text.size()) return false;
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    fields.clear();
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
      std::size_t j = i;
      while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
      if (j > i) fields.push_back(line.substr(i, j - i));
      i = j;
    }
    return true;
  }

  void expect(std::vector<std::string_view>& fields, const char* what) {
    if (!next(fields)) throw ParseError(line_no + 1, std::string("unexpected end of input, expected ") + what);
  }
};

std::uint64_t parse_u64(std::string_view s, std::size_t line, const char* what) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError(line, std::string("bad ") + what + " '" + std::string(s) + "'");
  }
  return value;
}

Vertex parse_vertex(std::string_view s, std::size_t line) {
  const auto v = parse_u64(s, line, "vertex id");
  if (v > UINT32_MAX) throw ParseError(line, "vertex id out of range");
  return static_cast<Vertex>(v);
}

mpq_class parse_entry(std::string_view s, const ScalarDomain& domain, std::size_t line) {
  const std::string text(s);
  const auto bad = [&] { return ParseError(line, "entry '" + text + "' is not in domain " + domain.to_string()); };
  const auto slash = text.find('/');
  const std::string num = text.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  for (const std::string* part : {&num, &den}) {
    const std::size_t start = (part == &num && !part->empty() && part->front() == '-') ? 1 : 0;
    if (part->size() == start) throw bad();
    for (std::size_t i = start; i < part->size(); ++i) {
      if ((*part)[i] < '0' || (*part)[i] > '9') throw bad();
    }
  }
  const mpz_class d(den, 10);
  if (d == 0) throw bad();
  mpq_class x(mpz_class(num, 10), d);
  x.canonicalize();
  if (!domain.contains(x)) throw bad();
  return x;
}

}  // namespace

RvcInstance deserialize(std::string_view text) {
  LineReader in{text};
  std::vector<std::string_view> f;

  in.expect(f, "version line");
  if (f.size() != 1 || f[0] != "RVC1") throw ParseError(in.line_no, "expected version line 'RVC1'");

  in.expect(f, "domain line");
  ScalarDomain domain = ScalarDomain::rational();
  if (f.size() == 2 && f[0] == "domain" && f[1] == "rational") {
  } else if (f.size() == 3 && f[0] == "domain" && f[1] == "gfp") {
    mpz_class q;
    if (q.set_str(std::string(f[2]), 10) != 0) throw ParseError(in.line_no, "bad modulus");
    try {
      domain = ScalarDomain::prime_field(q);
    } catch (const InputError& e) {
      throw ParseError(in.line_no, e.what());
    }
  } else {
    throw ParseError(in.line_no, "expected 'domain rational' or 'domain gfp <q>'");
  }

  in.expect(f, "size line");
  if (f.size() != 8 || f[0] != "n" || f[2] != "m" || f[4] != "r" || f[6] != "l") {
    throw ParseError(in.line_no, "expected 'n <vertices> m <edges> r <rows> l <budget>'");
  }
  const auto n = parse_u64(f[1], in.line_no, "vertex count");
  const auto m = parse_u64(f[3], in.line_no, "edge count");
  const auto rows = parse_u64(f[5], in.line_no, "row count");
  const auto budget = parse_u64(f[7], in.line_no, "budget");
  if (n > (std::uint64_t{1} << 20) || rows > (std::uint64_t{1} << 20)) {
    throw ParseError(in.line_no, "instance too large");
  }

  in.expect(f, "vertex line");
  if (f.empty() || f[0] != "v" || f.size() != n + 1) {
    throw ParseError(in.line_no, "expected 'v' followed by " + std::to_string(n) + " vertex ids");
  }
  Graph g;
  for (std::size_t i = 1; i < f.size(); ++i) {
    const Vertex v = parse_vertex(f[i], in.line_no);
    if (g.has_vertex(v)) throw ParseError(in.line_no, "repeated vertex " + std::to_string(v));
    g.add_vertex(v);
  }

  for (std::uint64_t i = 0; i < m; ++i) {
    in.expect(f, "edge line");
    if (f.size() != 3 || f[0] != "e") throw ParseError(in.line_no, "expected 'e <u> <v>'");
    const Vertex u = parse_vertex(f[1], in.line_no);
    const Vertex v = parse_vertex(f[2], in.line_no);
    try {
      g.add_edge(u, v);
    } catch (const InputError& e) {
      throw ParseError(in.line_no, e.what());
    }
  }

  std::vector<Element> labels;
  std::vector<ScalarVector> columns;
  std::set<Element> seen;
  for (std::uint64_t c = 0; c < n; ++c) {
    in.expect(f, "matrix column line");
    if (f.size() != rows + 1) {
      throw ParseError(in.line_no, "expected a label and " + std::to_string(rows) + " entries");
    }
    const Element label = parse_vertex(f[0], in.line_no);
    if (!g.has_vertex(label)) throw ParseError(in.line_no, "column label " + std::to_string(label) + " is not a vertex");
    if (!seen.insert(label).second) throw ParseError(in.line_no, "repeated column label " + std::to_string(label));
    ScalarVector col;
    col.reserve(rows);
    for (std::size_t i = 1; i < f.size(); ++i) col.push_back(parse_entry(f[i], domain, in.line_no));
    labels.push_back(label);
    columns.push_back(std::move(col));
  }
  while (in.next(f)) {
    if (!f.empty()) throw ParseError(in.line_no, "trailing content");
  }

  auto rep = ExactMatrix::from_columns(domain, rows, columns);
  return RvcInstance{GraphMatroidPair(std::move(g), LinearMatroid(std::move(rep), std::move(labels))), budget};
}

}  // namespace rankvc
