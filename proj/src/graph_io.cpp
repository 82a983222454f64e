#include "hamindex/graph_io.hpp"

#include <fstream>
#include <sstream>

namespace hamindex {
namespace {

constexpr std::string_view kHeader = ">>graph6<<";

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

bool looks_like_edge_list_header(const std::string& line) {
  std::istringstream in(line);
  long n = 0, m = 0;
  std::string rest;
  return static_cast<bool>(in >> n >> m) && !(in >> rest);
}

}  // namespace

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back(126);
    out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(63 + (n & 63)));
  }
  int chunk = 0, filled = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      chunk = (chunk << 1) | (g.has_edge(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + chunk));
        chunk = filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (chunk << (6 - filled))));
  return out;
}

Graph from_graph6(std::string_view line) {
  if (line.starts_with(kHeader)) line.remove_prefix(kHeader.size());
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  if (line.empty()) throw ParseError("empty graph6 string");
  for (char c : line)
    if (c < 63 || c > 126) throw ParseError("invalid graph6 character");

  std::size_t pos = 0;
  long n = line[pos++] - 63;
  if (n == 63) {
    if (line.size() < 4) throw ParseError("truncated graph6 order");
    if (line[1] == 126) throw ParseError("graph6 order beyond capacity");
    n = 0;
    for (int i = 0; i < 3; ++i) n = (n << 6) | (line[pos++] - 63);
  }
  if (n > Graph::kCapacity) throw ParseError("graph6 order beyond capacity");

  const long bits = n * (n - 1) / 2;
  const long needed = (bits + 5) / 6;
  if (static_cast<long>(line.size() - pos) != needed)
    throw ParseError("graph6 body has wrong length for n=" + std::to_string(n));

  Graph g(static_cast<int>(n));
  long k = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++k) {
      const int byte = line[pos + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(u, v);
    }
  }
  return g;
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  const auto edges = g.edges();
  out << g.order() << ' ' << edges.size() << '\n';
  for (auto [u, v] : edges) out << u << ' ' << v << '\n';
  return out.str();
}

Graph read_edge_list(std::istream& in, const std::string& source) {
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& what) -> ParseError {
    return ParseError(source + ":" + std::to_string(lineno) + ": " + what);
  };
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      if (!trim(line).empty()) return true;
    }
    return false;
  };

  if (!next_line()) throw fail("missing 'n m' header");
  long n = 0, m = 0;
  {
    std::istringstream hdr(line);
    if (!(hdr >> n >> m) || n < 0 || m < 0) throw fail("expected 'n m' header");
  }
  if (n > Graph::kCapacity) throw fail("order exceeds capacity");
  Graph g(static_cast<int>(n));
  for (long i = 0; i < m; ++i) {
    if (!next_line()) throw fail("expected " + std::to_string(m) + " edges, got " + std::to_string(i));
    std::istringstream row(line);
    long u = 0, v = 0;
    if (!(row >> u >> v)) throw fail("expected 'u v'");
    if (u < 0 || v < 0 || u >= n || v >= n) throw fail("vertex out of range");
    if (u == v) throw fail("loop edge");
    if (g.has_edge(static_cast<int>(u), static_cast<int>(v))) throw fail("duplicate edge");
    g.add_edge(static_cast<int>(u), static_cast<int>(v));
  }
  if (next_line()) throw fail("trailing content after edge list");
  return g;
}

std::vector<Graph> read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();

  std::istringstream lines(text);
  std::string line;
  std::string first;
  while (std::getline(lines, line)) {
    first = trim(line);
    if (!first.empty()) break;
  }
  if (first.empty()) return {};

  if (looks_like_edge_list_header(first)) {
    std::istringstream body(text);
    return {read_edge_list(body, path)};
  }

  std::vector<Graph> out;
  std::istringstream body(text);
  int lineno = 0;
  while (std::getline(body, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty()) continue;
    try {
      out.push_back(from_graph6(t));
    } catch (const ParseError& e) {
      throw ParseError(path + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace hamindex
