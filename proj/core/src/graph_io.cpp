#include "specham/graph_io.hpp"

#include <algorithm>
#include <sstream>

namespace specham {

namespace {

constexpr int kG6Bias = 63;
constexpr int kG6ShortMax = 62;
constexpr int kG6LongMax = 258047;

int g6_value(char c, std::size_t pos) {
  int v = static_cast<unsigned char>(c) - kG6Bias;
  if (v < 0 || v > 63)
    throw ParseError("graph6: invalid character at position " + std::to_string(pos));
  return v;
}

}  // namespace

Graph parse_graph6(const std::string& raw) {
  std::string text = raw;
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
  if (text.empty()) throw ParseError("graph6: empty input");
  if (text.rfind(">>graph6<<", 0) == 0) text = text.substr(10);

  std::size_t pos = 0;
  long n;
  if (text[0] == '~') {
    if (text.size() < 4) throw ParseError("graph6: truncated long-form header");
    if (text[1] == '~') throw ParseError("graph6: order above supported range");
    n = 0;
    for (int i = 1; i <= 3; ++i) n = (n << 6) | g6_value(text[static_cast<std::size_t>(i)], static_cast<std::size_t>(i));
    if (n > kG6LongMax) throw ParseError("graph6: order above supported range");
    pos = 4;
  } else {
    n = g6_value(text[0], 0);
    pos = 1;
  }
  if (n < 1) throw ParseError("graph6: order must be positive");

  long bits = n * (n - 1) / 2;
  std::size_t need = static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() - pos != need)
    throw ParseError("graph6: body length mismatch (expected " + std::to_string(need) +
                     " characters, got " + std::to_string(text.size() - pos) + ")");

  Graph g(static_cast<int>(n));
  long bit = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++bit) {
      int chunk = g6_value(text[pos + static_cast<std::size_t>(bit / 6)], pos + static_cast<std::size_t>(bit / 6));
      if ((chunk >> (5 - bit % 6)) & 1) g.add_edge(u, v);
    }
  }
  // padding bits beyond the triangle must be zero
  for (long b = bit; b < static_cast<long>(need) * 6; ++b) {
    int chunk = g6_value(text[pos + static_cast<std::size_t>(b / 6)], pos + static_cast<std::size_t>(b / 6));
    if ((chunk >> (5 - b % 6)) & 1) throw ParseError("graph6: nonzero padding bits");
  }
  return g;
}

std::string write_graph6(const Graph& g) {
  int n = g.n();
  if (n < 1) throw ParseError("graph6: cannot encode the empty graph");
  if (n > kG6LongMax) throw ParseError("graph6: order above supported range");
  std::string out;
  if (n <= kG6ShortMax) {
    out.push_back(static_cast<char>(n + kG6Bias));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + kG6Bias));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kG6Bias));
    out.push_back(static_cast<char>((n & 63) + kG6Bias));
  }
  long bits = static_cast<long>(n) * (n - 1) / 2;
  std::string body(static_cast<std::size_t>((bits + 5) / 6), static_cast<char>(kG6Bias));
  long bit = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u, ++bit)
      if (g.has_edge(u, v)) body[static_cast<std::size_t>(bit / 6)] =
          static_cast<char>(body[static_cast<std::size_t>(bit / 6)] + (1 << (5 - bit % 6)));
  return out + body;
}

Graph parse_edge_list(const std::string& text, std::optional<int> n_hint) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::pair<int, int>> edges;
  int max_vertex = -1;
  int line_no = 0;
  std::optional<int> declared = n_hint;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    if (line[start] == '#') {
      std::istringstream c(line.substr(start + 1));
      std::string word;
      long count;
      if (c >> word && word == "vertices:" && c >> count && count > 0) declared = static_cast<int>(count);
      continue;
    }
    std::istringstream ls(line);
    long u, v;
    if (!(ls >> u >> v)) throw ParseError("edge list: malformed line " + std::to_string(line_no));
    std::string rest;
    if (ls >> rest) throw ParseError("edge list: trailing tokens on line " + std::to_string(line_no));
    if (u < 0 || v < 0) throw ParseError("edge list: negative vertex on line " + std::to_string(line_no));
    if (u == v) throw ParseError("edge list: self-loop on line " + std::to_string(line_no));
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    max_vertex = std::max(max_vertex, static_cast<int>(std::max(u, v)));
  }
  int n = max_vertex + 1;
  if (declared) {
    if (*declared < n) throw ParseError("edge list: declared vertex count below max endpoint");
    n = *declared;
  }
  Graph g(n);
  for (auto [u, v] : edges) {
    if (g.has_edge(u, v))
      throw ParseError("edge list: duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    g.add_edge(u, v);
  }
  return g;
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "# vertices: " << g.n() << "\n";
  for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
  return out.str();
}

}  // namespace specham
