#include "sysgraph/graph6.hpp"

#include <charconv>
#include <sstream>

namespace sysgraph {

namespace {

constexpr int kOffset = 63;           // printable 6-bit characters are 63..126
constexpr int kMaxGraph6Order = 258047;  // largest order of the 3-byte size form

int size_header_length(int n) { return n <= 62 ? 1 : 4; }

}  // namespace

Graph parse_graph6(std::string_view line) {
  if (line.empty()) throw ParseError("graph6: empty input");
  if (line[0] == ':') throw ParseError("graph6: sparse6 input not supported");
  for (char ch : line) {
    unsigned char c = static_cast<unsigned char>(ch);
    if (c < 63 || c > 126) throw ParseError("graph6: byte outside printable range 63..126");
  }

  std::size_t pos = 0;
  long long n = 0;
  if (line[0] != '~') {
    n = line[0] - kOffset;
    pos = 1;
  } else {
    if (line.size() >= 2 && line[1] == '~')
      throw ParseError("graph6: order exceeds supported range");
    if (line.size() < 4) throw ParseError("graph6: truncated size header");
    n = 0;
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | (line[i] - kOffset);
    if (n <= 62) throw ParseError("graph6: non-minimal size header");
    pos = 4;
  }
  if (n > kMaxGraph6Order) throw ParseError("graph6: order exceeds supported range");

  const long long bits = n * (n - 1) / 2;
  const std::size_t body = static_cast<std::size_t>((bits + 5) / 6);
  if (line.size() - pos != body) throw ParseError("graph6: body length mismatch");

  Graph g(static_cast<int>(n));
  long long bit = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++bit) {
      int c = line[pos + static_cast<std::size_t>(bit / 6)] - kOffset;
      if ((c >> (5 - bit % 6)) & 1) g.add_edge(u, v);
    }
  }
  // Padding to a multiple of six bits must be zero.
  for (long long b = bits; b < static_cast<long long>(body) * 6; ++b) {
    int c = line[pos + static_cast<std::size_t>(b / 6)] - kOffset;
    if ((c >> (5 - b % 6)) & 1) throw ParseError("graph6: non-zero padding bits");
  }
  return g;
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kMaxGraph6Order) throw std::invalid_argument("to_graph6: order exceeds 258047");
  std::string out;
  const long long bits = static_cast<long long>(n) * (n - 1) / 2;
  out.reserve(static_cast<std::size_t>(size_header_length(n) + (bits + 5) / 6));
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kOffset));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + kOffset));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kOffset));
    out.push_back(static_cast<char>((n & 63) + kOffset));
  }
  int acc = 0, filled = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kOffset));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled) out.push_back(static_cast<char>((acc << (6 - filled)) + kOffset));
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::vector<std::pair<long long, long long>> edges;
  std::optional<long long> declared;
  long long max_id = -1;
  bool first_data_line = true;

  std::size_t start = 0;
  int line_no = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    std::size_t hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    std::istringstream in{std::string(line)};
    long long a, b;
    if (!(in >> a)) continue;  // blank or comment line
    if (!(in >> b)) {
      in.clear();
      std::string junk;
      if (in >> junk) {
        throw ParseError("edge list: line " + std::to_string(line_no) + ": expected two ids");
      }
      if (first_data_line) {
        declared = a;
        if (a < 0) throw ParseError("edge list: negative vertex count");
        first_data_line = false;
        continue;
      }
      throw ParseError("edge list: line " + std::to_string(line_no) + ": expected two ids");
    }
    std::string rest;
    if (in >> rest) throw ParseError("edge list: line " + std::to_string(line_no) + ": trailing tokens");
    if (a < 0 || b < 0) throw ParseError("edge list: line " + std::to_string(line_no) + ": negative id");
    if (a == b) throw ParseError("edge list: line " + std::to_string(line_no) + ": self-loop");
    first_data_line = false;
    edges.emplace_back(a, b);
    max_id = std::max({max_id, a, b});
  }

  long long n = declared ? *declared : max_id + 1;
  if (max_id >= n) throw ParseError("edge list: id exceeds declared vertex count");
  if (n > Graph::max_order) throw ParseError("edge list: vertex count exceeds order cap");
  Graph g(static_cast<int>(n));
  for (auto [a, b] : edges) g.add_edge(static_cast<int>(a), static_cast<int>(b));
  return g;
}

}  // namespace sysgraph
