#include "monodeg/graph6.hpp"

#include "monodeg/errors.hpp"

namespace monodeg {

namespace {
constexpr int kOffset = 63;
constexpr int kMax = 126;

long long sextet(std::string_view s, std::size_t pos) {
  if (pos >= s.size()) throw Graph6Error("truncated input", pos);
  unsigned char c = static_cast<unsigned char>(s[pos]);
  if (c < kOffset || c > kMax)
    throw Graph6Error("byte out of range 63..126", pos);
  return c - kOffset;
}
}  // namespace

Graph parse_graph6(std::string_view line) {
  if (line.empty()) throw Graph6Error("empty input", 0);
  std::size_t pos = 0;
  long long n;
  if (line[0] != '~') {
    n = sextet(line, pos++);
  } else if (line.size() >= 2 && line[1] != '~') {
    ++pos;
    n = 0;
    for (int i = 0; i < 3; ++i) n = (n << 6) | sextet(line, pos++);
  } else {
    pos += 2;
    n = 0;
    for (int i = 0; i < 6; ++i) n = (n << 6) | sextet(line, pos++);
  }
  if (n > 1'000'000) throw Graph6Error("vertex count implausibly large", 0);

  long long bits = n * (n - 1) / 2;
  std::size_t payload = static_cast<std::size_t>((bits + 5) / 6);
  if (line.size() != pos + payload)
    throw Graph6Error("payload length mismatch: expected " +
                          std::to_string(payload) + " bytes, got " +
                          std::to_string(line.size() - pos),
                      pos);

  std::vector<Edge> edges;
  long long bit = 0;
  long long cur = 0;
  int have = 0;
  std::size_t at = pos;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++bit) {
      if (have == 0) {
        cur = sextet(line, at++);
        have = 6;
      }
      if (cur & (1 << (have - 1))) edges.push_back({u, v});
      --have;
    }
  }
  if (have > 0 && (cur & ((1 << have) - 1)))
    throw Graph6Error("nonzero padding bits", at - 1);
  return Graph(static_cast<int>(n), edges);
}

std::string write_graph6(const Graph& g) {
  std::string out;
  long long n = g.vertex_count();
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kOffset));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 0x3f) + kOffset));
  } else {
    out.push_back('~');
    out.push_back('~');
    for (int shift = 30; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 0x3f) + kOffset));
  }

  long long bits = n * (n - 1) / 2;
  int acc = 0, have = 0;
  long long bit = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++bit) {
      acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
      if (++have == 6) {
        out.push_back(static_cast<char>(acc + kOffset));
        acc = 0;
        have = 0;
      }
    }
  }
  if (have > 0)
    out.push_back(static_cast<char>((acc << (6 - have)) + kOffset));
  (void)bits;
  return out;
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n'))
      line.pop_back();
    if (line.rfind(">>graph6<<", 0) == 0) line.erase(0, 10);
    if (line.empty()) continue;
    out.push_back(parse_graph6(line));
  }
  return out;
}

}  // namespace monodeg
