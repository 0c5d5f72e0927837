#include "opturan/graph6.hpp"

#include <vector>

namespace opturan {

Graph6ParseError::Graph6ParseError(std::size_t offset,
                                   const std::string& what)
    : std::runtime_error("graph6 parse error at byte " +
                         std::to_string(offset) + ": " + what),
      offset_(offset) {}

std::string graph6_encode(const Graph& g) {
  const int n = g.vertex_count();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    // 126 followed by three bytes holding n in 18 bits, high first.
    out.push_back(126);
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  // Upper triangle column by column: x_k = adj(i, j) for j = 1..n-1,
  // i = 0..j-1, packed 6 bits per byte, zero padded.
  int acc = 0;
  int bits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        bits = 0;
      }
    }
  }
  if (bits > 0)
    out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
  return out;
}

namespace {

int value_at(std::string_view text, std::size_t pos) {
  if (pos >= text.size())
    throw Graph6ParseError(text.size(), "truncated input");
  unsigned char c = static_cast<unsigned char>(text[pos]);
  if (c < 63 || c > 126)
    throw Graph6ParseError(pos, "byte outside graph6 range 63..126");
  return c - 63;
}

}  // namespace

Graph graph6_decode(std::string_view text) {
  if (text.empty()) throw Graph6ParseError(0, "empty input");
  std::size_t pos = 0;
  long long n;
  int first = value_at(text, pos++);
  if (first < 63) {
    n = first;
  } else {
    // 63 introduces an extended order: 3 bytes, or 126 + 6 bytes.
    int second = value_at(text, pos);
    if (second == 63) {
      ++pos;
      n = 0;
      for (int k = 0; k < 6; ++k) n = (n << 6) | value_at(text, pos++);
    } else {
      n = 0;
      for (int k = 0; k < 3; ++k) n = (n << 6) | value_at(text, pos++);
    }
  }
  if (n > kMaxVertices)
    throw Graph6ParseError(0, "order " + std::to_string(n) +
                                  " exceeds supported maximum 64");
  Graph g(static_cast<int>(n));
  int acc = 0;
  int bits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (bits == 0) {
        acc = value_at(text, pos++);
        bits = 6;
      }
      if ((acc >> (bits - 1)) & 1) g.add_edge(i, j);
      --bits;
    }
  }
  if (bits > 0 && (acc & ((1 << bits) - 1)) != 0)
    throw Graph6ParseError(pos - 1, "nonzero padding bits");
  if (pos != text.size())
    throw Graph6ParseError(pos, "trailing bytes after graph data");
  return g;
}

}  // namespace opturan
