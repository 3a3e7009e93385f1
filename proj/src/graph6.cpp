// graph6: N(n) followed by the upper triangle of the adjacency matrix in the
// order (0,1),(0,2),(1,2),(0,3),(1,3),(2,3),..., packed 6 bits per byte
// (big-endian within the group), each group offset by 63, last group
// zero-padded on the right.

#include <string>

#include "menergy/graph.hpp"

namespace menergy {

namespace {

constexpr int kOffset = 63;
constexpr std::string_view kHeader = ">>graph6<<";

}  // namespace

std::string graph6_encode(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kOffset));
  } else {
    out.push_back(static_cast<char>(126));
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 0x3F) + kOffset));
    }
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kOffset));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kOffset));
  return out;
}

Graph graph6_decode(std::string_view line) {
  if (line.starts_with(kHeader)) line.remove_prefix(kHeader.size());
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  if (line.empty()) throw Graph6Error("empty graph6 line");
  for (std::size_t i = 0; i < line.size(); ++i) {
    const auto c = static_cast<unsigned char>(line[i]);
    if (c < 63 || c > 126) {
      throw Graph6Error("byte " + std::to_string(static_cast<int>(c)) + " at offset " +
                        std::to_string(i) + " outside 63..126");
    }
  }
  auto value = [&](std::size_t i) { return static_cast<unsigned char>(line[i]) - kOffset; };

  std::size_t pos = 0;
  long long n = 0;
  if (value(0) < 63) {
    n = value(0);
    pos = 1;
  } else if (line.size() >= 2 && value(1) == 63) {
    if (line.size() < 8) throw Graph6Error("truncated 36-bit order header");
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | value(i);
    pos = 8;
  } else {
    if (line.size() < 4) throw Graph6Error("truncated 18-bit order header");
    for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | value(i);
    pos = 4;
  }
  if (n > kMaxOrder) {
    throw Graph6Error("order " + std::to_string(n) + " exceeds supported maximum " +
                      std::to_string(kMaxOrder));
  }
  const long long bits = n * (n - 1) / 2;
  const std::size_t bytes = static_cast<std::size_t>((bits + 5) / 6);
  if (line.size() - pos < bytes) throw Graph6Error("truncated adjacency bit field");
  if (line.size() - pos > bytes) throw Graph6Error("trailing bytes after adjacency bit field");

  const int order = static_cast<int>(n);
  std::vector<VertexMask> rows(static_cast<std::size_t>(order), 0);
  long long k = 0;
  for (int j = 1; j < order; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = value(pos + static_cast<std::size_t>(k / 6));
      if ((byte >> (5 - k % 6)) & 1) {
        rows[i] |= bit(j);
        rows[j] |= bit(i);
      }
    }
  }
  if (bits % 6 != 0) {
    const int last = value(line.size() - 1);
    const int pad = static_cast<int>(6 - bits % 6);
    if ((last & ((1 << pad) - 1)) != 0) throw Graph6Error("nonzero padding bits");
  }
  return Graph::from_rows(order, std::move(rows));
}

}  // namespace menergy
