#include "reconkit/graph6.hpp"

#include <algorithm>
#include <string>

#include "reconkit/errors.hpp"

namespace reconkit {

namespace {

constexpr char kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

void append_size(std::string& out, std::size_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
    return;
  }
  // 63 <= n <= 258047: '~' followed by 18 bits in three 6-bit groups.
  out.push_back('~');
  for (int shift = 12; shift >= 0; shift -= 6) {
    out.push_back(static_cast<char>(((n >> shift) & 0x3f) + kBias));
  }
}

}  // namespace

std::string encode_graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  append_size(out, n);
  int filled = 0;
  unsigned group = 0;
  // Upper triangle, column by column: (0,1), (0,2), (1,2), (0,3), ...
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      group = (group << 1) | ((g.neighbors(i) & bit(j)) != 0 ? 1U : 0U);
      if (++filled == 6) {
        out.push_back(static_cast<char>(group + kBias));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) {
    out.push_back(static_cast<char>((group << (6 - filled)) + kBias));
  }
  return out;
}

Graph decode_graph6(std::string_view line) {
  std::size_t base = 0;
  if (line.starts_with(kHeader)) {
    base = kHeader.size();
    line.remove_prefix(kHeader.size());
  }
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) {
    line.remove_suffix(1);
  }
  if (line.empty()) {
    throw ParseError("empty graph6 line", base);
  }
  for (std::size_t i = 0; i < line.size(); ++i) {
    const auto c = static_cast<unsigned char>(line[i]);
    if (c < 63 || c > 126) {
      throw ParseError("byte outside the graph6 range 63..126", base + i);
    }
  }

  std::size_t n = 0;
  std::size_t pos = 0;
  if (line[0] != '~') {
    n = static_cast<std::size_t>(line[0] - kBias);
    pos = 1;
  } else {
    if (line.size() >= 2 && line[1] == '~') {
      throw ParseError("8-byte order prefix exceeds the supported order", base + 1);
    }
    if (line.size() < 4) {
      throw ParseError("truncated order prefix", base + line.size());
    }
    for (std::size_t i = 1; i <= 3; ++i) {
      n = (n << 6) | static_cast<std::size_t>(line[i] - kBias);
    }
    if (n <= 62) {
      throw ParseError("order " + std::to_string(n) + " must use the 1-byte prefix", base);
    }
    pos = 4;
  }
  if (n > kMaxOrder) {
    throw ParseError("order " + std::to_string(n) + " exceeds the supported cap of " +
                         std::to_string(kMaxOrder),
                     base);
  }

  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t expected = pos + (bits + 5) / 6;
  if (line.size() != expected) {
    throw ParseError("expected " + std::to_string(expected) + " bytes for order " +
                         std::to_string(n) + ", found " + std::to_string(line.size()),
                     base + std::min(line.size(), expected));
  }

  Graph g(n);
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const auto group = static_cast<unsigned>(line[pos + k / 6] - kBias);
      if ((group >> (5 - k % 6)) & 1U) {
        g.add_edge(i, j);
      }
    }
  }
  if (bits % 6 != 0) {
    const auto last = static_cast<unsigned>(line.back() - kBias);
    if ((last & ((1U << (6 - bits % 6)) - 1)) != 0) {
      throw ParseError("nonzero padding bits", base + line.size() - 1);
    }
  }
  return g;
}

}  // namespace reconkit
