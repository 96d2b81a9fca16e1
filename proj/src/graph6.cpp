#include "harris/graph6.hpp"

namespace harris {
namespace {

constexpr int kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

int sextet(std::string_view text, std::size_t pos) {
  if (pos >= text.size()) throw Graph6Error("unexpected end of input", pos);
  const int c = static_cast<unsigned char>(text[pos]);
  if (c < 63 || c > 126) throw Graph6Error("character outside 63..126", pos);
  return c - kBias;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  std::size_t pos = 0;
  if (text.starts_with(kHeader)) pos = kHeader.size();

  long n = 0;
  if (pos < text.size() && text[pos] == '~') {
    if (pos + 1 < text.size() && text[pos + 1] == '~') {
      throw Graph6Error("eight-byte order header is not supported", pos);
    }
    for (int i = 1; i <= 3; ++i) n = (n << 6) | sextet(text, pos + i);
    pos += 4;
  } else {
    n = sextet(text, pos);
    pos += 1;
  }
  if (n == 0) throw Graph6Error("graph has no vertices", pos - 1);
  if (n > kMaxOrder) throw Graph6Error("order " + std::to_string(n) + " above 64", pos - 1);

  Graph g(static_cast<int>(n));
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() < pos + bytes) throw Graph6Error("edge data too short", text.size());
  if (text.size() > pos + bytes) throw Graph6Error("trailing characters", pos + bytes);

  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int word = sextet(text, pos + k / 6);
      if ((word >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  for (; k < bytes * 6; ++k) {
    if ((sextet(text, pos + k / 6) >> (5 - k % 6)) & 1) {
      throw Graph6Error("nonzero padding bit", pos + k / 6);
    }
  }
  return g;
}

std::string emit_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out += static_cast<char>(n + kBias);
  } else {
    out += '~';
    for (int shift = 12; shift >= 0; shift -= 6) out += static_cast<char>(((n >> shift) & 63) + kBias);
  }
  int word = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      word = (word << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out += static_cast<char>(word + kBias);
        word = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out += static_cast<char>((word << (6 - filled)) + kBias);
  return out;
}

}  // namespace harris
