#include "folkman/graph6.hpp"

#include <cctype>
#include <string>

#include "folkman/errors.hpp"

namespace folkman {
namespace {

constexpr std::string_view kHeader = ">>graph6<<";

int decode_byte(char c) {
  const int v = static_cast<unsigned char>(c);
  if (v < 63 || v > 126) {
    throw ParseError("graph6 byte " + std::to_string(v) + " outside the printable range 63..126");
  }
  return v - 63;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty graph6 string");

  std::size_t pos = 0;
  long n = 0;
  if (text[0] != '~') {
    n = decode_byte(text[0]);
    pos = 1;
  } else if (text.size() >= 2 && text[1] == '~') {
    if (text.size() < 8) throw ParseError("truncated graph6 size field");
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | decode_byte(text[i]);
    pos = 8;
  } else {
    if (text.size() < 4) throw ParseError("truncated graph6 size field");
    for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | decode_byte(text[i]);
    pos = 4;
  }
  if (n > kMaxVertices) {
    throw CapacityError("graph6 string describes " + std::to_string(n) + " vertices, above the 64-vertex capacity");
  }

  const int order = static_cast<int>(n);
  const std::size_t bits = static_cast<std::size_t>(order) * static_cast<std::size_t>(order > 0 ? order - 1 : 0) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() - pos != bytes) {
    throw ParseError("graph6 body has " + std::to_string(text.size() - pos) + " bytes, expected " +
                     std::to_string(bytes));
  }

  GraphBuilder b(order);
  std::size_t k = 0;
  for (int v = 1; v < order; ++v) {
    for (int u = 0; u < v; ++u, ++k) {
      const int chunk = decode_byte(text[pos + k / 6]);
      if ((chunk >> (5 - k % 6)) & 1) b.add_edge(u, v);
    }
  }
  if (bits % 6 != 0) {
    const int tail = decode_byte(text.back());
    if ((tail & ((1 << (6 - bits % 6)) - 1)) != 0) throw ParseError("nonzero padding bits in graph6 string");
  }
  return std::move(b).build();
}

std::string emit_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out += static_cast<char>(n + 63);
  } else {
    out += '~';
    for (int shift = 12; shift >= 0; shift -= 6) out += static_cast<char>(((n >> shift) & 63) + 63);
  }
  int chunk = 0;
  int filled = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      chunk = (chunk << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++filled == 6) {
        out += static_cast<char>(chunk + 63);
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out += static_cast<char>((chunk << (6 - filled)) + 63);
  return out;
}

}  // namespace folkman
