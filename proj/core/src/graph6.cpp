#include "trd/graph6.hpp"

#include <string>

#include "trd/error.hpp"

namespace trd {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r' || s.front() == '\n'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n'))
    s.remove_suffix(1);
  return s;
}

}  // namespace

std::string graph6_encode(const Graph& g) {
  const int n = g.order();
  if (n > 62) throw Error(Errc::TooLarge, "graph6 short form holds at most 62 vertices");
  std::string out;
  out.push_back(static_cast<char>(63 + n));
  int group = 0;
  int filled = 0;
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u) {
      group = (group << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + group));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (group << (6 - filled))));
  return out;
}

Graph graph6_decode(std::string_view text) {
  text = trim(text);
  if (text.substr(0, kHeader.size()) == kHeader) text.remove_prefix(kHeader.size());
  if (text.empty()) throw Error(Errc::MalformedGraph6, "empty input");
  for (char c : text) {
    const int b = static_cast<unsigned char>(c);
    if (b < 63 || b > 126)
      throw Error(Errc::MalformedGraph6, "byte " + std::to_string(b) + " outside 63..126");
  }
  const int n = static_cast<unsigned char>(text.front()) - 63;
  if (n == 63) throw Error(Errc::MalformedGraph6, "long-form orders (> 62) are not supported");
  if (n == 0) throw Error(Errc::MalformedGraph6, "order 0 graphs are not supported");
  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
  const std::size_t expected = 1 + (bits + 5) / 6;
  if (text.size() != expected)
    throw Error(Errc::MalformedGraph6, "expected " + std::to_string(expected) + " bytes for order " +
                                           std::to_string(n) + ", got " + std::to_string(text.size()));

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u, ++k) {
      const int byte = static_cast<unsigned char>(text[1 + k / 6]) - 63;
      if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(u, v);
    }
  }
  // Padding bits in the final byte must be zero for the encoding to be canonical.
  if (bits % 6 != 0) {
    const int last = static_cast<unsigned char>(text.back()) - 63;
    const int pad = static_cast<int>(6 - bits % 6);
    if ((last & ((1 << pad) - 1)) != 0) throw Error(Errc::MalformedGraph6, "non-zero padding bits");
  }
  return Graph::from_edges(n, edges);
}

}  // namespace trd
