#pragma once

#include <istream>
#include <sstream>
#include <string>
#include <string_view>

#include "vtypes/graph.hpp"

namespace vtypes {

// graph6:
//
//   order field : 63 + n for n <= 62, else 126 followed by three 6-bit groups
//                 (big-endian, +63 each) for n <= 258047
//   edge bits   : the upper triangle in column order (0,1),(0,2),(1,2),(0,3),...
//                 packed big-endian into 6-bit groups, +63 each, zero padded.

class FormatError : public GraphError {
 public:
  using GraphError::GraphError;
};

inline constexpr std::string_view kGraph6Header = ">>graph6<<";

inline std::size_t graph6_length(int order) {
  const std::size_t bits = static_cast<std::size_t>(order) * (order - 1) / 2;
  return (order <= 62 ? 1 : 4) + (bits + 5) / 6;
}

template <std::size_t W>
std::string emit_graph6(const BasicGraph<W>& g) {
  const int n = g.order();
  std::string out(graph6_length(n), static_cast<char>(63));
  std::size_t head = 1;
  if (n <= 62) {
    out[0] = static_cast<char>(63 + n);
  } else {
    out[0] = static_cast<char>(126);
    out[1] = static_cast<char>(63 + ((n >> 12) & 63));
    out[2] = static_cast<char>(63 + ((n >> 6) & 63));
    out[3] = static_cast<char>(63 + (n & 63));
    head = 4;
  }
  auto set_bit = [&](std::size_t k) {
    out[head + k / 6] = static_cast<char>(out[head + k / 6] + (32 >> (k % 6)));
  };
  for (auto [i, j] : g.edges()) set_bit(static_cast<std::size_t>(j) * (j - 1) / 2 + i);
  return out;
}

template <GraphType G = Graph>
G parse_graph6(std::string_view text) {
  if (text.substr(0, kGraph6Header.size()) == kGraph6Header) text.remove_prefix(kGraph6Header.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw FormatError("graph6: empty input");
  for (char c : text)
    if (static_cast<unsigned char>(c) < 63 || static_cast<unsigned char>(c) > 126)
      throw FormatError("graph6: byte " + std::to_string(static_cast<unsigned char>(c)) +
                        " outside 63..126");
  int n = static_cast<unsigned char>(text[0]) - 63;
  std::size_t head = 1;
  if (n == 63) {
    if (text.size() < 4 || text[1] == 126) throw FormatError("graph6: malformed order field");
    n = ((text[1] - 63) << 12) | ((text[2] - 63) << 6) | (text[3] - 63);
    if (n <= 62) throw FormatError("graph6: non-canonical long order field");
    head = 4;
  }
  if (n > G::kCapacity)
    throw FormatError("graph6: order " + std::to_string(n) + " exceeds graph capacity " +
                      std::to_string(G::kCapacity));
  if (text.size() != graph6_length(n))
    throw FormatError("graph6: length " + std::to_string(text.size()) + " does not match order " +
                      std::to_string(n) + " (expected " + std::to_string(graph6_length(n)) + ")");
  G g(n);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k)
      if (((text[head + k / 6] - 63) >> (5 - k % 6)) & 1) g.add_edge(i, j);
  if (k % 6 != 0) {
    const int pad = (text.back() - 63) & ((1 << (6 - k % 6)) - 1);
    if (pad != 0) throw FormatError("graph6: nonzero padding bits");
  }
  return g;
}

/// Edge-list text: first token is the order, then whitespace-separated
/// vertex pairs.
template <GraphType G = Graph>
G parse_edge_list(std::istream& in) {
  int n = -1;
  if (!(in >> n)) throw FormatError("edge list: missing order");
  std::vector<Edge> edges;
  Vertex u = 0;
  Vertex v = 0;
  while (in >> u) {
    if (!(in >> v)) throw FormatError("edge list: dangling endpoint");
    edges.emplace_back(u, v);
  }
  if (!in.eof()) throw FormatError("edge list: non-numeric token");
  return build_graph<G>(n, edges);
}

template <GraphType G = Graph>
G parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list<G>(in);
}

template <std::size_t W>
std::string emit_edge_list(const BasicGraph<W>& g) {
  std::string out = std::to_string(g.order()) + "\n";
  for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

}  // namespace vtypes
