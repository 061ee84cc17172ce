#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace vtypes {

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..order-1, one bit row per vertex
/// (bit j of row i set iff i~j), each row `Words` 64-bit words wide. Every
/// mutator keeps the matrix symmetric with a zero diagonal.
///
/// The order cap is a compile-time configuration: the default `Graph`
/// (one word per row) holds up to 62 vertices, the top of graph6's
/// single-byte order range; `WideGraph` is for large constructions.
template <std::size_t Words>
class BasicGraph {
  static_assert(Words >= 1);

 public:
  static constexpr int kCapacity = Words == 1 ? 62 : static_cast<int>(64 * Words);
  using Row = std::array<std::uint64_t, Words>;

  BasicGraph() = default;

  explicit BasicGraph(int order) : order_(order) {
    if (order < 0 || order > kCapacity)
      throw GraphError("graph order " + std::to_string(order) + " outside 0.." +
                       std::to_string(kCapacity));
  }

  int order() const noexcept { return order_; }

  bool adjacent(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    return test(rows_[u], v);
  }

  /// Neighborhood N(v) as a bit mask (single-word graphs only).
  std::uint64_t row(Vertex v) const
    requires(Words == 1)
  {
    check_vertex(v);
    return rows_[v][0];
  }

  /// Closed neighborhood N[v] as a bit mask (single-word graphs only).
  std::uint64_t closed_row(Vertex v) const
    requires(Words == 1)
  {
    return row(v) | bit(v);
  }

  const Row& row_words(Vertex v) const {
    check_vertex(v);
    return rows_[v];
  }

  int degree(Vertex v) const {
    check_vertex(v);
    return popcount(rows_[v]);
  }

  template <class F>
  void for_each_neighbor(Vertex v, F&& f) const {
    check_vertex(v);
    for (std::size_t w = 0; w < Words; ++w)
      for (std::uint64_t r = rows_[v][w]; r; r &= r - 1)
        f(static_cast<Vertex>(64 * w + std::countr_zero(r)));
  }

  std::vector<Vertex> neighbors(Vertex v) const {
    std::vector<Vertex> out;
    for_each_neighbor(v, [&](Vertex u) { out.push_back(u); });
    return out;
  }

  std::vector<int> degrees() const {
    std::vector<int> d(order_);
    for (int v = 0; v < order_; ++v) d[v] = popcount(rows_[v]);
    return d;
  }

  int size() const noexcept {
    long twice = 0;
    for (int v = 0; v < order_; ++v) twice += popcount(rows_[v]);
    return static_cast<int>(twice / 2);
  }

  int max_degree() const noexcept {
    int best = 0;
    for (int v = 0; v < order_; ++v) best = std::max(best, popcount(rows_[v]));
    return best;
  }

  int min_degree() const noexcept {
    if (order_ == 0) return 0;
    int best = kCapacity;
    for (int v = 0; v < order_; ++v) best = std::min(best, popcount(rows_[v]));
    return best;
  }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < order_; ++u)
      for_each_neighbor(u, [&](Vertex v) {
        if (v > u) out.emplace_back(u, v);
      });
    return out;
  }

  void add_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw GraphError("loop at vertex " + std::to_string(u));
    set(rows_[u], v);
    set(rows_[v], u);
  }

  void remove_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    clear(rows_[u], v);
    clear(rows_[v], u);
  }

  /// Appends an isolated vertex and returns its index.
  Vertex add_vertex() {
    if (order_ == kCapacity) throw GraphError("graph order cap exceeded");
    rows_[order_] = Row{};
    return order_++;
  }

  /// Appends a vertex adjacent to exactly the vertices in `mask`.
  /// Unchecked fast path for the enumerator.
  void push_vertex_unchecked(std::uint64_t mask) noexcept
    requires(Words == 1)
  {
    const int v = order_++;
    rows_[v][0] = mask;
    for (std::uint64_t r = mask; r; r &= r - 1) rows_[std::countr_zero(r)][0] |= bit(v);
  }

  /// Removes the highest-index vertex.
  void pop_vertex_unchecked() noexcept
    requires(Words == 1)
  {
    const int v = --order_;
    for (std::uint64_t r = rows_[v][0]; r; r &= r - 1) rows_[std::countr_zero(r)][0] &= ~bit(v);
    rows_[v][0] = 0;
  }

  friend bool operator==(const BasicGraph& a, const BasicGraph& b) noexcept {
    if (a.order_ != b.order_) return false;
    return std::equal(a.rows_.begin(), a.rows_.begin() + a.order_, b.rows_.begin());
  }

  static constexpr std::uint64_t bit(int v) noexcept { return std::uint64_t{1} << v; }
  static constexpr std::uint64_t low_mask(int n) noexcept {
    return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  }

 private:
  static int popcount(const Row& r) noexcept {
    int c = 0;
    for (auto w : r) c += std::popcount(w);
    return c;
  }
  static bool test(const Row& r, int v) noexcept { return (r[v / 64] >> (v % 64)) & 1U; }
  static void set(Row& r, int v) noexcept { r[v / 64] |= std::uint64_t{1} << (v % 64); }
  static void clear(Row& r, int v) noexcept { r[v / 64] &= ~(std::uint64_t{1} << (v % 64)); }

  void check_vertex(Vertex v) const {
    if (v < 0 || v >= order_)
      throw GraphError("vertex " + std::to_string(v) + " out of range for order " +
                       std::to_string(order_));
  }

  int order_ = 0;
  std::array<Row, static_cast<std::size_t>(kCapacity)> rows_{};
};

using Graph = BasicGraph<1>;
using WideGraph = BasicGraph<4>;

/// Order cap of the default Graph.
inline constexpr int kMaxOrder = Graph::kCapacity;

template <class G>
inline constexpr bool is_graph_v = false;
template <std::size_t W>
inline constexpr bool is_graph_v<BasicGraph<W>> = true;

template <class G>
concept GraphType = is_graph_v<G>;

/// Builds a graph from an edge list. Repeated pairs are harmless.
template <GraphType G = Graph>
G build_graph(int order, const std::vector<Edge>& edges) {
  G g(order);
  for (auto [u, v] : edges) {
    if (u < 0 || u >= order || v < 0 || v >= order)
      throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                       ") has an endpoint outside 0.." + std::to_string(order - 1));
    g.add_edge(u, v);
  }
  return g;
}

/// Degrees sorted non-increasing.
template <std::size_t W>
std::vector<int> degree_sequence(const BasicGraph<W>& g) {
  auto d = g.degrees();
  std::sort(d.begin(), d.end(), std::greater<>());
  return d;
}

template <std::size_t W>
bool is_connected(const BasicGraph<W>& g) {
  if (g.order() == 0) return true;
  std::vector<char> seen(g.order(), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    g.for_each_neighbor(v, [&](Vertex u) {
      if (!seen[u]) {
        seen[u] = 1;
        ++reached;
        stack.push_back(u);
      }
    });
  }
  return reached == g.order();
}

/// Relabels g so that vertex v becomes perm[v].
template <std::size_t W>
BasicGraph<W> permute(const BasicGraph<W>& g, const std::vector<Vertex>& perm) {
  const int n = g.order();
  if (static_cast<int>(perm.size()) != n) throw GraphError("permutation size mismatch");
  std::vector<bool> seen(n, false);
  for (int p : perm) {
    if (p < 0 || p >= n || seen[p]) throw GraphError("not a permutation");
    seen[p] = true;
  }
  BasicGraph<W> out(n);
  for (auto [u, v] : g.edges()) out.add_edge(perm[u], perm[v]);
  return out;
}

/// Copies g into a graph type with a different order cap.
template <GraphType To, std::size_t W>
To convert(const BasicGraph<W>& g) {
  To out(g.order());
  for (auto [u, v] : g.edges()) out.add_edge(u, v);
  return out;
}

}  // namespace vtypes
