#pragma once

#include <numeric>
#include <span>
#include <vector>

#include "vtypes/graph.hpp"

namespace vtypes {

/// Ordered part sizes of a complete multipartite graph.
struct PartiteSpec {
  std::vector<int> sizes;

  int order() const { return std::accumulate(sizes.begin(), sizes.end(), 0); }
};

/// Vertices first..first+count-1.
inline std::vector<Vertex> vertex_range(int first, int count) {
  std::vector<Vertex> out(count);
  std::iota(out.begin(), out.end(), first);
  return out;
}

/// Join of the parts: their disjoint union plus every edge between distinct
/// parts. Part 0 occupies the lowest indices, then part 1, and so on.
template <std::size_t W>
BasicGraph<W> join(std::span<const BasicGraph<W>> parts) {
  long total = 0;
  for (const auto& p : parts) total += p.order();
  if (total > BasicGraph<W>::kCapacity) throw GraphError("join exceeds order cap");
  BasicGraph<W> out(static_cast<int>(total));
  int base = 0;
  for (const auto& p : parts) {
    for (auto [u, v] : p.edges()) out.add_edge(base + u, base + v);
    const int next = base + p.order();
    for (int u = base; u < next; ++u)
      for (int v = next; v < total; ++v) out.add_edge(u, v);
    base = next;
  }
  return out;
}

template <std::size_t W>
BasicGraph<W> join(const std::vector<BasicGraph<W>>& parts) {
  return join(std::span<const BasicGraph<W>>(parts));
}

template <std::size_t W>
BasicGraph<W> join(std::initializer_list<BasicGraph<W>> parts) {
  return join(std::span<const BasicGraph<W>>(parts.begin(), parts.size()));
}

template <GraphType G = Graph>
G complete_graph(int n) {
  G g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

template <GraphType G = Graph>
G path_graph(int n) {
  if (n < 1) throw GraphError("path needs at least one vertex");
  G g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

template <GraphType G = Graph>
G cycle_graph(int t) {
  if (t < 3) throw GraphError("cycle needs at least 3 vertices, got " + std::to_string(t));
  G g(t);
  for (int v = 0; v < t; ++v) g.add_edge(v, (v + 1) % t);
  return g;
}

/// M_{2h}: h disjoint edges (2i, 2i+1).
template <GraphType G = Graph>
G matching_graph(int order) {
  if (order < 2 || order % 2 != 0)
    throw GraphError("matching graph needs an even order >= 2, got " + std::to_string(order));
  G g(order);
  for (int v = 0; v < order; v += 2) g.add_edge(v, v + 1);
  return g;
}

/// Cubic graph on 2k vertices: the circulant with steps 1 and k (a Moebius
/// ladder; K4 when k = 2, K_{3,3} when k = 3).
template <GraphType G = Graph>
G cubic_graph(int order) {
  if (order < 4 || order % 2 != 0)
    throw GraphError("cubic graph needs an even order >= 4, got " + std::to_string(order));
  const int k = order / 2;
  G g(order);
  for (int v = 0; v < order; ++v) {
    g.add_edge(v, (v + 1) % order);
    g.add_edge(v, (v + k) % order);
  }
  return g;
}

template <GraphType G = Graph>
G star_graph(int leaves) {
  G g(leaves + 1);
  for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

template <GraphType G = Graph>
G complete_multipartite(const PartiteSpec& spec) {
  std::vector<G> parts;
  for (int s : spec.sizes) {
    if (s < 1) throw GraphError("multipartite part sizes must be >= 1");
    if (s > G::kCapacity) throw GraphError("multipartite part exceeds order cap");
    parts.emplace_back(s);
  }
  return join(parts);
}

/// Appends vertex n = g.order() adjacent to exactly `targets`.
template <std::size_t W>
BasicGraph<W> add_apex(const BasicGraph<W>& g, std::span<const Vertex> targets) {
  for (Vertex t : targets)
    if (t < 0 || t >= g.order())
      throw GraphError("apex target " + std::to_string(t) + " out of range");
  BasicGraph<W> out = g;
  const Vertex apex = out.add_vertex();
  for (Vertex t : targets) out.add_edge(apex, t);
  return out;
}

template <std::size_t W>
BasicGraph<W> add_apex(const BasicGraph<W>& g, const std::vector<Vertex>& targets) {
  return add_apex(g, std::span<const Vertex>(targets));
}

template <std::size_t W>
BasicGraph<W> disjoint_union(const BasicGraph<W>& a, const BasicGraph<W>& b) {
  if (a.order() + b.order() > BasicGraph<W>::kCapacity)
    throw GraphError("union exceeds order cap");
  BasicGraph<W> out(a.order() + b.order());
  for (auto [u, v] : a.edges()) out.add_edge(u, v);
  for (auto [u, v] : b.edges()) out.add_edge(a.order() + u, a.order() + v);
  return out;
}

enum class PrimitiveKind { Complete, Cycle, Path, Matching, Cubic, Multipartite };

/// Uniform entry point over the building blocks. Every kind but Multipartite
/// takes a single order parameter; Multipartite takes the part sizes.
template <GraphType G = Graph>
G primitive(PrimitiveKind kind, std::span<const int> params) {
  auto single = [&] {
    if (params.size() != 1) throw GraphError("primitive expects exactly one order parameter");
    return params[0];
  };
  switch (kind) {
    case PrimitiveKind::Complete: return complete_graph<G>(single());
    case PrimitiveKind::Cycle: return cycle_graph<G>(single());
    case PrimitiveKind::Path: return path_graph<G>(single());
    case PrimitiveKind::Matching: return matching_graph<G>(single());
    case PrimitiveKind::Cubic: return cubic_graph<G>(single());
    case PrimitiveKind::Multipartite:
      return complete_multipartite<G>(PartiteSpec{{params.begin(), params.end()}});
  }
  throw GraphError("unknown primitive kind");
}

}  // namespace vtypes
