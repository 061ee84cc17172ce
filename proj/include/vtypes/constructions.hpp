#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "vtypes/classifier.hpp"
#include "vtypes/fixtures.hpp"
#include "vtypes/graph.hpp"
#include "vtypes/graph6.hpp"
#include "vtypes/primitives.hpp"

namespace vtypes {

namespace objective {
inline constexpr std::string_view kVtMax = "vt-max";
inline constexpr std::string_view kTMax = "t-max";
inline constexpr std::string_view kPantypical = "pantypical-min-size";
inline constexpr std::string_view kFigure1 = "figure1-pair";
}  // namespace objective

template <GraphType G = Graph>
std::optional<G> stored_witness(std::string_view objective, int order) {
  for (const auto& f : witness_fixtures())
    if (f.objective == objective && f.order == order) return parse_graph6<G>(f.graph6);
  return std::nullopt;
}

/// Recomputes the quantity a fixture of the given objective records: the
/// number of very typical / typical vertices, the size of a pantypical graph
/// (-1 if it is not pantypical), or the number of very weak vertices.
template <std::size_t W>
int fixture_measure(std::string_view objective, const BasicGraph<W>& g) {
  const TypeTuple tt = type_tuple(g);
  if (objective == objective::kVtMax) return tt[VertexType::VeryTypical];
  if (objective == objective::kTMax) return tt[VertexType::Typical];
  if (objective == objective::kPantypical) return is_pantypical(tt) ? g.size() : -1;
  if (objective == objective::kFigure1) return tt[VertexType::VeryWeak];
  throw GraphError("unknown fixture objective " + std::string(objective));
}

namespace detail {

template <GraphType G>
G require_witness(std::string_view objective, int order) {
  auto g = stored_witness<G>(objective, order);
  if (!g)
    throw GraphError("no stored " + std::string(objective) + " witness of order " +
                     std::to_string(order));
  return *g;
}

}  // namespace detail

/// A graph of order n with the largest possible number of very typical
/// vertices. From order 12 on this is a complete 4-partite graph with parts
/// 1, 2, t-3 and t-1 (n = 2t) or t (n = 2t+1), plus one vertex joined to
/// the whole last part. Smaller orders come from the stored witnesses, since
/// the formula degenerates there (equal part sizes).
template <GraphType G = Graph>
G vt_extremal(int n) {
  if (n < 5) throw GraphError("vt_extremal needs order >= 5, got " + std::to_string(n));
  if (n > G::kCapacity) throw GraphError("vt_extremal: order exceeds graph capacity");
  if (n < 12) return detail::require_witness<G>(objective::kVtMax, n);
  const int t = n / 2;
  const int last = n % 2 == 0 ? t - 1 : t;
  const G base = complete_multipartite<G>(PartiteSpec{{1, 2, t - 3, last}});
  return add_apex(base, vertex_range(base.order() - last, last));
}

/// A graph of order n with the largest possible number of typical vertices.
/// From order 9 on: an apex over K1 v X v Y, where (X, Y) and the apex
/// neighborhood depend on n mod 4 (n = 4k + r):
///   r = 1: X = C_{2k-1}, Y = M_{2k}, apex ~ K1 and Y
///   r = 2: X = T_{2k},   Y = M_{2k}, apex ~ K1 and Y
///   r = 3: X = T_{2k},   Y = C_{2k+1}, apex ~ K1 and Y
///   r = 0: X = M_{2k-2}, Y = M_{2k}, apex ~ Y only
template <GraphType G = Graph>
G t_extremal(int n) {
  if (n < 5) throw GraphError("t_extremal needs order >= 5, got " + std::to_string(n));
  if (n > G::kCapacity) throw GraphError("t_extremal: order exceeds graph capacity");
  if (n < 9) return detail::require_witness<G>(objective::kTMax, n);
  const int k = n / 4;
  G middle;
  G outer;
  bool apex_on_hub = true;
  switch (n % 4) {
    case 1:
      middle = cycle_graph<G>(2 * k - 1);
      outer = matching_graph<G>(2 * k);
      break;
    case 2:
      middle = cubic_graph<G>(2 * k);
      outer = matching_graph<G>(2 * k);
      break;
    case 3:
      middle = cubic_graph<G>(2 * k);
      outer = cycle_graph<G>(2 * k + 1);
      break;
    default:
      middle = matching_graph<G>(2 * k - 2);
      outer = matching_graph<G>(2 * k);
      apex_on_hub = false;
      break;
  }
  const G base = join({G(1), middle, outer});
  std::vector<Vertex> targets = vertex_range(1 + middle.order(), outer.order());
  if (apex_on_hub) targets.insert(targets.begin(), 0);
  return add_apex(base, targets);
}

/// Lowest-index vertex of maximum degree, and whether it is the only one.
template <std::size_t W>
std::pair<Vertex, bool> max_degree_vertex(const BasicGraph<W>& g) {
  Vertex best = 0;
  int ties = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) > g.degree(best)) {
      best = v;
      ties = 1;
    } else if (g.degree(v) == g.degree(best)) {
      ++ties;
    }
  }
  return {best, ties == 1};
}

/// Attaches a path to vertex `at`: `extra` new vertices p1..p_extra with
/// at~p1~p2~...~p_extra, so that `at` and the new vertices form a path of
/// order extra + 1.
template <std::size_t W>
BasicGraph<W> attach_path(const BasicGraph<W>& g, Vertex at, int extra) {
  BasicGraph<W> out = g;
  Vertex prev = at;
  for (int i = 0; i < extra; ++i) {
    const Vertex v = out.add_vertex();
    out.add_edge(prev, v);
    prev = v;
  }
  return out;
}

/// A pantypical graph of order n >= 9: the stored order-9 witness, with a
/// path of order n - 8 hanging from its maximum-degree vertex for n > 9.
template <GraphType G = Graph>
G pantypical_graph(int n) {
  if (n < 9)
    throw GraphError("theorem3: no pantypical graph of order < 9 (requested " +
                     std::to_string(n) + ")");
  if (n > G::kCapacity) throw GraphError("pantypical_graph: order exceeds graph capacity");
  G base = detail::require_witness<G>(objective::kPantypical, 9);
  if (n == 9) return base;
  return attach_path(base, max_degree_vertex(base).first, n - 9);
}

}  // namespace vtypes
