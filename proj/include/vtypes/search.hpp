#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "vtypes/classifier.hpp"
#include "vtypes/constructions.hpp"
#include "vtypes/expected.hpp"
#include "vtypes/graph6.hpp"
#include "vtypes/primitives.hpp"
#include "vtypes/verifier.hpp"

namespace vtypes {

// Witness search for the small orders the closed-form constructions do not
// cover. Results are frozen into fixtures.hpp; nothing here runs on the
// normal construction path.

namespace detail {

inline void partitions(int n, int max_part, std::vector<int>& cur,
                       std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions(n - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace detail

/// Complete multipartite graph on n - 1 vertices plus one extra vertex,
/// trying every partition with the extra vertex first joined to unions of
/// whole parts, then to arbitrary vertex subsets. Returns the first graph
/// with `want` vertices of type t.
inline std::optional<Graph> template_search(int n, VertexType t, int want) {
  if (n < 2) return std::nullopt;
  std::vector<std::vector<int>> parts;
  std::vector<int> cur;
  detail::partitions(n - 1, n - 1, cur, parts);
  for (int pass = 0; pass < 2; ++pass) {
    for (const auto& sizes : parts) {
      const Graph base = complete_multipartite(PartiteSpec{sizes});
      const int k = static_cast<int>(sizes.size());
      if (pass == 0) {
        for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << k); ++pick) {
          std::vector<Vertex> targets;
          int first = 0;
          for (int i = 0; i < k; ++i) {
            if ((pick >> i) & 1U)
              for (int v = first; v < first + sizes[i]; ++v) targets.push_back(v);
            first += sizes[i];
          }
          Graph g = add_apex(base, targets);
          if (type_tuple(g)[t] == want) return g;
        }
      } else {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
          std::vector<Vertex> targets;
          for (int v = 0; v < n - 1; ++v)
            if ((mask >> v) & 1U) targets.push_back(v);
          Graph g = add_apex(base, targets);
          if (type_tuple(g)[t] == want) return g;
        }
      }
    }
  }
  return std::nullopt;
}

/// Random-restart hill climbing over single edge flips, scored by the
/// number of type-t vertices. Deterministic for a given seed.
inline std::optional<Graph> hill_climb(int n, VertexType t, int want, std::uint64_t seed,
                                       int restarts = 200, int steps = 20000) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> vertex(0, n - 1);
  std::bernoulli_distribution coin(0.5);
  for (int r = 0; r < restarts; ++r) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (coin(rng)) g.add_edge(u, v);
    int score = type_tuple(g)[t];
    for (int s = 0; s < steps && score < want; ++s) {
      const int u = vertex(rng);
      const int v = vertex(rng);
      if (u == v) continue;
      const bool had = g.adjacent(u, v);
      if (had) g.remove_edge(u, v);
      else g.add_edge(u, v);
      const int next = type_tuple(g)[t];
      if (next >= score) {
        score = next;
      } else if (had) {
        g.add_edge(u, v);
      } else {
        g.remove_edge(u, v);
      }
    }
    if (score == want) return g;
  }
  return std::nullopt;
}

/// One regenerated fixture record. figure1-pair records hold two graphs.
struct FixtureRecord {
  std::string objective;
  int order = 0;
  std::vector<std::string> graph6;
  std::vector<int> achieved;
};

struct SearchOptions {
  std::uint64_t seed = 1;
  int jobs = 1;
};

inline std::vector<FixtureRecord> search_vt_fixtures(SweepCache& cache, const SearchOptions& opt) {
  std::vector<FixtureRecord> out;
  for (int n = 5; n <= 11; ++n) {
    const int want = max_very_typical(n);
    std::optional<Graph> g;
    if (n <= 9) {
      g = max_type_count(n, VertexType::VeryTypical, cache).witness;
    } else {
      g = template_search(n, VertexType::VeryTypical, want);
      if (!g) g = hill_climb(n, VertexType::VeryTypical, want, opt.seed + n);
    }
    if (!g || type_tuple(*g)[VertexType::VeryTypical] != want)
      throw GraphError("no very typical witness found for order " + std::to_string(n));
    out.push_back({std::string(objective::kVtMax), n, {emit_graph6(*g)}, {want}});
  }
  return out;
}

inline std::vector<FixtureRecord> search_t_fixtures(SweepCache& cache) {
  std::vector<FixtureRecord> out;
  for (int n = 5; n <= 8; ++n) {
    auto r = max_type_count(n, VertexType::Typical, cache);
    if (!r.witness || r.count != max_typical(n))
      throw GraphError("no typical witness found for order " + std::to_string(n));
    out.push_back({std::string(objective::kTMax), n, {emit_graph6(*r.witness)}, {r.count}});
  }
  return out;
}

/// Order-9 pantypical graph of the target size 11: connected, with a unique
/// maximum-degree vertex so that hanging a path from it keeps every type.
/// The smallest graph6 string among the candidates wins.
inline std::vector<FixtureRecord> search_pantypical_fixture(const SearchOptions& opt) {
  std::string best;
  EnumOptions eo;
  eo.jobs = opt.jobs;
  eo.ordered = true;
  enumerate_graphs(
      kMinPantypicalOrder, EnumConstraint{},
      [&](const Graph& g) {
        if (g.size() != kMinPantypicalSize || !is_connected(g) || !is_pantypical(g)) return;
        if (!max_degree_vertex(g).second) return;
        std::string s = emit_graph6(g);
        if (best.empty() || s < best) best = std::move(s);
      },
      eo);
  if (best.empty()) throw GraphError("no order-9 pantypical graph of size 11 found");
  return {{std::string(objective::kPantypical), kMinPantypicalOrder, {best}, {kMinPantypicalSize}}};
}

inline std::vector<FixtureRecord> search_figure1_fixture(const SearchOptions& opt) {
  SweepOptions so;
  so.jobs = opt.jobs;
  auto pair = find_separating_pair({4, 4, 4, 3, 3, 2}, so);
  if (!pair) throw GraphError("no separating pair for 4,4,4,3,3,2");
  return {{std::string(objective::kFigure1),
           6,
           {emit_graph6(pair->first), emit_graph6(pair->second)},
           {pair->first_types[VertexType::VeryWeak], pair->second_types[VertexType::VeryWeak]}}};
}

}  // namespace vtypes
