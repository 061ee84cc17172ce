#pragma once

// Independent reference implementations for the test suites. Nothing here
// calls into the library's classifier, canonical labeler or enumerator, so a
// bug there cannot hide behind a matching bug in the oracle.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "vtypes/classifier.hpp"
#include "vtypes/graph.hpp"

namespace vtypes::testing {

/// The seven clauses of the vertex-type definition, each evaluated literally
/// from the degree of u and its neighbors. Index order matches VertexType.
template <std::size_t W>
std::array<bool, kNumVertexTypes> definition_clauses(const BasicGraph<W>& g, Vertex u) {
  const int du = g.degree(u);
  std::vector<int> nd;
  g.for_each_neighbor(u, [&](Vertex v) { nd.push_back(g.degree(v)); });
  auto all = [&](auto pred) { return std::all_of(nd.begin(), nd.end(), pred); };
  auto any = [&](auto pred) { return std::any_of(nd.begin(), nd.end(), pred); };
  const auto lt = [&](int d) { return d < du; };
  const auto eq = [&](int d) { return d == du; };
  const auto gt = [&](int d) { return d > du; };

  // Typical: three distinct neighbors x, y, z with d(x) < d(u) = d(y) < d(z).
  bool typical = false;
  for (std::size_t x = 0; x < nd.size() && !typical; ++x)
    for (std::size_t y = 0; y < nd.size() && !typical; ++y)
      for (std::size_t z = 0; z < nd.size() && !typical; ++z)
        typical = x != y && y != z && x != z && nd[x] < du && nd[y] == du && nd[z] > du;

  return {
      du >= 2 && all(lt),
      du >= 2 && all([&](int d) { return du >= d; }) && any(lt) && any(eq),
      all(eq),
      du >= 2 && all([&](int d) { return d != du; }) && any(gt) && any(lt),
      du >= 3 && typical,
      du >= 2 && all([&](int d) { return du <= d; }) && any(gt) && any(eq),
      du >= 1 && all(gt),
  };
}

/// Reference type of u: the clause that holds, or -1 unless exactly one does.
template <std::size_t W>
int definition_type(const BasicGraph<W>& g, Vertex u) {
  const auto c = definition_clauses(g, u);
  if (std::count(c.begin(), c.end(), true) != 1) return -1;
  return static_cast<int>(std::find(c.begin(), c.end(), true) - c.begin());
}

template <std::size_t W>
std::array<int, kNumVertexTypes> definition_tuple(const BasicGraph<W>& g) {
  std::array<int, kNumVertexTypes> t{};
  for (int v = 0; v < g.order(); ++v) {
    const int k = definition_type(g, v);
    if (k >= 0) ++t[k];
  }
  return t;
}

/// Upper-triangle bit string in column order, the same layout as graph6
/// but computed by hand.
inline std::uint64_t labeled_code(const Graph& g) {
  std::uint64_t code = 0;
  int k = 0;
  for (int j = 1; j < g.order(); ++j)
    for (int i = 0; i < j; ++i, ++k)
      if (g.adjacent(i, j)) code |= std::uint64_t{1} << k;
  return code;
}

inline Graph graph_from_code(int n, std::uint64_t code) {
  Graph g(n);
  int k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k)
      if ((code >> k) & 1) g.add_edge(i, j);
  return g;
}

/// Brute-force canonical code: the maximum labeled_code over all n!
/// relabelings. Only usable for n <= 7.
inline std::uint64_t brute_canonical_code(const Graph& g) {
  const int n = g.order();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  const auto edges = g.edges();
  std::uint64_t best = 0;
  do {
    std::uint64_t code = 0;
    for (auto [u, v] : edges) {
      const int a = std::min(perm[u], perm[v]);
      const int b = std::max(perm[u], perm[v]);
      code |= std::uint64_t{1} << (b * (b - 1) / 2 + a);
    }
    best = std::max(best, code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

/// Number of unlabeled graphs of order n by Burnside's lemma: the average
/// over all permutations of 2^(cycles induced on vertex pairs). Computed in
/// long double over cycle types, exact for the small n used here.
inline std::uint64_t burnside_graph_count(int n) {
  // Enumerate integer partitions of n as cycle types.
  std::vector<int> parts;
  long double total = 0;
  long double fact_n = 1;
  for (int i = 2; i <= n; ++i) fact_n *= i;
  auto visit = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      // Pair cycles: within a cycle of length l, floor(l/2); between cycles
      // of lengths a and b, gcd(a, b).
      long long cycles = 0;
      for (std::size_t i = 0; i < parts.size(); ++i) {
        cycles += parts[i] / 2;
        for (std::size_t j = i + 1; j < parts.size(); ++j) cycles += std::gcd(parts[i], parts[j]);
      }
      // Permutations with this cycle type: n! / prod(l^m_l * m_l!).
      long double denom = 1;
      for (std::size_t i = 0; i < parts.size();) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        const int m = static_cast<int>(j - i);
        for (int k = 0; k < m; ++k) denom *= parts[i] * (k + 1);
        i = j;
      }
      total += fact_n / denom * std::pow(2.0L, static_cast<long double>(cycles));
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      parts.push_back(p);
      self(self, remaining - p, p);
      parts.pop_back();
    }
  };
  visit(visit, n, n);
  return static_cast<std::uint64_t>(std::llround(total / fact_n));
}

/// G(n, p) random graph.
template <GraphType G = Graph>
G random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  G g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

/// Random graph of random order in [lo, hi] and random density.
template <GraphType G = Graph>
G random_graph(std::mt19937_64& rng, int lo, int hi) {
  const int n = std::uniform_int_distribution<int>(lo, hi)(rng);
  const double p = std::uniform_real_distribution<double>(0.05, 0.95)(rng);
  return random_graph<G>(rng, n, p);
}

inline std::vector<Vertex> random_permutation(std::mt19937_64& rng, int n) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

/// Structural invariants every graph must satisfy.
template <std::size_t W>
bool well_formed(const BasicGraph<W>& g) {
  long sum = 0;
  for (int u = 0; u < g.order(); ++u) {
    if (g.adjacent(u, u)) return false;
    for (int v = 0; v < g.order(); ++v)
      if (g.adjacent(u, v) != g.adjacent(v, u)) return false;
    sum += g.degree(u);
  }
  return sum % 2 == 0 && sum / 2 == g.size();
}

}  // namespace vtypes::testing
