#pragma once

#include <array>
#include <cassert>
#include <string_view>

#include "vtypes/graph.hpp"

namespace vtypes {

/// The seven vertex types, in the fixed tuple order VS, S, R, VT, T, W, VW.
enum class VertexType : std::uint8_t {
  VeryStrong,
  Strong,
  Regular,
  VeryTypical,
  Typical,
  Weak,
  VeryWeak,
};

inline constexpr int kNumVertexTypes = 7;

inline constexpr std::array<VertexType, kNumVertexTypes> kAllVertexTypes = {
    VertexType::VeryStrong, VertexType::Strong,  VertexType::Regular, VertexType::VeryTypical,
    VertexType::Typical,    VertexType::Weak,    VertexType::VeryWeak};

constexpr std::string_view short_name(VertexType t) {
  constexpr std::array<std::string_view, kNumVertexTypes> names = {"VS", "S", "R", "VT",
                                                                    "T",  "W", "VW"};
  return names[static_cast<int>(t)];
}

constexpr std::string_view long_name(VertexType t) {
  constexpr std::array<std::string_view, kNumVertexTypes> names = {
      "very_strong", "strong", "regular", "very_typical", "typical", "weak", "very_weak"};
  return names[static_cast<int>(t)];
}

/// Gamma(G): number of vertices of each type, indexed by VertexType.
struct TypeTuple {
  std::array<int, kNumVertexTypes> counts{};

  int& operator[](VertexType t) { return counts[static_cast<int>(t)]; }
  int operator[](VertexType t) const { return counts[static_cast<int>(t)]; }

  int total() const {
    int s = 0;
    for (int c : counts) s += c;
    return s;
  }

  friend bool operator==(const TypeTuple&, const TypeTuple&) = default;
  friend auto operator<=>(const TypeTuple&, const TypeTuple&) = default;
};

namespace detail {

// Which relations d(v) <, =, > d(u) occur among the neighbors v of u.
inline VertexType type_from_mix(int degree, bool lower, bool equal, bool higher) {
  VertexType t;
  if (!lower && !higher) {
    t = VertexType::Regular;  // includes isolated vertices
  } else if (lower && !equal && !higher) {
    t = VertexType::VeryStrong;
  } else if (lower && equal && !higher) {
    t = VertexType::Strong;
  } else if (!lower && !equal) {
    t = VertexType::VeryWeak;
  } else if (!lower && equal) {
    t = VertexType::Weak;
  } else if (!equal) {
    t = VertexType::VeryTypical;
  } else {
    t = VertexType::Typical;
  }
  // Degree floors of the definition follow from the neighbor mix.
  assert(t != VertexType::VeryStrong || degree >= 2);
  assert(t != VertexType::Strong || degree >= 2);
  assert(t != VertexType::VeryTypical || degree >= 2);
  assert(t != VertexType::Typical || degree >= 3);
  assert(t != VertexType::Weak || degree >= 2);
  assert(t != VertexType::VeryWeak || degree >= 1);
  (void)degree;
  return t;
}

template <std::size_t W>
VertexType classify_with_degrees(const BasicGraph<W>& g, const int* deg, Vertex u) {
  const int du = deg[u];
  bool lower = false;
  bool equal = false;
  bool higher = false;
  g.for_each_neighbor(u, [&](Vertex v) {
    const int dv = deg[v];
    lower |= dv < du;
    equal |= dv == du;
    higher |= dv > du;
  });
  return type_from_mix(du, lower, equal, higher);
}

}  // namespace detail

template <std::size_t W>
VertexType classify_vertex(const BasicGraph<W>& g, Vertex v) {
  if (v < 0 || v >= g.order()) throw GraphError("vertex " + std::to_string(v) + " out of range");
  const auto deg = g.degrees();
  return detail::classify_with_degrees(g, deg.data(), v);
}

template <std::size_t W>
std::vector<VertexType> classify_all(const BasicGraph<W>& g) {
  const auto deg = g.degrees();
  std::vector<VertexType> out(g.order());
  for (int v = 0; v < g.order(); ++v) out[v] = detail::classify_with_degrees(g, deg.data(), v);
  return out;
}

template <std::size_t W>
TypeTuple type_tuple(const BasicGraph<W>& g) {
  std::array<int, BasicGraph<W>::kCapacity> deg{};
  for (int v = 0; v < g.order(); ++v) deg[v] = g.degree(v);
  TypeTuple tt;
  for (int v = 0; v < g.order(); ++v) ++tt[detail::classify_with_degrees(g, deg.data(), v)];
  return tt;
}

inline bool is_pantypical(const TypeTuple& tt) {
  for (int c : tt.counts)
    if (c < 1) return false;
  return true;
}

template <std::size_t W>
bool is_pantypical(const BasicGraph<W>& g) {
  return is_pantypical(type_tuple(g));
}

}  // namespace vtypes
