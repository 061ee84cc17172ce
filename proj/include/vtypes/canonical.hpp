#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "vtypes/graph.hpp"

namespace vtypes {

/// Default largest order accepted by canonical_form. Callers that know what
/// they are doing can pass a larger guard.
inline constexpr int kDefaultCanonicalGuard = 10;

/// Canonical representative of an isomorphism class: the relabeled adjacency
/// rows, row p holding bit (63 - q) iff positions p and q are adjacent.
/// Comparing rows lexicographically is the same as comparing the row-major
/// upper-triangle bit strings, and the stored form is the maximum of that
/// string over the labelings compatible with the refined degree partition.
struct CanonicalForm {
  int order = 0;
  std::vector<std::uint64_t> rows;

  /// Row-major upper triangle, '1'/'0' per pair (p, q), p < q.
  std::string upper_triangle_bits() const {
    std::string s;
    for (int p = 0; p < order; ++p)
      for (int q = p + 1; q < order; ++q) s += ((rows[p] >> (63 - q)) & 1U) ? '1' : '0';
    return s;
  }

  Graph graph() const {
    Graph g(order);
    for (int p = 0; p < order; ++p)
      for (int q = p + 1; q < order; ++q)
        if ((rows[p] >> (63 - q)) & 1U) g.add_edge(p, q);
    return g;
  }

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

struct CanonicalFormHash {
  std::size_t operator()(const CanonicalForm& c) const noexcept {
    std::uint64_t h = 0x9E3779B97F4A7C15ULL ^ static_cast<std::uint64_t>(c.order);
    for (auto r : c.rows) {
      h ^= r + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

/// Ordered partition of the vertex set. Cells are contiguous runs of
/// `elems`; cell c spans [start[c], start[c + 1]).
struct OrderedPartition {
  int n = 0;
  int cells = 0;
  std::array<std::uint8_t, kMaxOrder> elems{};
  std::array<std::uint8_t, kMaxOrder + 1> start{};

  static OrderedPartition unit(int n) {
    OrderedPartition p;
    p.n = n;
    p.cells = n > 0 ? 1 : 0;
    for (int v = 0; v < n; ++v) p.elems[v] = static_cast<std::uint8_t>(v);
    p.start[0] = 0;
    p.start[1] = static_cast<std::uint8_t>(n);
    return p;
  }

  int cell_size(int c) const { return start[c + 1] - start[c]; }
  bool discrete() const { return cells == n; }

  std::uint64_t cell_mask(int c) const {
    std::uint64_t m = 0;
    for (int i = start[c]; i < start[c + 1]; ++i) m |= Graph::bit(elems[i]);
    return m;
  }

  int cell_of(Vertex v) const {
    for (int c = 0; c < cells; ++c)
      for (int i = start[c]; i < start[c + 1]; ++i)
        if (elems[i] == v) return c;
    return -1;
  }

  /// Moves v to a new singleton cell placed just before the rest of its cell.
  void individualize(Vertex v) {
    const int c = cell_of(v);
    if (cell_size(c) == 1) return;
    const int s = start[c];
    for (int i = s; i < start[c + 1]; ++i)
      if (elems[i] == v) {
        std::swap(elems[i], elems[s]);
        break;
      }
    insert_boundary(c + 1, s + 1);
  }

  void insert_boundary(int at, int pos) {
    for (int c = cells + 1; c > at; --c) start[c] = start[c - 1];
    start[at] = static_cast<std::uint8_t>(pos);
    ++cells;
  }
};

namespace detail {

/// Splits every cell by neighbor counts into every other cell until the
/// partition is equitable. Sub-cells are ordered by decreasing count, so the
/// result depends only on the graph structure and the input cell order.
inline void refine(const Graph& g, OrderedPartition& p) {
  std::array<int, kMaxOrder> count{};
  bool changed = true;
  while (changed) {
    changed = false;
    for (int w = 0; w < p.cells && !changed; ++w) {
      const std::uint64_t wmask = p.cell_mask(w);
      for (int c = 0; c < p.cells; ++c) {
        const int s = p.start[c];
        const int e = p.start[c + 1];
        if (e - s == 1) continue;
        bool uniform = true;
        for (int i = s; i < e; ++i) {
          count[p.elems[i]] = std::popcount(g.row(p.elems[i]) & wmask);
          uniform &= count[p.elems[i]] == count[p.elems[s]];
        }
        if (uniform) continue;
        // insertion sort by decreasing count; cells are tiny
        for (int i = s + 1; i < e; ++i) {
          const auto x = p.elems[i];
          int j = i - 1;
          while (j >= s && count[p.elems[j]] < count[x]) {
            p.elems[j + 1] = p.elems[j];
            --j;
          }
          p.elems[j + 1] = x;
        }
        int inserted = 0;
        for (int i = s + 1; i < e; ++i)
          if (count[p.elems[i]] != count[p.elems[i - 1]]) {
            p.insert_boundary(c + 1 + inserted, i);
            ++inserted;
          }
        c += inserted;
        changed = true;
      }
    }
  }
}

using Labeling = std::array<std::uint8_t, kMaxOrder>;

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()) {}

  void run(OrderedPartition p) {
    refine(g_, p);
    fixed_.clear();
    descend(p);
  }

  const std::array<std::uint64_t, kMaxOrder>& best_rows() const { return best_; }
  const Labeling& best_labeling() const { return best_lab_; }
  const std::vector<Labeling>& automorphisms() const { return autos_; }
  std::uint64_t leaves() const { return leaves_; }

 private:
  void descend(const OrderedPartition& p) {
    if (p.discrete()) {
      leaf(p);
      return;
    }
    int target = 0;
    while (p.cell_size(target) == 1) ++target;
    std::vector<Vertex> tried;
    for (int i = p.start[target]; i < p.start[target + 1]; ++i) {
      const Vertex v = p.elems[i];
      if (equivalent_to_tried(v, tried)) continue;
      tried.push_back(v);
      OrderedPartition child = p;
      child.individualize(v);
      refine(g_, child);
      fixed_.push_back(v);
      descend(child);
      fixed_.pop_back();
    }
  }

  // True when an automorphism found so far that fixes the current prefix
  // pointwise links v to a branch already explored at this node.
  bool equivalent_to_tried(Vertex v, const std::vector<Vertex>& tried) const {
    if (tried.empty() || autos_.empty()) return false;
    std::array<std::uint8_t, kMaxOrder> parent{};
    for (int i = 0; i < n_; ++i) parent[i] = static_cast<std::uint8_t>(i);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    bool any = false;
    for (const auto& a : autos_) {
      bool fixes = true;
      for (Vertex f : fixed_)
        if (a[f] != f) {
          fixes = false;
          break;
        }
      if (!fixes) continue;
      any = true;
      for (int x = 0; x < n_; ++x) {
        const int rx = find(x);
        const int ry = find(a[x]);
        if (rx != ry) parent[rx] = static_cast<std::uint8_t>(ry);
      }
    }
    if (!any) return false;
    const int rv = find(v);
    for (Vertex t : tried)
      if (find(t) == rv) return true;
    return false;
  }

  void leaf(const OrderedPartition& p) {
    ++leaves_;
    std::array<std::uint8_t, kMaxOrder> pos{};
    for (int i = 0; i < n_; ++i) pos[p.elems[i]] = static_cast<std::uint8_t>(i);
    std::array<std::uint64_t, kMaxOrder> rows{};
    // -1: this leaf is smaller, 0: tie so far, 1: new best
    int cmp = have_best_ ? 0 : 1;
    for (int i = 0; i < n_; ++i) {
      std::uint64_t r = 0;
      for (std::uint64_t nb = g_.row(p.elems[i]); nb; nb &= nb - 1)
        r |= std::uint64_t{1} << (63 - pos[std::countr_zero(nb)]);
      rows[i] = r;
      if (cmp == 0) {
        if (r < best_[i]) return;
        if (r > best_[i]) cmp = 1;
      }
    }
    if (cmp == 1) {
      best_ = rows;
      best_lab_ = p.elems;
      have_best_ = true;
      return;
    }
    // Same string as the best leaf: best_lab_[i] -> elems[i] is an automorphism.
    Labeling a{};
    for (int i = 0; i < n_; ++i) a[best_lab_[i]] = p.elems[i];
    bool identity = true;
    for (int i = 0; i < n_; ++i) identity &= a[i] == i;
    if (!identity) autos_.push_back(a);
  }

  const Graph& g_;
  int n_;
  bool have_best_ = false;
  std::array<std::uint64_t, kMaxOrder> best_{};
  Labeling best_lab_{};
  std::vector<Labeling> autos_;
  std::vector<Vertex> fixed_;
  std::uint64_t leaves_ = 0;
};

inline void check_guard(const Graph& g, int guard) {
  if (g.order() > guard)
    throw GraphError("canonical form: order " + std::to_string(g.order()) + " exceeds guard " +
                     std::to_string(guard));
}

inline CanonicalForm form_from(const CanonicalSearch& s, int n) {
  CanonicalForm cf;
  cf.order = n;
  cf.rows.assign(s.best_rows().begin(), s.best_rows().begin() + n);
  return cf;
}

}  // namespace detail

/// Equitable refinement of the unit partition.
inline OrderedPartition refined_unit_partition(const Graph& g) {
  auto p = OrderedPartition::unit(g.order());
  detail::refine(g, p);
  return p;
}

struct CanonicalLabeling {
  CanonicalForm form;
  /// labeling[p] = original vertex placed at canonical position p.
  std::vector<Vertex> labeling;
  /// Automorphisms discovered during the search (vertex maps, not
  /// necessarily a full generating set).
  std::vector<std::vector<Vertex>> automorphisms;
};

inline CanonicalLabeling canonical_labeling(const Graph& g,
                                            int guard = kDefaultCanonicalGuard) {
  detail::check_guard(g, guard);
  const int n = g.order();
  detail::CanonicalSearch s(g);
  s.run(OrderedPartition::unit(n));
  CanonicalLabeling out;
  out.form = detail::form_from(s, n);
  out.labeling.assign(s.best_labeling().begin(), s.best_labeling().begin() + n);
  for (const auto& a : s.automorphisms()) out.automorphisms.emplace_back(a.begin(), a.begin() + n);
  return out;
}

inline CanonicalForm canonical_form(const Graph& g, int guard = kDefaultCanonicalGuard) {
  detail::check_guard(g, guard);
  detail::CanonicalSearch s(g);
  s.run(OrderedPartition::unit(g.order()));
  return detail::form_from(s, g.order());
}

/// Canonical form of g with vertex `root` distinguished. Equal for (g, x) and
/// (h, y) iff some isomorphism g -> h maps x to y.
inline CanonicalForm rooted_canonical_form(const Graph& g, Vertex root,
                                           int guard = kDefaultCanonicalGuard) {
  detail::check_guard(g, guard);
  auto p = OrderedPartition::unit(g.order());
  p.individualize(root);
  detail::CanonicalSearch s(g);
  s.run(p);
  return detail::form_from(s, g.order());
}

inline bool isomorphic(const Graph& a, const Graph& b, int guard = kDefaultCanonicalGuard) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  return canonical_form(a, guard) == canonical_form(b, guard);
}

}  // namespace vtypes
