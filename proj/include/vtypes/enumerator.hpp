#pragma once

#include <atomic>
#include <condition_variable>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <optional>
#include <thread>
#include <type_traits>
#include <unordered_set>
#include <vector>

#include "vtypes/canonical.hpp"
#include "vtypes/graph.hpp"

namespace vtypes {

inline constexpr int kDefaultEnumGuard = 10;

/// Filters applied during generation.
///
/// max_degree and `hereditary` prune partial graphs, so both must be
/// preserved under vertex deletion: a graph whose induced subgraphs can
/// violate them would be lost. min_degree is not hereditary and is only
/// checked on complete graphs of the target order.
struct EnumConstraint {
  std::optional<int> min_degree;
  std::optional<int> max_degree;
  /// Evaluated on every partial graph (including the final one); returning
  /// false discards the graph and its whole subtree.
  std::function<bool(const Graph&)> hereditary;
};

struct EnumOptions {
  int jobs = 1;
  /// With jobs > 1: deliver graphs to the visitor from one thread, in the
  /// same order as a sequential run. Otherwise the visitor is called
  /// concurrently and must be thread safe.
  bool ordered = true;
  int guard = kDefaultEnumGuard;
};

namespace detail {

// Canonical augmentation by vertices. A child G = H + v is kept iff v lies in
// the automorphism orbit of the vertex that G's canonical labeling puts last;
// children of one parent are then deduplicated by canonical form. Every class
// of order k + 1 is reached from exactly one class of order k.
class Augmenter {
 public:
  Augmenter(const EnumConstraint& c, int target) : c_(c), target_(target) {}

  /// Calls emit(child) for each accepted child of parent (order k < target).
  template <class Emit>
  void children(Graph& parent, Emit&& emit) const {
    const int k = parent.order();
    const bool last_level = k + 1 == target_;
    std::array<int, kMaxOrder> deg{};
    int parent_min = kMaxOrder;
    for (int u = 0; u < k; ++u) {
      deg[u] = std::popcount(parent.row(u));
      parent_min = std::min(parent_min, deg[u]);
    }
    const int max_deg = c_.max_degree.value_or(kMaxOrder);
    std::unordered_set<CanonicalForm, CanonicalFormHash> seen;
    const std::uint64_t subsets = std::uint64_t{1} << k;
    for (std::uint64_t mask = 0; mask < subsets; ++mask) {
      const int dv = std::popcount(mask);
      if (dv > max_deg) continue;
      int min_other = kMaxOrder;
      bool over = false;
      for (int u = 0; u < k; ++u) {
        const int du = deg[u] + static_cast<int>((mask >> u) & 1U);
        min_other = std::min(min_other, du);
        over |= du > max_deg;
      }
      if (over) continue;
      // the new vertex must have minimum degree to be the canonical deletion
      if (dv > min_other) continue;
      if (last_level && c_.min_degree && std::min(dv, min_other) < *c_.min_degree) continue;
      parent.push_vertex_unchecked(mask);
      auto key = accept(parent, k);
      if (key && seen.insert(*key).second && (!c_.hereditary || c_.hereditary(parent))) emit(parent);
      parent.pop_vertex_unchecked();
    }
  }

 private:
  static std::optional<CanonicalForm> accept(const Graph& g, Vertex v) {
    const int n = g.order();
    auto p = refined_unit_partition(g);
    const int last = p.cells - 1;
    bool in_last = false;
    for (int i = p.start[last]; i < n; ++i) in_last |= p.elems[i] == v;
    if (!in_last) return std::nullopt;

    CanonicalSearch s(g);
    s.run(OrderedPartition::unit(n));
    auto form = form_from(s, n);
    const Vertex m = s.best_labeling()[n - 1];
    if (m == v || p.cell_size(last) == 1) return form;
    if (same_orbit(s.automorphisms(), n, v, m)) return form;
    if (rooted(g, v) == rooted(g, m)) return form;
    return std::nullopt;
  }

  static bool same_orbit(const std::vector<Labeling>& autos, int n, Vertex a, Vertex b) {
    if (autos.empty()) return false;
    std::array<std::uint8_t, kMaxOrder> parent{};
    for (int i = 0; i < n; ++i) parent[i] = static_cast<std::uint8_t>(i);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& g : autos)
      for (int x = 0; x < n; ++x) {
        const int rx = find(x);
        const int ry = find(g[x]);
        if (rx != ry) parent[rx] = static_cast<std::uint8_t>(ry);
      }
    return find(a) == find(b);
  }

  static CanonicalForm rooted(const Graph& g, Vertex root) {
    auto p = OrderedPartition::unit(g.order());
    p.individualize(root);
    CanonicalSearch s(g);
    s.run(p);
    return form_from(s, g.order());
  }

  const EnumConstraint& c_;
  int target_;
};

template <class Visitor>
void call_visitor(Visitor& visit, const Graph& g, int worker) {
  if constexpr (std::is_invocable_v<Visitor&, const Graph&, int>) {
    visit(g, worker);
  } else {
    visit(g);
  }
}

template <class Sink>
void extend_to(const Augmenter& aug, Graph& g, int target, Sink& sink) {
  if (g.order() == target) {
    sink(g);
    return;
  }
  aug.children(g, [&](Graph& child) {
    Graph next = child;
    extend_to(aug, next, target, sink);
  });
}

inline bool root_passes(const EnumConstraint& c, const Graph& g, int target) {
  if (c.hereditary && !c.hereditary(g)) return false;
  if (g.order() == target && c.min_degree && g.min_degree() < *c.min_degree) return false;
  return true;
}

}  // namespace detail

/// Visits one representative of every isomorphism class of order-n graphs
/// satisfying c. Returns the number of graphs visited. Exceptions thrown by
/// the visitor propagate to the caller.
template <class Visitor>
std::uint64_t enumerate_graphs(int n, const EnumConstraint& c, Visitor&& visit,
                               const EnumOptions& opt = {}) {
  if (n < 0) throw GraphError("negative order");
  if (n > opt.guard)
    throw GraphError("enumeration order " + std::to_string(n) + " exceeds guard " +
                     std::to_string(opt.guard));
  std::uint64_t count = 0;
  Graph root(0);
  if (n == 0) {
    if (!detail::root_passes(c, root, 0)) return 0;
    detail::call_visitor(visit, root, 0);
    return 1;
  }
  root = Graph(1);
  if (c.max_degree && *c.max_degree < 0) return 0;
  if (!detail::root_passes(c, root, n)) return 0;
  detail::Augmenter aug(c, n);

  const int jobs = std::max(1, opt.jobs);
  if (jobs == 1 || n <= 4) {
    auto sink = [&](const Graph& g) {
      ++count;
      detail::call_visitor(visit, g, 0);
    };
    detail::extend_to(aug, root, n, sink);
    return count;
  }

  // Independent work units: all classes two levels below the target.
  const int split = n - 2;
  std::vector<Graph> units;
  {
    auto collect = [&](const Graph& g) { units.push_back(g); };
    detail::extend_to(aug, root, split, collect);
  }

  std::atomic<std::size_t> next{0};
  std::atomic<std::uint64_t> total{0};
  std::exception_ptr failure;
  std::mutex mu;
  std::condition_variable cv;
  std::atomic<bool> abort{false};

  // ordered mode: per-unit buffers of adjacency rows, flushed in unit order
  std::vector<std::vector<std::uint64_t>> buffers(opt.ordered ? units.size() : 0);
  std::vector<char> done(opt.ordered ? units.size() : 0, 0);

  auto worker = [&](int id) {
    try {
      for (;;) {
        if (abort.load()) return;
        const std::size_t u = next.fetch_add(1);
        if (u >= units.size()) return;
        Graph g = units[u];
        if (opt.ordered) {
          std::vector<std::uint64_t> buf;
          auto sink = [&](const Graph& h) {
            for (int v = 0; v < n; ++v) buf.push_back(h.row(v));
          };
          detail::extend_to(aug, g, n, sink);
          std::lock_guard lock(mu);
          buffers[u] = std::move(buf);
          done[u] = 1;
          cv.notify_all();
        } else {
          std::uint64_t local = 0;
          auto sink = [&](const Graph& h) {
            ++local;
            detail::call_visitor(visit, h, id);
          };
          detail::extend_to(aug, g, n, sink);
          total += local;
        }
      }
    } catch (...) {
      std::lock_guard lock(mu);
      if (!failure) failure = std::current_exception();
      abort = true;
      cv.notify_all();
    }
  };

  std::vector<std::thread> pool;
  for (int j = 0; j < jobs; ++j) pool.emplace_back(worker, j);

  if (opt.ordered) {
    try {
      for (std::size_t u = 0; u < units.size(); ++u) {
        std::vector<std::uint64_t> buf;
        {
          std::unique_lock lock(mu);
          cv.wait(lock, [&] { return done[u] || failure; });
          if (failure) break;
          buf = std::move(buffers[u]);
        }
        for (std::size_t off = 0; off < buf.size(); off += n) {
          Graph h(n);
          for (int a = 0; a < n; ++a)
            for (std::uint64_t r = buf[off + a] & ~Graph::low_mask(a + 1); r; r &= r - 1)
              h.add_edge(a, std::countr_zero(r));
          ++count;
          detail::call_visitor(visit, h, 0);
        }
      }
    } catch (...) {
      std::lock_guard lock(mu);
      if (!failure) failure = std::current_exception();
      abort = true;
    }
  }

  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return opt.ordered ? count : total.load();
}

inline std::uint64_t count_graphs(int n, const EnumOptions& opt = {}) {
  return enumerate_graphs(n, EnumConstraint{}, [](const Graph&) {}, opt);
}

}  // namespace vtypes
