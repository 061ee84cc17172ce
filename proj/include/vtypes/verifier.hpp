#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vtypes/canonical.hpp"
#include "vtypes/classifier.hpp"
#include "vtypes/constructions.hpp"
#include "vtypes/enumerator.hpp"
#include "vtypes/expected.hpp"
#include "vtypes/graph6.hpp"

namespace vtypes {

inline constexpr int kConstructiveMaxOrder = 200;

/// One checked claim. pass is true iff found == expected.
struct VerifyReport {
  std::string claim;
  int n = 0;
  long long found = 0;
  long long expected = 0;
  std::string witness_graph6;
  std::uint64_t scanned = 0;
  long long millis = 0;
  bool pass = false;
};

inline VerifyReport make_report(std::string claim, int n, long long found, long long expected,
                                std::string witness = {}, std::uint64_t scanned = 0,
                                long long millis = 0) {
  VerifyReport r;
  r.claim = std::move(claim);
  r.n = n;
  r.found = found;
  r.expected = expected;
  r.witness_graph6 = std::move(witness);
  r.scanned = scanned;
  r.millis = millis;
  r.pass = found == expected;
  return r;
}

/// Everything one exhaustive pass over the order-n classes collects.
struct SweepStats {
  int order = 0;
  std::uint64_t scanned = 0;
  std::array<int, kNumVertexTypes> max_count{};
  /// graph6 of a maximizer per type; the lexicographically smallest wins ties.
  std::array<std::string, kNumVertexTypes> witness;
  std::uint64_t pantypical = 0;
  std::optional<int> min_pantypical_size;
  std::string min_pantypical_witness;
  /// Among minimum-size pantypical graphs, one with a unique vertex of
  /// maximum degree, if any.
  std::string min_pantypical_unique_max_witness;
  /// Same minimum restricted to connected graphs.
  std::optional<int> min_connected_pantypical_size;
  std::string min_connected_pantypical_witness;
  long long millis = 0;
};

struct SweepOptions {
  int jobs = 1;
  int guard = kDefaultEnumGuard;
};

namespace detail {

inline void keep_smaller(std::string& slot, const Graph& g) {
  std::string s = emit_graph6(g);
  if (slot.empty() || s < slot) slot = std::move(s);
}

inline void absorb(SweepStats& acc, const Graph& g) {
  ++acc.scanned;
  const TypeTuple tt = type_tuple(g);
  for (int t = 0; t < kNumVertexTypes; ++t) {
    if (tt.counts[t] > acc.max_count[t]) {
      acc.max_count[t] = tt.counts[t];
      acc.witness[t].clear();
    }
    if (tt.counts[t] == acc.max_count[t] && tt.counts[t] > 0) keep_smaller(acc.witness[t], g);
  }
  if (is_pantypical(tt)) {
    ++acc.pantypical;
    const int m = g.size();
    if (!acc.min_pantypical_size || m < *acc.min_pantypical_size) {
      acc.min_pantypical_size = m;
      acc.min_pantypical_witness.clear();
      acc.min_pantypical_unique_max_witness.clear();
    }
    if (m == *acc.min_pantypical_size) {
      keep_smaller(acc.min_pantypical_witness, g);
      if (max_degree_vertex(g).second) keep_smaller(acc.min_pantypical_unique_max_witness, g);
    }
    if (is_connected(g)) {
      if (!acc.min_connected_pantypical_size || m < *acc.min_connected_pantypical_size) {
        acc.min_connected_pantypical_size = m;
        acc.min_connected_pantypical_witness.clear();
      }
      if (m == *acc.min_connected_pantypical_size)
        keep_smaller(acc.min_connected_pantypical_witness, g);
    }
  }
}

inline void merge_slot(std::string& into, const std::string& from) {
  if (!from.empty() && (into.empty() || from < into)) into = from;
}

inline void merge(SweepStats& into, const SweepStats& from) {
  into.scanned += from.scanned;
  for (int t = 0; t < kNumVertexTypes; ++t) {
    if (from.max_count[t] > into.max_count[t]) {
      into.max_count[t] = from.max_count[t];
      into.witness[t] = from.witness[t];
    } else if (from.max_count[t] == into.max_count[t]) {
      merge_slot(into.witness[t], from.witness[t]);
    }
  }
  into.pantypical += from.pantypical;
  if (from.min_pantypical_size) {
    if (!into.min_pantypical_size || *from.min_pantypical_size < *into.min_pantypical_size) {
      into.min_pantypical_size = from.min_pantypical_size;
      into.min_pantypical_witness = from.min_pantypical_witness;
      into.min_pantypical_unique_max_witness = from.min_pantypical_unique_max_witness;
    } else if (*from.min_pantypical_size == *into.min_pantypical_size) {
      merge_slot(into.min_pantypical_witness, from.min_pantypical_witness);
      merge_slot(into.min_pantypical_unique_max_witness, from.min_pantypical_unique_max_witness);
    }
  }
  if (from.min_connected_pantypical_size) {
    if (!into.min_connected_pantypical_size ||
        *from.min_connected_pantypical_size < *into.min_connected_pantypical_size) {
      into.min_connected_pantypical_size = from.min_connected_pantypical_size;
      into.min_connected_pantypical_witness = from.min_connected_pantypical_witness;
    } else if (*from.min_connected_pantypical_size == *into.min_connected_pantypical_size) {
      merge_slot(into.min_connected_pantypical_witness, from.min_connected_pantypical_witness);
    }
  }
}

inline long long millis_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                               t0)
      .count();
}

}  // namespace detail

/// Classifies every isomorphism class of order n once.
inline SweepStats sweep_order(int n, const SweepOptions& opt = {}) {
  const auto t0 = std::chrono::steady_clock::now();
  const int jobs = std::max(1, opt.jobs);
  std::vector<SweepStats> partial(jobs);
  EnumOptions eo;
  eo.jobs = jobs;
  eo.ordered = false;
  eo.guard = opt.guard;
  enumerate_graphs(
      n, EnumConstraint{}, [&](const Graph& g, int worker) { detail::absorb(partial[worker], g); },
      eo);
  SweepStats out;
  out.order = n;
  for (const auto& p : partial) detail::merge(out, p);
  out.millis = detail::millis_since(t0);
  return out;
}

/// Memoizes sweeps so several claims over the same orders share one pass.
class SweepCache {
 public:
  explicit SweepCache(SweepOptions opt = {}) : opt_(opt) {}

  const SweepStats& get(int n) {
    auto it = cache_.find(n);
    if (it == cache_.end()) it = cache_.emplace(n, sweep_order(n, opt_)).first;
    return it->second;
  }

  const SweepOptions& options() const { return opt_; }

 private:
  SweepOptions opt_;
  std::map<int, SweepStats> cache_;
};

struct MaxCount {
  int count = 0;
  std::optional<Graph> witness;
  std::uint64_t scanned = 0;
};

/// Exact maximum of the number of type-t vertices over all order-n graphs.
inline MaxCount max_type_count(int n, VertexType t, SweepCache& cache) {
  const auto& s = cache.get(n);
  MaxCount out;
  out.count = s.max_count[static_cast<int>(t)];
  out.scanned = s.scanned;
  if (!s.witness[static_cast<int>(t)].empty())
    out.witness = parse_graph6(s.witness[static_cast<int>(t)]);
  return out;
}

inline MaxCount max_type_count(int n, VertexType t, const SweepOptions& opt = {}) {
  SweepCache cache(opt);
  return max_type_count(n, t, cache);
}

template <std::size_t W>
int count_of(const BasicGraph<W>& g, VertexType t) {
  return type_tuple(g)[t];
}

/// Orders in [lo, hi] for which the construction attains the bound.
template <class Build, class Bound>
int constructive_hits(int lo, int hi, VertexType t, Build build, Bound bound) {
  int hits = 0;
  for (int n = lo; n <= hi; ++n) hits += count_of(build(n), t) == bound(n);
  return hits;
}

/// Exhaustive f(n) and g(n) for n = 1..n_max, then the constructive lower
/// bounds up to order 200.
inline std::vector<VerifyReport> verify_theorem1(int n_max, SweepCache& cache) {
  std::vector<VerifyReport> out;
  for (int n = 1; n <= n_max; ++n) {
    const auto& s = cache.get(n);
    const int vt = static_cast<int>(VertexType::VeryTypical);
    const int ty = static_cast<int>(VertexType::Typical);
    out.push_back(make_report("theorem1.f", n, s.max_count[vt], max_very_typical(n), s.witness[vt],
                              s.scanned, s.millis));
    out.push_back(make_report("theorem1.g", n, s.max_count[ty], max_typical(n), s.witness[ty],
                              s.scanned, s.millis));
  }
  auto t0 = std::chrono::steady_clock::now();
  const int f_hits = constructive_hits(5, kConstructiveMaxOrder, VertexType::VeryTypical,
                                       vt_extremal<WideGraph>, max_very_typical);
  out.push_back(make_report("theorem1.f.constructive", kConstructiveMaxOrder, f_hits,
                            kConstructiveMaxOrder - 4, {}, kConstructiveMaxOrder - 4,
                            detail::millis_since(t0)));
  t0 = std::chrono::steady_clock::now();
  const int g_hits = constructive_hits(5, kConstructiveMaxOrder, VertexType::Typical,
                                       t_extremal<WideGraph>, max_typical);
  out.push_back(make_report("theorem1.g.constructive", kConstructiveMaxOrder, g_hits,
                            kConstructiveMaxOrder - 4, {}, kConstructiveMaxOrder - 4,
                            detail::millis_since(t0)));
  return out;
}

inline std::vector<VerifyReport> verify_theorem1(int n_max, const SweepOptions& opt = {}) {
  SweepCache cache(opt);
  return verify_theorem1(n_max, cache);
}

/// Smallest orders admitting n-2 very typical (resp. typical) vertices,
/// counting from order 3 (below that n-2 <= 0 holds vacuously). Exhaustive
/// data rules out every order below the answer; a construction realizes it.
inline std::vector<VerifyReport> verify_corollary2(SweepCache& cache) {
  std::vector<VerifyReport> out;
  struct Part {
    const char* tag;
    VertexType type;
    int answer;
    Graph (*build)(int);
  };
  const Part parts[] = {
      {"vt", VertexType::VeryTypical, 10, vt_extremal<Graph>},
      {"t", VertexType::Typical, 9, t_extremal<Graph>},
  };
  for (const auto& part : parts) {
    int smallest = 0;
    std::uint64_t scanned = 0;
    long long millis = 0;
    for (int n = 3; n < part.answer; ++n) {
      const auto& s = cache.get(n);
      const int found = s.max_count[static_cast<int>(part.type)];
      scanned += s.scanned;
      millis += s.millis;
      out.push_back(make_report(std::string("corollary2.") + part.tag + ".below_n_minus_2", n,
                                found < n - 2 ? 1 : 0, 1, s.witness[static_cast<int>(part.type)],
                                s.scanned, s.millis));
      if (found >= n - 2 && smallest == 0) smallest = n;
    }
    const auto t0 = std::chrono::steady_clock::now();
    const Graph g = part.build(part.answer);
    const int achieved = count_of(g, part.type);
    out.push_back(make_report(std::string("corollary2.") + part.tag + ".construction", part.answer,
                              achieved, part.answer - 2, emit_graph6(g), 1,
                              detail::millis_since(t0)));
    if (smallest == 0 && achieved == part.answer - 2) smallest = part.answer;
    out.push_back(make_report(std::string("corollary2.") + part.tag + ".smallest_order",
                              part.answer, smallest, part.answer, emit_graph6(g), scanned + 1,
                              millis));
  }
  return out;
}

/// No pantypical graph below order 9 (exhaustive up to min(8, n_max)),
/// existence at order 9 when n_max >= 9, and the path-extended family for
/// orders 9..200.
inline std::vector<VerifyReport> verify_theorem3(int n_max, SweepCache& cache) {
  std::vector<VerifyReport> out;
  const int lo_max = std::min(8, n_max);
  std::uint64_t found = 0;
  std::uint64_t scanned = 0;
  long long millis = 0;
  for (int n = 1; n <= lo_max; ++n) {
    const auto& s = cache.get(n);
    found += s.pantypical;
    scanned += s.scanned;
    millis += s.millis;
  }
  out.push_back(make_report("theorem3.none_below_9", lo_max, static_cast<long long>(found), 0, {},
                            scanned, millis));
  if (n_max >= 9) {
    const auto& s = cache.get(9);
    out.push_back(make_report("theorem3.exists_9", 9, s.pantypical > 0 ? 1 : 0, 1,
                              s.min_pantypical_witness, s.scanned, s.millis));
  }
  const auto t0 = std::chrono::steady_clock::now();
  int hits = 0;
  for (int n = 9; n <= kConstructiveMaxOrder; ++n) hits += is_pantypical(pantypical_graph<WideGraph>(n));
  out.push_back(make_report("theorem3.constructive", kConstructiveMaxOrder, hits,
                            kConstructiveMaxOrder - 8, emit_graph6(pantypical_graph(9)),
                            kConstructiveMaxOrder - 8, detail::millis_since(t0)));
  return out;
}

struct PantypicalSize {
  int size = 0;
  Graph witness;
};

/// Fewest edges of a pantypical graph of order n; nullopt when none exists.
inline std::optional<PantypicalSize> min_pantypical_size(int n, SweepCache& cache) {
  const auto& s = cache.get(n);
  if (!s.min_pantypical_size) return std::nullopt;
  return PantypicalSize{*s.min_pantypical_size, parse_graph6(s.min_pantypical_witness)};
}

/// Minimum pantypical size over all order-n graphs ("pansize") and over the
/// connected ones ("pansize.connected"). Both expect 11 at order 9 and -1
/// (none) below; other orders have no reference value and report -1.
inline std::vector<VerifyReport> verify_pansize(int n, SweepCache& cache) {
  const auto& s = cache.get(n);
  const long long expected = n == kMinPantypicalOrder ? kMinPantypicalSize : -1;
  return {make_report("pansize", n, s.min_pantypical_size.value_or(-1), expected,
                      s.min_pantypical_witness, s.scanned, s.millis),
          make_report("pansize.connected", n, s.min_connected_pantypical_size.value_or(-1),
                      expected, s.min_connected_pantypical_witness, s.scanned, s.millis)};
}

/// Erdos-Gallai test for a degree sequence (any order of entries).
inline bool graphical(std::vector<int> ds) {
  std::sort(ds.begin(), ds.end(), std::greater<>());
  long long sum = 0;
  for (int d : ds) {
    if (d < 0 || d >= static_cast<int>(ds.size())) return false;
    sum += d;
  }
  if (sum % 2 != 0) return false;
  const int n = static_cast<int>(ds.size());
  long long left = 0;
  for (int k = 1; k <= n; ++k) {
    left += ds[k - 1];
    long long right = static_cast<long long>(k) * (k - 1);
    for (int i = k; i < n; ++i) right += std::min(ds[i], k);
    if (left > right) return false;
  }
  return true;
}

struct SeparatingPair {
  Graph first;
  Graph second;
  TypeTuple first_types;
  TypeTuple second_types;
};

/// Two non-isomorphic graphs with degree sequence ds and different vertex
/// type tuples. Prefers the pair whose very weak counts differ most; ties go
/// to the earliest pair in enumeration order. nullopt when all realizations
/// share one tuple.
inline std::optional<SeparatingPair> find_separating_pair(std::vector<int> ds,
                                                          const SweepOptions& opt = {}) {
  if (!graphical(ds)) throw GraphError("degree sequence is not graphical");
  std::sort(ds.begin(), ds.end(), std::greater<>());
  const int n = static_cast<int>(ds.size());
  EnumConstraint c;
  if (n > 0) {
    c.max_degree = ds.front();
    c.min_degree = ds.back();
  }
  std::vector<std::pair<Graph, TypeTuple>> realizations;
  EnumOptions eo;
  eo.guard = opt.guard;
  eo.jobs = opt.jobs;
  enumerate_graphs(
      n, c,
      [&](const Graph& g) {
        if (degree_sequence(g) == ds) realizations.emplace_back(g, type_tuple(g));
      },
      eo);
  std::optional<SeparatingPair> best;
  int best_gap = -1;
  for (std::size_t i = 0; i < realizations.size(); ++i)
    for (std::size_t j = i + 1; j < realizations.size(); ++j) {
      const auto& [a, ta] = realizations[i];
      const auto& [b, tb] = realizations[j];
      if (ta == tb) continue;
      const int gap = std::abs(ta[VertexType::VeryWeak] - tb[VertexType::VeryWeak]);
      if (gap > best_gap) {
        best_gap = gap;
        bool swap = ta[VertexType::VeryWeak] > tb[VertexType::VeryWeak];
        best = swap ? SeparatingPair{b, a, tb, ta} : SeparatingPair{a, b, ta, tb};
      }
    }
  return best;
}

inline VerifyReport verify_figure1(const SweepOptions& opt = {}) {
  const auto t0 = std::chrono::steady_clock::now();
  auto pair = find_separating_pair({4, 4, 4, 3, 3, 2}, opt);
  const bool ok = pair && pair->first_types[VertexType::VeryWeak] == 1 &&
                  pair->second_types[VertexType::VeryWeak] == 3;
  std::string witness;
  if (pair) witness = emit_graph6(pair->first) + " " + emit_graph6(pair->second);
  return make_report("figure1", 6, ok ? 1 : 0, 1, witness, 0, detail::millis_since(t0));
}

}  // namespace vtypes
