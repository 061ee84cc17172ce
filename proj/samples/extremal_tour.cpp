// Builds the extremal graphs for a few orders, prints their type tuples, and
// finds the largest number of typical vertices among the order-7 graphs.

#include <cstdio>

#include "vtypes/vtypes.hpp"

int main() {
  using namespace vtypes;

  for (int n : {9, 12, 13}) {
    const Graph vt = vt_extremal(n);
    const Graph t = t_extremal(n);
    std::printf("n=%2d  vt_extremal %-12s VT=%d   t_extremal %-12s T=%d\n", n,
                emit_graph6(vt).c_str(), type_tuple(vt)[VertexType::VeryTypical],
                emit_graph6(t).c_str(), type_tuple(t)[VertexType::Typical]);
  }

  const Graph p = pantypical_graph(9);
  std::printf("pantypical order 9: %s with %d edges, tuple", emit_graph6(p).c_str(), p.size());
  for (int c : type_tuple(p).counts) std::printf(" %d", c);
  std::printf("\n");

  int best = 0;
  const auto classes = enumerate_graphs(7, {}, [&](const Graph& g) {
    best = std::max(best, type_tuple(g)[VertexType::Typical]);
  });
  std::printf("order 7: %llu classes, at most %d typical vertices\n",
              static_cast<unsigned long long>(classes), best);
}
