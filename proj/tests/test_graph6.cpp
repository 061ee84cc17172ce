#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "vtypes/enumerator.hpp"
#include "vtypes/graph6.hpp"
#include "vtypes/primitives.hpp"

namespace vtypes {
namespace {

TEST(Graph6, HandEncodedExamples) {
  EXPECT_EQ(emit_graph6(complete_graph(4)), "C~");
  EXPECT_EQ(emit_graph6(Graph(1)), "@");
  EXPECT_EQ(emit_graph6(path_graph(3)), "Bg");
  EXPECT_EQ(emit_graph6(Graph(0)), "?");
}

TEST(Graph6, ParsesExamples) {
  EXPECT_EQ(parse_graph6("C~"), complete_graph(4));
  EXPECT_EQ(parse_graph6("@"), Graph(1));
  EXPECT_EQ(parse_graph6("Bg"), path_graph(3));
  EXPECT_EQ(parse_graph6(">>graph6<<C~\n"), complete_graph(4));
}

TEST(Graph6, RejectsMalformedInput) {
  EXPECT_THROW(parse_graph6(""), FormatError);
  EXPECT_THROW(parse_graph6("C"), FormatError);       // missing edge byte
  EXPECT_THROW(parse_graph6("C~~"), FormatError);     // extra byte
  EXPECT_THROW(parse_graph6("C~ "), FormatError);     // byte below 63
  EXPECT_THROW(parse_graph6("B\x7f"), FormatError);  // byte above 126
  EXPECT_THROW(parse_graph6("Bh"), FormatError);      // nonzero padding
  EXPECT_THROW(parse_graph6("~??}"), FormatError);    // long form for order 62
  EXPECT_THROW(parse_graph6("~"), FormatError);
}

TEST(Graph6, OrderAboveCapacity) {
  const auto big = cycle_graph<WideGraph>(100);
  const auto text = emit_graph6(big);
  EXPECT_EQ(text[0], '~');
  EXPECT_EQ(text.size(), graph6_length(100));
  EXPECT_THROW(parse_graph6<Graph>(text), FormatError);
  EXPECT_EQ(parse_graph6<WideGraph>(text), big);
}

TEST(Graph6, RoundTripAllGraphsUpToSeven) {
  for (int n = 0; n <= 7; ++n) {
    std::uint64_t seen = 0;
    enumerate_graphs(n, {}, [&](const Graph& g) {
      ++seen;
      ASSERT_EQ(parse_graph6(emit_graph6(g)), g);
    });
    EXPECT_GT(seen, 0u);
  }
}

TEST(Graph6, RoundTripRandomGraphs) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 10000; ++trial) {
    const auto g = testing::random_graph(rng, 0, 62);
    const auto s = emit_graph6(g);
    ASSERT_EQ(s.size(), graph6_length(g.order()));
    ASSERT_EQ(parse_graph6(s), g);
    ASSERT_EQ(emit_graph6(parse_graph6(s)), s);
  }
}

TEST(Graph6, BitLayoutMatchesHandCode) {
  // The edge bits in column order equal labeled_code read MSB-first per group.
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 500; ++trial) {
    const auto g = testing::random_graph(rng, 2, 11);
    const std::uint64_t code = testing::labeled_code(g);
    const auto s = emit_graph6(g);
    const int bits = g.order() * (g.order() - 1) / 2;
    for (int k = 0; k < bits; ++k) {
      const int group = s[1 + k / 6] - 63;
      ASSERT_EQ((group >> (5 - k % 6)) & 1, static_cast<int>((code >> k) & 1));
    }
  }
}

TEST(EdgeList, ParseAndEmit) {
  const auto g = parse_edge_list("4\n0 1\n1 2\n2 3\n");
  EXPECT_EQ(g, path_graph(4));
  EXPECT_EQ(emit_edge_list(g), "4\n0 1\n1 2\n2 3\n");
  EXPECT_EQ(parse_edge_list(emit_edge_list(complete_graph(5))), complete_graph(5));
  EXPECT_THROW(parse_edge_list(""), FormatError);
  EXPECT_THROW(parse_edge_list("3 0 1 2"), FormatError);
  EXPECT_THROW(parse_edge_list("3 0 x"), FormatError);
  EXPECT_THROW(parse_edge_list("3 0 3"), GraphError);
}

}  // namespace
}  // namespace vtypes
