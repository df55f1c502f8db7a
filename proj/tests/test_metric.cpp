#include <gtest/gtest.h>

#include <random>

#include "mmd/enumerate.hpp"
#include "mmd/families.hpp"
#include "mmd/metric.hpp"
#include "mmd/validation.hpp"
#include "oracles.hpp"

using namespace mmd;

namespace {

Graph c4() { return Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}); }

oracle::Pairs oracle_kind(Variant v) {
  switch (v) {
    case Variant::Mixed: return oracle::Pairs::Mixed;
    case Variant::VertexOnly: return oracle::Pairs::Vertex;
    case Variant::EdgeOnly: return oracle::Pairs::Edge;
  }
  return oracle::Pairs::Mixed;
}

}  // namespace

TEST(Distinguishes, SelfDistanceIsZero) {
  auto g = path(4);
  DistanceTable dt(g);
  for (Vertex v = 1; v < 4; ++v) EXPECT_TRUE(distinguishes(dt, 0, MixedElement::vertex(0), MixedElement::vertex(v)));
}

TEST(Distinguishes, PendantEdgeAgainstItsEndpoints) {
  for (const Graph& g : {star(4), path(5), tree_from_pruefer({1, 1, 3, 3})}) {
    DistanceTable dt(g);
    const auto d = oracle::path_distances(g);
    for (Vertex leaf : leaves(g)) {
      const Vertex support = g.neighbors(leaf)[0];
      const auto pendant = MixedElement::edge(*g.edge_id(leaf, support));
      const std::size_t column = g.order() + *g.edge_id(leaf, support);
      for (Vertex s = 0; s < g.order(); ++s) {
        // Only the leaf separates the support vertex from the pendant edge.
        EXPECT_EQ(distinguishes(dt, s, MixedElement::vertex(support), pendant), s == leaf);
        EXPECT_EQ(oracle::element_distance(g, d, s, support) != oracle::element_distance(g, d, s, column), s == leaf);
        // Every other vertex separates the leaf from it.
        EXPECT_EQ(distinguishes(dt, s, MixedElement::vertex(leaf), pendant), s != leaf);
      }
    }
  }
}

TEST(Distinguishes, FourCycleSymmetry) {
  DistanceTable dt(c4());
  EXPECT_FALSE(distinguishes(dt, 0, MixedElement::vertex(1), MixedElement::vertex(3)));
}

TEST(Generator, AllVerticesOfThreePath) {
  DistanceTable dt(path(3));
  std::vector<Vertex> all{0, 1, 2};
  EXPECT_TRUE(is_mixed_generator(dt, all));
  EXPECT_FALSE(find_undistinguished_pair(dt, all).has_value());
}

TEST(Generator, PathEndpointResolvesVertices) {
  for (std::size_t n = 2; n <= 9; ++n) {
    DistanceTable dt(path(n));
    std::vector<Vertex> end{0};
    EXPECT_TRUE(is_vertex_generator(dt, end));
  }
}

TEST(Generator, FourCycleSingleVertexIsNotEdgeGenerator) {
  auto g = c4();
  DistanceTable dt(g);
  std::vector<Vertex> s{0};
  EXPECT_FALSE(is_edge_generator(dt, s));
  auto pair = find_undistinguished_pair(dt, s, Variant::EdgeOnly);
  ASSERT_TRUE(pair.has_value());
  EXPECT_TRUE(pair->first.is_edge());
  EXPECT_EQ(dt(0, pair->first), dt(0, pair->second));
}

TEST(Generator, ReportedPairIsUndistinguished) {
  for (const Graph& g : enumerate_connected_range(2, 5)) {
    DistanceTable dt(g);
    for (Vertex v = 0; v < g.order(); ++v) {
      std::vector<Vertex> s{v};
      auto pair = find_undistinguished_pair(dt, s);
      if (!pair) continue;
      EXPECT_FALSE(pair->first == pair->second);
      EXPECT_FALSE(distinguishes(dt, v, pair->first, pair->second));
    }
  }
}

TEST(Generator, MatchesPairLoopOnAllSubsets) {
  for (const Graph& g : enumerate_connected_range(2, 6)) {
    DistanceTable dt(g);
    const auto d = oracle::path_distances(g);
    const std::size_t n = g.order();
    for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
      std::vector<Vertex> set;
      for (Vertex v = 0; v < n; ++v)
        if ((mask >> v) & 1U) set.push_back(v);
      for (Variant variant : {Variant::Mixed, Variant::VertexOnly, Variant::EdgeOnly})
        ASSERT_EQ(is_generator(dt, set, variant), oracle::resolves(g, d, set, oracle_kind(variant)))
            << encode_graph6(g) << " mask=" << mask;
    }
  }
}

TEST(Generator, MixedImpliesRestricted) {
  std::mt19937_64 rng(7);
  for (const Graph& g : enumerate_connected_range(3, 6)) {
    DistanceTable dt(g);
    for (int trial = 0; trial < 8; ++trial) {
      std::vector<Vertex> set;
      for (Vertex v = 0; v < g.order(); ++v)
        if (rng() % 2) set.push_back(v);
      if (set.empty() || !is_mixed_generator(dt, set)) continue;
      EXPECT_TRUE(is_vertex_generator(dt, set));
      EXPECT_TRUE(is_edge_generator(dt, set));
    }
  }
}

TEST(Dimension, Fixtures) {
  EXPECT_EQ(mixed_metric_dimension(path(5)).dimension, 2u);
  EXPECT_EQ(mixed_metric_dimension(path(2)).dimension, 2u);
  EXPECT_EQ(mixed_metric_dimension(path(1)).dimension, 0u);
  for (std::size_t n = 3; n <= 12; ++n) EXPECT_EQ(mixed_metric_dimension(cycle(n)).dimension, 3u) << n;

  auto k4 = mixed_metric_dimension(complete(4));
  EXPECT_EQ(k4.dimension, 4u);
  EXPECT_EQ(k4.witness, (std::vector<Vertex>{0, 1, 2, 3}));
  EXPECT_EQ(k4.variant, Variant::Mixed);
  EXPECT_EQ(vertex_metric_dimension(complete(4)).dimension, 3u);
  EXPECT_EQ(edge_metric_dimension(complete(4)).dimension, 3u);

  EXPECT_EQ(mixed_metric_dimension(c4()).dimension, 3u);
  EXPECT_EQ(vertex_metric_dimension(c4()).dimension, 2u);
  EXPECT_EQ(edge_metric_dimension(c4()).dimension, 2u);

  EXPECT_EQ(mixed_metric_dimension(complete(3)).dimension, 3u);
  EXPECT_EQ(edge_metric_dimension(complete(3)).dimension, 2u);
  EXPECT_EQ(mixed_metric_dimension(complete(5)).dimension, 5u);
  EXPECT_EQ(edge_metric_dimension(complete(5)).dimension, 4u);
  EXPECT_EQ(mixed_metric_dimension(complete(6)).dimension, 6u);
  EXPECT_EQ(edge_metric_dimension(complete(6)).dimension, 5u);
  EXPECT_EQ(mixed_metric_dimension(theta(2, 2, 2).graph).dimension, 4u);
  for (std::size_t n = 2; n <= 9; ++n) EXPECT_EQ(vertex_metric_dimension(path(n)).dimension, 1u);
}

TEST(Dimension, MatchesBruteForceOracle) {
  for (const Graph& g : enumerate_connected_range(2, 6)) {
    for (Variant variant : {Variant::Mixed, Variant::VertexOnly, Variant::EdgeOnly}) {
      const auto expected = oracle::dimension(g, oracle_kind(variant));
      ASSERT_EQ(metric_dimension(g, variant, SearchOptions::unpruned()).dimension, expected)
          << encode_graph6(g) << ' ' << to_string(variant);
    }
  }
}

TEST(Dimension, PrunedEqualsUnpruned) {
  SearchOptions pruned;
  pruned.force_leaves = true;
  pruned.signature_dedup = true;
  for (const Graph& g : enumerate_connected_range(1, 6)) {
    const auto a = mixed_metric_dimension(g, pruned);
    const auto b = mixed_metric_dimension(g, SearchOptions::unpruned());
    ASSERT_EQ(a.dimension, b.dimension) << encode_graph6(g);
    EXPECT_LE(a.nodes_explored, b.nodes_explored);
  }
}

TEST(Dimension, WitnessIsMinimal) {
  const auto options = validated_search_options();
  for (const Graph& g : enumerate_connected_range(2, 6)) {
    DistanceTable dt(g);
    for (Variant variant : {Variant::Mixed, Variant::VertexOnly, Variant::EdgeOnly}) {
      const auto w = metric_dimension(g, variant, options);
      ASSERT_EQ(w.witness.size(), w.dimension);
      ASSERT_TRUE(std::is_sorted(w.witness.begin(), w.witness.end()));
      ASSERT_TRUE(is_generator(dt, w.witness, variant));
      for (std::size_t drop = 0; drop < w.witness.size() && w.witness.size() > 1; ++drop) {
        auto smaller = w.witness;
        smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(drop));
        EXPECT_FALSE(is_generator(dt, smaller, variant)) << encode_graph6(g);
      }
    }
  }
}

TEST(Dimension, WitnessIsLexicographicallyFirst) {
  for (const Graph& g : enumerate_connected_range(2, 5)) {
    DistanceTable dt(g);
    const auto w = mixed_metric_dimension(g, SearchOptions::unpruned());
    EXPECT_EQ(w.witness, generators_of_size(dt, w.dimension).front()) << encode_graph6(g);
  }
}

TEST(Dimension, MixedDominatesRestricted) {
  for (const Graph& g : enumerate_connected_range(2, 6)) {
    const auto m = mixed_metric_dimension(g).dimension;
    EXPECT_GE(m, vertex_metric_dimension(g).dimension);
    EXPECT_GE(m, edge_metric_dimension(g).dimension);
  }
}

TEST(Dimension, EveryMinimumGeneratorContainsEveryLeaf) {
  const auto check = check_leaf_forcing(6);
  EXPECT_TRUE(check.holds()) << *check.counterexample;
  EXPECT_EQ(check.graphs, 142u);
  EXPECT_TRUE(leaf_forcing_validated());
  EXPECT_TRUE(validated_search_options().force_leaves);
}

TEST(Dimension, BudgetExceeded) {
  SearchOptions tight = SearchOptions::unpruned();
  tight.max_nodes = 3;
  EXPECT_THROW(mixed_metric_dimension(complete(6), tight), SearchBudgetExceeded);
}

TEST(Dimension, DisconnectedThrows) {
  auto g = Graph::from_edges(4, {{0, 1}, {2, 3}});
  EXPECT_THROW(mixed_metric_dimension(g), GraphError);
}
