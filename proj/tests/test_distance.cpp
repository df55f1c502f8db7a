#include <gtest/gtest.h>

#include "mmd/distance.hpp"
#include "mmd/enumerate.hpp"
#include "mmd/families.hpp"
#include "oracles.hpp"

using namespace mmd;

namespace {

Graph c4() { return Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}); }

}  // namespace

TEST(Distance, FourCycle) {
  auto g = c4();
  DistanceTable dt(g);
  EXPECT_EQ(dt.vv(0, 2), 2);
  EXPECT_EQ(dt.ve(0, *g.edge_id(2, 3)), 1);
  EXPECT_EQ(dt.diameter(), 2);
}

TEST(Distance, IncidentEdgeIsAtZero) {
  for (const Graph& g : enumerate_connected_range(2, 5)) {
    DistanceTable dt(g);
    for (EdgeId e = 0; e < g.size(); ++e) {
      EXPECT_EQ(dt.ve(g.edge(e).u, e), 0);
      EXPECT_EQ(dt.ve(g.edge(e).v, e), 0);
    }
  }
}

TEST(Distance, MatchesPathEnumeration) {
  for (const Graph& g : enumerate_connected_range(1, 6)) {
    DistanceTable dt(g);
    const auto d = oracle::path_distances(g);
    for (Vertex s = 0; s < g.order(); ++s)
      for (std::size_t x = 0; x < dt.element_count(); ++x)
        ASSERT_EQ(dt(s, dt.element(x)), oracle::element_distance(g, d, s, x)) << encode_graph6(g);
  }
}

TEST(Distance, TableInvariants) {
  for (const Graph& g : enumerate_connected_range(2, 6)) {
    DistanceTable dt(g);
    const auto n = static_cast<Vertex>(g.order());
    for (Vertex a = 0; a < n; ++a) {
      EXPECT_EQ(dt.vv(a, a), 0);
      for (Vertex b = 0; b < n; ++b) {
        EXPECT_EQ(dt.vv(a, b), dt.vv(b, a));
        for (Vertex c = 0; c < n; ++c) EXPECT_LE(dt.vv(a, c), dt.vv(a, b) + dt.vv(b, c));
      }
      for (EdgeId e = 0; e < g.size(); ++e) {
        const auto du = dt.vv(a, g.edge(e).u), dv = dt.vv(a, g.edge(e).v);
        EXPECT_LE(std::abs(int(du) - int(dv)), 1);
        EXPECT_EQ(dt.ve(a, e), std::min(du, dv));
      }
    }
  }
}

TEST(Distance, SignatureOrder) {
  auto g = path(3);
  DistanceTable dt(g);
  EXPECT_EQ(dt.signature(0), (std::vector<Distance>{0, 1, 2, 0, 1}));
  EXPECT_EQ(dt.element(3), MixedElement::edge(0));
  EXPECT_EQ(dt.column(MixedElement::edge(1)), 4u);
}

TEST(Distance, DisconnectedThrows) {
  auto g = Graph::from_edges(3, {{0, 1}});
  try {
    DistanceTable dt(g);
    FAIL();
  } catch (const GraphError& e) {
    EXPECT_EQ(e.code(), GraphErrc::Disconnected);
  }
}

TEST(Isometric, WholeGraph) {
  auto g = complete(4);
  std::vector<Vertex> vs{0, 1, 2, 3};
  EXPECT_TRUE(is_isometric_subgraph(g, vs, g.edges()));
}

TEST(Isometric, PathInsideFiveCycle) {
  auto g = cycle(5);
  std::vector<Vertex> vs{0, 1, 2, 3};
  std::vector<Edge> es{{0, 1}, {1, 2}, {2, 3}};
  EXPECT_FALSE(is_isometric_subgraph(g, vs, es));
}

TEST(Isometric, ThetaCycleOfTwoShortestPaths) {
  auto t = theta(2, 2, 3);
  const auto& [p1, p2, p3] = t.paths;
  std::vector<Vertex> vs;
  std::vector<Edge> es;
  for (const auto* p : {&p1, &p2}) {
    for (std::size_t i = 0; i < p->size(); ++i) {
      if (std::find(vs.begin(), vs.end(), (*p)[i]) == vs.end()) vs.push_back((*p)[i]);
      if (i + 1 < p->size()) es.push_back({std::min((*p)[i], (*p)[i + 1]), std::max((*p)[i], (*p)[i + 1])});
    }
  }
  EXPECT_TRUE(is_isometric_subgraph(t.graph, vs, es));

  auto u = theta(1, 3, 3);
  vs.clear();
  es.clear();
  for (const auto* p : {&u.paths[1], &u.paths[2]}) {
    for (std::size_t i = 0; i < p->size(); ++i) {
      if (std::find(vs.begin(), vs.end(), (*p)[i]) == vs.end()) vs.push_back((*p)[i]);
      if (i + 1 < p->size()) es.push_back({std::min((*p)[i], (*p)[i + 1]), std::max((*p)[i], (*p)[i + 1])});
    }
  }
  EXPECT_FALSE(is_isometric_subgraph(u.graph, vs, es));
}

TEST(Isometric, RejectsForeignEdge) {
  auto g = path(3);
  std::vector<Vertex> vs{0, 2};
  std::vector<Edge> es{{0, 2}};
  try {
    is_isometric_subgraph(g, vs, es);
    FAIL();
  } catch (const GraphError& e) {
    EXPECT_EQ(e.code(), GraphErrc::NotASubgraph);
  }
}
