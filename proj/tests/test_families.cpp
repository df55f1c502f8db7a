#include <gtest/gtest.h>

#include <map>

#include "mmd/families.hpp"
#include "mmd/metric.hpp"

using namespace mmd;

TEST(Builders, Elementary) {
  EXPECT_EQ(path(2), Graph::from_edges(2, {{0, 1}}));
  EXPECT_EQ(tree_from_pruefer({}), path(2));
  auto s = tree_from_pruefer({0, 0});
  EXPECT_EQ(s.degree(0), 3u);
  EXPECT_EQ(leaf_count(s), 3u);
  auto c3 = cycle(3);
  EXPECT_EQ(c3.size(), 3u);
  EXPECT_EQ(cyclomatic_number(c3), 1u);
  EXPECT_EQ(complete(5).size(), 10u);
  EXPECT_EQ(star(4).order(), 5u);
}

TEST(Builders, InvalidParameters) {
  EXPECT_THROW(cycle(2), FamilyError);
  EXPECT_THROW(tree_from_pruefer({0, 4}), FamilyError);
}

TEST(Builders, LabeledTreesAreDistinctTrees) {
  for (std::size_t n = 2; n <= 6; ++n) {
    std::set<std::vector<std::pair<Vertex, Vertex>>> seen;
    std::size_t count = 0;
    for_each_labeled_tree(n, [&](const Graph& t) {
      ++count;
      EXPECT_TRUE(is_tree(t));
      EXPECT_EQ(cyclomatic_number(t), 0u);
      seen.insert(t.edge_pairs());
    });
    std::size_t expected = 1;
    for (std::size_t i = 0; i + 2 < n; ++i) expected *= n;
    EXPECT_EQ(count, expected);
    EXPECT_EQ(seen.size(), expected);
  }
}

TEST(Theta, SpecValidation) {
  auto s = ThetaSpec::make(3, 1, 2);
  EXPECT_EQ(s.lengths(), (std::array<std::size_t, 3>{1, 2, 3}));
  try {
    ThetaSpec::make(1, 1, 4);
    FAIL();
  } catch (const FamilyError& e) {
    EXPECT_EQ(e.code(), FamilyErrc::InvalidSpec);
  }
  EXPECT_THROW(ThetaSpec::make(0, 2, 2), FamilyError);
  EXPECT_EQ(to_string(s), "theta-1-2-3");
}

TEST(Theta, Construction) {
  auto t = theta(2, 2, 2);
  EXPECT_EQ(t.graph.order(), 5u);
  EXPECT_EQ(t.graph.size(), 6u);
  auto k23 = Graph::from_edges(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
  EXPECT_EQ(t.graph, k23);

  auto t122 = theta(1, 2, 2);
  EXPECT_EQ(t122.graph.order(), 4u);
  EXPECT_EQ(t122.graph.size(), 5u);
  EXPECT_TRUE(t122.graph.adjacent(0, 1));
}

TEST(Theta, DegreesAndShape) {
  for (const auto& spec : theta_specs_up_to(16)) {
    auto t = theta(spec);
    std::map<std::size_t, std::size_t> degrees;
    for (Vertex x = 0; x < t.graph.order(); ++x) ++degrees[t.graph.degree(x)];
    EXPECT_EQ(degrees[3], 2u);
    EXPECT_EQ(degrees[2], t.graph.order() - 2);
    EXPECT_EQ(t.graph.degree(t.u), 3u);
    EXPECT_EQ(t.graph.degree(t.v), 3u);
    auto shape = theta_shape(t.graph);
    ASSERT_TRUE(shape.has_value());
    EXPECT_EQ(*shape, spec);
    for (std::size_t p = 0; p < 3; ++p) EXPECT_EQ(t.paths[p].size(), spec.lengths()[p] + 1);
  }
  EXPECT_FALSE(theta_shape(cycle(5)).has_value());
  EXPECT_FALSE(theta_shape(complete(4)).has_value());
}

TEST(Theta, Balance) {
  EXPECT_TRUE(is_balanced(ThetaSpec::make(3, 3, 4)));
  EXPECT_TRUE(is_balanced(ThetaSpec::make(2, 2, 2)));
  EXPECT_FALSE(is_balanced(ThetaSpec::make(2, 2, 4)));
}

TEST(Theta, SpecEnumeration) {
  const auto specs = theta_specs_up_to(15);
  EXPECT_EQ(specs.size(), 89u);
  EXPECT_TRUE(std::is_sorted(specs.begin(), specs.end()));
  EXPECT_EQ(specs.front(), ThetaSpec::make(1, 2, 2));
  EXPECT_TRUE(theta_specs_up_to(4).empty());
}

TEST(Antipodes, Positions) {
  EXPECT_EQ(antipodal_vertices(6, 0), (std::vector<std::size_t>{3}));
  EXPECT_EQ(antipodal_vertices(5, 0), (std::vector<std::size_t>{2, 3}));
  EXPECT_EQ(antipodal_vertices(3, 1), (std::vector<std::size_t>{0, 2}));
}

TEST(ThetaGenerators, Balanced) {
  auto t = theta(2, 2, 2);
  EXPECT_EQ(balanced_theta_generator(t), (std::vector<Vertex>{0, 1, 2, 3}));
  for (const auto& spec : theta_specs_up_to(16)) {
    if (!is_balanced(spec)) continue;
    auto tg = theta(spec);
    DistanceTable dt(tg.graph);
    auto s = balanced_theta_generator(tg);
    ASSERT_EQ(s.size(), 4u);
    EXPECT_TRUE(std::binary_search(s.begin(), s.end(), tg.u));
    EXPECT_TRUE(std::binary_search(s.begin(), s.end(), tg.v));
    for (Vertex x : s) {
      if (x != tg.u && x != tg.v) {
        EXPECT_TRUE(tg.graph.adjacent(x, tg.v));
      }
    }
    EXPECT_TRUE(is_mixed_generator(dt, s)) << to_string(spec);
  }
  try {
    balanced_theta_generator(theta(2, 2, 4));
    FAIL();
  } catch (const FamilyError& e) {
    EXPECT_EQ(e.code(), FamilyErrc::NotBalanced);
  }
}

TEST(ThetaGenerators, BalancedLeavesAShortestPathUncovered) {
  // Θ(2,2,3): covering P1 and P2 leaves u and its edge into P3 unresolved.
  auto t = theta(2, 2, 3);
  DistanceTable dt(t.graph);
  std::vector<Vertex> first_two{0, 1, 2, 3};
  EXPECT_FALSE(is_mixed_generator(dt, first_two));
  EXPECT_EQ(balanced_theta_generator(t), (std::vector<Vertex>{0, 1, 2, 5}));
}

TEST(ThetaGenerators, Unbalanced) {
  auto t = theta(2, 2, 4);
  auto s = unbalanced_theta_generator(t);
  ASSERT_EQ(s.size(), 3u);
  DistanceTable dt(t.graph);
  // C13 = P1 + P3 has length 6; a_u sits on P3 three steps from u.
  EXPECT_TRUE(std::binary_search(s.begin(), s.end(), t.paths[2][3]));
  EXPECT_TRUE(is_mixed_generator(dt, s));

  for (const auto& spec : theta_specs_up_to(18)) {
    if (is_balanced(spec)) continue;
    auto tg = theta(spec);
    DistanceTable d(tg.graph);
    auto set = unbalanced_theta_generator(tg);
    ASSERT_EQ(set.size(), 3u) << to_string(spec);
    EXPECT_TRUE(is_mixed_generator(d, set)) << to_string(spec);
    // w lies on the middle path with d(w,u) - d(w,v) in {0, 1}.
    const auto& mid = tg.paths[1];
    bool has_middle = false;
    for (Vertex x : set) {
      if (std::find(mid.begin() + 1, mid.end() - 1, x) == mid.end() - 1) continue;
      const int du = d.vv(x, tg.u), dv = d.vv(x, tg.v);
      has_middle = has_middle || du - dv == 0 || du - dv == 1;
    }
    EXPECT_TRUE(has_middle) << to_string(spec);
  }
  EXPECT_TRUE(is_mixed_generator(DistanceTable(theta(1, 2, 4).graph), unbalanced_theta_generator(theta(1, 2, 4))));
  try {
    unbalanced_theta_generator(theta(3, 3, 3));
    FAIL();
  } catch (const FamilyError& e) {
    EXPECT_EQ(e.code(), FamilyErrc::Balanced);
  }
}

TEST(Cactus, Examples) {
  CactusSpec pendant;
  pendant.attachments = {{CactusAttachment::Kind::Cycle, 0, 4}, {CactusAttachment::Kind::Path, 0, 1}};
  auto g = cactus(pendant);
  EXPECT_TRUE(every_cycle_has_one_branch_vertex(g));
  EXPECT_EQ(leaf_count(g), 1u);
  EXPECT_EQ(cyclomatic_number(g), 1u);

  CactusSpec bowtie;
  bowtie.attachments = {{CactusAttachment::Kind::Cycle, 0, 3}, {CactusAttachment::Kind::Cycle, 0, 3}};
  auto b = cactus(bowtie);
  EXPECT_EQ(b.degree(0), 4u);
  EXPECT_TRUE(every_cycle_has_one_branch_vertex(b));

  CactusSpec two;
  two.attachments = {{CactusAttachment::Kind::Cycle, 0, 4},
                     {CactusAttachment::Kind::Path, 0, 1},
                     {CactusAttachment::Kind::Path, 2, 1}};
  EXPECT_FALSE(every_cycle_has_one_branch_vertex(cactus(two)));
}

TEST(Cactus, Errors) {
  CactusSpec bad_base;
  bad_base.base = complete(4);
  try {
    cactus(bad_base);
    FAIL();
  } catch (const FamilyError& e) {
    EXPECT_EQ(e.code(), FamilyErrc::NotEdgeDisjoint);
  }
  CactusSpec bad_anchor;
  bad_anchor.attachments = {{CactusAttachment::Kind::Path, 3, 1}};
  EXPECT_THROW(cactus(bad_anchor), FamilyError);
  CactusSpec short_cycle;
  short_cycle.attachments = {{CactusAttachment::Kind::Cycle, 0, 2}};
  EXPECT_THROW(cactus(short_cycle), FamilyError);
}

TEST(Cactus, Recognition) {
  EXPECT_TRUE(is_cactus(path(4)));
  EXPECT_TRUE(is_cactus(cycle(6)));
  EXPECT_FALSE(is_cactus(complete(4)));
  EXPECT_FALSE(is_cactus(theta(2, 2, 2).graph));
  EXPECT_FALSE(every_cycle_has_one_branch_vertex(theta(2, 2, 2).graph));
  EXPECT_TRUE(every_cycle_has_one_branch_vertex(star(3)));
  EXPECT_EQ(cactus_cycles(cycle(5)).size(), 1u);
  EXPECT_EQ(biconnected_blocks(path(5)).size(), 4u);
}

TEST(Cactus, Population) {
  const auto pop = cactus_population();
  EXPECT_EQ(pop.size(), 33127u);
  for (std::size_t i = 0; i < pop.size(); i += 97) {
    const auto& g = pop[i].graph;
    EXPECT_TRUE(is_cactus(g));
    EXPECT_LE(g.order(), 12u);
    EXPECT_LE(cactus_cycles(g).size(), 2u);
    for (const auto& cyc : cactus_cycles(g)) EXPECT_LE(cyc.size(), 5u);
    // Each edge lies on at most one cycle.
    std::vector<int> uses(g.size(), 0);
    for (const auto& block : biconnected_blocks(g))
      if (block.size() > 1)
        for (EdgeId e : block) ++uses[e];
    for (int u : uses) EXPECT_LE(u, 1);
  }
}
