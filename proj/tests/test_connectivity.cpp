#include <gtest/gtest.h>

#include "mmd/connectivity.hpp"
#include "mmd/enumerate.hpp"
#include "mmd/families.hpp"
#include "oracles.hpp"

using namespace mmd;

TEST(Connectivity, Examples) {
  EXPECT_EQ(vertex_connectivity(path(3)), 1u);
  EXPECT_EQ(vertex_connectivity(complete(4)), 3u);
  EXPECT_EQ(vertex_connectivity(complete(2)), 1u);
  EXPECT_EQ(vertex_connectivity(cycle(6)), 2u);
  for (const auto& spec : theta_specs_up_to(14)) EXPECT_EQ(vertex_connectivity(theta(spec).graph), 2u);
}

TEST(Connectivity, FlowAgreesWithSubsetSearch) {
  for (const Graph& g : enumerate_connected_range(2, 7)) {
    const auto flow = vertex_connectivity(g);
    ASSERT_EQ(flow, vertex_connectivity_exhaustive(g)) << encode_graph6(g);
  }
}

TEST(Connectivity, SubsetSearchAgreesWithDefinition) {
  for (const Graph& g : enumerate_connected_range(2, 6))
    ASSERT_EQ(vertex_connectivity_exhaustive(g), oracle::connectivity(g)) << encode_graph6(g);
}
