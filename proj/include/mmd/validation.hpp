#pragma once

#include <algorithm>
#include <optional>
#include <string>

#include "mmd/enumerate.hpp"
#include "mmd/graph6.hpp"
#include "mmd/metric.hpp"

namespace mmd {

/// Outcome of checking the leaf-forcing rule against plain search.
struct LeafForcingCheck {
  std::size_t graphs = 0;
  std::size_t minimum_sets = 0;
  /// graph6 of the first graph where a minimum generator misses a leaf.
  std::optional<std::string> counterexample;

  bool holds() const { return !counterexample.has_value(); }
};

/// For every connected graph with 2 <= n <= max_order, lists all minimum
/// mixed generators without pruning and checks that each contains every
/// leaf.
inline LeafForcingCheck check_leaf_forcing(std::size_t max_order = 6) {
  LeafForcingCheck result;
  for (const Graph& g : enumerate_connected_range(2, max_order)) {
    ++result.graphs;
    const DistanceTable dt(g);
    const auto dim = mixed_metric_dimension(g, SearchOptions::unpruned()).dimension;
    const auto leaf_set = leaves(g);
    for (const auto& set : generators_of_size(dt, dim)) {
      ++result.minimum_sets;
      if (!std::includes(set.begin(), set.end(), leaf_set.begin(), leaf_set.end())) {
        result.counterexample = encode_graph6(g);
        return result;
      }
    }
  }
  return result;
}

/// Runs check_leaf_forcing(6) once per process.
inline bool leaf_forcing_validated() {
  static const bool validated = check_leaf_forcing(6).holds();
  return validated;
}

/// All pruning rules on; leaf forcing only after it has been validated in
/// this process.
inline SearchOptions validated_search_options() {
  SearchOptions options;
  options.force_leaves = leaf_forcing_validated();
  options.signature_dedup = true;
  return options;
}

}  // namespace mmd
