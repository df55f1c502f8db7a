#pragma once

#include <chrono>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "mmd/connectivity.hpp"
#include "mmd/enclosure.hpp"
#include "mmd/enumerate.hpp"
#include "mmd/families.hpp"
#include "mmd/graph6.hpp"
#include "mmd/harness.hpp"
#include "mmd/metric.hpp"
#include "mmd/validation.hpp"

namespace mmd {

/// Result of one theorem-reproduction suite.
struct SuiteResult {
  std::string name;
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::vector<std::string> examples;  // first few failures
  std::string note;
  double seconds = 0.0;

  bool passed() const { return failures == 0 && checked > 0; }

  void fail(std::string what) {
    ++failures;
    if (examples.size() < 5) examples.push_back(std::move(what));
  }

  std::string line() const {
    std::ostringstream out;
    out << (passed() ? "PASS " : "FAIL ") << name << " checked=" << checked << " failures=" << failures;
    if (!note.empty()) out << ' ' << note;
    char buf[32];
    std::snprintf(buf, sizeof buf, " (%.2fs)", seconds);
    out << buf;
    for (const auto& e : examples) out << "\n    " << e;
    return out.str();
  }
};

namespace detail {

template <typename Body>
SuiteResult timed_suite(std::string name, Body&& body) {
  SuiteResult r;
  r.name = std::move(name);
  const auto start = std::chrono::steady_clock::now();
  body(r);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace detail

/// Every minimum mixed generator contains every leaf (n <= max_order).
inline SuiteResult leaf_forcing_suite(std::size_t max_order = 6) {
  return detail::timed_suite("leaf-forcing", [&](SuiteResult& r) {
    auto check = check_leaf_forcing(max_order);
    r.checked = check.graphs;
    r.note = "minimum_sets=" + std::to_string(check.minimum_sets);
    if (!check.holds()) r.fail("minimum generator without all leaves: " + *check.counterexample);
  });
}

/// mdim(T) = L1(T) for every labeled tree with 2 <= n <= max_order.
inline SuiteResult tree_suite(std::size_t max_order, const SearchOptions& options) {
  return detail::timed_suite("trees", [&](SuiteResult& r) {
    for (std::size_t n = 2; n <= max_order; ++n) {
      for_each_labeled_tree(n, [&](const Graph& t) {
        ++r.checked;
        const auto dim = mixed_metric_dimension(t, options).dimension;
        if (dim != leaf_count(t))
          r.fail(encode_graph6(t) + ": mdim=" + std::to_string(dim) + " L1=" + std::to_string(leaf_count(t)));
      });
    }
  });
}

/// mdim(C_n) = 3.
inline SuiteResult cycle_suite(std::size_t min_order, std::size_t max_order, const SearchOptions& options) {
  return detail::timed_suite("cycles", [&](SuiteResult& r) {
    for (std::size_t n = min_order; n <= max_order; ++n) {
      ++r.checked;
      const auto dim = mixed_metric_dimension(cycle(n), options).dimension;
      if (dim != 3) r.fail("C_" + std::to_string(n) + ": mdim=" + std::to_string(dim));
    }
  });
}

/// For cacti other than cycles: mdim <= L1 + 2c, with equality exactly when
/// every cycle has one vertex of degree >= 3.
inline SuiteResult cactus_suite(const CactusPopulationLimits& limits, const SearchOptions& options,
                                unsigned workers = 1) {
  return detail::timed_suite("cactus", [&](SuiteResult& r) {
    const auto population = cactus_population(limits);
    std::size_t equalities = 0, skipped_cycles = 0;
    struct Outcome {
      bool cycle = false;
      std::size_t mdim = 0, bound = 0;
      bool predicate = false;
    };
    ordered_parallel_map<Outcome>(
        population.size(), workers,
        [&](std::size_t i) {
          const Graph& g = population[i].graph;
          Outcome o;
          o.cycle = is_cycle_graph(g);
          if (o.cycle) return o;
          o.mdim = mixed_metric_dimension(g, options).dimension;
          o.bound = leaf_count(g) + 2 * cyclomatic_number(g);
          o.predicate = every_cycle_has_one_branch_vertex(g);
          return o;
        },
        [&](std::size_t i, Outcome o) {
          if (o.cycle) {
            ++skipped_cycles;
            return;
          }
          ++r.checked;
          const Graph& g = population[i].graph;
          if (!is_cactus(g)) r.fail(encode_graph6(g) + ": generated graph is not a cactus");
          if (o.mdim > o.bound)
            r.fail(encode_graph6(g) + ": mdim=" + std::to_string(o.mdim) + " > bound=" + std::to_string(o.bound));
          if ((o.mdim == o.bound) != o.predicate)
            r.fail(encode_graph6(g) + ": mdim=" + std::to_string(o.mdim) + " bound=" + std::to_string(o.bound) +
                   " branch-vertex predicate=" + (o.predicate ? "true" : "false"));
          equalities += o.mdim == o.bound ? 1 : 0;
        });
    r.note = "equalities=" + std::to_string(equalities) + " cycles_skipped=" + std::to_string(skipped_cycles);
  });
}

/// mdim < 2c for every enumerated 3-connected graph with n <= max_order.
inline SuiteResult kappa3_suite(std::size_t max_order, const SearchOptions& options) {
  return detail::timed_suite("3-connected", [&](SuiteResult& r) {
    for (std::size_t n = 4; n <= max_order; ++n) {
      for (const Graph& g : enumerate_connected(n)) {
        if (vertex_connectivity(g) < 3) continue;
        ++r.checked;
        const auto dim = mixed_metric_dimension(g, options).dimension;
        const auto c = cyclomatic_number(g);
        if (!(dim < 2 * c))
          r.fail(encode_graph6(g) + ": mdim=" + std::to_string(dim) + " 2c=" + std::to_string(2 * c));
      }
    }
  });
}

/// On balanced thetas with n <= max_order, no set of one internal vertex
/// per path resolves the graph.
inline SuiteResult theta_triple_suite(std::size_t max_order) {
  return detail::timed_suite("balanced-theta-triples", [&](SuiteResult& r) {
    std::size_t thetas = 0;
    for (const auto& spec : theta_specs_up_to(max_order + 1)) {
      if (!is_balanced(spec) || spec.order() > max_order) continue;
      ++thetas;
      const ThetaGraph t = theta(spec);
      const DistanceTable dt(t.graph);
      const auto& [p1, p2, p3] = t.paths;
      for (std::size_t i = 1; i + 1 < p1.size(); ++i)
        for (std::size_t j = 1; j + 1 < p2.size(); ++j)
          for (std::size_t k = 1; k + 1 < p3.size(); ++k) {
            ++r.checked;
            std::vector<Vertex> set{p1[i], p2[j], p3[k]};
            if (is_mixed_generator(dt, set))
              r.fail(to_string(spec) + ": {" + format_witness(set) + "} resolves the graph");
          }
    }
    r.note = "thetas=" + std::to_string(thetas);
  });
}

/// Both theta classes: exact mdim, constructive generators, lower bounds.
inline SuiteResult theta_suite(std::size_t max_total, const SearchOptions& options) {
  return detail::timed_suite("theta-dichotomy", [&](SuiteResult& r) {
    for (const auto& spec : theta_specs_up_to(max_total)) {
      ++r.checked;
      auto row = scan_theta(spec, options);
      if (!row.verdict_ok) r.fail(to_csv_row(row));
    }
  });
}

/// Random connected graphs for property sampling: every connected graph on
/// 2..6 vertices plus G(n, p) samples on 7..10 vertices.
inline std::vector<Graph> sample_graph_pool(std::mt19937_64& rng, std::size_t random_graphs = 200) {
  auto pool = enumerate_connected_range(2, 6);
  std::uniform_int_distribution<std::size_t> order(7, 10);
  std::uniform_real_distribution<double> density(0.2, 0.6);
  while (random_graphs > 0) {
    const std::size_t n = order(rng);
    const double p = density(rng);
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex i = 0; i < n; ++i)
      for (Vertex j = i + 1; j < n; ++j)
        if (std::bernoulli_distribution(p)(rng)) pairs.emplace_back(i, j);
    Graph g = Graph::from_edges(n, pairs);
    if (!g.is_connected()) continue;
    pool.push_back(std::move(g));
    --random_graphs;
  }
  return pool;
}

/// Enclosed pairs are distinguished; half-enclosed pairs are distinguished
/// unless they are an incident vertex-edge pair.
inline SuiteResult enclosure_suite(std::size_t samples, std::uint64_t seed) {
  return detail::timed_suite("enclosure", [&](SuiteResult& r) {
    std::mt19937_64 rng(seed);
    const auto pool = sample_graph_pool(rng);
    std::vector<DistanceTable> tables;
    tables.reserve(pool.size());
    for (const auto& g : pool) tables.emplace_back(g);
    std::uniform_int_distribution<std::size_t> pick_graph(0, pool.size() - 1);
    std::size_t enclosed_hits = 0, half_hits = 0;
    for (std::size_t s = 0; s < samples; ++s) {
      const std::size_t gi = pick_graph(rng);
      const Graph& g = pool[gi];
      const DistanceTable& dt = tables[gi];
      const std::size_t n = g.order();
      std::uniform_int_distribution<std::size_t> set_size(1, std::min<std::size_t>(n, 4));
      std::vector<Vertex> all(n);
      for (Vertex v = 0; v < n; ++v) all[v] = v;
      std::shuffle(all.begin(), all.end(), rng);
      std::vector<Vertex> set(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(set_size(rng)));
      std::sort(set.begin(), set.end());
      std::uniform_int_distribution<std::size_t> pick_element(0, dt.element_count() - 1);
      std::size_t c1 = pick_element(rng), c2 = pick_element(rng);
      while (c2 == c1) c2 = pick_element(rng);
      const MixedElement x = dt.element(c1), x2 = dt.element(c2);
      ++r.checked;
      bool distinguished = false;
      for (Vertex v : set) distinguished = distinguished || distinguishes(dt, v, x, x2);
      const std::string where = encode_graph6(g) + " S={" + format_witness(set) + "} x=" + to_string(x, g) +
                                " x'=" + to_string(x2, g);
      if (enclosed(dt, set, x, x2)) {
        ++enclosed_hits;
        if (!distinguished) r.fail("enclosed but not distinguished: " + where);
      }
      if (half_enclosed(dt, set, x, x2)) {
        ++half_hits;
        if (!distinguished && !incident_pair(dt, x, x2)) r.fail("half-enclosed but not distinguished: " + where);
      }
    }
    r.note = "enclosed=" + std::to_string(enclosed_hits) + " half_enclosed=" + std::to_string(half_hits) +
             " graphs=" + std::to_string(pool.size());
  });
}

}  // namespace mmd
