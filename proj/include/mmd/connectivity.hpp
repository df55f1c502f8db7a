#pragma once

#include <bit>
#include <cstdint>
#include <limits>
#include <vector>

#include "mmd/graph.hpp"

namespace mmd {

namespace detail {

/// Unit-capacity flow network used for local vertex connectivity.
class SplitNetwork {
 public:
  // Vertex x becomes in-node 2x and out-node 2x+1 joined by a unit arc;
  // each edge xy becomes out(x)->in(y) and out(y)->in(x) with capacity n.
  explicit SplitNetwork(const Graph& g) : nodes_(2 * g.order()), head_(nodes_, -1) {
    const int big = static_cast<int>(g.order());
    for (Vertex x = 0; x < g.order(); ++x) add_arc(2 * x, 2 * x + 1, 1);
    for (const auto& e : g.edges()) {
      add_arc(2 * e.u + 1, 2 * e.v, big);
      add_arc(2 * e.v + 1, 2 * e.u, big);
    }
  }

  /// Maximum number of internally disjoint s-t paths (s, t non-adjacent).
  int max_flow(Vertex s, Vertex t, int cap) {
    for (auto& a : arcs_) a.flow = 0;
    const std::size_t source = 2 * s + 1;
    const std::size_t sink = 2 * t;
    int flow = 0;
    std::vector<int> via(nodes_);
    std::vector<std::size_t> queue(nodes_);
    while (flow < cap) {
      std::fill(via.begin(), via.end(), -1);
      std::size_t qh = 0, qt = 0;
      queue[qt++] = source;
      via[source] = std::numeric_limits<int>::max();
      while (qh < qt && via[sink] == -1) {
        std::size_t x = queue[qh++];
        for (int a = head_[x]; a != -1; a = arcs_[a].next) {
          const Arc& arc = arcs_[a];
          if (arc.cap - arc.flow > 0 && via[arc.to] == -1) {
            via[arc.to] = a;
            queue[qt++] = arc.to;
          }
        }
      }
      if (via[sink] == -1) break;
      for (std::size_t x = sink; x != source;) {
        int a = via[x];
        arcs_[a].flow += 1;
        arcs_[a ^ 1].flow -= 1;
        x = arcs_[a ^ 1].to;
      }
      ++flow;
    }
    return flow;
  }

 private:
  struct Arc {
    std::size_t to;
    int cap;
    int flow;
    int next;
  };

  void add_arc(std::size_t from, std::size_t to, int cap) {
    arcs_.push_back({to, cap, 0, head_[from]});
    head_[from] = static_cast<int>(arcs_.size() - 1);
    arcs_.push_back({from, 0, 0, head_[to]});
    head_[to] = static_cast<int>(arcs_.size() - 1);
  }

  std::size_t nodes_;
  std::vector<int> head_;
  std::vector<Arc> arcs_;
};

inline bool connected_without(const Graph& g, std::uint64_t removed) {
  const std::size_t n = g.order();
  Vertex start = 0;
  while (start < n && (removed >> start & 1U)) ++start;
  if (start == n) return true;
  std::uint64_t seen = removed | (std::uint64_t{1} << start);
  std::vector<Vertex> stack{start};
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    for (Vertex y : g.neighbors(x)) {
      if (!(seen >> y & 1U)) {
        seen |= std::uint64_t{1} << y;
        stack.push_back(y);
      }
    }
  }
  return std::popcount(seen) == static_cast<int>(n);
}

}  // namespace detail

/// κ(G) via Menger: the minimum over non-adjacent pairs of the number of
/// internally disjoint paths. Complete graphs return n-1; disconnected
/// graphs return 0.
inline std::size_t vertex_connectivity(const Graph& g) {
  const std::size_t n = g.order();
  if (n <= 1) return 0;
  if (!g.is_connected()) return 0;
  int best = static_cast<int>(n - 1);
  detail::SplitNetwork net(g);
  for (Vertex s = 0; s < n; ++s) {
    for (Vertex t = s + 1; t < n; ++t) {
      if (g.adjacent(s, t)) continue;
      best = std::min(best, net.max_flow(s, t, best));
      if (best == 0) return 0;
    }
  }
  return static_cast<std::size_t>(best);
}

/// κ(G) by enumerating vertex subsets in increasing size. Limited to n <= 20.
inline std::size_t vertex_connectivity_exhaustive(const Graph& g) {
  const std::size_t n = g.order();
  if (n > 20) throw GraphError(GraphErrc::TooLarge, "exhaustive connectivity is limited to 20 vertices");
  if (n <= 1) return 0;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      if (static_cast<std::size_t>(std::popcount(mask)) != k) continue;
      if (!detail::connected_without(g, mask)) return k;
    }
  }
  return n - 1;
}

}  // namespace mmd
