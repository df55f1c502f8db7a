#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mmd/error.hpp"

namespace mmd {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;

/// Hop counts are stored in 16 bits, which caps the vertex count.
inline constexpr std::size_t kMaxVertices = std::numeric_limits<std::uint16_t>::max();

/// Unordered vertex pair, stored with the smaller index first.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

enum class Connectivity { Allow, Require };

/// Simple undirected graph on vertices 0..n-1.
///
/// Edges are kept in lexicographic order; the position of an edge in that
/// list is its EdgeId. Adjacency lists are sorted. Instances are immutable.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from arbitrary vertex pairs. Throws GraphError on loops,
  /// duplicate pairs, out-of-range endpoints, oversize n, and (with
  /// Connectivity::Require) on disconnected input.
  static Graph from_edges(std::size_t n, std::span<const std::pair<Vertex, Vertex>> pairs,
                          Connectivity connectivity = Connectivity::Allow) {
    if (n > kMaxVertices) {
      throw GraphError(GraphErrc::TooLarge, "graph has " + std::to_string(n) + " vertices, limit is " +
                                                std::to_string(kMaxVertices));
    }
    Graph g;
    g.n_ = n;
    g.edges_.reserve(pairs.size());
    for (auto [a, b] : pairs) {
      if (a >= n || b >= n) {
        throw GraphError(GraphErrc::VertexOutOfRange, "edge (" + std::to_string(a) + "," + std::to_string(b) +
                                                          ") references a vertex >= " + std::to_string(n));
      }
      if (a == b) {
        throw GraphError(GraphErrc::SelfLoop, "self-loop at vertex " + std::to_string(a));
      }
      g.edges_.push_back(Edge{std::min(a, b), std::max(a, b)});
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    if (auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end()); dup != g.edges_.end()) {
      throw GraphError(GraphErrc::DuplicateEdge,
                       "duplicate edge (" + std::to_string(dup->u) + "," + std::to_string(dup->v) + ")");
    }
    g.build_adjacency();
    if (connectivity == Connectivity::Require && !g.is_connected()) {
      throw GraphError(GraphErrc::Disconnected, "graph is not connected");
    }
    return g;
  }

  static Graph from_edges(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> pairs,
                          Connectivity connectivity = Connectivity::Allow) {
    return from_edges(n, std::span<const std::pair<Vertex, Vertex>>(pairs.begin(), pairs.size()), connectivity);
  }

  std::size_t order() const noexcept { return n_; }
  std::size_t size() const noexcept { return edges_.size(); }

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }

  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

  bool adjacent(Vertex a, Vertex b) const {
    auto nb = neighbors(a);
    return std::binary_search(nb.begin(), nb.end(), b);
  }

  std::optional<EdgeId> edge_id(Vertex a, Vertex b) const {
    Edge key{std::min(a, b), std::max(a, b)};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
    if (it == edges_.end() || *it != key) return std::nullopt;
    return static_cast<EdgeId>(it - edges_.begin());
  }

  /// Graphs with at most one vertex count as connected.
  bool is_connected() const {
    if (n_ <= 1) return true;
    std::vector<bool> seen(n_, false);
    std::vector<Vertex> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (Vertex y : neighbors(x)) {
        if (!seen[y]) {
          seen[y] = true;
          ++reached;
          stack.push_back(y);
        }
      }
    }
    return reached == n_;
  }

  std::vector<std::pair<Vertex, Vertex>> edge_pairs() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(edges_.size());
    for (const auto& e : edges_) out.emplace_back(e.u, e.v);
    return out;
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

 private:
  void build_adjacency() {
    offsets_.assign(n_ + 1, 0);
    for (const auto& e : edges_) {
      ++offsets_[e.u + 1];
      ++offsets_[e.v + 1];
    }
    for (std::size_t i = 0; i < n_; ++i) offsets_[i + 1] += offsets_[i];
    adjacency_.assign(offsets_[n_], 0);
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
    // Lexicographic edge order makes every adjacency list come out sorted.
    for (const auto& e : edges_) {
      adjacency_[fill[e.u]++] = e.v;
      adjacency_[fill[e.v]++] = e.u;
    }
  }

  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> adjacency_;
};

inline Graph from_edge_list(std::size_t n, std::span<const std::pair<Vertex, Vertex>> pairs,
                            Connectivity connectivity = Connectivity::Allow) {
  return Graph::from_edges(n, pairs, connectivity);
}

inline void require_connected(const Graph& g) {
  if (!g.is_connected()) throw GraphError(GraphErrc::Disconnected, "graph is not connected");
}

/// Number of degree-1 vertices.
inline std::size_t leaf_count(const Graph& g) {
  std::size_t leaves = 0;
  for (Vertex v = 0; v < g.order(); ++v) leaves += g.degree(v) == 1 ? 1 : 0;
  return leaves;
}

inline std::vector<Vertex> leaves(const Graph& g) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) == 1) out.push_back(v);
  return out;
}

/// m - n + 1; only meaningful for connected graphs.
inline std::size_t cyclomatic_number(const Graph& g) {
  if (g.order() == 0) return 0;
  return g.size() + 1 - g.order();
}

/// Connected and 2-regular.
inline bool is_cycle_graph(const Graph& g) {
  if (g.order() < 3 || g.size() != g.order()) return false;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) != 2) return false;
  return g.is_connected();
}

inline bool is_tree(const Graph& g) { return g.order() >= 1 && g.size() + 1 == g.order() && g.is_connected(); }

/// Graph on the given vertex subset, relabeled 0..k-1 in increasing order.
inline Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  std::vector<Vertex> sorted(keep.begin(), keep.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::int64_t> index(g.order(), -1);
  for (std::size_t i = 0; i < sorted.size(); ++i) index[sorted[i]] = static_cast<std::int64_t>(i);
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (const auto& e : g.edges()) {
    if (index[e.u] >= 0 && index[e.v] >= 0)
      pairs.emplace_back(static_cast<Vertex>(index[e.u]), static_cast<Vertex>(index[e.v]));
  }
  return Graph::from_edges(sorted.size(), pairs);
}

}  // namespace mmd
