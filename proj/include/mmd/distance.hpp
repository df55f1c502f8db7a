#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <limits>
#include <queue>
#include <span>
#include <string>
#include <vector>

#include "mmd/graph.hpp"

namespace mmd {

using Distance = std::uint16_t;
inline constexpr Distance kUnreachable = std::numeric_limits<Distance>::max();

/// A member of V(G) ∪ E(G).
struct MixedElement {
  enum class Kind : std::uint8_t { Vertex, Edge };

  Kind kind = Kind::Vertex;
  std::uint32_t index = 0;

  static constexpr MixedElement vertex(Vertex v) { return {Kind::Vertex, v}; }
  static constexpr MixedElement edge(EdgeId e) { return {Kind::Edge, e}; }

  constexpr bool is_vertex() const { return kind == Kind::Vertex; }
  constexpr bool is_edge() const { return kind == Kind::Edge; }

  friend auto operator<=>(const MixedElement&, const MixedElement&) = default;
};

inline std::string to_string(const MixedElement& x, const Graph& g) {
  if (x.is_vertex()) return std::to_string(x.index);
  const Edge& e = g.edge(x.index);
  return std::to_string(e.u) + "-" + std::to_string(e.v);
}

/// All vertex-vertex and vertex-edge hop distances of a connected graph.
///
/// Coordinates of the mixed ground set are ordered canonically: vertices by
/// index, then edges by EdgeId. column() maps an element to that position.
class DistanceTable {
 public:
  explicit DistanceTable(const Graph& g) : n_(g.order()), edges_(g.edges()) {
    vv_.assign(n_ * n_, kUnreachable);
    std::vector<Vertex> queue(n_);
    for (Vertex s = 0; s < n_; ++s) {
      Distance* row = vv_.data() + static_cast<std::size_t>(s) * n_;
      std::size_t head = 0, tail = 0;
      row[s] = 0;
      queue[tail++] = s;
      while (head < tail) {
        Vertex x = queue[head++];
        for (Vertex y : g.neighbors(x)) {
          if (row[y] == kUnreachable) {
            row[y] = static_cast<Distance>(row[x] + 1);
            queue[tail++] = y;
          }
        }
      }
      if (tail != n_) throw GraphError(GraphErrc::Disconnected, "graph is not connected");
    }
    const std::size_t m = edges_.size();
    ve_.resize(n_ * m);
    for (Vertex s = 0; s < n_; ++s) {
      for (EdgeId e = 0; e < m; ++e) {
        ve_[static_cast<std::size_t>(s) * m + e] = std::min(vv(s, edges_[e].u), vv(s, edges_[e].v));
      }
    }
  }

  std::size_t order() const noexcept { return n_; }
  std::size_t size() const noexcept { return edges_.size(); }
  std::size_t element_count() const noexcept { return n_ + edges_.size(); }
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  Distance vv(Vertex a, Vertex b) const { return vv_[static_cast<std::size_t>(a) * n_ + b]; }
  Distance ve(Vertex a, EdgeId e) const { return ve_[static_cast<std::size_t>(a) * edges_.size() + e]; }

  Distance operator()(Vertex s, const MixedElement& x) const { return x.is_vertex() ? vv(s, x.index) : ve(s, x.index); }

  std::size_t column(const MixedElement& x) const { return x.is_vertex() ? x.index : n_ + x.index; }

  MixedElement element(std::size_t column) const {
    return column < n_ ? MixedElement::vertex(static_cast<Vertex>(column))
                       : MixedElement::edge(static_cast<EdgeId>(column - n_));
  }

  /// Concatenated distance row of s over the canonical element order.
  std::vector<Distance> signature(Vertex s) const {
    std::vector<Distance> row(element_count());
    for (Vertex v = 0; v < n_; ++v) row[v] = vv(s, v);
    for (EdgeId e = 0; e < edges_.size(); ++e) row[n_ + e] = ve(s, e);
    return row;
  }

  Distance diameter() const { return vv_.empty() ? 0 : *std::max_element(vv_.begin(), vv_.end()); }

 private:
  std::size_t n_;
  std::vector<Edge> edges_;
  std::vector<Distance> vv_;
  std::vector<Distance> ve_;
};

inline DistanceTable distance_table(const Graph& g) { return DistanceTable(g); }

/// Whether the subgraph H = (h_vertices, h_edges) preserves all host distances.
/// H must be a connected subgraph of g; otherwise NotASubgraph is thrown.
inline bool is_isometric_subgraph(const Graph& g, std::span<const Vertex> h_vertices, std::span<const Edge> h_edges) {
  std::vector<std::int64_t> index(g.order(), -1);
  std::vector<Vertex> vertices(h_vertices.begin(), h_vertices.end());
  std::sort(vertices.begin(), vertices.end());
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
    throw GraphError(GraphErrc::NotASubgraph, "repeated vertex in subgraph");
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] >= g.order()) throw GraphError(GraphErrc::NotASubgraph, "subgraph vertex out of range");
    index[vertices[i]] = static_cast<std::int64_t>(i);
  }
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (const auto& e : h_edges) {
    if (e.u >= g.order() || e.v >= g.order() || !g.adjacent(e.u, e.v))
      throw GraphError(GraphErrc::NotASubgraph, "subgraph edge is not an edge of the host");
    if (index[e.u] < 0 || index[e.v] < 0)
      throw GraphError(GraphErrc::NotASubgraph, "subgraph edge endpoint missing from vertex set");
    pairs.emplace_back(static_cast<Vertex>(index[e.u]), static_cast<Vertex>(index[e.v]));
  }
  Graph h = Graph::from_edges(vertices.size(), pairs);
  if (!h.is_connected()) throw GraphError(GraphErrc::NotASubgraph, "subgraph is not connected");

  DistanceTable host(g);
  DistanceTable sub(h);
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (sub.vv(static_cast<Vertex>(i), static_cast<Vertex>(j)) != host.vv(vertices[i], vertices[j])) return false;
  return true;
}

}  // namespace mmd
