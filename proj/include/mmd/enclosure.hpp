#pragma once

#include <array>
#include <span>
#include <utility>

#include "mmd/distance.hpp"

// Geodesic membership for mixed elements. An edge ab lies on an s-t shortest
// path when the path traverses it, i.e. d(s,a) + 1 + d(b,t) = d(s,t) for one
// orientation. A path "to" an edge runs to its nearer endpoint and then
// includes the edge itself.

namespace mmd {

namespace detail {

/// An element traversed in one direction: entry vertex, exit vertex, length.
struct Traversal {
  Vertex in;
  Vertex out;
  unsigned length;
};

inline std::array<Traversal, 2> traversals(const DistanceTable& dt, const MixedElement& x, std::size_t& count) {
  if (x.is_vertex()) {
    count = 1;
    return {Traversal{x.index, x.index, 0}, Traversal{}};
  }
  const Edge& e = dt.edge(x.index);
  count = 2;
  return {Traversal{e.u, e.v, 1}, Traversal{e.v, e.u, 1}};
}

}  // namespace detail

/// Element y lies on some shortest s-t path.
inline bool on_geodesic(const DistanceTable& dt, Vertex s, Vertex t, const MixedElement& y) {
  const unsigned total = dt.vv(s, t);
  std::size_t ny = 0;
  auto ty = detail::traversals(dt, y, ny);
  for (std::size_t i = 0; i < ny; ++i)
    if (dt.vv(s, ty[i].in) + ty[i].length + dt.vv(ty[i].out, t) == total) return true;
  return false;
}

/// Both elements lie on one common shortest s-t path.
inline bool on_common_geodesic(const DistanceTable& dt, Vertex s, Vertex t, const MixedElement& x,
                               const MixedElement& x2) {
  const unsigned total = dt.vv(s, t);
  std::size_t nx = 0, ny = 0;
  auto tx = detail::traversals(dt, x, nx);
  auto ty = detail::traversals(dt, x2, ny);
  for (std::size_t i = 0; i < nx; ++i) {
    for (std::size_t j = 0; j < ny; ++j) {
      const auto& a = tx[i];
      const auto& b = ty[j];
      if (dt.vv(s, a.in) + a.length + dt.vv(a.out, b.in) + b.length + dt.vv(b.out, t) == total) return true;
      if (dt.vv(s, b.in) + b.length + dt.vv(b.out, a.in) + a.length + dt.vv(a.out, t) == total) return true;
    }
  }
  return false;
}

/// Element y lies on some shortest path from s to the element `target`.
inline bool on_path_to(const DistanceTable& dt, Vertex s, const MixedElement& target, const MixedElement& y) {
  if (target.is_vertex()) return on_geodesic(dt, s, target.index, y);
  if (y == target) return true;
  const Edge& e = dt.edge(target.index);
  const Distance reach = dt.ve(s, target.index);
  for (auto [near, far] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
    if (dt.vv(s, near) != reach) continue;
    if (y == MixedElement::vertex(far) || on_geodesic(dt, s, near, y)) return true;
  }
  return false;
}

/// Some shortest path between two vertices of S contains both x and x2.
inline bool enclosed(const DistanceTable& dt, std::span<const Vertex> set, const MixedElement& x,
                     const MixedElement& x2) {
  for (std::size_t i = 0; i < set.size(); ++i)
    for (std::size_t j = i + 1; j < set.size(); ++j)
      if (set[i] != set[j] && on_common_geodesic(dt, set[i], set[j], x, x2)) return true;
  return false;
}

/// For some s in S, a shortest path from s to x contains x2, or one from s to
/// x2 contains x.
inline bool half_enclosed(const DistanceTable& dt, std::span<const Vertex> set, const MixedElement& x,
                          const MixedElement& x2) {
  for (Vertex s : set)
    if (on_path_to(dt, s, x, x2) || on_path_to(dt, s, x2, x)) return true;
  return false;
}

/// A vertex together with an edge incident to it.
inline bool incident_pair(const DistanceTable& dt, const MixedElement& x, const MixedElement& x2) {
  if (x.kind == x2.kind) return false;
  const MixedElement& v = x.is_vertex() ? x : x2;
  const Edge& e = dt.edge(x.is_edge() ? x.index : x2.index);
  return e.u == v.index || e.v == v.index;
}

}  // namespace mmd
