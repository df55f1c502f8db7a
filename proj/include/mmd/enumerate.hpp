#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "mmd/graph.hpp"
#include "mmd/graph6.hpp"

namespace mmd {

inline constexpr std::size_t kMaxEnumerationOrder = 7;

namespace detail {

/// Adjacency bitmask rows for graphs with at most 7 vertices.
using SmallAdjacency = std::array<std::uint8_t, kMaxEnumerationOrder>;

/// Upper-triangle bits in graph6 order (columns j, rows i < j), first pair
/// in the most significant position, so integer order is string order.
inline std::uint32_t pair_code(const SmallAdjacency& adj, std::size_t n, const std::array<std::uint8_t, 7>& perm) {
  std::uint32_t code = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i) code = (code << 1) | ((adj[perm[i]] >> perm[j]) & 1U);
  return code;
}

/// Minimum pair_code over all n! relabelings.
inline std::uint32_t canonical_code(const SmallAdjacency& adj, std::size_t n) {
  std::array<std::uint8_t, 7> perm{};
  std::iota(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(n), 0);
  std::uint32_t best = UINT32_MAX;
  do {
    best = std::min(best, pair_code(adj, n, perm));
  } while (std::next_permutation(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(n)));
  return best;
}

inline Graph graph_from_code(std::uint32_t code, std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  const std::size_t total = n * (n - 1) / 2;
  std::size_t bit = total;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i)
      if ((code >> --bit) & 1U) pairs.emplace_back(i, j);
  return Graph::from_edges(n, pairs);
}

}  // namespace detail

/// Canonical pair code of a graph with at most 7 vertices.
inline std::uint32_t canonical_code(const Graph& g) {
  if (g.order() > kMaxEnumerationOrder)
    throw IoError(IoErrc::NTooLarge, "canonical codes are limited to 7 vertices");
  detail::SmallAdjacency adj{};
  for (const auto& e : g.edges()) {
    adj[e.u] |= static_cast<std::uint8_t>(1U << e.v);
    adj[e.v] |= static_cast<std::uint8_t>(1U << e.u);
  }
  return detail::canonical_code(adj, g.order());
}

/// One representative per isomorphism class of connected graphs on n
/// vertices (1 <= n <= 7), each in its canonical labeling, ordered by
/// canonical code.
///
/// Every connected graph on n vertices arises from a connected graph on n-1
/// vertices by adding a vertex with a nonempty neighborhood (delete a leaf of
/// a spanning tree), so the classes are grown level by level and deduplicated
/// by canonical code.
inline std::vector<Graph> enumerate_connected(std::size_t n) {
  if (n < 1 || n > kMaxEnumerationOrder)
    throw IoError(IoErrc::NTooLarge, "built-in enumeration covers 1 <= n <= 7; use graph6 input for larger n");
  std::vector<std::uint32_t> level{0};  // K1
  for (std::size_t k = 2; k <= n; ++k) {
    std::set<std::uint32_t> next;
    for (std::uint32_t code : level) {
      Graph base = detail::graph_from_code(code, k - 1);
      detail::SmallAdjacency adj{};
      for (const auto& e : base.edges()) {
        adj[e.u] |= static_cast<std::uint8_t>(1U << e.v);
        adj[e.v] |= static_cast<std::uint8_t>(1U << e.u);
      }
      const std::size_t fresh = k - 1;
      for (std::uint32_t mask = 1; mask < (1U << fresh); ++mask) {
        detail::SmallAdjacency ext = adj;
        ext[fresh] = static_cast<std::uint8_t>(mask);
        for (std::size_t i = 0; i < fresh; ++i)
          if ((mask >> i) & 1U) ext[i] |= static_cast<std::uint8_t>(1U << fresh);
        next.insert(detail::canonical_code(ext, k));
      }
    }
    level.assign(next.begin(), next.end());
  }
  std::vector<Graph> out;
  out.reserve(level.size());
  for (std::uint32_t code : level) out.push_back(detail::graph_from_code(code, n));
  return out;
}

/// All connected graphs with lo <= n <= hi, concatenated by order.
inline std::vector<Graph> enumerate_connected_range(std::size_t lo, std::size_t hi) {
  std::vector<Graph> out;
  for (std::size_t n = lo; n <= hi; ++n) {
    auto level = enumerate_connected(n);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

}  // namespace mmd
