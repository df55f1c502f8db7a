#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "mmd/distance.hpp"
#include "mmd/error.hpp"
#include "mmd/graph.hpp"

namespace mmd {

enum class FamilyErrc { InvalidSpec, NotBalanced, Balanced, InvalidParameter, NotEdgeDisjoint };
using FamilyError = CodedError<FamilyErrc>;

using EdgePairs = std::vector<std::pair<Vertex, Vertex>>;

// ---------------------------------------------------------------------------
// Elementary families

inline Graph path(std::size_t n) {
  if (n < 1) throw FamilyError(FamilyErrc::InvalidParameter, "path needs at least one vertex");
  EdgePairs pairs;
  for (Vertex i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
  return Graph::from_edges(n, pairs);
}

inline Graph cycle(std::size_t n) {
  if (n < 3) throw FamilyError(FamilyErrc::InvalidParameter, "cycle needs at least three vertices");
  EdgePairs pairs;
  for (Vertex i = 0; i < n; ++i) pairs.emplace_back(i, static_cast<Vertex>((i + 1) % n));
  return Graph::from_edges(n, pairs);
}

/// K_{1,k} with center 0.
inline Graph star(std::size_t k) {
  if (k < 1) throw FamilyError(FamilyErrc::InvalidParameter, "star needs at least one leaf");
  EdgePairs pairs;
  for (Vertex i = 1; i <= k; ++i) pairs.emplace_back(0, i);
  return Graph::from_edges(k + 1, pairs);
}

inline Graph complete(std::size_t n) {
  if (n < 1) throw FamilyError(FamilyErrc::InvalidParameter, "complete graph needs at least one vertex");
  EdgePairs pairs;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  return Graph::from_edges(n, pairs);
}

/// Labeled tree on seq.size() + 2 vertices encoded by a Prüfer sequence.
inline Graph tree_from_pruefer(std::span<const Vertex> seq) {
  const std::size_t n = seq.size() + 2;
  std::vector<std::size_t> degree(n, 1);
  for (Vertex x : seq) {
    if (x >= n)
      throw FamilyError(FamilyErrc::InvalidParameter,
                        "Prüfer entry " + std::to_string(x) + " out of range for n=" + std::to_string(n));
    ++degree[x];
  }
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
  for (Vertex v = 0; v < n; ++v)
    if (degree[v] == 1) leaves.push(v);
  EdgePairs pairs;
  for (Vertex x : seq) {
    Vertex leaf = leaves.top();
    leaves.pop();
    pairs.emplace_back(leaf, x);
    if (--degree[x] == 1) leaves.push(x);
  }
  Vertex a = leaves.top();
  leaves.pop();
  pairs.emplace_back(a, leaves.top());
  return Graph::from_edges(n, pairs);
}

inline Graph tree_from_pruefer(std::initializer_list<Vertex> seq) {
  return tree_from_pruefer(std::span<const Vertex>(seq.begin(), seq.size()));
}

/// Calls fn on every labeled tree with n vertices, one per Prüfer sequence
/// (n^(n-2) trees for n >= 2).
template <typename Fn>
void for_each_labeled_tree(std::size_t n, Fn&& fn) {
  if (n == 0) throw FamilyError(FamilyErrc::InvalidParameter, "tree needs at least one vertex");
  if (n == 1) {
    fn(path(1));
    return;
  }
  std::vector<Vertex> seq(n - 2, 0);
  while (true) {
    fn(tree_from_pruefer(seq));
    std::size_t i = seq.size();
    while (i > 0 && seq[i - 1] == n - 1) seq[--i] = 0;
    if (i == 0) break;
    ++seq[i - 1];
  }
}

// ---------------------------------------------------------------------------
// Theta graphs

/// Lengths (edge counts) of the three u-v paths, normalized a <= b <= c.
struct ThetaSpec {
  std::size_t a = 0;
  std::size_t b = 0;
  std::size_t c = 0;

  /// Sorts the lengths and validates them: a >= 1 and b >= 2, since two
  /// paths of length one would be parallel edges.
  static ThetaSpec make(std::size_t x, std::size_t y, std::size_t z) {
    std::array<std::size_t, 3> l{x, y, z};
    std::sort(l.begin(), l.end());
    if (l[0] < 1 || l[1] < 2) {
      throw FamilyError(FamilyErrc::InvalidSpec, "invalid theta lengths (" + std::to_string(x) + "," +
                                                     std::to_string(y) + "," + std::to_string(z) + ")");
    }
    return ThetaSpec{l[0], l[1], l[2]};
  }

  std::size_t order() const { return a + b + c - 1; }
  std::size_t size() const { return a + b + c; }
  std::array<std::size_t, 3> lengths() const { return {a, b, c}; }

  friend auto operator<=>(const ThetaSpec&, const ThetaSpec&) = default;
};

inline std::string to_string(const ThetaSpec& s) {
  return "theta-" + std::to_string(s.a) + "-" + std::to_string(s.b) + "-" + std::to_string(s.c);
}

/// Lengths of the three paths differ by at most one.
inline bool is_balanced(const ThetaSpec& s) { return s.c - s.a <= 1; }

struct ThetaGraph {
  ThetaSpec spec;
  Graph graph;
  Vertex u = 0;
  Vertex v = 1;
  /// Vertex sequences from u to v, shortest first.
  std::array<std::vector<Vertex>, 3> paths;
};

/// Builds Θ(a,b,c) labeled u=0, v=1, then the internal vertices of the three
/// paths in order, each path walked from u towards v.
inline ThetaGraph theta(const ThetaSpec& spec) {
  ThetaSpec s = ThetaSpec::make(spec.a, spec.b, spec.c);
  ThetaGraph t;
  t.spec = s;
  EdgePairs pairs;
  Vertex next = 2;
  auto lengths = s.lengths();
  for (std::size_t p = 0; p < 3; ++p) {
    auto& seq = t.paths[p];
    seq.push_back(t.u);
    for (std::size_t i = 1; i < lengths[p]; ++i) seq.push_back(next++);
    seq.push_back(t.v);
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) pairs.emplace_back(seq[i], seq[i + 1]);
  }
  t.graph = Graph::from_edges(s.order(), pairs, Connectivity::Require);
  return t;
}

inline ThetaGraph theta(std::size_t a, std::size_t b, std::size_t c) { return theta(ThetaSpec::make(a, b, c)); }

/// Every valid spec with a + b + c <= max_total, in lexicographic order.
inline std::vector<ThetaSpec> theta_specs_up_to(std::size_t max_total) {
  std::vector<ThetaSpec> out;
  for (std::size_t a = 1; 3 * a <= max_total + 2; ++a)
    for (std::size_t b = std::max<std::size_t>(a, 2); a + 2 * b <= max_total; ++b)
      for (std::size_t c = b; a + b + c <= max_total; ++c) out.push_back(ThetaSpec{a, b, c});
  return out;
}

/// Positions at hop distance floor(len/2) from `position` on a cycle of
/// length `len`: one on even cycles, two on odd ones.
inline std::vector<std::size_t> antipodal_vertices(std::size_t len, std::size_t position) {
  if (len < 3 || position >= len)
    throw FamilyError(FamilyErrc::InvalidParameter, "antipodal query needs len >= 3 and position < len");
  const std::size_t half = len / 2;
  std::vector<std::size_t> out{(position + half) % len};
  if (len % 2 == 1) out.push_back((position + half + 1) % len);
  std::sort(out.begin(), out.end());
  return out;
}

/// {u, v, w, z} with w, z the neighbors of v on the lexicographically first
/// two paths whose remaining path is a shortest one.
inline std::vector<Vertex> balanced_theta_generator(const ThetaGraph& t) {
  if (!is_balanced(t.spec)) throw FamilyError(FamilyErrc::NotBalanced, to_string(t.spec) + " is not balanced");
  std::size_t uncovered = 0;
  for (std::size_t i = 0; i < t.paths.size(); ++i)
    if (t.paths[i].size() == t.paths[0].size()) uncovered = i;
  std::vector<Vertex> set{t.u, t.v};
  for (std::size_t i = 0; i < t.paths.size(); ++i)
    if (i != uncovered) set.push_back(t.paths[i][t.paths[i].size() - 2]);
  std::sort(set.begin(), set.end());
  return set;
}

/// {a_u, a_v, w}: a_u (a_v) is the antipode of u (v) on the cycle formed by
/// the shortest and longest paths, taking the one nearer to v (u) when there
/// are two; w is the middle vertex of the middle path, and on odd paths the
/// one with d(w,u) >= d(w,v).
inline std::vector<Vertex> unbalanced_theta_generator(const ThetaGraph& t) {
  if (is_balanced(t.spec)) throw FamilyError(FamilyErrc::Balanced, to_string(t.spec) + " is balanced");
  const DistanceTable dt(t.graph);
  const auto& shortest = t.paths[0];
  const auto& middle = t.paths[1];
  const auto& longest = t.paths[2];

  // Cycle order: u along the longest path to v, then back to u along the
  // shortest path.
  std::vector<Vertex> ring(longest.begin(), longest.end());
  for (std::size_t i = shortest.size() - 2; i >= 1; --i) ring.push_back(shortest[i]);
  const std::size_t pos_v = longest.size() - 1;

  auto pick = [&](std::size_t pos, Vertex reference) {
    Vertex best = 0;
    bool have = false;
    for (std::size_t q : antipodal_vertices(ring.size(), pos)) {
      Vertex cand = ring[q];
      if (!have || dt.vv(reference, cand) < dt.vv(reference, best) ||
          (dt.vv(reference, cand) == dt.vv(reference, best) && cand < best)) {
        best = cand;
        have = true;
      }
    }
    return best;
  };
  const Vertex a_u = pick(0, t.v);
  const Vertex a_v = pick(pos_v, t.u);

  Vertex w = middle[middle.size() / 2];
  for (std::size_t i = 1; i + 1 < middle.size(); ++i) {
    const int du = dt.vv(middle[i], t.u);
    const int dv = dt.vv(middle[i], t.v);
    if (du >= dv && du - dv <= 1) {
      w = middle[i];
      break;
    }
  }
  std::vector<Vertex> set{a_u, a_v, w};
  std::sort(set.begin(), set.end());
  return set;
}

/// Recognizes a Theta graph: connected, exactly two vertices of degree 3,
/// all others of degree 2, and the three walks from one branch vertex all
/// end at the other.
inline std::optional<ThetaSpec> theta_shape(const Graph& g) {
  std::vector<Vertex> branch;
  for (Vertex x = 0; x < g.order(); ++x) {
    if (g.degree(x) == 3)
      branch.push_back(x);
    else if (g.degree(x) != 2)
      return std::nullopt;
  }
  if (branch.size() != 2 || !g.is_connected()) return std::nullopt;
  const Vertex u = branch[0], v = branch[1];
  std::array<std::size_t, 3> lengths{};
  auto nb = g.neighbors(u);
  for (std::size_t i = 0; i < 3; ++i) {
    Vertex prev = u, cur = nb[i];
    std::size_t len = 1;
    while (g.degree(cur) == 2) {
      auto cn = g.neighbors(cur);
      Vertex nxt = cn[0] == prev ? cn[1] : cn[0];
      prev = cur;
      cur = nxt;
      ++len;
    }
    if (cur != v) return std::nullopt;
    lengths[i] = len;
  }
  std::sort(lengths.begin(), lengths.end());
  return ThetaSpec{lengths[0], lengths[1], lengths[2]};
}

// ---------------------------------------------------------------------------
// Blocks and cacti

/// Biconnected blocks as lists of EdgeIds (iterative Hopcroft-Tarjan).
inline std::vector<std::vector<EdgeId>> biconnected_blocks(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::vector<EdgeId>> blocks;
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<EdgeId> edge_stack;
  int time = 0;
  struct Frame {
    Vertex v;
    Vertex parent;
    std::size_t next;
  };
  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] != -1) continue;
    std::vector<Frame> stack{{root, root, 0}};
    disc[root] = low[root] = time++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      auto nb = g.neighbors(f.v);
      if (f.next < nb.size()) {
        Vertex w = nb[f.next++];
        EdgeId e = *g.edge_id(f.v, w);
        if (disc[w] == -1) {
          edge_stack.push_back(e);
          disc[w] = low[w] = time++;
          stack.push_back({w, f.v, 0});
        } else if (w != f.parent && disc[w] < disc[f.v]) {
          edge_stack.push_back(e);
          low[f.v] = std::min(low[f.v], disc[w]);
        }
        continue;
      }
      const Vertex child = f.v;
      const Vertex parent = f.parent;
      stack.pop_back();
      if (stack.empty()) break;
      low[parent] = std::min(low[parent], low[child]);
      if (low[child] >= disc[parent]) {
        const EdgeId tree_edge = *g.edge_id(parent, child);
        std::vector<EdgeId> block;
        while (true) {
          EdgeId e = edge_stack.back();
          edge_stack.pop_back();
          block.push_back(e);
          if (e == tree_edge) break;
        }
        std::sort(block.begin(), block.end());
        blocks.push_back(std::move(block));
      }
    }
  }
  return blocks;
}

inline std::vector<Vertex> block_vertices(const Graph& g, const std::vector<EdgeId>& block) {
  std::vector<Vertex> vs;
  for (EdgeId e : block) {
    vs.push_back(g.edge(e).u);
    vs.push_back(g.edge(e).v);
  }
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

/// Connected, and every block is a bridge or a cycle; equivalently all
/// cycles are pairwise edge-disjoint.
inline bool is_cactus(const Graph& g) {
  if (!g.is_connected()) return false;
  for (const auto& block : biconnected_blocks(g)) {
    if (block.size() == 1) continue;
    if (block_vertices(g, block).size() != block.size()) return false;
  }
  return true;
}

/// Vertex sets of the cycles of a cactus (its blocks with more than one edge).
inline std::vector<std::vector<Vertex>> cactus_cycles(const Graph& g) {
  std::vector<std::vector<Vertex>> out;
  for (const auto& block : biconnected_blocks(g))
    if (block.size() > 1) out.push_back(block_vertices(g, block));
  return out;
}

/// Every cycle has exactly one vertex of degree >= 3. Trees satisfy this
/// vacuously; graphs that are not cacti never do.
inline bool every_cycle_has_one_branch_vertex(const Graph& g) {
  if (!is_cactus(g)) return false;
  for (const auto& cyc : cactus_cycles(g)) {
    auto branch = std::count_if(cyc.begin(), cyc.end(), [&](Vertex x) { return g.degree(x) >= 3; });
    if (branch != 1) return false;
  }
  return true;
}

struct CactusAttachment {
  enum class Kind { Cycle, Path };
  Kind kind = Kind::Path;
  /// Existing vertex the new cycle or pendant path is glued to.
  Vertex anchor = 0;
  /// Cycle length, or number of edges of the pendant path.
  std::size_t length = 1;
};

/// A base cactus (by default a single vertex) extended by gluing cycles and
/// pendant paths one at a time. Attachment i may anchor at any vertex that
/// exists after attachments 0..i-1; new vertices are numbered consecutively.
struct CactusSpec {
  Graph base = path(1);
  std::vector<CactusAttachment> attachments;
};

inline Graph cactus(const CactusSpec& spec) {
  if (!spec.base.is_connected() || spec.base.order() == 0)
    throw FamilyError(FamilyErrc::InvalidParameter, "cactus base must be a nonempty connected graph");
  if (!is_cactus(spec.base))
    throw FamilyError(FamilyErrc::NotEdgeDisjoint, "cactus base has cycles sharing an edge");
  EdgePairs pairs = spec.base.edge_pairs();
  Vertex n = static_cast<Vertex>(spec.base.order());
  for (const auto& att : spec.attachments) {
    if (att.anchor >= n)
      throw FamilyError(FamilyErrc::InvalidParameter, "attachment anchor " + std::to_string(att.anchor) +
                                                          " does not exist yet");
    if (att.kind == CactusAttachment::Kind::Cycle) {
      if (att.length < 3) throw FamilyError(FamilyErrc::InvalidParameter, "attached cycle must have length >= 3");
      Vertex prev = att.anchor;
      for (std::size_t i = 1; i < att.length; ++i) {
        pairs.emplace_back(prev, n);
        prev = n++;
      }
      pairs.emplace_back(prev, att.anchor);
    } else {
      if (att.length < 1) throw FamilyError(FamilyErrc::InvalidParameter, "pendant path must have length >= 1");
      Vertex prev = att.anchor;
      for (std::size_t i = 0; i < att.length; ++i) {
        pairs.emplace_back(prev, n);
        prev = n++;
      }
    }
  }
  return Graph::from_edges(n, pairs, Connectivity::Require);
}

struct CactusPopulationLimits {
  std::size_t max_cycles = 2;
  std::size_t max_cycle_length = 5;
  std::size_t max_paths = 2;
  std::size_t max_path_length = 2;
  std::size_t max_order = 12;
};

struct CactusInstance {
  CactusSpec spec;
  Graph graph;
};

/// Every attachment sequence over a single-vertex base within the limits,
/// in depth-first order. Different sequences may give isomorphic graphs.
inline std::vector<CactusInstance> cactus_population(const CactusPopulationLimits& limits = {}) {
  std::vector<CactusInstance> out;
  CactusSpec spec;
  std::function<void(std::size_t, std::size_t, std::size_t)> grow = [&](std::size_t order, std::size_t cycles,
                                                                        std::size_t paths) {
    if (order >= 2) out.push_back({spec, cactus(spec)});
    for (std::size_t len = 3; cycles < limits.max_cycles && len <= limits.max_cycle_length; ++len) {
      if (order + len - 1 > limits.max_order) break;
      for (Vertex anchor = 0; anchor < order; ++anchor) {
        spec.attachments.push_back({CactusAttachment::Kind::Cycle, anchor, len});
        grow(order + len - 1, cycles + 1, paths);
        spec.attachments.pop_back();
      }
    }
    for (std::size_t len = 1; paths < limits.max_paths && len <= limits.max_path_length; ++len) {
      if (order + len > limits.max_order) break;
      for (Vertex anchor = 0; anchor < order; ++anchor) {
        spec.attachments.push_back({CactusAttachment::Kind::Path, anchor, len});
        grow(order + len, cycles, paths + 1);
        spec.attachments.pop_back();
      }
    }
  };
  grow(1, 0, 0);
  return out;
}

}  // namespace mmd
