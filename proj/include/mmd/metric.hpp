#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mmd/distance.hpp"
#include "mmd/graph.hpp"

namespace mmd {

/// Which pairs of V(G) ∪ E(G) a generator has to separate.
enum class Variant { Mixed, VertexOnly, EdgeOnly };

inline std::string to_string(Variant v) {
  switch (v) {
    case Variant::Mixed: return "mixed";
    case Variant::VertexOnly: return "vertex";
    case Variant::EdgeOnly: return "edge";
  }
  return "?";
}

/// True iff d(s,x) != d(s,x2).
inline bool distinguishes(const DistanceTable& dt, Vertex s, const MixedElement& x, const MixedElement& x2) {
  return dt(s, x) != dt(s, x2);
}

namespace detail {

/// Half-open range of canonical columns covered by a variant.
inline std::pair<std::size_t, std::size_t> column_range(const DistanceTable& dt, Variant variant) {
  switch (variant) {
    case Variant::Mixed: return {0, dt.element_count()};
    case Variant::VertexOnly: return {0, dt.order()};
    case Variant::EdgeOnly: return {dt.order(), dt.element_count()};
  }
  return {0, 0};
}

/// Incremental refinement of columns by the distance vectors of a growing
/// vertex set. Each column carries a packed key; two columns are separated
/// by the current set iff their keys differ. When packing would overflow 64
/// bits the keys are renumbered densely, which preserves the partition.
class ColumnPartition {
 public:
  ColumnPartition(std::size_t columns, unsigned bits_per_value)
      : keys_(columns, 0), bits_per_value_(std::max(1U, bits_per_value)) {}

  void refine(std::span<const Distance> values) {
    if (bits_used_ + bits_per_value_ > 64) compress();
    for (std::size_t c = 0; c < keys_.size(); ++c) keys_[c] = (keys_[c] << bits_per_value_) | values[c];
    bits_used_ += bits_per_value_;
  }

  /// True iff every column has its own key.
  bool discrete(std::vector<std::uint64_t>& scratch) const {
    scratch.assign(keys_.begin(), keys_.end());
    std::sort(scratch.begin(), scratch.end());
    return std::adjacent_find(scratch.begin(), scratch.end()) == scratch.end();
  }

  /// Some pair of columns sharing a key, if any.
  std::optional<std::pair<std::size_t, std::size_t>> collision() const {
    std::vector<std::pair<std::uint64_t, std::size_t>> tagged;
    tagged.reserve(keys_.size());
    for (std::size_t c = 0; c < keys_.size(); ++c) tagged.emplace_back(keys_[c], c);
    std::sort(tagged.begin(), tagged.end());
    for (std::size_t i = 1; i < tagged.size(); ++i)
      if (tagged[i].first == tagged[i - 1].first) return std::pair{tagged[i - 1].second, tagged[i].second};
    return std::nullopt;
  }

 private:
  void compress() {
    std::vector<std::uint64_t> sorted(keys_);
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (auto& k : keys_)
      k = static_cast<std::uint64_t>(std::lower_bound(sorted.begin(), sorted.end(), k) - sorted.begin());
    bits_used_ = static_cast<unsigned>(std::bit_width(sorted.size()));
  }

  std::vector<std::uint64_t> keys_;
  unsigned bits_per_value_;
  unsigned bits_used_ = 0;
};

/// Per-vertex distance rows restricted to one variant's column range.
struct ProjectedRows {
  std::vector<std::vector<Distance>> rows;
  unsigned bits_per_value = 1;
  std::size_t columns = 0;
  std::size_t first_column = 0;

  ProjectedRows(const DistanceTable& dt, Variant variant) {
    auto [lo, hi] = column_range(dt, variant);
    first_column = lo;
    columns = hi - lo;
    rows.resize(dt.order());
    for (Vertex s = 0; s < dt.order(); ++s) {
      auto full = dt.signature(s);
      rows[s].assign(full.begin() + static_cast<std::ptrdiff_t>(lo), full.begin() + static_cast<std::ptrdiff_t>(hi));
    }
    bits_per_value = static_cast<unsigned>(std::bit_width(static_cast<unsigned>(dt.diameter())));
  }
};

inline ColumnPartition partition_by(const ProjectedRows& pr, std::span<const Vertex> set) {
  ColumnPartition part(pr.columns, pr.bits_per_value);
  for (Vertex s : set) part.refine(pr.rows.at(s));
  return part;
}

}  // namespace detail

/// A pair of elements no vertex of the tested set tells apart.
struct UndistinguishedPair {
  MixedElement first;
  MixedElement second;
};

/// Returns a pair left unresolved by `set` under `variant`, or nullopt if the
/// set is a generator.
inline std::optional<UndistinguishedPair> find_undistinguished_pair(const DistanceTable& dt,
                                                                    std::span<const Vertex> set,
                                                                    Variant variant = Variant::Mixed) {
  detail::ProjectedRows pr(dt, variant);
  auto clash = detail::partition_by(pr, set).collision();
  if (!clash) return std::nullopt;
  return UndistinguishedPair{dt.element(pr.first_column + clash->first), dt.element(pr.first_column + clash->second)};
}

inline bool is_generator(const DistanceTable& dt, std::span<const Vertex> set, Variant variant) {
  return !find_undistinguished_pair(dt, set, variant).has_value();
}

inline bool is_mixed_generator(const DistanceTable& dt, std::span<const Vertex> set) {
  return is_generator(dt, set, Variant::Mixed);
}
inline bool is_vertex_generator(const DistanceTable& dt, std::span<const Vertex> set) {
  return is_generator(dt, set, Variant::VertexOnly);
}
inline bool is_edge_generator(const DistanceTable& dt, std::span<const Vertex> set) {
  return is_generator(dt, set, Variant::EdgeOnly);
}

/// Pruning switches for the exact search. Every rule can be disabled so the
/// pruned search can be checked against the plain one.
struct SearchOptions {
  /// Put every leaf into every candidate set and start at k = max(1, L1).
  /// Mixed variant only.
  bool force_leaves = false;
  /// Drop candidate vertices whose full signature repeats a smaller one.
  bool signature_dedup = true;
  /// Abort after this many complete subsets have been tested; 0 = no limit.
  std::uint64_t max_nodes = 0;

  static SearchOptions unpruned() { return {false, false, 0}; }
};

/// Thrown when a search exceeds SearchOptions::max_nodes.
class SearchBudgetExceeded : public std::runtime_error {
 public:
  explicit SearchBudgetExceeded(std::uint64_t nodes)
      : std::runtime_error("search budget of " + std::to_string(nodes) + " subsets exceeded"), nodes_(nodes) {}
  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  std::uint64_t nodes_;
};

struct GeneratorWitness {
  std::size_t dimension = 0;
  std::vector<Vertex> witness;  // sorted
  Variant variant = Variant::Mixed;
  std::uint64_t nodes_explored = 0;
};

namespace detail {

/// Depth-first enumeration of k-subsets of `candidates` in lexicographic
/// order, refining the column partition one vertex per level.
class SubsetSearch {
 public:
  SubsetSearch(const ProjectedRows& rows, std::vector<Vertex> candidates, std::vector<Vertex> forced,
               std::uint64_t max_nodes)
      : rows_(rows), candidates_(std::move(candidates)), forced_(std::move(forced)), max_nodes_(max_nodes) {}

  /// Finds the first generator of total size k (forced vertices included).
  std::optional<std::vector<Vertex>> of_size(std::size_t k) {
    if (k < forced_.size()) return std::nullopt;
    const std::size_t free = k - forced_.size();
    if (free > candidates_.size()) return std::nullopt;
    levels_.assign(free + 1, ColumnPartition(rows_.columns, rows_.bits_per_value));
    for (Vertex f : forced_) levels_[0].refine(rows_.rows[f]);
    chosen_.assign(free, 0);
    if (!descend(0, 0, free)) return std::nullopt;
    std::vector<Vertex> out(forced_);
    out.insert(out.end(), chosen_.begin(), chosen_.end());
    std::sort(out.begin(), out.end());
    return out;
  }

  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  bool descend(std::size_t depth, std::size_t start, std::size_t free) {
    if (depth == free) {
      ++nodes_;
      if (max_nodes_ != 0 && nodes_ > max_nodes_) throw SearchBudgetExceeded(max_nodes_);
      return levels_[depth].discrete(scratch_);
    }
    for (std::size_t i = start; i + (free - depth) <= candidates_.size(); ++i) {
      levels_[depth + 1] = levels_[depth];
      levels_[depth + 1].refine(rows_.rows[candidates_[i]]);
      chosen_[depth] = candidates_[i];
      if (descend(depth + 1, i + 1, free)) return true;
    }
    return false;
  }

  const ProjectedRows& rows_;
  std::vector<Vertex> candidates_;
  std::vector<Vertex> forced_;
  std::uint64_t max_nodes_;
  std::uint64_t nodes_ = 0;
  std::vector<ColumnPartition> levels_;
  std::vector<Vertex> chosen_;
  std::vector<std::uint64_t> scratch_;
};

}  // namespace detail

/// Exact metric dimension of a connected graph for the given variant.
///
/// Sizes are tried in increasing order and subsets of each size in
/// lexicographic order over the candidate vertices, so the first hit is both
/// minimum and the lexicographically smallest minimum set in that order. A
/// one-vertex graph has no pairs to separate and yields dimension 0.
inline GeneratorWitness metric_dimension(const Graph& g, Variant variant, const SearchOptions& options = {}) {
  require_connected(g);
  GeneratorWitness result;
  result.variant = variant;
  if (g.order() <= 1) return result;

  DistanceTable dt(g);
  detail::ProjectedRows rows(dt, variant);

  std::vector<Vertex> forced;
  if (options.force_leaves && variant == Variant::Mixed) forced = leaves(g);
  std::vector<bool> is_forced(g.order(), false);
  for (Vertex f : forced) is_forced[f] = true;

  std::vector<Vertex> candidates;
  std::vector<std::vector<Distance>> seen_signatures;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (is_forced[s]) continue;
    if (options.signature_dedup) {
      auto sig = dt.signature(s);
      if (std::find(seen_signatures.begin(), seen_signatures.end(), sig) != seen_signatures.end()) continue;
      seen_signatures.push_back(std::move(sig));
    }
    candidates.push_back(s);
  }

  detail::SubsetSearch search(rows, candidates, forced, options.max_nodes);
  const std::size_t lower = std::max<std::size_t>(1, forced.size());
  for (std::size_t k = lower; k <= forced.size() + candidates.size(); ++k) {
    if (auto found = search.of_size(k)) {
      result.dimension = k;
      result.witness = std::move(*found);
      result.nodes_explored = search.nodes();
      return result;
    }
  }
  // V(G) always resolves every pair, so this is unreachable for valid input.
  throw std::logic_error("no generator found");
}

inline GeneratorWitness mixed_metric_dimension(const Graph& g, const SearchOptions& options = {}) {
  return metric_dimension(g, Variant::Mixed, options);
}
inline GeneratorWitness vertex_metric_dimension(const Graph& g, const SearchOptions& options = {}) {
  return metric_dimension(g, Variant::VertexOnly, options);
}
inline GeneratorWitness edge_metric_dimension(const Graph& g, const SearchOptions& options = {}) {
  return metric_dimension(g, Variant::EdgeOnly, options);
}

/// Every generator of exactly size k, in lexicographic order. No pruning.
inline std::vector<std::vector<Vertex>> generators_of_size(const DistanceTable& dt, std::size_t k,
                                                           Variant variant = Variant::Mixed) {
  std::vector<std::vector<Vertex>> out;
  const std::size_t n = dt.order();
  if (k > n) return out;
  detail::ProjectedRows rows(dt, variant);
  std::vector<Vertex> set(k);
  for (std::size_t i = 0; i < k; ++i) set[i] = static_cast<Vertex>(i);
  std::vector<std::uint64_t> scratch;
  while (true) {
    if (detail::partition_by(rows, set).discrete(scratch)) out.push_back(set);
    std::size_t i = k;
    while (i > 0 && set[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++set[i - 1];
    for (std::size_t j = i; j < k; ++j) set[j] = set[j - 1] + 1;
  }
  return out;
}

}  // namespace mmd
