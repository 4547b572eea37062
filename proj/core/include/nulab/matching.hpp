#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "nulab/graph.hpp"

namespace nulab {

/// A set of pairwise vertex-disjoint edges, ids kept sorted.
struct Matching {
  std::vector<EdgeId> edge_ids;

  std::size_t size() const noexcept { return edge_ids.size(); }
  friend bool operator==(const Matching&, const Matching&) = default;
};

struct TwoFactor {
  std::vector<EdgeId> edge_ids;
  std::vector<std::vector<EdgeId>> cycles;  // each cycle in traversal order
  std::size_t odd_cycle_count = 0;
};

bool is_matching(const MultiGraph& g, std::span<const EdgeId> edges);

/// Maximum-cardinality matching (Edmonds). When parallel edges compete, the
/// lowest id is used.
Matching max_matching(const MultiGraph& g);

/// Same, restricted to edges with allowed[e] set.
Matching max_matching(const MultiGraph& g, const std::vector<bool>& allowed);

/// Visits perfect matchings in lexicographic order of their sorted edge ids
/// until the visitor returns false. Parallel twins yield distinct matchings.
void for_each_perfect_matching(const MultiGraph& g,
                               const std::function<bool(const Matching&)>& visit);

/// The first `limit` perfect matchings in lexicographic order.
std::vector<Matching> enumerate_perfect_matchings(const MultiGraph& g, std::size_t limit);

/// Complement of a perfect matching of a cubic graph, split into cycles.
/// Throws NotCubic / NotPerfect.
TwoFactor two_factor_from_pm(const MultiGraph& g, const Matching& pm);

/// o(G): fewest odd cycles over all 2-factors, by exhaustive enumeration of
/// perfect matchings. Throws NotCubic, or NoTwoFactor when g has no perfect
/// matching.
std::size_t min_odd_two_factor(const MultiGraph& g);

}  // namespace nulab
