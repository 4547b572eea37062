#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nulab/graph.hpp"

// Slow reference computations used only by the tests. Nothing here shares
// code with the library solvers.
namespace oracle {

using nulab::EdgeId;
using nulab::MultiGraph;
using nulab::VertexId;

/// Can the edges in `mask` be properly colored with k colors? k = 1 and k = 2
/// are decided structurally, k >= 3 by backtracking over vertex color masks.
bool colorable(const MultiGraph& g, int k, std::uint64_t mask);

/// nu_k by scanning edge subsets from the largest size down. Stops at the
/// first colorable size. Returns nullopt when more than `max_tests` subsets
/// would be needed.
std::optional<std::size_t> nu_k(const MultiGraph& g, int k,
                                std::uint64_t max_tests = 50'000'000);

/// Bridges by deleting each edge and recounting components.
std::vector<EdgeId> bridges(const MultiGraph& g);

std::size_t component_count(const MultiGraph& g, std::uint64_t mask);

/// Largest matching by subset scan (<= 30 edges).
std::size_t matching_number(const MultiGraph& g);

/// Perfect matchings as sorted edge-id lists, lexicographic.
std::vector<std::vector<EdgeId>> perfect_matchings(const MultiGraph& g);

/// Fewest odd cycles over the complements of all perfect matchings of a
/// cubic graph. nullopt when there is none.
std::optional<std::size_t> min_odd_two_factor(const MultiGraph& g);

/// No induced K_{1,3}, by testing every centre and neighbour triple.
bool claw_free(const MultiGraph& g);

/// Bipartite via union-find with side parity.
bool bipartite(const MultiGraph& g);

/// Fewest edges of `cycle` whose removal leaves a k-colorable graph.
std::optional<std::size_t> cycle_deficiency(const MultiGraph& g, int k,
                                            const std::vector<EdgeId>& cycle);

/// Deterministic small random multigraph: n vertices, m edges, no loops.
MultiGraph random_multigraph(std::uint64_t seed, std::size_t n, std::size_t m);

std::vector<MultiGraph> read_graph6_file(const std::string& path);

}  // namespace oracle
