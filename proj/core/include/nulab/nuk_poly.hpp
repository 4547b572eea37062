#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "nulab/coloring.hpp"
#include "nulab/graph.hpp"

namespace nulab::poly {

/// Largest subgraph in which every vertex keeps at most k edges (a
/// b-matching with uniform bound k).
struct DegreeBoundedOptimum {
  std::size_t value = 0;
  std::vector<EdgeId> chosen_edges;  // sorted
};

/// Tree dynamic program for a forest; cap[v] bounds the chosen degree at v.
/// Ties prefer leaving the parent edge out. Throws NotAForest.
DegreeBoundedOptimum max_degree_bounded_forest(const MultiGraph& forest,
                                               const std::vector<std::size_t>& cap);

/// nu_k of a forest: a forest with maximum degree k is k-edge-colorable, so
/// this is the degree-bounded optimum directly. Throws NotAForest.
std::size_t nu_k_tree(const MultiGraph& forest, int k);

/// Edge ids of the only cycle, ordered so consecutive edges share a vertex.
/// Empty for a forest. Throws NotUnicyclic when the cycle rank exceeds one.
std::vector<EdgeId> unique_cycle(const MultiGraph& g);

/// nu_k of a connected graph with exactly one cycle. Throws NotUnicyclic.
std::size_t nu_k_unicyclic(const MultiGraph& g, int k);

/// nu_k together with a certificate for any graph whose components each have
/// cycle rank at most one. Throws NotUnicyclic otherwise.
NuResult nu_k_low_cycle_rank(const MultiGraph& g, int k);

struct CycleDeficiency {
  int k = 0;
  std::size_t x = 0;
};

/// Fewest edges of the unique cycle C whose removal leaves a k-edge-colorable
/// graph. nullopt when no subset of C suffices (some vertex would still have
/// more than k edges). Throws NotUnicyclic for anything but a connected
/// unicyclic graph.
std::optional<CycleDeficiency> cycle_deficiency(const MultiGraph& g, int k);

/// Connected unicyclic, every vertex off C is a leaf, every vertex on C has
/// degree at most k+1.
bool in_deficiency_regime(const MultiGraph& g, int k);

}  // namespace nulab::poly
