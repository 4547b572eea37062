#pragma once

#include <cstddef>
#include <cstdint>

#include "nulab/coloring.hpp"
#include "nulab/graph.hpp"

namespace nulab::exhaustive {

constexpr std::size_t kDefaultMaxEdges = 12;

/// Plain backtracking: can the edges selected by `mask` be properly colored
/// with k colors?
bool is_k_edge_colorable(const MultiGraph& g, int k, std::uint64_t mask, ColorClasses* witness = nullptr);

/// nu_k by scanning edge subsets from largest to smallest and testing each
/// with is_k_edge_colorable. No bounds, no reductions, no symmetry breaking;
/// meant as an independent reference for small inputs. node_count reports
/// the number of subsets examined. Throws TooLarge above max_edges (hard
/// cap 63) and BadParameter for k < 1.
NuResult nu_k(const MultiGraph& g, int k, std::size_t max_edges = kDefaultMaxEdges);

}  // namespace nulab::exhaustive
