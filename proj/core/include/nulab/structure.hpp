#pragma once

#include <array>
#include <cstddef>
#include <string_view>
#include <vector>

#include "nulab/graph.hpp"

namespace nulab {

/// No vertex has three pairwise non-adjacent neighbours. Parallel edges count
/// as adjacency; a vertex with fewer than three distinct neighbours cannot
/// centre a claw.
bool is_claw_free(const MultiGraph& g);

bool is_bipartite(const MultiGraph& g);

/// Bipartite, or bipartite after deleting a single vertex.
bool is_nearly_bipartite(const MultiGraph& g);

enum class OumVariant { IsK4, RingOfDiamonds, Reduced };

std::string_view to_string(OumVariant variant) noexcept;

struct ReplacedEdge {
  EdgeId base_edge = 0;       // edge of base_graph
  std::size_t diamonds = 0;   // length of the string it stands for
};

/// Structure of a simple 2-edge-connected claw-free cubic graph: K4, a ring
/// of diamonds, or H with strings of diamonds on some edges and every vertex
/// replaced by a triangle.
struct OumDecomposition {
  OumVariant variant = OumVariant::IsK4;
  MultiGraph base_graph;                       // H, only for Reduced
  std::vector<ReplacedEdge> replaced_edges;    // sorted by base_edge
  std::vector<std::array<VertexId, 3>> triangle_map;  // H vertex -> input vertices

  std::size_t diamond_count() const noexcept;
};

/// Throws NotInClass naming the first failed precondition (simple, cubic,
/// 2-edge-connected, claw-free).
OumDecomposition oum_decompose(const MultiGraph& g);

/// r_3 computed on the base graph H of a Reduced decomposition; K4 and rings
/// of diamonds are 3-edge-colorable. Throws NotInClass like oum_decompose.
std::size_t r3_via_reduction(const MultiGraph& g);

/// For a cubic graph: while some pair a, b is joined by exactly two edges,
/// delete a and b and join their remaining neighbours. Throws NotCubic, and
/// NotInClass when a step would create a loop or the graph collapses onto a
/// triple edge.
MultiGraph eliminate_multi_edges(const MultiGraph& g);

}  // namespace nulab
