#pragma once

#include <cstddef>
#include <vector>

#include "nulab/coloring.hpp"
#include "nulab/graph.hpp"

namespace nulab {

struct SolverOptions {
  /// Pendant forcing, component split and bridge split before the search.
  bool reductions = true;
  /// Components with cycle rank <= 1 go to the polynomial solver.
  bool route_poly = true;
  bool split_bridges = true;
  /// Known colorability results (4 colors for cubic graphs, Vizing, Shannon,
  /// König) cap the search so it stops as soon as a full coloring is found.
  bool shortcuts = true;
};

/// nu_k(G) with a certificate coloring of exactly `value` edges. Throws
/// BadParameter for k < 1, or when the search would need more than 64
/// colors.
NuResult nu_k(const MultiGraph& g, int k, const SolverOptions& options = {});

/// |E| - nu_3. Throws NotCubic.
std::size_t resistance_r3(const MultiGraph& g);

struct PendantReduction {
  /// In the order they were forced. Each has a leaf endpoint at that time.
  std::vector<EdgeId> forced;
  /// Edges at vertices whose k slots are all taken by forced edges.
  std::vector<EdgeId> excluded;
};

/// Iterated pendant forcing: at each vertex up to k pendant edges (lowest id
/// first) may be assumed colored. A vertex filled this way loses its other
/// edges, which can create new pendant edges; repeats to a fixpoint.
PendantReduction reduce_pendant(const MultiGraph& g, int k);

/// nu_k through the bridge e: with G1, G2 the sides of G - e and G1e, G2e the
/// sides with e attached as a pendant edge,
///   nu_k(G) = max(nu_k(G1) + nu_k(G2), nu_k(G1e) + nu_k(G2e) - 1).
/// Throws NotABridge.
std::size_t decompose_bridge(const MultiGraph& g, EdgeId e, int k,
                             const SolverOptions& options = {});

/// Admissible bound on the best completion of `partial` (color 0 = still
/// open): the minimum of the degree-capacity bound, the per-color matching
/// bound and the open edge count, each added to the colored count. Throws
/// BadParameter if partial is not a proper partial coloring of g.
std::size_t upper_bound(const MultiGraph& g, int k, const ColorClasses& partial);

}  // namespace nulab
