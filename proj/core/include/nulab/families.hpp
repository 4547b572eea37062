#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "nulab/graph.hpp"

namespace nulab::families {

// Named graphs. Vertex roles are described per constructor; edge ids follow
// the order listed there.

/// Two balloons joined by a bridge. A balloon is a stem vertex a adjacent to
/// b and c, with b and c joined by two parallel edges. Vertices: 0 c, 1 b,
/// 2 a, 3 a', 4 b', 5 c'. Edges: b-c, c-a, b-a, a-a', a'-b', c'-a', b'-c',
/// then the second b-c and b'-c'.
MultiGraph fig1_graph();

/// Three balloons on a centre vertex 9. Balloon i has a = 3i, b = 3i+1,
/// c = 3i+2 with edges a-b, a-c, a-9, b-c, b-c.
MultiGraph sylvester10();

/// Three balloons (stems 0, 3, 6; doubled pairs 1-2, 4-5, 7-8) whose stems
/// hang off the triangle 9, 10, 11.
MultiGraph fig3_graph12();

/// Outer cycle 0..4, spokes i-(i+5), inner pentagram 5-7-9-6-8-5.
MultiGraph petersen();

/// petersen() without vertex 0, remaining vertices shifted down by one; the
/// degree-2 vertices are 0, 3 and 4.
MultiGraph petersen_minus_vertex();

/// Three copies of petersen_minus_vertex() (vertices 0-8, 9-17, 18-26) and a
/// hub 27. The hub meets vertex 4 of every block; vertex 0 of block b is
/// joined to vertex 3 of block b+1 (mod 3).
MultiGraph fig5_graph28();

/// Cycle 0..l-1 (edges first), then k-1 pendant edges at each cycle vertex.
/// Throws BadParameter unless k >= 2 and l >= 3.
MultiGraph remark_family(int k, int l);

/// Every vertex v of a cubic graph becomes the triangle 3v, 3v+1, 3v+2.
/// Original edges keep their ids and attach to the triangle corner given by
/// their position in the incidence list; the triangle edges follow. Throws
/// NotCubic.
MultiGraph triangle_replace(const MultiGraph& h);

/// Replaces edge e = (u, v) by u-a1 [D1] d1-a2 ... dc-v, where each Di is a
/// diamond on a, x, y, d missing the edge a-d. Edge e itself becomes u-a1.
/// Throws BadParameter for count < 1 and IndexOutOfRange for a bad e.
MultiGraph string_replace(const MultiGraph& g, EdgeId e, int count);

/// r diamonds in a cycle, diamond i on 4i..4i+3. Throws BadParameter for
/// r < 2.
MultiGraph ring_of_diamonds(int r);

MultiGraph cycle_graph(std::size_t n);
MultiGraph path_graph(std::size_t n);
MultiGraph star_graph(std::size_t leaves);
MultiGraph complete_graph(std::size_t n);
MultiGraph complete_bipartite(std::size_t a, std::size_t b);

// Random graphs. The same engine state gives the same graph.

/// Random recursive tree: vertex i > 0 attaches to a uniform earlier vertex.
MultiGraph random_tree(std::size_t n, std::mt19937_64& rng);

/// Random tree plus one edge between a non-adjacent pair (n >= 3), so the
/// cycle has length >= 3.
MultiGraph random_unicyclic(std::size_t n, std::mt19937_64& rng);

/// As random_unicyclic but the extra edge joins opposite sides of the tree's
/// bipartition, so the cycle is even (n >= 4).
MultiGraph random_bipartite_unicyclic(std::size_t n, std::mt19937_64& rng);

/// 2..7 vertices and 0..max_edges edges between uniform distinct endpoints.
MultiGraph random_multigraph(std::size_t max_edges, std::mt19937_64& rng);

// Name-based access for the command line.

struct FamilySpec {
  std::string name;
  std::map<std::string, std::int64_t> params;
};

std::vector<std::string> family_names();

/// Builds the named family. Random corpora read "count" and a size bound
/// ("n" or "m") and draw from a generator seeded with `seed`. Throws
/// UnknownFamily or BadParameter.
std::vector<MultiGraph> generate(const FamilySpec& spec, std::uint64_t seed = 0);

}  // namespace nulab::families
