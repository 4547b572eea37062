#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace nulab {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  VertexId other(VertexId w) const noexcept { return w == u ? v : u; }
  bool joins(VertexId a, VertexId b) const noexcept {
    return (u == a && v == b) || (u == b && v == a);
  }

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Immutable loopless multigraph. Vertices are 0..n-1, edges keep the index
/// they were given at construction for the lifetime of the value.
class MultiGraph {
 public:
  MultiGraph() = default;

  /// Throws LoopRejected for a pair (u,u) and IndexOutOfRange for an endpoint
  /// >= vertex_count.
  MultiGraph(std::size_t vertex_count, std::vector<Edge> edges);

  static MultiGraph build(std::size_t vertex_count,
                          std::span<const std::pair<VertexId, VertexId>> edges);
  static MultiGraph build(std::size_t vertex_count,
                          std::initializer_list<std::pair<VertexId, VertexId>> edges);

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  const Edge& edge(EdgeId e) const;
  std::span<const Edge> edges() const noexcept { return edges_; }

  /// Incident edge ids of v in increasing id order; a parallel edge shows up
  /// once per copy.
  std::span<const EdgeId> incident(VertexId v) const;

  std::size_t degree(VertexId v) const;
  std::size_t max_degree() const noexcept;

  /// No two edges share both endpoints.
  bool is_simple() const noexcept;

  friend bool operator==(const MultiGraph&, const MultiGraph&) = default;

 private:
  std::size_t vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::uint32_t> offsets_;
  std::vector<EdgeId> incidence_;
};

std::size_t degree(const MultiGraph& g, VertexId v);
std::size_t max_degree(const MultiGraph& g);

struct StructureFlags {
  bool connected = false;
  bool cubic = false;
  bool bridgeless = false;
  std::size_t max_degree = 0;
  std::size_t cycle_rank = 0;
  bool is_tree = false;
  bool is_unicyclic = false;

  friend bool operator==(const StructureFlags&, const StructureFlags&) = default;
};

/// Component label per vertex (0-based, numbered by smallest vertex) and the
/// number of components. Isolated vertices form their own components.
struct Components {
  std::vector<std::uint32_t> label;
  std::size_t count = 0;
};

Components connected_components(const MultiGraph& g);

/// Edges whose removal increases the number of components, sorted by id.
std::vector<EdgeId> bridges(const MultiGraph& g);

StructureFlags structure_flags(const MultiGraph& g);

/// A graph carved out of a parent together with the maps back into it.
struct Subgraph {
  MultiGraph graph;
  std::vector<VertexId> parent_vertex;  // child vertex -> parent vertex
  std::vector<EdgeId> parent_edge;      // child edge -> parent edge
};

/// Keeps exactly the listed edges (in the given order) and the vertices they
/// touch, renumbered in increasing parent order.
Subgraph edge_subgraph(const MultiGraph& g, std::span<const EdgeId> edges);

/// Splits g into its connected components; isolated vertices are dropped.
std::vector<Subgraph> split_components(const MultiGraph& g);

/// g - v, with vertices above v shifted down by one.
MultiGraph remove_vertex(const MultiGraph& g, VertexId v);

/// Disjoint union, b's vertices offset by a.vertex_count().
MultiGraph disjoint_union(const MultiGraph& a, const MultiGraph& b);

}  // namespace nulab
