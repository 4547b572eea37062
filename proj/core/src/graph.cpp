#include "nulab/graph.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "nulab/error.hpp"

namespace nulab {

MultiGraph::MultiGraph(std::size_t vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.u >= vertex_count_ || e.v >= vertex_count_) {
      throw Error(ErrorKind::IndexOutOfRange,
                  "edge " + std::to_string(i) + " = (" + std::to_string(e.u) + "," +
                      std::to_string(e.v) + ") with vertex_count " +
                      std::to_string(vertex_count_));
    }
    if (e.u == e.v) {
      throw Error(ErrorKind::LoopRejected,
                  "edge " + std::to_string(i) + " is a loop at vertex " + std::to_string(e.u));
    }
  }
  offsets_.assign(vertex_count_ + 1, 0);
  for (const Edge& e : edges_) {
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
  }
  for (std::size_t v = 0; v < vertex_count_; ++v) offsets_[v + 1] += offsets_[v];
  incidence_.resize(2 * edges_.size());
  std::vector<std::uint32_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (EdgeId id = 0; id < edges_.size(); ++id) {
    incidence_[fill[edges_[id].u]++] = id;
    incidence_[fill[edges_[id].v]++] = id;
  }
}

MultiGraph MultiGraph::build(std::size_t vertex_count,
                             std::span<const std::pair<VertexId, VertexId>> edges) {
  std::vector<Edge> list;
  list.reserve(edges.size());
  for (auto [u, v] : edges) list.push_back({u, v});
  return MultiGraph(vertex_count, std::move(list));
}

MultiGraph MultiGraph::build(std::size_t vertex_count,
                             std::initializer_list<std::pair<VertexId, VertexId>> edges) {
  return build(vertex_count, std::span<const std::pair<VertexId, VertexId>>(edges.begin(), edges.size()));
}

const Edge& MultiGraph::edge(EdgeId e) const {
  if (e >= edges_.size()) {
    throw Error(ErrorKind::IndexOutOfRange, "edge id " + std::to_string(e));
  }
  return edges_[e];
}

std::span<const EdgeId> MultiGraph::incident(VertexId v) const {
  if (v >= vertex_count_) {
    throw Error(ErrorKind::IndexOutOfRange, "vertex id " + std::to_string(v));
  }
  return std::span<const EdgeId>(incidence_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]);
}

std::size_t MultiGraph::degree(VertexId v) const { return incident(v).size(); }

std::size_t MultiGraph::max_degree() const noexcept {
  std::size_t best = 0;
  for (std::size_t v = 0; v < vertex_count_; ++v) {
    best = std::max<std::size_t>(best, offsets_[v + 1] - offsets_[v]);
  }
  return best;
}

bool MultiGraph::is_simple() const noexcept {
  std::vector<std::pair<VertexId, VertexId>> pairs;
  pairs.reserve(edges_.size());
  for (const Edge& e : edges_) pairs.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
  std::sort(pairs.begin(), pairs.end());
  return std::adjacent_find(pairs.begin(), pairs.end()) == pairs.end();
}

std::size_t degree(const MultiGraph& g, VertexId v) { return g.degree(v); }
std::size_t max_degree(const MultiGraph& g) { return g.max_degree(); }

Components connected_components(const MultiGraph& g) {
  constexpr auto unset = std::numeric_limits<std::uint32_t>::max();
  Components out;
  out.label.assign(g.vertex_count(), unset);
  std::vector<VertexId> stack;
  for (VertexId s = 0; s < g.vertex_count(); ++s) {
    if (out.label[s] != unset) continue;
    const auto id = static_cast<std::uint32_t>(out.count++);
    out.label[s] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      VertexId x = stack.back();
      stack.pop_back();
      for (EdgeId e : g.incident(x)) {
        VertexId y = g.edges()[e].other(x);
        if (out.label[y] == unset) {
          out.label[y] = id;
          stack.push_back(y);
        }
      }
    }
  }
  return out;
}

std::vector<EdgeId> bridges(const MultiGraph& g) {
  // Iterative low-link DFS. Only the tree edge itself is skipped when looking
  // back from a child, so a parallel twin counts as a back edge.
  const std::size_t n = g.vertex_count();
  constexpr auto unset = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> disc(n, unset), low(n, 0);
  std::vector<EdgeId> out;
  struct Frame {
    VertexId v;
    EdgeId via;
    std::size_t next;
  };
  std::vector<Frame> stack;
  std::uint32_t timer = 0;
  for (VertexId root = 0; root < n; ++root) {
    if (disc[root] != unset) continue;
    disc[root] = low[root] = timer++;
    stack.push_back({root, std::numeric_limits<EdgeId>::max(), 0});
    while (!stack.empty()) {
      Frame& f = stack.back();
      auto inc = g.incident(f.v);
      if (f.next < inc.size()) {
        EdgeId e = inc[f.next++];
        if (e == f.via) continue;
        VertexId w = g.edges()[e].other(f.v);
        if (disc[w] == unset) {
          disc[w] = low[w] = timer++;
          stack.push_back({w, e, 0});
        } else {
          low[f.v] = std::min(low[f.v], disc[w]);
        }
      } else {
        Frame done = f;
        stack.pop_back();
        if (!stack.empty()) {
          VertexId parent = stack.back().v;
          low[parent] = std::min(low[parent], low[done.v]);
          if (low[done.v] > disc[parent]) out.push_back(done.via);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());

  // A low-link bridge never has a parallel twin; assert it anyway.
  std::erase_if(out, [&](EdgeId e) {
    const Edge& be = g.edges()[e];
    for (EdgeId f : g.incident(be.u)) {
      if (f != e && g.edges()[f].joins(be.u, be.v)) return true;
    }
    return false;
  });
  return out;
}

StructureFlags structure_flags(const MultiGraph& g) {
  StructureFlags flags;
  const Components comps = connected_components(g);
  flags.connected = comps.count <= 1;
  flags.max_degree = g.max_degree();
  flags.cubic = true;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) != 3) {
      flags.cubic = false;
      break;
    }
  }
  flags.bridgeless = bridges(g).empty();
  flags.cycle_rank = g.edge_count() + comps.count - g.vertex_count();
  flags.is_tree = flags.connected && flags.cycle_rank == 0;
  flags.is_unicyclic = flags.connected && flags.cycle_rank == 1;
  return flags;
}

Subgraph edge_subgraph(const MultiGraph& g, std::span<const EdgeId> edges) {
  constexpr auto unset = std::numeric_limits<VertexId>::max();
  std::vector<VertexId> remap(g.vertex_count(), unset);
  for (EdgeId e : edges) {
    const Edge& ed = g.edge(e);
    remap[ed.u] = 0;
    remap[ed.v] = 0;
  }
  Subgraph out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (remap[v] != unset) {
      remap[v] = static_cast<VertexId>(out.parent_vertex.size());
      out.parent_vertex.push_back(v);
    }
  }
  std::vector<Edge> list;
  list.reserve(edges.size());
  for (EdgeId e : edges) {
    const Edge& ed = g.edges()[e];
    list.push_back({remap[ed.u], remap[ed.v]});
    out.parent_edge.push_back(e);
  }
  out.graph = MultiGraph(out.parent_vertex.size(), std::move(list));
  return out;
}

std::vector<Subgraph> split_components(const MultiGraph& g) {
  const Components comps = connected_components(g);
  std::vector<std::vector<EdgeId>> buckets(comps.count);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    buckets[comps.label[g.edges()[e].u]].push_back(e);
  }
  std::vector<Subgraph> out;
  for (auto& bucket : buckets) {
    if (!bucket.empty()) out.push_back(edge_subgraph(g, bucket));
  }
  return out;
}

MultiGraph remove_vertex(const MultiGraph& g, VertexId v) {
  if (v >= g.vertex_count()) throw Error(ErrorKind::IndexOutOfRange, "vertex id " + std::to_string(v));
  std::vector<Edge> list;
  auto shift = [v](VertexId x) { return x > v ? x - 1 : x; };
  for (const Edge& e : g.edges()) {
    if (e.u == v || e.v == v) continue;
    list.push_back({shift(e.u), shift(e.v)});
  }
  return MultiGraph(g.vertex_count() - 1, std::move(list));
}

MultiGraph disjoint_union(const MultiGraph& a, const MultiGraph& b) {
  std::vector<Edge> list(a.edges().begin(), a.edges().end());
  const auto off = static_cast<VertexId>(a.vertex_count());
  for (const Edge& e : b.edges()) list.push_back({e.u + off, e.v + off});
  return MultiGraph(a.vertex_count() + b.vertex_count(), std::move(list));
}

}  // namespace nulab
