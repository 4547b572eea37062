#include "nulab/structure.hpp"

#include <algorithm>
#include <array>
#include <iterator>
#include <map>
#include <set>
#include <string>

#include "nulab/error.hpp"
#include "nulab/nuk_exact.hpp"

namespace nulab {

namespace {

std::vector<std::vector<VertexId>> neighbour_sets(const MultiGraph& g) {
  std::vector<std::vector<VertexId>> nb(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    for (EdgeId e : g.incident(v)) nb[v].push_back(g.edges()[e].other(v));
    std::sort(nb[v].begin(), nb[v].end());
    nb[v].erase(std::unique(nb[v].begin(), nb[v].end()), nb[v].end());
  }
  return nb;
}

bool adjacent(const std::vector<std::vector<VertexId>>& nb, VertexId a, VertexId b) {
  return std::binary_search(nb[a].begin(), nb[a].end(), b);
}

void not_in_class(const std::string& why) { throw Error(ErrorKind::NotInClass, why); }

void require_decomposable(const MultiGraph& g) {
  if (!g.is_simple()) not_in_class("graph is not simple");
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) != 3) not_in_class("graph is not cubic (vertex " + std::to_string(v) + ")");
  }
  const StructureFlags f = structure_flags(g);
  if (!f.connected || !f.bridgeless) not_in_class("graph is not 2-edge-connected");
  if (!is_claw_free(g)) not_in_class("graph is not claw-free");
}

struct Diamond {
  VertexId a, b, c, d;  // b-c is the middle edge, a and d the ends
};

}  // namespace

bool is_claw_free(const MultiGraph& g) {
  const auto nb = neighbour_sets(g);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const auto& n = nb[v];
    for (std::size_t i = 0; i < n.size(); ++i) {
      for (std::size_t j = i + 1; j < n.size(); ++j) {
        if (adjacent(nb, n[i], n[j])) continue;
        for (std::size_t l = j + 1; l < n.size(); ++l) {
          if (!adjacent(nb, n[i], n[l]) && !adjacent(nb, n[j], n[l])) return false;
        }
      }
    }
  }
  return true;
}

bool is_bipartite(const MultiGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<int> side(n, -1);
  for (VertexId r = 0; r < n; ++r) {
    if (side[r] >= 0) continue;
    side[r] = 0;
    std::vector<VertexId> stack{r};
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      for (EdgeId e : g.incident(v)) {
        const VertexId w = g.edges()[e].other(v);
        if (side[w] < 0) {
          side[w] = 1 - side[v];
          stack.push_back(w);
        } else if (side[w] == side[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool is_nearly_bipartite(const MultiGraph& g) {
  if (is_bipartite(g)) return true;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (is_bipartite(remove_vertex(g, v))) return true;
  }
  return false;
}

std::string_view to_string(OumVariant variant) noexcept {
  switch (variant) {
    case OumVariant::IsK4:
      return "IsK4";
    case OumVariant::RingOfDiamonds:
      return "RingOfDiamonds";
    case OumVariant::Reduced:
      return "Reduced";
  }
  return "?";
}

std::size_t OumDecomposition::diamond_count() const noexcept {
  std::size_t s = 0;
  for (const ReplacedEdge& r : replaced_edges) s += r.diamonds;
  return s;
}

OumDecomposition oum_decompose(const MultiGraph& g) {
  require_decomposable(g);
  OumDecomposition out;
  const std::size_t n = g.vertex_count();
  if (n == 4) {
    out.variant = OumVariant::IsK4;
    return out;
  }
  const auto nb = neighbour_sets(g);

  // A diamond is found from its middle edge: exactly two common neighbours,
  // themselves non-adjacent.
  std::vector<Diamond> diamonds;
  std::vector<int> diamond_of(n, -1);
  for (const Edge& e : g.edges()) {
    std::vector<VertexId> common;
    std::set_intersection(nb[e.u].begin(), nb[e.u].end(), nb[e.v].begin(), nb[e.v].end(),
                          std::back_inserter(common));
    if (common.size() != 2 || adjacent(nb, common[0], common[1])) continue;
    const Diamond d{common[0], std::min(e.u, e.v), std::max(e.u, e.v), common[1]};
    for (VertexId x : {d.a, d.b, d.c, d.d}) {
      if (diamond_of[x] >= 0) not_in_class("overlapping diamonds");
      diamond_of[x] = static_cast<int>(diamonds.size());
    }
    diamonds.push_back(d);
  }
  if (std::all_of(diamond_of.begin(), diamond_of.end(), [](int i) { return i >= 0; })) {
    out.variant = OumVariant::RingOfDiamonds;
    return out;
  }

  auto is_end = [&](VertexId x) {
    const int i = diamond_of[x];
    return i >= 0 && (diamonds[i].a == x || diamonds[i].d == x);
  };
  // The neighbour of a diamond end outside its diamond.
  auto exit_of = [&](VertexId x) {
    for (VertexId y : nb[x]) {
      if (diamond_of[y] != diamond_of[x]) return y;
    }
    not_in_class("diamond end without an outside neighbour");
    return x;
  };
  auto partner = [&](VertexId x) {
    const Diamond& d = diamonds[diamond_of[x]];
    return x == d.a ? d.d : d.a;
  };

  // Triangles among the vertices outside diamonds; every one of them must lie
  // in exactly one.
  std::vector<int> tri_of(n, -1);
  for (VertexId v = 0; v < n; ++v) {
    if (diamond_of[v] >= 0 || tri_of[v] >= 0) continue;
    std::array<VertexId, 3> t{};
    bool found = false;
    for (std::size_t i = 0; i < nb[v].size() && !found; ++i) {
      for (std::size_t j = i + 1; j < nb[v].size() && !found; ++j) {
        const VertexId x = nb[v][i], y = nb[v][j];
        if (diamond_of[x] < 0 && diamond_of[y] < 0 && adjacent(nb, x, y)) {
          t = {v, x, y};
          found = true;
        }
      }
    }
    if (!found) not_in_class("vertex " + std::to_string(v) + " lies in no triangle");
    std::sort(t.begin(), t.end());
    for (VertexId x : t) {
      if (tri_of[x] >= 0) not_in_class("triangles share a vertex");
      tri_of[x] = static_cast<int>(out.triangle_map.size());
    }
    out.triangle_map.push_back(t);
  }

  std::vector<std::pair<VertexId, VertexId>> h_edges;
  std::vector<bool> string_done(diamonds.size(), false);
  for (const Edge& e : g.edges()) {
    const bool out_u = diamond_of[e.u] < 0, out_v = diamond_of[e.v] < 0;
    if (out_u && out_v) {
      if (tri_of[e.u] != tri_of[e.v]) {
        h_edges.emplace_back(static_cast<VertexId>(tri_of[e.u]), static_cast<VertexId>(tri_of[e.v]));
      }
      continue;
    }
    if (out_u == out_v) continue;
    // An edge from a triangle vertex into a string: walk the string.
    const VertexId start = out_u ? e.u : e.v;
    VertexId x = out_u ? e.v : e.u;
    if (!is_end(x)) not_in_class("edge enters a diamond at its middle");
    if (string_done[diamond_of[x]]) continue;
    std::size_t length = 0;
    while (true) {
      string_done[diamond_of[x]] = true;
      ++length;
      const VertexId y = exit_of(partner(x));
      if (diamond_of[y] < 0) {
        if (tri_of[y] == tri_of[start]) not_in_class("string returns to its own triangle");
        h_edges.emplace_back(static_cast<VertexId>(tri_of[start]), static_cast<VertexId>(tri_of[y]));
        out.replaced_edges.push_back({static_cast<EdgeId>(h_edges.size() - 1), length});
        break;
      }
      if (!is_end(y)) not_in_class("string enters a diamond at its middle");
      x = y;
    }
  }
  out.variant = OumVariant::Reduced;
  out.base_graph = MultiGraph::build(out.triangle_map.size(), h_edges);
  return out;
}

std::size_t r3_via_reduction(const MultiGraph& g) {
  const OumDecomposition d = oum_decompose(g);
  if (d.variant != OumVariant::Reduced) return resistance_r3(g);
  return resistance_r3(d.base_graph);
}

MultiGraph eliminate_multi_edges(const MultiGraph& g) {
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) != 3) {
      throw Error(ErrorKind::NotCubic, "vertex " + std::to_string(v) + " has degree " +
                                           std::to_string(g.degree(v)));
    }
  }
  MultiGraph cur = g;
  while (true) {
    std::map<std::pair<VertexId, VertexId>, std::vector<EdgeId>> groups;
    for (EdgeId e = 0; e < cur.edge_count(); ++e) {
      groups[std::minmax(cur.edges()[e].u, cur.edges()[e].v)].push_back(e);
    }
    auto it = std::find_if(groups.begin(), groups.end(), [](const auto& kv) { return kv.second.size() > 1; });
    if (it == groups.end()) return cur;
    if (it->second.size() > 2) not_in_class("triple edge cannot be eliminated");
    const auto [a, b] = it->first;
    auto third = [&](VertexId x, VertexId y) {
      for (EdgeId e : cur.incident(x)) {
        const VertexId w = cur.edges()[e].other(x);
        if (w != y) return w;
      }
      not_in_class("no third neighbour");
      return x;
    };
    const VertexId c = third(a, b), d = third(b, a);
    if (c == d) not_in_class("eliminating the double edge " + std::to_string(a) + "-" +
                             std::to_string(b) + " would create a loop");
    auto shift = [&](VertexId x) { return x - (x > a ? 1 : 0) - (x > b ? 1 : 0); };
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (const Edge& e : cur.edges()) {
      if (e.u == a || e.u == b || e.v == a || e.v == b) continue;
      edges.emplace_back(shift(e.u), shift(e.v));
    }
    edges.emplace_back(shift(c), shift(d));
    cur = MultiGraph::build(cur.vertex_count() - 2, edges);
  }
}

}  // namespace nulab
