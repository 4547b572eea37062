#include "nulab/nuk_poly.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <stdexcept>
#include <string>

#include "nulab/error.hpp"

namespace nulab::poly {

namespace {

constexpr std::int64_t kInfeasible = std::numeric_limits<std::int64_t>::min() / 4;

std::size_t cycle_rank(const MultiGraph& g) {
  const Components comps = connected_components(g);
  return g.edge_count() + comps.count - g.vertex_count();
}

// The cycle as vertices v_0..v_{l-1} and edges e_i = v_i v_{i+1}.
struct OrderedCycle {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;
};

// Edges of the 2-core of the subgraph given by `mask`.
std::vector<bool> core_edges(const MultiGraph& g, const std::vector<bool>& mask) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> deg(n, 0);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!mask[e]) continue;
    ++deg[g.edges()[e].u];
    ++deg[g.edges()[e].v];
  }
  std::vector<bool> alive = mask;
  std::vector<VertexId> stack;
  for (VertexId v = 0; v < n; ++v) {
    if (deg[v] == 1) stack.push_back(v);
  }
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (EdgeId e : g.incident(v)) {
      if (!alive[e]) continue;
      alive[e] = false;
      const VertexId w = g.edges()[e].other(v);
      --deg[v];
      if (--deg[w] == 1) stack.push_back(w);
    }
  }
  return alive;
}

// Walks every cycle among the `on_cycle` edges; each vertex is assumed to
// carry zero or two of them.
std::vector<OrderedCycle> walk_cycles(const MultiGraph& g, const std::vector<bool>& on_cycle) {
  std::vector<OrderedCycle> out;
  std::vector<bool> used(g.edge_count(), false);
  for (EdgeId start = 0; start < g.edge_count(); ++start) {
    if (!on_cycle[start] || used[start]) continue;
    OrderedCycle cyc;
    VertexId at = g.edges()[start].u;
    EdgeId cur = start;
    while (true) {
      used[cur] = true;
      cyc.vertices.push_back(at);
      cyc.edges.push_back(cur);
      at = g.edges()[cur].other(at);
      EdgeId next = cur;
      for (EdgeId f : g.incident(at)) {
        if (on_cycle[f] && !used[f]) {
          next = f;
          break;
        }
      }
      if (next == cur) break;
      cur = next;
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

OrderedCycle ordered_cycle(const MultiGraph& g) {
  const std::vector<bool> all(g.edge_count(), true);
  auto cycles = walk_cycles(g, core_edges(g, all));
  if (cycles.empty()) return {};
  return cycles.front();
}

void require_connected_unicyclic(const MultiGraph& g) {
  const StructureFlags f = structure_flags(g);
  if (!f.is_unicyclic) {
    throw Error(ErrorKind::NotUnicyclic,
                "expected a connected graph with cycle rank 1, got cycle rank " +
                    std::to_string(f.cycle_rank) + (f.connected ? "" : " (disconnected)"));
  }
}

// Degree-bounded optimum on the subgraph of `g` given by `mask`, which must
// be a forest. Returns chosen ids of g.
std::vector<EdgeId> bounded_on_mask(const MultiGraph& g, const std::vector<bool>& mask,
                                    const std::vector<std::size_t>& cap) {
  std::vector<EdgeId> keep;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (mask[e]) keep.push_back(e);
  }
  const Subgraph sub = edge_subgraph(g, keep);
  std::vector<std::size_t> sub_cap(sub.graph.vertex_count());
  for (VertexId v = 0; v < sub.graph.vertex_count(); ++v) sub_cap[v] = cap[sub.parent_vertex[v]];
  const DegreeBoundedOptimum opt = max_degree_bounded_forest(sub.graph, sub_cap);
  std::vector<EdgeId> out;
  out.reserve(opt.chosen_edges.size());
  for (EdgeId e : opt.chosen_edges) out.push_back(sub.parent_edge[e]);
  std::sort(out.begin(), out.end());
  return out;
}

struct Selection {
  std::size_t value = 0;
  std::vector<EdgeId> chosen;
};

// Maximum degree-<=k subgraph of a connected unicyclic graph, split on the
// lowest-id cycle edge.
Selection bounded_unicyclic(const MultiGraph& g, int k, const OrderedCycle& cyc) {
  const EdgeId split = *std::min_element(cyc.edges.begin(), cyc.edges.end());
  std::vector<bool> mask(g.edge_count(), true);
  mask[split] = false;
  std::vector<std::size_t> cap(g.vertex_count(), static_cast<std::size_t>(k));

  Selection best;
  best.chosen = bounded_on_mask(g, mask, cap);
  best.value = best.chosen.size();

  const Edge& se = g.edges()[split];
  if (k >= 1) {
    cap[se.u] -= 1;
    cap[se.v] -= 1;
    auto with = bounded_on_mask(g, mask, cap);
    if (with.size() + 1 > best.value) {
      with.push_back(split);
      std::sort(with.begin(), with.end());
      best.value = with.size();
      best.chosen = std::move(with);
    }
  }
  return best;
}

Selection unicyclic_selection(const MultiGraph& g, int k) {
  const OrderedCycle cyc = ordered_cycle(g);
  Selection best = bounded_unicyclic(g, k, cyc);
  if (k != 2 || cyc.edges.size() % 2 == 0) return best;

  std::vector<bool> in_best(g.edge_count(), false);
  for (EdgeId e : best.chosen) in_best[e] = true;
  const bool whole_cycle =
      std::all_of(cyc.edges.begin(), cyc.edges.end(), [&](EdgeId e) { return in_best[e]; });
  if (!whole_cycle) return best;

  const std::vector<std::size_t> cap(g.vertex_count(), 2);
  for (EdgeId out : cyc.edges) {
    std::vector<bool> mask(g.edge_count(), true);
    mask[out] = false;
    auto alt = bounded_on_mask(g, mask, cap);
    if (alt.size() == best.value) return {alt.size(), std::move(alt)};
  }
  // Every optimum holds the odd cycle; dropping one of its edges is optimal.
  const EdgeId drop = cyc.edges.front();
  best.chosen.erase(std::find(best.chosen.begin(), best.chosen.end(), drop));
  best.value -= 1;
  return best;
}

// Proper k-coloring of a chosen edge set of maximum degree <= k whose
// components have at most one cycle, none odd when k == 2.
ColorClasses color_selection(const MultiGraph& g, int k, const std::vector<EdgeId>& chosen) {
  ColorClasses cc(k, g.edge_count());
  std::vector<bool> mask(g.edge_count(), false);
  for (EdgeId e : chosen) mask[e] = true;
  const std::size_t n = g.vertex_count();
  std::vector<std::uint64_t> used(n, 0);
  auto paint = [&](EdgeId e, int c) {
    cc.color[e] = static_cast<std::uint8_t>(c);
    const std::uint64_t bit = std::uint64_t{1} << (c - 1);
    used[g.edges()[e].u] |= bit;
    used[g.edges()[e].v] |= bit;
  };

  std::deque<VertexId> queue;
  std::vector<bool> seen(n, false);
  for (const OrderedCycle& cyc : walk_cycles(g, core_edges(g, mask))) {
    const std::size_t l = cyc.edges.size();
    if (l % 2 == 1 && k < 3) throw std::logic_error("odd cycle in a 2-coloring selection");
    for (std::size_t i = 0; i < l; ++i) {
      int c = static_cast<int>(i % 2) + 1;
      if (l % 2 == 1 && i == l - 1) c = 3;
      paint(cyc.edges[i], c);
    }
    for (VertexId v : cyc.vertices) {
      seen[v] = true;
      queue.push_back(v);
    }
  }

  auto drain = [&] {
    while (!queue.empty()) {
      const VertexId v = queue.front();
      queue.pop_front();
      for (EdgeId e : g.incident(v)) {
        if (!mask[e] || cc.color[e] != 0) continue;
        const VertexId w = g.edges()[e].other(v);
        int c = 1;
        while (used[v] & (std::uint64_t{1} << (c - 1))) ++c;
        if (c > k || (used[w] & (std::uint64_t{1} << (c - 1)))) {
          throw std::logic_error("selection is not k-edge-colorable greedily");
        }
        paint(e, c);
        if (!seen[w]) {
          seen[w] = true;
          queue.push_back(w);
        }
      }
    }
  };
  drain();
  for (VertexId r = 0; r < n; ++r) {
    if (seen[r]) continue;
    seen[r] = true;
    queue.push_back(r);
    drain();
  }
  return cc;
}

}  // namespace

DegreeBoundedOptimum max_degree_bounded_forest(const MultiGraph& forest,
                                               const std::vector<std::size_t>& cap) {
  const std::size_t n = forest.vertex_count();
  if (cap.size() != n) throw Error(ErrorKind::BadParameter, "capacity vector has wrong length");
  if (cycle_rank(forest) != 0) {
    throw Error(ErrorKind::NotAForest, "graph has cycle rank " + std::to_string(cycle_rank(forest)));
  }

  constexpr EdgeId kNone = std::numeric_limits<EdgeId>::max();
  std::vector<EdgeId> parent_edge(n, kNone);
  std::vector<VertexId> order;
  order.reserve(n);
  std::vector<bool> visited(n, false);
  std::vector<VertexId> roots;
  for (VertexId r = 0; r < n; ++r) {
    if (visited[r]) continue;
    roots.push_back(r);
    std::vector<VertexId> stack{r};
    visited[r] = true;
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      order.push_back(v);
      for (EdgeId e : forest.incident(v)) {
        const VertexId w = forest.edges()[e].other(v);
        if (visited[w]) continue;
        visited[w] = true;
        parent_edge[w] = e;
        stack.push_back(w);
      }
    }
  }

  // f0: best with the parent edge left out; f1: best with it taken (counted).
  std::vector<std::int64_t> f0(n, 0), f1(n, kInfeasible);
  std::vector<std::vector<std::pair<std::int64_t, EdgeId>>> gains(n);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const VertexId v = *it;
    std::int64_t base = 0;
    auto& gv = gains[v];
    for (EdgeId e : forest.incident(v)) {
      if (e == parent_edge[v]) continue;
      const VertexId c = forest.edges()[e].other(v);
      base += f0[c];
      if (f1[c] != kInfeasible && f1[c] > f0[c]) gv.emplace_back(f1[c] - f0[c], e);
    }
    std::sort(gv.begin(), gv.end(), [](const auto& a, const auto& b) {
      return a.first != b.first ? a.first > b.first : a.second < b.second;
    });
    auto top = [&](std::size_t limit) {
      std::int64_t s = 0;
      for (std::size_t i = 0; i < gv.size() && i < limit; ++i) s += gv[i].first;
      return s;
    };
    f0[v] = base + top(cap[v]);
    if (cap[v] >= 1 && parent_edge[v] != kNone) f1[v] = 1 + base + top(cap[v] - 1);
  }

  DegreeBoundedOptimum out;
  std::vector<std::pair<VertexId, bool>> stack;
  for (VertexId r : roots) {
    out.value += static_cast<std::size_t>(f0[r]);
    stack.emplace_back(r, false);
  }
  std::vector<bool> take(forest.edge_count(), false);
  while (!stack.empty()) {
    const auto [v, parent_taken] = stack.back();
    stack.pop_back();
    const std::size_t limit = cap[v] - (parent_taken ? 1 : 0);
    const auto& gv = gains[v];
    for (std::size_t i = 0; i < gv.size() && i < limit; ++i) take[gv[i].second] = true;
    for (EdgeId e : forest.incident(v)) {
      if (e == parent_edge[v]) continue;
      stack.emplace_back(forest.edges()[e].other(v), take[e]);
    }
  }
  for (EdgeId e = 0; e < forest.edge_count(); ++e) {
    if (take[e]) out.chosen_edges.push_back(e);
  }
  return out;
}

std::size_t nu_k_tree(const MultiGraph& forest, int k) {
  if (k < 1) throw Error(ErrorKind::BadParameter, "k must be at least 1");
  const std::vector<std::size_t> cap(forest.vertex_count(), static_cast<std::size_t>(k));
  return max_degree_bounded_forest(forest, cap).value;
}

std::vector<EdgeId> unique_cycle(const MultiGraph& g) {
  const std::size_t rank = cycle_rank(g);
  if (rank > 1) {
    throw Error(ErrorKind::NotUnicyclic, "graph has cycle rank " + std::to_string(rank));
  }
  return ordered_cycle(g).edges;
}

std::size_t nu_k_unicyclic(const MultiGraph& g, int k) {
  if (k < 1) throw Error(ErrorKind::BadParameter, "k must be at least 1");
  require_connected_unicyclic(g);
  return unicyclic_selection(g, k).value;
}

NuResult nu_k_low_cycle_rank(const MultiGraph& g, int k) {
  if (k < 1) throw Error(ErrorKind::BadParameter, "k must be at least 1");
  std::vector<EdgeId> chosen;
  for (const Subgraph& part : split_components(g)) {
    const std::size_t rank = part.graph.edge_count() + 1 - part.graph.vertex_count();
    std::vector<EdgeId> local;
    if (rank == 0) {
      const std::vector<std::size_t> cap(part.graph.vertex_count(), static_cast<std::size_t>(k));
      local = max_degree_bounded_forest(part.graph, cap).chosen_edges;
    } else if (rank == 1) {
      local = unicyclic_selection(part.graph, k).chosen;
    } else {
      throw Error(ErrorKind::NotUnicyclic,
                  "a component has cycle rank " + std::to_string(rank));
    }
    for (EdgeId e : local) chosen.push_back(part.parent_edge[e]);
  }
  std::sort(chosen.begin(), chosen.end());
  NuResult r;
  r.value = chosen.size();
  r.certificate = color_selection(g, k, chosen);
  return r;
}

std::optional<CycleDeficiency> cycle_deficiency(const MultiGraph& g, int k) {
  if (k < 1) throw Error(ErrorKind::BadParameter, "k must be at least 1");
  require_connected_unicyclic(g);
  const OrderedCycle cyc = ordered_cycle(g);
  const std::size_t l = cyc.edges.size();
  const auto kk = static_cast<std::size_t>(k);

  std::vector<bool> on_cycle(g.vertex_count(), false);
  for (VertexId v : cyc.vertices) on_cycle[v] = true;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (!on_cycle[v] && g.degree(v) > kk) return std::nullopt;
  }

  const bool colorable = g.max_degree() <= kk && !(k == 2 && l % 2 == 1);
  if (colorable) return CycleDeficiency{k, 0};

  std::vector<int> demand(l);
  for (std::size_t i = 0; i < l; ++i) {
    const std::size_t d = g.degree(cyc.vertices[i]);
    demand[i] = d > kk ? static_cast<int>(d - kk) : 0;
    if (demand[i] > 2) return std::nullopt;
  }

  // Vertex v_i sees edges e_{i-1} and e_i. Fix whether e_{l-1} is removed,
  // then run left to right with state (last choice, any removed yet).
  constexpr int kBig = std::numeric_limits<int>::max() / 2;
  int best = kBig;
  for (int last = 0; last <= 1; ++last) {
    // dp[prev][any]
    int dp[2][2] = {{kBig, kBig}, {kBig, kBig}};
    dp[last][last] = 0;  // seed: "previous" edge of v_0 is e_{l-1}
    for (std::size_t i = 0; i < l; ++i) {
      int next[2][2] = {{kBig, kBig}, {kBig, kBig}};
      for (int prev = 0; prev <= 1; ++prev) {
        for (int any = 0; any <= 1; ++any) {
          if (dp[prev][any] >= kBig) continue;
          for (int cur = 0; cur <= 1; ++cur) {
            if (i == l - 1 && cur != last) continue;
            if (prev + cur < demand[i]) continue;
            // e_{l-1} was already counted in the seed.
            const int add = (i == l - 1) ? 0 : cur;
            const int a = any | cur;
            next[cur][a] = std::min(next[cur][a], dp[prev][any] + add);
          }
        }
      }
      std::copy(&next[0][0], &next[0][0] + 4, &dp[0][0]);
    }
    best = std::min(best, dp[last][1] + last);
  }
  if (best >= kBig) return std::nullopt;
  return CycleDeficiency{k, static_cast<std::size_t>(best)};
}

bool in_deficiency_regime(const MultiGraph& g, int k) {
  if (!structure_flags(g).is_unicyclic) return false;
  const OrderedCycle cyc = ordered_cycle(g);
  std::vector<bool> on_cycle(g.vertex_count(), false);
  for (VertexId v : cyc.vertices) on_cycle[v] = true;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const std::size_t d = g.degree(v);
    if (on_cycle[v] ? d > static_cast<std::size_t>(k) + 1 : d != 1) return false;
  }
  return true;
}

}  // namespace nulab::poly
