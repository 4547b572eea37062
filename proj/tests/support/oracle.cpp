#include "oracle.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "nulab/graph_io.hpp"

namespace oracle {

namespace {

struct Dsu {
  std::vector<std::size_t> parent;
  std::vector<int> parity;  // parity to parent

  explicit Dsu(std::size_t n) : parent(n), parity(n, 0) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  std::pair<std::size_t, int> find(std::size_t x) {
    int p = 0;
    while (parent[x] != x) {
      p ^= parity[x];
      x = parent[x];
    }
    return {x, p};
  }
  // false when u and v already sit on the same side
  bool join_opposite(std::size_t u, std::size_t v) {
    auto [ru, pu] = find(u);
    auto [rv, pv] = find(v);
    if (ru == rv) return pu != pv;
    parent[ru] = rv;
    parity[ru] = pu ^ pv ^ 1;
    return true;
  }
};

std::vector<EdgeId> edges_in(const MultiGraph& g, std::uint64_t mask) {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (mask >> e & 1) out.push_back(e);
  }
  return out;
}

bool backtrack(const MultiGraph& g, int k, const std::vector<EdgeId>& order, std::size_t i,
               std::vector<std::uint32_t>& used, int max_used) {
  if (i == order.size()) return true;
  const auto& ed = g.edges()[order[i]];
  const int limit = std::min(k, max_used + 1);
  for (int c = 0; c < limit; ++c) {
    const std::uint32_t bit = 1u << c;
    if ((used[ed.u] | used[ed.v]) & bit) continue;
    used[ed.u] |= bit;
    used[ed.v] |= bit;
    if (backtrack(g, k, order, i + 1, used, std::max(max_used, c + 1))) return true;
    used[ed.u] &= ~bit;
    used[ed.v] &= ~bit;
  }
  return false;
}

}  // namespace

bool colorable(const MultiGraph& g, int k, std::uint64_t mask) {
  const std::vector<EdgeId> es = edges_in(g, mask);
  std::vector<int> deg(g.vertex_count(), 0);
  for (EdgeId e : es) {
    ++deg[g.edges()[e].u];
    ++deg[g.edges()[e].v];
  }
  for (int d : deg) {
    if (d > k) return false;
  }
  if (k <= 1) return true;
  if (k == 2) {
    // paths and even cycles only
    Dsu dsu(g.vertex_count());
    for (EdgeId e : es) {
      if (!dsu.join_opposite(g.edges()[e].u, g.edges()[e].v)) return false;
    }
    return true;
  }
  // Order edges so each one touches an earlier one where possible.
  std::vector<EdgeId> order;
  std::vector<bool> placed(g.edge_count(), false);
  for (EdgeId seed : es) {
    if (placed[seed]) continue;
    std::vector<EdgeId> queue{seed};
    placed[seed] = true;
    for (std::size_t q = 0; q < queue.size(); ++q) {
      const EdgeId e = queue[q];
      order.push_back(e);
      for (VertexId w : {g.edges()[e].u, g.edges()[e].v}) {
        for (EdgeId f : g.incident(w)) {
          if ((mask >> f & 1) && !placed[f]) {
            placed[f] = true;
            queue.push_back(f);
          }
        }
      }
    }
  }
  std::vector<std::uint32_t> used(g.vertex_count(), 0);
  return backtrack(g, k, order, 0, used, 0);
}

std::optional<std::size_t> nu_k(const MultiGraph& g, int k, std::uint64_t max_tests) {
  const std::size_t m = g.edge_count();
  if (m > 63) throw std::invalid_argument("oracle::nu_k: too many edges");
  std::uint64_t tests = 0;
  for (std::size_t size = m + 1; size-- > 0;) {
    bool found = false;
    bool over = false;
    // all subsets of the given size, by recursion over edge ids
    std::function<void(std::size_t, std::size_t, std::uint64_t)> rec =
        [&](std::size_t next, std::size_t left, std::uint64_t mask) {
          if (found || over) return;
          if (left == 0) {
            if (++tests > max_tests) {
              over = true;
              return;
            }
            if (colorable(g, k, mask)) found = true;
            return;
          }
          for (std::size_t e = next; e + left <= m; ++e) {
            rec(e + 1, left - 1, mask | (std::uint64_t{1} << e));
            if (found || over) return;
          }
        };
    rec(0, size, 0);
    if (over) return std::nullopt;
    if (found) return size;
  }
  return 0;
}

std::size_t component_count(const MultiGraph& g, std::uint64_t mask) {
  Dsu dsu(g.vertex_count());
  std::size_t count = g.vertex_count();
  for (EdgeId e : edges_in(g, mask)) {
    auto a = dsu.find(g.edges()[e].u).first;
    auto b = dsu.find(g.edges()[e].v).first;
    if (a != b) {
      dsu.parent[a] = b;
      --count;
    }
  }
  return count;
}

std::vector<EdgeId> bridges(const MultiGraph& g) {
  const std::uint64_t all = g.edge_count() == 64 ? ~0ull : (1ull << g.edge_count()) - 1;
  const std::size_t base = component_count(g, all);
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (component_count(g, all & ~(1ull << e)) > base) out.push_back(e);
  }
  return out;
}

std::size_t matching_number(const MultiGraph& g) {
  std::size_t best = 0;
  std::vector<bool> used(g.vertex_count(), false);
  std::function<void(EdgeId, std::size_t)> rec = [&](EdgeId e, std::size_t size) {
    best = std::max(best, size);
    if (size + (g.edge_count() - e) <= best) return;
    for (EdgeId f = e; f < g.edge_count(); ++f) {
      const auto& ed = g.edges()[f];
      if (used[ed.u] || used[ed.v]) continue;
      used[ed.u] = used[ed.v] = true;
      rec(f + 1, size + 1);
      used[ed.u] = used[ed.v] = false;
    }
  };
  rec(0, 0);
  return best;
}

std::vector<std::vector<EdgeId>> perfect_matchings(const MultiGraph& g) {
  std::vector<std::vector<EdgeId>> out;
  if (g.vertex_count() % 2 != 0) return out;
  std::vector<bool> used(g.vertex_count(), false);
  std::vector<EdgeId> cur;
  std::function<void(EdgeId)> rec = [&](EdgeId e) {
    if (cur.size() * 2 == g.vertex_count()) {
      out.push_back(cur);
      return;
    }
    for (EdgeId f = e; f < g.edge_count(); ++f) {
      const auto& ed = g.edges()[f];
      if (used[ed.u] || used[ed.v]) continue;
      used[ed.u] = used[ed.v] = true;
      cur.push_back(f);
      rec(f + 1);
      cur.pop_back();
      used[ed.u] = used[ed.v] = false;
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::size_t> min_odd_two_factor(const MultiGraph& g) {
  std::optional<std::size_t> best;
  for (const auto& pm : perfect_matchings(g)) {
    std::vector<bool> in_pm(g.edge_count(), false);
    for (EdgeId e : pm) in_pm[e] = true;
    // components of the complement, each a cycle: odd iff it has an odd
    // number of edges
    Dsu dsu(g.vertex_count());
    std::vector<std::size_t> edges_at_root(g.vertex_count(), 0);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      if (in_pm[e]) continue;
      auto a = dsu.find(g.edges()[e].u).first;
      auto b = dsu.find(g.edges()[e].v).first;
      if (a != b) dsu.parent[a] = b;
    }
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      if (!in_pm[e]) ++edges_at_root[dsu.find(g.edges()[e].u).first];
    }
    std::size_t odd = 0;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      if (dsu.find(v).first == v && edges_at_root[v] % 2 == 1) ++odd;
    }
    if (!best || odd < *best) best = odd;
  }
  return best;
}

bool claw_free(const MultiGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (const auto& e : g.edges()) adj[e.u][e.v] = adj[e.v][e.u] = true;
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        for (std::size_t d = b + 1; d < n; ++d) {
          if (adj[c][a] && adj[c][b] && adj[c][d] && !adj[a][b] && !adj[a][d] && !adj[b][d]) {
            return false;
          }
        }
      }
    }
  }
  return true;
}

bool bipartite(const MultiGraph& g) {
  Dsu dsu(g.vertex_count());
  for (const auto& e : g.edges()) {
    if (!dsu.join_opposite(e.u, e.v)) return false;
  }
  return true;
}

std::optional<std::size_t> cycle_deficiency(const MultiGraph& g, int k,
                                            const std::vector<EdgeId>& cycle) {
  const std::uint64_t all = (1ull << g.edge_count()) - 1;
  const std::size_t c = cycle.size();
  std::optional<std::size_t> best;
  for (std::uint64_t sub = 0; sub < (1ull << c); ++sub) {
    const auto size = static_cast<std::size_t>(__builtin_popcountll(sub));
    if (best && size >= *best) continue;
    std::uint64_t mask = all;
    for (std::size_t i = 0; i < c; ++i) {
      if (sub >> i & 1) mask &= ~(1ull << cycle[i]);
    }
    if (colorable(g, k, mask)) best = size;
  }
  return best;
}

MultiGraph random_multigraph(std::uint64_t seed, std::size_t n, std::size_t m) {
  std::uint64_t s = seed * 0x9E3779B97F4A7C15ull + 0x632BE59BD9B4E019ull;
  auto next = [&] {
    s += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  };
  std::vector<std::pair<VertexId, VertexId>> edges;
  while (edges.size() < m) {
    const auto u = static_cast<VertexId>(next() % n);
    const auto v = static_cast<VertexId>(next() % n);
    if (u != v) edges.emplace_back(u, v);
  }
  return MultiGraph::build(n, edges);
}

std::vector<MultiGraph> read_graph6_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<MultiGraph> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty()) out.push_back(nulab::parse_graph6(line));
  }
  return out;
}

}  // namespace oracle
