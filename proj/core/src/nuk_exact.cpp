#include "nulab/nuk_exact.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "nulab/error.hpp"
#include "nulab/matching.hpp"
#include "nulab/nuk_poly.hpp"
#include "nulab/structure.hpp"

namespace nulab {

namespace {

constexpr int kMaxColors = 64;
constexpr EdgeId kNoEdge = std::numeric_limits<EdgeId>::max();

using Colors = std::vector<std::uint8_t>;

struct Solution {
  std::size_t value = 0;
  Colors color;
};

std::uint64_t color_bit(int c) { return std::uint64_t{1} << (c - 1); }

std::uint64_t low_colors(int count) {
  return count >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << count) - 1;
}

bool all_degree(const MultiGraph& g, std::size_t d) {
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) != d) return false;
  }
  return g.vertex_count() > 0;
}

// Colorability results that settle nu_k = |E| without search.
bool full_coloring_known(const MultiGraph& g, int k) {
  const std::size_t delta = g.max_degree();
  const auto kk = static_cast<std::size_t>(k);
  if (kk >= delta * 3 / 2) return true;                 // Shannon
  if (g.is_simple() && kk >= delta + 1) return true;    // Vizing
  if (kk >= 4 && all_degree(g, 3)) return true;
  if (kk >= delta && is_bipartite(g)) return true;      // König
  return false;
}

Colors greedy_coloring(const MultiGraph& g, int k, const std::vector<std::size_t>& cap) {
  Colors color(g.edge_count(), 0);
  std::vector<std::size_t> cnt(g.vertex_count(), 0);
  for (int c = 1; c <= k; ++c) {
    std::vector<bool> allowed(g.edge_count(), false);
    bool any = false;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      const Edge& ed = g.edges()[e];
      allowed[e] = color[e] == 0 && cnt[ed.u] < cap[ed.u] && cnt[ed.v] < cap[ed.v];
      any = any || allowed[e];
    }
    if (!any) break;
    for (EdgeId e : max_matching(g, allowed).edge_ids) {
      color[e] = static_cast<std::uint8_t>(c);
      ++cnt[g.edges()[e].u];
      ++cnt[g.edges()[e].v];
    }
  }
  return color;
}

std::size_t count_colored(const Colors& color) {
  return static_cast<std::size_t>(
      std::count_if(color.begin(), color.end(), [](std::uint8_t c) { return c != 0; }));
}

// Branch and bound over edges: each open edge gets a color or is left out.
// Vertex v may carry at most cap[v] colored edges.
class Search {
 public:
  Search(const MultiGraph& g, int k, const std::vector<std::size_t>& cap, bool require_all)
      : g_(g), k_(k), cap_(cap), require_all_(require_all) {
    const std::size_t n = g.vertex_count();
    const std::size_t m = g.edge_count();
    state_.assign(m, kOpen);
    used_.assign(n, 0);
    cnt_.assign(n, 0);
    live_deg_.resize(n);
    for (VertexId v = 0; v < n; ++v) live_deg_[v] = g.degree(v);
    live_ = m;
    deg_sum_.resize(m);
    lower_twin_.assign(m, kNoEdge);
    higher_twins_.resize(m);
    std::map<std::pair<VertexId, VertexId>, EdgeId> last;
    for (EdgeId e = 0; e < m; ++e) {
      const Edge& ed = g.edges()[e];
      deg_sum_[e] = g.degree(ed.u) + g.degree(ed.v);
      const auto key = std::minmax(ed.u, ed.v);
      auto it = last.find(key);
      if (it != last.end()) {
        lower_twin_[e] = it->second;
        it->second = e;
      } else {
        last.emplace(key, e);
      }
    }
    for (EdgeId e = 0; e < m; ++e) {
      for (EdgeId t = lower_twin_[e]; t != kNoEdge; t = lower_twin_[t]) higher_twins_[t].push_back(e);
    }
  }

  void seed(const Colors& incumbent) {
    best_ = count_colored(incumbent);
    best_color_ = incumbent;
  }

  Solution run() {
    if (best_ < g_.edge_count()) dfs();
    if (require_all_ && best_ < g_.edge_count()) {
      throw std::logic_error("no full coloring found where one must exist");
    }
    return {best_, best_color_};
  }

  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  static constexpr int kOpen = -1;

  std::uint64_t available(EdgeId e) const {
    const Edge& ed = g_.edges()[e];
    if (cnt_[ed.u] >= cap_[ed.u] || cnt_[ed.v] >= cap_[ed.v]) return 0;
    const EdgeId t = lower_twin_[e];
    if (t != kNoEdge && state_[t] == 0) return 0;
    const int top = std::min(k_, max_used_ + 1);
    return low_colors(top) & ~(used_[ed.u] | used_[ed.v]);
  }

  void assign(EdgeId e, int c) {
    state_[e] = static_cast<std::int8_t>(c);
    trail_.push_back(e);
    const Edge& ed = g_.edges()[e];
    --live_;
    --live_deg_[ed.u];
    --live_deg_[ed.v];
    if (c > 0) {
      used_[ed.u] |= color_bit(c);
      used_[ed.v] |= color_bit(c);
      ++cnt_[ed.u];
      ++cnt_[ed.v];
      ++colored_;
    }
  }

  void undo_to(std::size_t mark) {
    while (trail_.size() > mark) {
      const EdgeId e = trail_.back();
      trail_.pop_back();
      const int c = state_[e];
      const Edge& ed = g_.edges()[e];
      ++live_;
      ++live_deg_[ed.u];
      ++live_deg_[ed.v];
      if (c > 0) {
        used_[ed.u] &= ~color_bit(c);
        used_[ed.v] &= ~color_bit(c);
        --cnt_[ed.u];
        --cnt_[ed.v];
        --colored_;
      }
      state_[e] = kOpen;
    }
  }

  std::size_t capacity_bound() const {
    std::size_t s = 0;
    for (VertexId v = 0; v < g_.vertex_count(); ++v) {
      const std::size_t room = cap_[v] > cnt_[v] ? cap_[v] - cnt_[v] : 0;
      s += std::min(room, live_deg_[v]);
    }
    return s / 2;
  }

  // Each color class is a matching on the vertices that can still take it.
  std::size_t color_bound() {
    const std::uint64_t all = low_colors(k_);
    std::array<std::size_t, kMaxColors> ready{};
    for (VertexId v = 0; v < g_.vertex_count(); ++v) {
      if (cnt_[v] >= cap_[v] || live_deg_[v] == 0) continue;
      std::uint64_t reach = 0;
      for (EdgeId e : g_.incident(v)) {
        if (state_[e] != kOpen) continue;
        const VertexId w = g_.edges()[e].other(v);
        if (cnt_[w] < cap_[w]) reach |= ~used_[w];
      }
      reach &= all & ~used_[v];
      while (reach) {
        ++ready[std::countr_zero(reach)];
        reach &= reach - 1;
      }
    }
    std::size_t s = 0;
    for (int c = 0; c < k_; ++c) s += ready[c] / 2;
    return s;
  }

  void record() {
    if (colored_ <= best_) return;
    best_ = colored_;
    best_color_.assign(g_.edge_count(), 0);
    for (EdgeId e = 0; e < g_.edge_count(); ++e) {
      if (state_[e] > 0) best_color_[e] = static_cast<std::uint8_t>(state_[e]);
    }
    if (best_ >= g_.edge_count()) stop_ = true;
  }

  void dfs() {
    if (stop_) return;
    ++nodes_;
    const std::size_t mark = trail_.size();
    const VertexId n_edges = static_cast<VertexId>(g_.edge_count());

    EdgeId pick = kNoEdge;
    int pick_count = kMaxColors + 1;
    for (EdgeId e = 0; e < n_edges; ++e) {
      if (state_[e] != kOpen) continue;
      const std::uint64_t av = available(e);
      if (av == 0) {
        if (require_all_) {
          undo_to(mark);
          return;
        }
        assign(e, 0);
        continue;
      }
      const int cnt = std::popcount(av);
      if (cnt < pick_count || (cnt == pick_count && deg_sum_[e] > deg_sum_[pick])) {
        pick = e;
        pick_count = cnt;
      }
    }
    if (live_ == 0) {
      record();
      undo_to(mark);
      return;
    }

    std::size_t bound = g_.edge_count();
    if (!require_all_) {
      bound = colored_ + std::min({capacity_bound(), color_bound(), live_});
      if (bound <= best_) {
        undo_to(mark);
        return;
      }
    }

    while (lower_twin_[pick] != kNoEdge && state_[lower_twin_[pick]] == kOpen) pick = lower_twin_[pick];

    std::uint64_t av = available(pick);
    while (av && !stop_) {
      const int c = std::countr_zero(av) + 1;
      av &= av - 1;
      const int saved_max = max_used_;
      max_used_ = std::max(max_used_, c);
      const std::size_t inner = trail_.size();
      assign(pick, c);
      dfs();
      undo_to(inner);
      max_used_ = saved_max;
      if (best_ >= bound) break;
    }

    if (!require_all_ && !stop_ && best_ < bound) {
      const std::size_t inner = trail_.size();
      assign(pick, 0);
      for (EdgeId t : higher_twins_[pick]) {
        if (state_[t] == kOpen) assign(t, 0);
      }
      dfs();
      undo_to(inner);
    }
    undo_to(mark);
  }

  const MultiGraph& g_;
  int k_;
  const std::vector<std::size_t>& cap_;
  bool require_all_;

  std::vector<std::int8_t> state_;
  std::vector<std::uint64_t> used_;
  std::vector<std::size_t> cnt_;
  std::vector<std::size_t> live_deg_;
  std::vector<std::size_t> deg_sum_;
  std::vector<EdgeId> lower_twin_;
  std::vector<std::vector<EdgeId>> higher_twins_;
  std::vector<EdgeId> trail_;
  std::size_t live_ = 0;
  std::size_t colored_ = 0;
  int max_used_ = 0;

  std::size_t best_ = 0;
  Colors best_color_;
  bool stop_ = false;
  std::uint64_t nodes_ = 0;
};

struct Context {
  int k = 1;
  SolverOptions options;
  std::uint64_t nodes = 0;
};

Solution search(const MultiGraph& g, const std::vector<std::size_t>& cap, Context& ctx) {
  if (g.edge_count() == 0) return {};
  const bool uniform = std::all_of(cap.begin(), cap.end(),
                                   [&](std::size_t c) { return c == static_cast<std::size_t>(ctx.k); });
  const bool full = ctx.options.shortcuts && uniform && full_coloring_known(g, ctx.k);
  Search s(g, ctx.k, cap, full);
  if (!full) s.seed(greedy_coloring(g, ctx.k, cap));
  Solution out = s.run();
  ctx.nodes += s.nodes();
  return out;
}

struct Forcing {
  std::vector<EdgeId> forced;
  std::vector<EdgeId> excluded;
  std::vector<bool> free;
  std::vector<std::size_t> rest_cap;
};

Forcing pendant_forcing(const MultiGraph& g, const std::vector<std::size_t>& cap) {
  const std::size_t n = g.vertex_count();
  Forcing out;
  out.free.assign(g.edge_count(), true);
  std::vector<std::size_t> rdeg(n), fdeg(n, 0);
  for (VertexId v = 0; v < n; ++v) rdeg[v] = g.degree(v);
  auto drop = [&](EdgeId e) {
    out.free[e] = false;
    --rdeg[g.edges()[e].u];
    --rdeg[g.edges()[e].v];
  };
  auto leaf = [&](VertexId w) { return rdeg[w] == 1 && fdeg[w] == 0 && cap[w] >= 1; };

  bool changed = true;
  while (changed) {
    changed = false;
    for (VertexId v = 0; v < n; ++v) {
      if (rdeg[v] == 0) continue;
      std::size_t slots = cap[v] > fdeg[v] ? cap[v] - fdeg[v] : 0;
      for (EdgeId e : g.incident(v)) {
        if (slots == 0) break;
        if (!out.free[e] || !leaf(g.edges()[e].other(v))) continue;
        drop(e);
        ++fdeg[g.edges()[e].u];
        ++fdeg[g.edges()[e].v];
        --slots;
        out.forced.push_back(e);
        changed = true;
      }
      if (slots == 0) {
        for (EdgeId e : g.incident(v)) {
          if (!out.free[e]) continue;
          drop(e);
          out.excluded.push_back(e);
          changed = true;
        }
      }
    }
  }
  out.rest_cap.resize(n);
  for (VertexId v = 0; v < n; ++v) out.rest_cap[v] = cap[v] > fdeg[v] ? cap[v] - fdeg[v] : 0;
  return out;
}

Solution solve_capped(const MultiGraph& g, const std::vector<std::size_t>& cap, Context& ctx);

// Side of g - e that holds `start`.
std::vector<bool> side_of(const MultiGraph& g, EdgeId e, VertexId start) {
  std::vector<bool> in(g.vertex_count(), false);
  std::vector<VertexId> stack{start};
  in[start] = true;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (EdgeId f : g.incident(v)) {
      if (f == e) continue;
      const VertexId w = g.edges()[f].other(v);
      if (!in[w]) {
        in[w] = true;
        stack.push_back(w);
      }
    }
  }
  return in;
}

struct BridgeParts {
  Subgraph g1, g2, g1e, g2e;
};

BridgeParts split_at(const MultiGraph& g, EdgeId e) {
  const std::vector<bool> a_side = side_of(g, e, g.edges()[e].u);
  std::vector<EdgeId> e1, e2;
  for (EdgeId f = 0; f < g.edge_count(); ++f) {
    if (f == e) continue;
    (a_side[g.edges()[f].u] ? e1 : e2).push_back(f);
  }
  BridgeParts p;
  p.g1 = edge_subgraph(g, e1);
  p.g2 = edge_subgraph(g, e2);
  e1.push_back(e);
  e2.push_back(e);
  p.g1e = edge_subgraph(g, e1);
  p.g2e = edge_subgraph(g, e2);
  return p;
}

std::vector<std::size_t> child_caps(const Subgraph& s, const std::vector<std::size_t>& cap) {
  std::vector<std::size_t> out(s.graph.vertex_count());
  for (VertexId v = 0; v < out.size(); ++v) out[v] = cap[s.parent_vertex[v]];
  return out;
}

EdgeId child_edge(const Subgraph& s, EdgeId parent) {
  for (EdgeId e = 0; e < s.parent_edge.size(); ++e) {
    if (s.parent_edge[e] == parent) return e;
  }
  throw std::logic_error("edge missing from subgraph");
}

// Colors `e` (pendant in g) without changing the count: take a free color at
// the inner endpoint, or steal the color of another edge there.
void ensure_colored(const MultiGraph& g, Solution& s, EdgeId e, const std::vector<std::size_t>& cap,
                    int k) {
  if (s.color[e] != 0) return;
  const Edge& ed = g.edges()[e];
  const VertexId inner = g.degree(ed.u) >= g.degree(ed.v) ? ed.u : ed.v;
  std::uint64_t used = 0;
  std::size_t cnt = 0;
  EdgeId victim = kNoEdge;
  for (EdgeId f : g.incident(inner)) {
    if (s.color[f] == 0) continue;
    used |= color_bit(s.color[f]);
    ++cnt;
    if (victim == kNoEdge) victim = f;
  }
  if (cnt < cap[inner]) {
    const int c = std::countr_zero(~used) + 1;
    if (c > k) throw std::logic_error("no free color at pendant endpoint");
    s.color[e] = static_cast<std::uint8_t>(c);
    ++s.value;
    return;
  }
  s.color[e] = s.color[victim];
  s.color[victim] = 0;
}

Solution solve_bridge(const MultiGraph& g, EdgeId e, const std::vector<std::size_t>& cap,
                      Context& ctx) {
  BridgeParts p = split_at(g, e);
  const Edge& ed = g.edges()[e];
  auto pendant_caps = [&](const Subgraph& s, VertexId leaf_parent) {
    std::vector<std::size_t> c = child_caps(s, cap);
    for (VertexId v = 0; v < c.size(); ++v) {
      if (s.parent_vertex[v] == leaf_parent) c[v] = std::min<std::size_t>(1, c[v]);
    }
    return c;
  };
  const Solution s1 = solve_capped(p.g1.graph, child_caps(p.g1, cap), ctx);
  const Solution s2 = solve_capped(p.g2.graph, child_caps(p.g2, cap), ctx);
  const auto cap1e = pendant_caps(p.g1e, ed.v);
  const auto cap2e = pendant_caps(p.g2e, ed.u);
  Solution s1e = solve_capped(p.g1e.graph, cap1e, ctx);
  Solution s2e = solve_capped(p.g2e.graph, cap2e, ctx);

  Solution out;
  out.color.assign(g.edge_count(), 0);
  auto lift = [&](const Subgraph& s, const Colors& c) {
    for (EdgeId f = 0; f < c.size(); ++f) {
      if (c[f] != 0) out.color[s.parent_edge[f]] = c[f];
    }
  };
  if (s1e.value + s2e.value > s1.value + s2.value + 1) {
    const EdgeId x1 = child_edge(p.g1e, e);
    const EdgeId x2 = child_edge(p.g2e, e);
    ensure_colored(p.g1e.graph, s1e, x1, cap1e, ctx.k);
    ensure_colored(p.g2e.graph, s2e, x2, cap2e, ctx.k);
    const std::uint8_t c1 = s1e.color[x1];
    const std::uint8_t c2 = s2e.color[x2];
    for (auto& c : s2e.color) {
      if (c == c1) {
        c = c2;
      } else if (c == c2) {
        c = c1;
      }
    }
    lift(p.g1e, s1e.color);
    lift(p.g2e, s2e.color);
  } else {
    lift(p.g1, s1.color);
    lift(p.g2, s2.color);
  }
  out.value = count_colored(out.color);
  return out;
}

Solution solve_component(const MultiGraph& g, const std::vector<std::size_t>& cap, Context& ctx) {
  if (ctx.options.split_bridges) {
    const std::vector<EdgeId> bs = bridges(g);
    EdgeId chosen = kNoEdge;
    std::size_t best_balance = 0;
    for (EdgeId b : bs) {
      const std::vector<bool> a_side = side_of(g, b, g.edges()[b].u);
      std::size_t left = 0;
      for (EdgeId f = 0; f < g.edge_count(); ++f) {
        if (f != b && a_side[g.edges()[f].u]) ++left;
      }
      const std::size_t balance = std::min(left, g.edge_count() - 1 - left);
      if (balance > 0 && (chosen == kNoEdge || balance > best_balance)) {
        chosen = b;
        best_balance = balance;
      }
    }
    if (chosen != kNoEdge) return solve_bridge(g, chosen, cap, ctx);
  }
  return search(g, cap, ctx);
}

Solution solve_capped(const MultiGraph& g, const std::vector<std::size_t>& cap, Context& ctx) {
  if (g.edge_count() == 0) return {0, Colors()};
  if (!ctx.options.reductions) return search(g, cap, ctx);

  const Forcing f = pendant_forcing(g, cap);
  Solution out;
  out.color.assign(g.edge_count(), 0);

  std::vector<EdgeId> rest;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (f.free[e]) rest.push_back(e);
  }
  if (!rest.empty()) {
    const Subgraph residual = edge_subgraph(g, rest);
    for (const Subgraph& part : split_components(residual.graph)) {
      std::vector<std::size_t> part_cap(part.graph.vertex_count());
      for (VertexId v = 0; v < part_cap.size(); ++v) {
        part_cap[v] = f.rest_cap[residual.parent_vertex[part.parent_vertex[v]]];
      }
      const Solution s = solve_component(part.graph, part_cap, ctx);
      for (EdgeId e = 0; e < s.color.size(); ++e) {
        if (s.color[e] != 0) out.color[residual.parent_edge[part.parent_edge[e]]] = s.color[e];
      }
    }
  }

  std::vector<std::uint64_t> used(g.vertex_count(), 0);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (out.color[e] == 0) continue;
    used[g.edges()[e].u] |= color_bit(out.color[e]);
    used[g.edges()[e].v] |= color_bit(out.color[e]);
  }
  for (EdgeId e : f.forced) {
    const Edge& ed = g.edges()[e];
    const int c = std::countr_zero(~(used[ed.u] | used[ed.v])) + 1;
    if (c > ctx.k) throw std::logic_error("forced pendant edge has no free color");
    out.color[e] = static_cast<std::uint8_t>(c);
    used[ed.u] |= color_bit(c);
    used[ed.v] |= color_bit(c);
  }
  out.value = count_colored(out.color);
  return out;
}

int working_colors(const MultiGraph& g, int k) {
  if (k < 1) throw Error(ErrorKind::BadParameter, "k must be at least 1");
  // Shannon: floor(3*Delta/2) colors always suffice, extra colors change nothing.
  const std::size_t enough = std::max<std::size_t>(1, g.max_degree() * 3 / 2);
  const int kw = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(k), enough));
  if (kw > kMaxColors) {
    throw Error(ErrorKind::BadParameter,
                "search supports at most 64 colors, needs " + std::to_string(kw));
  }
  return kw;
}

}  // namespace

NuResult nu_k(const MultiGraph& g, int k, const SolverOptions& options) {
  Context ctx;
  ctx.k = working_colors(g, k);
  ctx.options = options;

  NuResult result;
  result.certificate = ColorClasses(k, g.edge_count());
  if (g.edge_count() == 0) return result;

  if (!options.reductions) {
    const std::vector<std::size_t> cap(g.vertex_count(), static_cast<std::size_t>(ctx.k));
    Solution s = search(g, cap, ctx);
    result.value = s.value;
    result.certificate.color = std::move(s.color);
    result.node_count = ctx.nodes;
    return result;
  }

  for (const Subgraph& part : split_components(g)) {
    const MultiGraph& h = part.graph;
    Colors colors;
    if (options.route_poly && h.edge_count() <= h.vertex_count()) {
      colors = poly::nu_k_low_cycle_rank(h, ctx.k).certificate.color;
    } else {
      const std::vector<std::size_t> cap(h.vertex_count(), static_cast<std::size_t>(ctx.k));
      if (options.shortcuts && full_coloring_known(h, ctx.k)) {
        colors = search(h, cap, ctx).color;
      } else {
        colors = solve_capped(h, cap, ctx).color;
      }
    }
    for (EdgeId e = 0; e < colors.size(); ++e) {
      if (colors[e] != 0) result.certificate.color[part.parent_edge[e]] = colors[e];
    }
  }
  result.value = result.certificate.colored_count();
  result.node_count = ctx.nodes;
  return result;
}

std::size_t resistance_r3(const MultiGraph& g) {
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) != 3) {
      throw Error(ErrorKind::NotCubic, "vertex " + std::to_string(v) + " has degree " +
                                           std::to_string(g.degree(v)));
    }
  }
  return g.edge_count() - nu_k(g, 3).value;
}

PendantReduction reduce_pendant(const MultiGraph& g, int k) {
  if (k < 1) throw Error(ErrorKind::BadParameter, "k must be at least 1");
  const std::vector<std::size_t> cap(g.vertex_count(), static_cast<std::size_t>(k));
  Forcing f = pendant_forcing(g, cap);
  return {std::move(f.forced), std::move(f.excluded)};
}

std::size_t decompose_bridge(const MultiGraph& g, EdgeId e, int k, const SolverOptions& options) {
  const std::vector<EdgeId> bs = bridges(g);
  if (!std::binary_search(bs.begin(), bs.end(), e)) {
    throw Error(ErrorKind::NotABridge, "edge " + std::to_string(e) + " is not a bridge");
  }
  const BridgeParts p = split_at(g, e);
  const std::size_t apart = nu_k(p.g1.graph, k, options).value + nu_k(p.g2.graph, k, options).value;
  const std::size_t joined =
      nu_k(p.g1e.graph, k, options).value + nu_k(p.g2e.graph, k, options).value - 1;
  return std::max(apart, joined);
}

std::size_t upper_bound(const MultiGraph& g, int k, const ColorClasses& partial) {
  if (k < 1) throw Error(ErrorKind::BadParameter, "k must be at least 1");
  if (partial.k != k || !is_valid_coloring(g, partial)) {
    throw Error(ErrorKind::BadParameter, "partial coloring is not proper for this graph and k");
  }
  const std::size_t n = g.vertex_count();
  const std::size_t m = g.edge_count();
  const auto kk = static_cast<std::size_t>(k);
  std::vector<std::size_t> cnt(n, 0), open_deg(n, 0);
  std::vector<std::set<int>> seen(n);
  std::set<int> present;
  std::size_t colored = 0, open = 0;
  for (EdgeId e = 0; e < m; ++e) {
    const Edge& ed = g.edges()[e];
    if (partial.color[e] != 0) {
      ++colored;
      ++cnt[ed.u];
      ++cnt[ed.v];
      seen[ed.u].insert(partial.color[e]);
      seen[ed.v].insert(partial.color[e]);
      present.insert(partial.color[e]);
    } else {
      ++open;
      ++open_deg[ed.u];
      ++open_deg[ed.v];
    }
  }
  std::size_t cap_sum = 0;
  for (VertexId v = 0; v < n; ++v) cap_sum += std::min(kk - std::min(kk, cnt[v]), open_deg[v]);

  // A color class is a matching among the open edges whose ends lack it.
  auto class_bound = [&](int c) {
    std::vector<bool> allowed(m, false);
    for (EdgeId e = 0; e < m; ++e) {
      const Edge& ed = g.edges()[e];
      allowed[e] = partial.color[e] == 0 && !seen[ed.u].count(c) && !seen[ed.v].count(c);
    }
    return max_matching(g, allowed).size();
  };
  std::size_t per_color = 0;
  for (int c : present) per_color += class_bound(c);
  per_color += (kk - present.size()) * class_bound(0);
  return colored + std::min({cap_sum / 2, per_color, open});
}

}  // namespace nulab
