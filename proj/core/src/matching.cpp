#include "nulab/matching.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <string>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/max_cardinality_matching.hpp>

#include "nulab/error.hpp"

namespace nulab {

namespace {

using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;

void require_cubic(const MultiGraph& g) {
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) != 3) {
      throw Error(ErrorKind::NotCubic, "vertex " + std::to_string(v) + " has degree " +
                                           std::to_string(g.degree(v)));
    }
  }
}

}  // namespace

bool is_matching(const MultiGraph& g, std::span<const EdgeId> edges) {
  std::vector<bool> seen(g.vertex_count(), false);
  for (EdgeId e : edges) {
    const Edge& ed = g.edge(e);
    if (seen[ed.u] || seen[ed.v]) return false;
    seen[ed.u] = seen[ed.v] = true;
  }
  return true;
}

Matching max_matching(const MultiGraph& g) {
  return max_matching(g, std::vector<bool>(g.edge_count(), true));
}

Matching max_matching(const MultiGraph& g, const std::vector<bool>& allowed) {
  const std::size_t n = g.vertex_count();
  BoostGraph bg(n);
  std::map<std::pair<VertexId, VertexId>, EdgeId> lowest;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!allowed[e]) continue;
    const Edge& ed = g.edges()[e];
    auto key = std::make_pair(std::min(ed.u, ed.v), std::max(ed.u, ed.v));
    if (lowest.emplace(key, e).second) boost::add_edge(key.first, key.second, bg);
  }
  std::vector<boost::graph_traits<BoostGraph>::vertex_descriptor> mate(n);
  boost::edmonds_maximum_cardinality_matching(bg, &mate[0]);
  Matching out;
  const auto null = boost::graph_traits<BoostGraph>::null_vertex();
  for (VertexId v = 0; v < n; ++v) {
    if (mate[v] != null && v < mate[v]) {
      out.edge_ids.push_back(lowest.at({v, static_cast<VertexId>(mate[v])}));
    }
  }
  std::sort(out.edge_ids.begin(), out.edge_ids.end());
  return out;
}

void for_each_perfect_matching(const MultiGraph& g,
                               const std::function<bool(const Matching&)>& visit) {
  const std::size_t n = g.vertex_count();
  const std::size_t m = g.edge_count();
  if (n % 2 != 0) return;
  // Include-before-exclude over edges in id order produces the sorted id
  // lists in lexicographic order.
  std::vector<bool> covered(n, false);
  std::vector<EdgeId> chosen;
  std::size_t uncovered = n;
  bool stop = false;

  // Every uncovered vertex still needs an edge with id >= i to an uncovered
  // neighbour.
  auto feasible = [&](EdgeId i) {
    for (VertexId v = 0; v < n; ++v) {
      if (covered[v]) continue;
      bool ok = false;
      for (EdgeId e : g.incident(v)) {
        if (e >= i && !covered[g.edges()[e].other(v)]) {
          ok = true;
          break;
        }
      }
      if (!ok) return false;
    }
    return true;
  };

  std::function<void(EdgeId)> rec = [&](EdgeId i) {
    if (stop) return;
    if (uncovered == 0) {
      Matching pm{chosen};
      if (!visit(pm)) stop = true;
      return;
    }
    if (i >= m || !feasible(i)) return;
    const Edge& e = g.edges()[i];
    if (!covered[e.u] && !covered[e.v]) {
      covered[e.u] = covered[e.v] = true;
      uncovered -= 2;
      chosen.push_back(i);
      rec(i + 1);
      chosen.pop_back();
      uncovered += 2;
      covered[e.u] = covered[e.v] = false;
    }
    rec(i + 1);
  };
  rec(0);
}

std::vector<Matching> enumerate_perfect_matchings(const MultiGraph& g, std::size_t limit) {
  if (limit < 1) throw Error(ErrorKind::BadParameter, "limit must be at least 1");
  std::vector<Matching> out;
  for_each_perfect_matching(g, [&](const Matching& pm) {
    out.push_back(pm);
    return out.size() < limit;
  });
  return out;
}

TwoFactor two_factor_from_pm(const MultiGraph& g, const Matching& pm) {
  require_cubic(g);
  if (pm.size() * 2 != g.vertex_count() || !is_matching(g, pm.edge_ids)) {
    throw Error(ErrorKind::NotPerfect, "edge set is not a perfect matching");
  }
  std::vector<bool> in_pm(g.edge_count(), false);
  for (EdgeId e : pm.edge_ids) in_pm[e] = true;

  TwoFactor tf;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!in_pm[e]) tf.edge_ids.push_back(e);
  }
  std::vector<bool> used(g.edge_count(), false);
  for (EdgeId start : tf.edge_ids) {
    if (used[start]) continue;
    std::vector<EdgeId> cycle;
    EdgeId cur = start;
    VertexId at = g.edges()[start].v;
    while (true) {
      used[cur] = true;
      cycle.push_back(cur);
      EdgeId next = std::numeric_limits<EdgeId>::max();
      for (EdgeId f : g.incident(at)) {
        if (!in_pm[f] && f != cur) {
          next = f;
          break;
        }
      }
      if (next == start || used[next]) break;
      at = g.edges()[next].other(at);
      cur = next;
    }
    if (cycle.size() % 2 == 1) ++tf.odd_cycle_count;
    tf.cycles.push_back(std::move(cycle));
  }
  return tf;
}

std::size_t min_odd_two_factor(const MultiGraph& g) {
  require_cubic(g);
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for_each_perfect_matching(g, [&](const Matching& pm) {
    best = std::min(best, two_factor_from_pm(g, pm).odd_cycle_count);
    return best > 0;
  });
  if (best == std::numeric_limits<std::size_t>::max()) {
    throw Error(ErrorKind::NoTwoFactor, "graph has no perfect matching");
  }
  return best;
}

}  // namespace nulab
