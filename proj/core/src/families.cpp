#include "nulab/families.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <string>
#include <utility>

#include "nulab/error.hpp"

namespace nulab::families {

namespace {

using Pairs = std::vector<std::pair<VertexId, VertexId>>;

MultiGraph make(std::size_t n, const Pairs& edges) { return MultiGraph::build(n, edges); }

void require_cubic(const MultiGraph& g) {
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) != 3) {
      throw Error(ErrorKind::NotCubic, "vertex " + std::to_string(v) + " has degree " +
                                           std::to_string(g.degree(v)));
    }
  }
}

Pairs pairs_of(const MultiGraph& g) {
  Pairs out;
  out.reserve(g.edge_count());
  for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
  return out;
}

// Diamond on a, a+1, a+2, a+3 (a-x, a-y, x-y, x-d, y-d).
void add_diamond(Pairs& edges, VertexId a) {
  const VertexId x = a + 1, y = a + 2, d = a + 3;
  edges.insert(edges.end(), {{a, x}, {a, y}, {x, y}, {x, d}, {y, d}});
}

std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

Pairs tree_pairs(std::size_t n, std::mt19937_64& rng) {
  Pairs edges;
  for (std::size_t i = 1; i < n; ++i) {
    edges.emplace_back(static_cast<VertexId>(uniform(rng, 0, i - 1)), static_cast<VertexId>(i));
  }
  return edges;
}

std::set<std::pair<VertexId, VertexId>> edge_set(const Pairs& edges) {
  std::set<std::pair<VertexId, VertexId>> s;
  for (auto [u, v] : edges) s.insert(std::minmax(u, v));
  return s;
}

}  // namespace

MultiGraph fig1_graph() {
  return make(6, {{1, 0}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {5, 3}, {4, 5}, {1, 0}, {4, 5}});
}

MultiGraph sylvester10() {
  Pairs edges;
  for (VertexId i = 0; i < 3; ++i) {
    const VertexId a = 3 * i, b = a + 1, c = a + 2;
    edges.insert(edges.end(), {{a, b}, {a, c}, {a, 9}, {b, c}, {b, c}});
  }
  return make(10, edges);
}

MultiGraph fig3_graph12() {
  Pairs edges;
  for (VertexId i = 0; i < 3; ++i) {
    const VertexId a = 3 * i, b = a + 1, c = a + 2;
    edges.insert(edges.end(), {{a, b}, {a, c}, {a, 9 + i}, {b, c}, {b, c}});
  }
  edges.insert(edges.end(), {{9, 10}, {9, 11}, {10, 11}});
  return make(12, edges);
}

MultiGraph petersen() {
  return make(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                   {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                   {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
}

MultiGraph petersen_minus_vertex() { return remove_vertex(petersen(), 0); }

MultiGraph fig5_graph28() {
  const MultiGraph block = petersen_minus_vertex();
  Pairs edges;
  for (VertexId b = 0; b < 3; ++b) {
    for (const Edge& e : block.edges()) edges.emplace_back(9 * b + e.u, 9 * b + e.v);
  }
  for (VertexId b = 0; b < 3; ++b) edges.emplace_back(27, 9 * b + 4);
  for (VertexId b = 0; b < 3; ++b) edges.emplace_back(9 * b, 9 * ((b + 1) % 3) + 3);
  return make(28, edges);
}

MultiGraph remark_family(int k, int l) {
  if (k < 2 || l < 3) {
    throw Error(ErrorKind::BadParameter, "remark family needs k >= 2 and l >= 3, got k=" +
                                             std::to_string(k) + " l=" + std::to_string(l));
  }
  const auto L = static_cast<VertexId>(l);
  const auto p = static_cast<VertexId>(k - 1);
  Pairs edges;
  for (VertexId i = 0; i < L; ++i) edges.emplace_back(i, (i + 1) % L);
  for (VertexId i = 0; i < L; ++i) {
    for (VertexId j = 0; j < p; ++j) edges.emplace_back(i, L + i * p + j);
  }
  return make(static_cast<std::size_t>(l) * static_cast<std::size_t>(k), edges);
}

MultiGraph triangle_replace(const MultiGraph& h) {
  require_cubic(h);
  const std::size_t n = h.vertex_count();
  Pairs edges(h.edge_count());
  for (VertexId v = 0; v < n; ++v) {
    const auto inc = h.incident(v);
    for (std::size_t i = 0; i < inc.size(); ++i) {
      const VertexId corner = static_cast<VertexId>(3 * v + i);
      (h.edges()[inc[i]].u == v ? edges[inc[i]].first : edges[inc[i]].second) = corner;
    }
  }
  for (VertexId v = 0; v < n; ++v) {
    const VertexId a = 3 * v;
    edges.insert(edges.end(), {{a, a + 1}, {a + 1, a + 2}, {a, a + 2}});
  }
  return make(3 * n, edges);
}

MultiGraph string_replace(const MultiGraph& g, EdgeId e, int count) {
  if (count < 1) throw Error(ErrorKind::BadParameter, "string length must be at least 1");
  const Edge target = g.edge(e);
  Pairs edges = pairs_of(g);
  const auto base = static_cast<VertexId>(g.vertex_count());
  const auto c = static_cast<VertexId>(count);
  edges[e] = {target.u, base};
  for (VertexId i = 0; i < c; ++i) {
    const VertexId a = base + 4 * i;
    add_diamond(edges, a);
    const VertexId next = i + 1 < c ? a + 4 : target.v;
    edges.emplace_back(a + 3, next);
  }
  return make(g.vertex_count() + 4 * static_cast<std::size_t>(count), edges);
}

MultiGraph ring_of_diamonds(int r) {
  if (r < 2) throw Error(ErrorKind::BadParameter, "ring needs r >= 2, got " + std::to_string(r));
  const auto R = static_cast<VertexId>(r);
  Pairs edges;
  for (VertexId i = 0; i < R; ++i) add_diamond(edges, 4 * i);
  for (VertexId i = 0; i < R; ++i) edges.emplace_back(4 * i + 3, 4 * ((i + 1) % R));
  return make(4 * static_cast<std::size_t>(r), edges);
}

MultiGraph cycle_graph(std::size_t n) {
  if (n < 3) throw Error(ErrorKind::BadParameter, "cycle needs n >= 3");
  Pairs edges;
  for (std::size_t i = 0; i < n; ++i) {
    edges.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>((i + 1) % n));
  }
  return make(n, edges);
}

MultiGraph path_graph(std::size_t n) {
  Pairs edges;
  for (std::size_t i = 1; i < n; ++i) {
    edges.emplace_back(static_cast<VertexId>(i - 1), static_cast<VertexId>(i));
  }
  return make(n, edges);
}

MultiGraph star_graph(std::size_t leaves) {
  Pairs edges;
  for (std::size_t i = 1; i <= leaves; ++i) edges.emplace_back(0, static_cast<VertexId>(i));
  return make(leaves + 1, edges);
}

MultiGraph complete_graph(std::size_t n) {
  Pairs edges;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return make(n, edges);
}

MultiGraph complete_bipartite(std::size_t a, std::size_t b) {
  Pairs edges;
  for (VertexId u = 0; u < a; ++u) {
    for (VertexId v = 0; v < b; ++v) edges.emplace_back(u, static_cast<VertexId>(a + v));
  }
  return make(a + b, edges);
}

MultiGraph random_tree(std::size_t n, std::mt19937_64& rng) {
  if (n < 1) throw Error(ErrorKind::BadParameter, "tree needs n >= 1");
  return make(n, tree_pairs(n, rng));
}

MultiGraph random_unicyclic(std::size_t n, std::mt19937_64& rng) {
  if (n < 3) throw Error(ErrorKind::BadParameter, "unicyclic graph needs n >= 3");
  Pairs edges = tree_pairs(n, rng);
  const auto present = edge_set(edges);
  while (true) {
    const auto u = static_cast<VertexId>(uniform(rng, 0, n - 1));
    const auto v = static_cast<VertexId>(uniform(rng, 0, n - 1));
    if (u == v || present.count(std::minmax(u, v))) continue;
    edges.emplace_back(u, v);
    return make(n, edges);
  }
}

MultiGraph random_bipartite_unicyclic(std::size_t n, std::mt19937_64& rng) {
  if (n < 4) throw Error(ErrorKind::BadParameter, "bipartite unicyclic graph needs n >= 4");
  while (true) {
    Pairs edges = tree_pairs(n, rng);
    std::vector<int> side(n, 0);
    for (auto [p, c] : edges) side[c] = 1 - side[p];  // parents come first
    const auto present = edge_set(edges);
    std::vector<std::pair<VertexId, VertexId>> options;
    for (VertexId u = 0; u < n; ++u) {
      for (VertexId v = u + 1; v < n; ++v) {
        if (side[u] != side[v] && !present.count({u, v})) options.emplace_back(u, v);
      }
    }
    if (options.empty()) continue;
    edges.push_back(options[uniform(rng, 0, options.size() - 1)]);
    return make(n, edges);
  }
}

MultiGraph random_multigraph(std::size_t max_edges, std::mt19937_64& rng) {
  const std::size_t n = uniform(rng, 2, 7);
  const std::size_t m = uniform(rng, 0, max_edges);
  Pairs edges;
  while (edges.size() < m) {
    const auto u = static_cast<VertexId>(uniform(rng, 0, n - 1));
    const auto v = static_cast<VertexId>(uniform(rng, 0, n - 1));
    if (u != v) edges.emplace_back(u, v);
  }
  return make(n, edges);
}

namespace {

std::int64_t param(const FamilySpec& spec, const std::string& key, std::int64_t fallback) {
  auto it = spec.params.find(key);
  return it == spec.params.end() ? fallback : it->second;
}

std::int64_t required(const FamilySpec& spec, const std::string& key) {
  auto it = spec.params.find(key);
  if (it == spec.params.end()) {
    throw Error(ErrorKind::BadParameter, "family " + spec.name + " needs --" + key);
  }
  return it->second;
}

std::size_t positive(const FamilySpec& spec, const std::string& key, std::int64_t value,
                     std::int64_t minimum) {
  if (value < minimum) {
    throw Error(ErrorKind::BadParameter, "family " + spec.name + ": --" + key + " must be >= " +
                                             std::to_string(minimum));
  }
  return static_cast<std::size_t>(value);
}

using Builder = std::function<std::vector<MultiGraph>(const FamilySpec&, std::uint64_t)>;

std::vector<MultiGraph> one(MultiGraph g) { return {std::move(g)}; }

// Draws `count` graphs with a vertex count uniform in [lo, n].
std::vector<MultiGraph> corpus(const FamilySpec& spec, std::uint64_t seed, std::size_t lo,
                               std::size_t default_n,
                               MultiGraph (*draw)(std::size_t, std::mt19937_64&)) {
  const std::size_t count = positive(spec, "count", param(spec, "count", 1), 1);
  const std::size_t n = positive(spec, "n", param(spec, "n", static_cast<std::int64_t>(default_n)),
                                 static_cast<std::int64_t>(lo));
  std::mt19937_64 rng(seed);
  std::vector<MultiGraph> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(draw(uniform(rng, lo, n), rng));
  return out;
}

const std::map<std::string, Builder>& registry() {
  static const std::map<std::string, Builder> table = {
      {"fig1", [](const FamilySpec&, std::uint64_t) { return one(fig1_graph()); }},
      {"sylvester10", [](const FamilySpec&, std::uint64_t) { return one(sylvester10()); }},
      {"fig3", [](const FamilySpec&, std::uint64_t) { return one(fig3_graph12()); }},
      {"petersen", [](const FamilySpec&, std::uint64_t) { return one(petersen()); }},
      {"petersen-minus-vertex",
       [](const FamilySpec&, std::uint64_t) { return one(petersen_minus_vertex()); }},
      {"fig5", [](const FamilySpec&, std::uint64_t) { return one(fig5_graph28()); }},
      {"petersen-triangle",
       [](const FamilySpec&, std::uint64_t) { return one(triangle_replace(petersen())); }},
      {"remark",
       [](const FamilySpec& s, std::uint64_t) {
         return one(remark_family(static_cast<int>(required(s, "k")),
                                  static_cast<int>(required(s, "l"))));
       }},
      {"ring",
       [](const FamilySpec& s, std::uint64_t) {
         return one(ring_of_diamonds(static_cast<int>(required(s, "r"))));
       }},
      {"cycle",
       [](const FamilySpec& s, std::uint64_t) {
         return one(cycle_graph(positive(s, "n", required(s, "n"), 3)));
       }},
      {"path",
       [](const FamilySpec& s, std::uint64_t) {
         return one(path_graph(positive(s, "n", required(s, "n"), 1)));
       }},
      {"star",
       [](const FamilySpec& s, std::uint64_t) {
         return one(star_graph(positive(s, "n", required(s, "n"), 1)));
       }},
      {"complete",
       [](const FamilySpec& s, std::uint64_t) {
         return one(complete_graph(positive(s, "n", required(s, "n"), 1)));
       }},
      {"random-tree",
       [](const FamilySpec& s, std::uint64_t seed) { return corpus(s, seed, 2, 20, random_tree); }},
      {"random-unicyclic",
       [](const FamilySpec& s, std::uint64_t seed) {
         return corpus(s, seed, 3, 18, random_unicyclic);
       }},
      {"random-bipartite-unicyclic",
       [](const FamilySpec& s, std::uint64_t seed) {
         return corpus(s, seed, 4, 18, random_bipartite_unicyclic);
       }},
      {"random-multigraph",
       [](const FamilySpec& s, std::uint64_t seed) {
         const std::size_t count = positive(s, "count", param(s, "count", 1), 1);
         const std::size_t m = positive(s, "m", param(s, "m", 9), 0);
         std::mt19937_64 rng(seed);
         std::vector<MultiGraph> out;
         for (std::size_t i = 0; i < count; ++i) out.push_back(random_multigraph(m, rng));
         return out;
       }},
  };
  return table;
}

}  // namespace

std::vector<std::string> family_names() {
  std::vector<std::string> out;
  for (const auto& [name, _] : registry()) out.push_back(name);
  return out;
}

std::vector<MultiGraph> generate(const FamilySpec& spec, std::uint64_t seed) {
  const auto& table = registry();
  auto it = table.find(spec.name);
  if (it == table.end()) throw Error(ErrorKind::UnknownFamily, "no family named '" + spec.name + "'");
  return it->second(spec, seed);
}

}  // namespace nulab::families
