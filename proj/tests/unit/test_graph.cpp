#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

#include "nulab/error.hpp"
#include "nulab/families.hpp"
#include "nulab/graph.hpp"
#include "oracle.hpp"

using namespace nulab;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no nulab::Error thrown";
  return ErrorKind::BadParameter;
}

std::vector<MultiGraph> sample_graphs() {
  std::vector<MultiGraph> out = {families::fig1_graph(),   families::sylvester10(),
                                 families::fig3_graph12(), families::petersen(),
                                 families::petersen_minus_vertex(), families::fig5_graph28(),
                                 families::cycle_graph(6), families::path_graph(5),
                                 families::star_graph(4),  families::remark_family(3, 4)};
  for (std::uint64_t s = 0; s < 60; ++s) out.push_back(oracle::random_multigraph(s, 2 + s % 7, s % 12));
  return out;
}

}  // namespace

TEST(Build, SingleEdge) {
  const auto g = MultiGraph::build(2, {{0, 1}});
  EXPECT_EQ(g.vertex_count(), 2u);
  EXPECT_EQ(g.edge_count(), 1u);
}

TEST(Build, ParallelPairCountsMultiplicity) {
  const auto g = MultiGraph::build(2, {{0, 1}, {0, 1}});
  EXPECT_EQ(g.degree(0), 2u);
  EXPECT_EQ(g.degree(1), 2u);
  EXPECT_FALSE(g.is_simple());
}

TEST(Build, RejectsLoop) {
  EXPECT_EQ(kind_of([] { MultiGraph::build(1, {{0, 0}}); }), ErrorKind::LoopRejected);
}

TEST(Build, RejectsOutOfRangeEndpoint) {
  EXPECT_EQ(kind_of([] { MultiGraph::build(2, {{0, 2}}); }), ErrorKind::IndexOutOfRange);
  const auto g = MultiGraph::build(2, {{0, 1}});
  EXPECT_EQ(kind_of([&] { (void)g.degree(5); }), ErrorKind::IndexOutOfRange);
}

TEST(Build, EdgeIdsFollowInputOrder) {
  const auto g = MultiGraph::build(3, {{2, 1}, {0, 1}, {1, 2}});
  EXPECT_EQ(g.edge(0).u, 2u);
  EXPECT_EQ(g.edge(2).v, 2u);
  const auto inc = g.incident(1);
  EXPECT_TRUE(std::is_sorted(inc.begin(), inc.end()));
  EXPECT_EQ(inc.size(), 3u);
}

TEST(Degree, PathMiddleAndPetersen) {
  EXPECT_EQ(families::path_graph(3).degree(1), 2u);
  const auto p = families::petersen();
  for (VertexId v = 0; v < 10; ++v) EXPECT_EQ(p.degree(v), 3u);
  EXPECT_EQ(max_degree(p), 3u);
}

TEST(Bridges, CycleHasNone) { EXPECT_TRUE(bridges(families::cycle_graph(5)).empty()); }

TEST(Bridges, TreeEdgesAllBridges) {
  std::mt19937_64 rng(3);
  const auto t = families::random_tree(12, rng);
  EXPECT_EQ(bridges(t).size(), t.edge_count());
}

TEST(Bridges, SylvesterStemsOnly) {
  const auto g = families::sylvester10();
  const std::vector<EdgeId> stems = {2, 7, 12};
  EXPECT_EQ(bridges(g), stems);
  EXPECT_EQ(oracle::bridges(g), stems);
}

TEST(Bridges, MatchDeletionOracle) {
  for (const auto& g : sample_graphs()) EXPECT_EQ(bridges(g), oracle::bridges(g));
}

TEST(Bridges, ParallelTwinsNeverBridges) {
  for (const auto& g : sample_graphs()) {
    const auto b = bridges(g);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      for (EdgeId f = 0; f < g.edge_count(); ++f) {
        if (e != f && g.edge(e).joins(g.edge(f).u, g.edge(f).v)) {
          EXPECT_FALSE(std::binary_search(b.begin(), b.end(), e));
        }
      }
    }
  }
}

TEST(Bridges, InvariantUnderEdgeReordering) {
  for (const auto& g : sample_graphs()) {
    std::vector<EdgeId> perm(g.edge_count());
    std::iota(perm.begin(), perm.end(), 0);
    std::mt19937_64 rng(g.edge_count());
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (EdgeId e : perm) edges.emplace_back(g.edge(e).v, g.edge(e).u);
    const auto h = MultiGraph::build(g.vertex_count(), edges);
    std::vector<EdgeId> mapped;
    for (EdgeId e : bridges(h)) mapped.push_back(perm[e]);
    std::sort(mapped.begin(), mapped.end());
    EXPECT_EQ(mapped, bridges(g));
  }
}

TEST(StructureFlags, SixCycle) {
  const auto f = structure_flags(families::cycle_graph(6));
  EXPECT_TRUE(f.connected);
  EXPECT_FALSE(f.cubic);
  EXPECT_TRUE(f.bridgeless);
  EXPECT_EQ(f.cycle_rank, 1u);
  EXPECT_TRUE(f.is_unicyclic);
  EXPECT_FALSE(f.is_tree);
}

TEST(StructureFlags, PetersenAndFig1) {
  const auto p = structure_flags(families::petersen());
  EXPECT_TRUE(p.cubic);
  EXPECT_TRUE(p.bridgeless);
  const auto f = structure_flags(families::fig1_graph());
  EXPECT_TRUE(f.cubic);
  EXPECT_FALSE(f.bridgeless);
}

TEST(StructureFlags, InvariantsHold) {
  for (const auto& g : sample_graphs()) {
    const auto f = structure_flags(g);
    const std::uint64_t all = (g.edge_count() == 0) ? 0 : (~0ull >> (64 - g.edge_count()));
    const std::size_t comps = oracle::component_count(g, all);
    EXPECT_EQ(f.cycle_rank + g.vertex_count(), g.edge_count() + comps);
    EXPECT_EQ(f.connected, comps <= 1);
    EXPECT_EQ(f.is_tree, f.connected && f.cycle_rank == 0);
    EXPECT_EQ(f.is_unicyclic, f.connected && f.cycle_rank == 1);
    bool cubic = true;
    std::size_t sum = 0;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      cubic = cubic && g.degree(v) == 3;
      sum += g.degree(v);
    }
    EXPECT_EQ(f.cubic, cubic);
    EXPECT_EQ(sum, 2 * g.edge_count());
  }
}

TEST(Subgraphs, SplitComponentsDropsIsolated) {
  const auto g = MultiGraph::build(6, {{0, 1}, {3, 4}, {4, 5}, {3, 5}});
  const auto parts = split_components(g);
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts[0].graph.edge_count(), 1u);
  EXPECT_EQ(parts[1].graph.vertex_count(), 3u);
  EXPECT_EQ(parts[1].parent_edge, (std::vector<EdgeId>{1, 2, 3}));
}

TEST(Subgraphs, RemoveVertexAndUnion) {
  const auto p = families::petersen();
  const auto q = remove_vertex(p, 0);
  EXPECT_EQ(q.vertex_count(), 9u);
  EXPECT_EQ(q.edge_count(), 12u);
  const auto u = disjoint_union(p, q);
  EXPECT_EQ(u.vertex_count(), 19u);
  EXPECT_EQ(u.edge_count(), 27u);
  EXPECT_EQ(connected_components(u).count, 2u);
}
