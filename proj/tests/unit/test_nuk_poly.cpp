#include <gtest/gtest.h>

#include <random>

#include "nulab/error.hpp"
#include "nulab/exhaustive.hpp"
#include "nulab/families.hpp"
#include "nulab/graph_io.hpp"
#include "nulab/nuk_exact.hpp"
#include "nulab/nuk_poly.hpp"
#include "oracle.hpp"

using namespace nulab;

namespace {

const SolverOptions kNoPoly{true, false, true, true};

std::vector<MultiGraph> read(const char* name) {
  return oracle::read_graph6_file(std::string(NULAB_TEST_DATA_DIR) + "/" + name);
}

// spider: centre 0 with three legs of length 2
MultiGraph spider() {
  return MultiGraph::build(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
}

}  // namespace

TEST(Tree, Examples) {
  EXPECT_EQ(poly::nu_k_tree(families::star_graph(5), 2), 2u);
  for (std::size_t n = 2; n <= 9; ++n) EXPECT_EQ(poly::nu_k_tree(families::path_graph(n), 2), n - 1);
  EXPECT_EQ(poly::nu_k_tree(spider(), 2), 5u);
  EXPECT_EQ(*oracle::nu_k(spider(), 2), 5u);
}

TEST(Tree, RejectsCycle) {
  try {
    poly::nu_k_tree(families::cycle_graph(3), 2);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotAForest);
  }
}

TEST(Tree, DegreeBoundedOptimumRespectsCaps) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    const auto t = families::random_tree(2 + i % 15, rng);
    std::vector<std::size_t> cap(t.vertex_count());
    for (auto& c : cap) c = rng() % 3;
    const auto opt = poly::max_degree_bounded_forest(t, cap);
    EXPECT_EQ(opt.value, opt.chosen_edges.size());
    std::vector<std::size_t> load(t.vertex_count(), 0);
    for (EdgeId e : opt.chosen_edges) {
      ++load[t.edge(e).u];
      ++load[t.edge(e).v];
    }
    for (VertexId v = 0; v < t.vertex_count(); ++v) EXPECT_LE(load[v], cap[v]);
    // brute force over edge subsets
    std::size_t best = 0;
    for (std::uint64_t mask = 0; mask < (1ull << t.edge_count()); ++mask) {
      std::vector<std::size_t> l(t.vertex_count(), 0);
      bool ok = true;
      for (EdgeId e = 0; e < t.edge_count() && ok; ++e) {
        if (!(mask >> e & 1)) continue;
        ok = ++l[t.edge(e).u] <= cap[t.edge(e).u] && ++l[t.edge(e).v] <= cap[t.edge(e).v];
      }
      if (ok) best = std::max<std::size_t>(best, __builtin_popcountll(mask));
    }
    EXPECT_EQ(opt.value, best);
  }
}

TEST(Unicyclic, Examples) {
  EXPECT_EQ(poly::nu_k_unicyclic(families::cycle_graph(5), 2), 4u);
  EXPECT_EQ(poly::nu_k_unicyclic(families::cycle_graph(6), 2), 6u);
  EXPECT_EQ(poly::nu_k_unicyclic(families::remark_family(3, 5), 3), 12u);
  try {
    poly::nu_k_unicyclic(families::complete_graph(4), 2);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotUnicyclic);
  }
}

TEST(Unicyclic, CycleIsOrdered) {
  const auto g = families::remark_family(2, 6);
  const auto c = poly::unique_cycle(g);
  ASSERT_EQ(c.size(), 6u);
  for (std::size_t i = 0; i < c.size(); ++i) {
    const auto& a = g.edge(c[i]);
    const auto& b = g.edge(c[(i + 1) % c.size()]);
    EXPECT_TRUE(a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v);
  }
  EXPECT_TRUE(poly::unique_cycle(families::path_graph(4)).empty());
}

TEST(Unicyclic, ExhaustiveOnAllSmallUnicyclicGraphs) {
  const auto corpus = read("unicyclic_n3-10.g6");
  ASSERT_EQ(corpus.size(), 1040u);
  for (const auto& g : corpus) {
    for (int k = 1; k <= 4; ++k) {
      const std::size_t ref = exhaustive::nu_k(g, k).value;
      EXPECT_EQ(poly::nu_k_unicyclic(g, k), ref) << emit_sparse6(g) << " k=" << k;
    }
  }
}

TEST(Tree, ExhaustiveOnAllSmallTrees) {
  for (const auto& g : read("trees_n2-10.g6")) {
    for (int k = 1; k <= 4; ++k) EXPECT_EQ(poly::nu_k_tree(g, k), exhaustive::nu_k(g, k).value);
  }
}

TEST(LowCycleRank, CertificatesAndRandomAgreement) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    const auto g = i % 2 ? families::random_tree(2 + rng() % 19, rng)
                         : families::random_unicyclic(3 + rng() % 16, rng);
    for (int k = 1; k <= 4; ++k) {
      const auto r = poly::nu_k_low_cycle_rank(g, k);
      EXPECT_TRUE(is_valid_coloring(g, r.certificate));
      EXPECT_EQ(r.certificate.colored_count(), r.value);
      EXPECT_EQ(r.value, nu_k(g, k, kNoPoly).value);
    }
  }
}

TEST(LowCycleRank, ForestOfMixedComponents) {
  const auto g = disjoint_union(families::cycle_graph(5), families::star_graph(4));
  EXPECT_EQ(poly::nu_k_low_cycle_rank(g, 2).value, 6u);
}

TEST(Deficiency, RemarkFamilyValues) {
  for (int k = 2; k <= 4; ++k) {
    const auto g = families::remark_family(k, 5);
    EXPECT_EQ(poly::cycle_deficiency(g, k - 1)->x, 5u);
    EXPECT_EQ(poly::cycle_deficiency(g, k)->x, 3u);
    EXPECT_TRUE(poly::in_deficiency_regime(g, k));
  }
}

TEST(Deficiency, SixCycle) {
  const auto c6 = families::cycle_graph(6);
  EXPECT_EQ(poly::cycle_deficiency(c6, 1)->x, 3u);
  EXPECT_EQ(poly::cycle_deficiency(c6, 2)->x, 0u);
}

TEST(Deficiency, MatchesOracleOnCorpus) {
  for (const auto& g : read("unicyclic_n3-10.g6")) {
    const auto cycle = poly::unique_cycle(g);
    for (int k = 1; k <= 4; ++k) {
      const auto ours = poly::cycle_deficiency(g, k);
      const auto ref = oracle::cycle_deficiency(g, k, cycle);
      ASSERT_EQ(ours.has_value(), ref.has_value()) << emit_sparse6(g) << " k=" << k;
      if (ours) {
        EXPECT_EQ(ours->x, *ref);
      }
      if (ours && k >= 2) {
        const auto prev = poly::cycle_deficiency(g, k - 1);
        if (prev && poly::in_deficiency_regime(g, k)) EXPECT_LE(2 * ours->x, prev->x + 1);
      }
    }
  }
}

TEST(Deficiency, RejectsNonUnicyclic) {
  try {
    poly::cycle_deficiency(families::path_graph(4), 2);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotUnicyclic);
  }
}

TEST(FloorInequality, LowCycleRankCorpora) {
  std::vector<MultiGraph> gs = read("unicyclic_n3-10.g6");
  for (auto& t : read("trees_n2-10.g6")) gs.push_back(std::move(t));
  for (const auto& g : gs) {
    std::vector<std::size_t> nu(6);
    for (int k = 1; k <= 5; ++k) nu[k] = poly::nu_k_low_cycle_rank(g, k).value;
    const bool bip = oracle::bipartite(g);
    for (int k = 2; k <= 4; ++k) {
      EXPECT_GE(2 * nu[k] + 1, nu[k - 1] + nu[k + 1]);
      if (bip) EXPECT_GE(2 * nu[k], nu[k - 1] + nu[k + 1]);
    }
  }
}

TEST(TreeBound, PerfectMatchingMaxDegreeThree) {
  std::size_t checked = 0;
  for (const auto& t : read("trees_n2-10.g6")) {
    if (t.max_degree() != 3 || oracle::perfect_matchings(t).empty()) continue;
    EXPECT_GE(4 * poly::nu_k_tree(t, 2), 3 * t.vertex_count() - 2);
    ++checked;
  }
  EXPECT_GT(checked, 3u);
}
