#include <gtest/gtest.h>

#include "nulab/error.hpp"
#include "nulab/families.hpp"
#include "nulab/matching.hpp"
#include "nulab/nuk_exact.hpp"
#include "nulab/structure.hpp"
#include "oracle.hpp"

using namespace nulab;

namespace {

std::vector<MultiGraph> cubic_corpus() {
  return oracle::read_graph6_file(std::string(NULAB_TEST_DATA_DIR) + "/cubic_connected_n4-12.g6");
}

}  // namespace

TEST(MaxMatching, SmallCases) {
  EXPECT_EQ(max_matching(families::cycle_graph(5)).size(), 2u);
  EXPECT_EQ(max_matching(families::star_graph(3)).size(), 1u);
  EXPECT_EQ(max_matching(families::petersen()).size(), 5u);
}

TEST(MaxMatching, IsAMatchingAndOptimal) {
  for (std::uint64_t s = 0; s < 300; ++s) {
    const auto g = oracle::random_multigraph(s, 2 + s % 9, s % 13);
    const auto m = max_matching(g);
    EXPECT_TRUE(is_matching(g, m.edge_ids));
    EXPECT_TRUE(std::is_sorted(m.edge_ids.begin(), m.edge_ids.end()));
    EXPECT_EQ(m.size(), oracle::matching_number(g)) << "seed " << s;
    EXPECT_LE(m.size() * 2, g.vertex_count());
  }
}

TEST(MaxMatching, AllowedMaskRestricts) {
  const auto g = families::path_graph(4);
  EXPECT_EQ(max_matching(g, std::vector<bool>{false, true, false}).size(), 1u);
  EXPECT_EQ(max_matching(g, std::vector<bool>{true, true, true}).size(), 2u);
}

TEST(PerfectMatchings, Counts) {
  EXPECT_EQ(enumerate_perfect_matchings(families::cycle_graph(4), 100).size(), 2u);
  EXPECT_TRUE(enumerate_perfect_matchings(families::cycle_graph(5), 100).empty());
  EXPECT_EQ(enumerate_perfect_matchings(families::petersen(), 100).size(), 6u);
  EXPECT_EQ(enumerate_perfect_matchings(families::petersen(), 4).size(), 4u);
}

TEST(PerfectMatchings, MatchOracleInOrder) {
  std::vector<MultiGraph> gs = {families::fig1_graph(), families::sylvester10(),
                                families::fig3_graph12(), families::petersen(),
                                families::complete_graph(6), families::complete_bipartite(3, 3)};
  for (const auto& g : cubic_corpus()) {
    if (g.vertex_count() <= 10) gs.push_back(g);
  }
  for (const auto& g : gs) {
    const auto ours = enumerate_perfect_matchings(g, 1'000'000);
    const auto ref = oracle::perfect_matchings(g);
    ASSERT_EQ(ours.size(), ref.size());
    for (std::size_t i = 0; i < ref.size(); ++i) EXPECT_EQ(ours[i].edge_ids, ref[i]);
  }
}

TEST(TwoFactor, K4AndPetersen) {
  const auto k4 = families::complete_graph(4);
  const auto pm = enumerate_perfect_matchings(k4, 1);
  const auto tf = two_factor_from_pm(k4, pm[0]);
  EXPECT_EQ(tf.cycles.size(), 1u);
  EXPECT_EQ(tf.odd_cycle_count, 0u);
  const auto p = families::petersen();
  for (const auto& m : enumerate_perfect_matchings(p, 100)) {
    const auto t = two_factor_from_pm(p, m);
    EXPECT_EQ(t.cycles.size(), 2u);
    EXPECT_EQ(t.odd_cycle_count, 2u);
  }
}

TEST(TwoFactor, Fig1TwoTriangles) {
  const auto g = families::fig1_graph();
  const auto pms = enumerate_perfect_matchings(g, 100);
  bool found = false;
  for (const auto& m : pms) {
    const auto t = two_factor_from_pm(g, m);
    // every perfect matching of fig1 uses the bridge
    EXPECT_TRUE(std::binary_search(m.edge_ids.begin(), m.edge_ids.end(), EdgeId{3}));
    if (t.cycles.size() == 2 && t.odd_cycle_count == 2) found = true;
  }
  EXPECT_TRUE(found);
}

TEST(TwoFactor, Errors) {
  const auto c4 = families::cycle_graph(4);
  EXPECT_THROW(two_factor_from_pm(c4, Matching{{0, 2}}), Error);
  const auto k4 = families::complete_graph(4);
  try {
    two_factor_from_pm(k4, Matching{{0}});
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotPerfect);
  }
}

TEST(OddTwoFactor, KnownValues) {
  EXPECT_EQ(min_odd_two_factor(families::complete_graph(4)), 0u);
  EXPECT_EQ(min_odd_two_factor(families::petersen()), 2u);
  EXPECT_EQ(min_odd_two_factor(families::complete_bipartite(3, 3)), 0u);
  // sylvester10 has a bridge whose removal leaves odd sides: no perfect matching
  try {
    min_odd_two_factor(families::sylvester10());
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NoTwoFactor);
  }
}

TEST(OddTwoFactor, OracleAndBoundsOnCubicCorpus) {
  for (const auto& g : cubic_corpus()) {
    const auto ref = oracle::min_odd_two_factor(g);
    if (!ref) continue;
    const std::size_t o = min_odd_two_factor(g);
    EXPECT_EQ(o, *ref);
    EXPECT_LE(3 * o, g.vertex_count());
    // nu_2 >= n/2 + (n - o)/2
    EXPECT_GE(2 * nu_k(g, 2).value, g.vertex_count() + (g.vertex_count() - o));
  }
}

TEST(OddTwoFactor, ClawFreeEvenOrderHasPerfectMatching) {
  std::vector<MultiGraph> gs = cubic_corpus();
  gs.push_back(families::triangle_replace(families::petersen()));
  gs.push_back(families::ring_of_diamonds(3));
  std::size_t checked = 0;
  for (const auto& g : gs) {
    if (!structure_flags(g).connected || g.vertex_count() % 2 != 0 || !is_claw_free(g)) continue;
    EXPECT_FALSE(enumerate_perfect_matchings(g, 1).empty());
    ++checked;
  }
  EXPECT_GT(checked, 5u);
}
