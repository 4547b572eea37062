#include <gtest/gtest.h>

#include <random>

#include "nulab/error.hpp"
#include "nulab/families.hpp"
#include "nulab/inequality.hpp"
#include "oracle.hpp"

using namespace nulab;
namespace fam = nulab::families;

namespace {

const RuleReport& report(const std::vector<RuleReport>& rs, const std::string& id,
                         std::optional<int> k = std::nullopt) {
  for (const auto& r : rs) {
    if (r.rule_id == id && r.k == k) return r;
  }
  throw std::runtime_error("no report " + id);
}

std::vector<MultiGraph> cubic_corpus() {
  return oracle::read_graph6_file(std::string(NULAB_TEST_DATA_DIR) + "/cubic_connected_n4-12.g6");
}

}  // namespace

TEST(Registry, StableIdsAndKinds) {
  const std::vector<std::string> ids = {
      "P2.1",   "T2.2.1", "T2.2.2", "T2.2.3",  "T2.2.4",  "T16/17", "L5/6",   "T20/21",
      "P2.6.1", "P2.6.2", "NO-R1",  "T44/45",  "C52/53",  "S11/12", "T-CF5/6", "T29/30",
      "T43/45", "L-n/8",  "L-n/24", "T35/36",  "T140/141", "C164/165", "T4.3", "T4.6",
      "C1.1",   "C1.2",   "CO4.7",  "XK"};
  std::vector<std::string> got;
  for (const auto& r : rule_registry()) got.push_back(r.id);
  EXPECT_EQ(got, ids);
  EXPECT_EQ(find_rule("C52/53")->kind, RuleKind::Conjecture);
  EXPECT_EQ(find_rule("S11/12")->kind, RuleKind::ExternalCited);
  EXPECT_EQ(find_rule("L-n/24")->kind, RuleKind::LemmaBound);
  EXPECT_EQ(find_rule("P2.6.2")->kind, RuleKind::Proposition);
  EXPECT_TRUE(find_rule("T4.3")->per_k);
  EXPECT_EQ(find_rule("nope"), nullptr);
  EXPECT_EQ(to_string(RuleKind::LemmaBound), "lemma-bound");
  EXPECT_EQ(to_string(RuleKind::ExternalCited), "external-cited");
  EXPECT_TRUE(is_proved_kind(RuleKind::ExternalCited));
  EXPECT_FALSE(is_proved_kind(RuleKind::Conjecture));
}

TEST(Profile, PetersenValues) {
  const auto p = compute_profile(fam::petersen());
  EXPECT_EQ(p.nu.at(1), 5u);
  EXPECT_EQ(p.nu.at(2), 9u);
  EXPECT_EQ(p.nu.at(3), 13u);
  EXPECT_EQ(p.nu.at(4), 15u);
  EXPECT_EQ(p.r3, 2u);
  EXPECT_EQ(p.o, 2u);
  EXPECT_TRUE(p.flags.has_perfect_matching);
  EXPECT_FALSE(p.flags.claw_free);
  EXPECT_TRUE(p.cycle_deficiency.empty());
}

TEST(Profile, InvariantsOnCorpus) {
  for (const auto& g : cubic_corpus()) {
    const auto p = compute_profile(g);
    for (int k = 1; k < 4; ++k) EXPECT_LE(p.nu.at(k), p.nu.at(k + 1));
    EXPECT_LE(p.nu.at(4), p.m);
    EXPECT_EQ(*p.r3, p.m - p.nu.at(3));
  }
}

TEST(Evaluate, Fig1SevenSixthsTight) {
  const auto rs = evaluate_all(compute_profile(fam::fig1_graph()));
  const auto& r = report(rs, "T2.2.2");
  EXPECT_TRUE(r.applicable);
  EXPECT_TRUE(r.tight);
  EXPECT_EQ(*r.lhs, Rational(42));
  EXPECT_EQ(*r.rhs, Rational(42));
}

TEST(Evaluate, PetersenResistanceTwoEquality) {
  const auto rs = evaluate_all(compute_profile(fam::petersen()));
  const auto& r = report(rs, "P2.6.1");
  EXPECT_TRUE(r.applicable);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(*r.lhs, Rational(36));
  EXPECT_EQ(*r.rhs, Rational(36));
  EXPECT_FALSE(report(rs, "P2.6.2").applicable);
  EXPECT_TRUE(report(rs, "NO-R1").holds);
  EXPECT_FALSE(report(rs, "NO-R1").tight);
}

TEST(Evaluate, TightFamilies) {
  EXPECT_TRUE(report(evaluate_all(compute_profile(fam::sylvester10())), "T16/17").tight);
  EXPECT_TRUE(report(evaluate_all(compute_profile(fam::fig3_graph12())), "T20/21").tight);
  const auto f5 = evaluate_all(compute_profile(fam::fig5_graph28()));
  EXPECT_TRUE(report(f5, "C52/53").tight);
  EXPECT_TRUE(report(f5, "P2.6.2").holds);
  const auto rm = evaluate_all(compute_profile(fam::remark_family(2, 4)));
  EXPECT_TRUE(report(rm, "T4.6", 2).tight);
  EXPECT_TRUE(report(rm, "T4.3", 2).tight);
}

TEST(Evaluate, TriangleReplacedPetersenAttainsThreeColorBound) {
  const auto p = compute_profile(fam::triangle_replace(fam::petersen()));
  const auto& r = report(evaluate_all(p), "T43/45");
  EXPECT_TRUE(r.applicable);
  EXPECT_TRUE(r.tight);
}

TEST(Evaluate, NotesAndGuards) {
  const auto p = compute_profile(fam::triangle_replace(fam::petersen()));
  const auto rs = evaluate_all(p);
  EXPECT_EQ(report(rs, "T29/30").note, "stated without proof");
  EXPECT_FALSE(report(rs, "T35/36").applicable);  // n = 30 < 48
  EXPECT_FALSE(report(rs, "CO4.7").applicable);
}

TEST(Evaluate, ReportShapeInvariants) {
  std::vector<MultiGraph> gs = cubic_corpus();
  std::mt19937_64 rng(7);
  for (int i = 0; i < 40; ++i) gs.push_back(fam::random_unicyclic(3 + i % 12, rng));
  for (const auto& g : gs) {
    const auto p = compute_profile(g);
    const auto a = evaluate_all(p);
    EXPECT_EQ(a, evaluate_all(p));
    for (const auto& r : a) {
      if (!r.applicable) {
        EXPECT_FALSE(r.lhs.has_value());
        EXPECT_FALSE(r.rhs.has_value());
        EXPECT_FALSE(r.holds);
        EXPECT_FALSE(r.tight);
      }
      if (r.tight) EXPECT_TRUE(r.holds);
      if (is_proved_kind(r.kind)) EXPECT_FALSE(r.violated()) << r.rule_id;
    }
  }
}

TEST(Evaluate, BridgelessCubicConsistency) {
  for (const auto& g : cubic_corpus()) {
    const auto p = compute_profile(g);
    if (!p.flags.structure.bridgeless) continue;
    const auto rs = evaluate_all(p);
    EXPECT_TRUE(report(rs, "NO-R1").holds);
    const auto& upper = report(rs, "T2.2.4");
    if (report(rs, "P2.6.1").applicable) EXPECT_TRUE(upper.tight);
    if (report(rs, "P2.6.2").applicable) EXPECT_FALSE(upper.tight);
  }
}

TEST(Evaluate, PerKReportsCoverAvailableK) {
  ProfileOptions o;
  o.max_k = 5;
  const auto p = compute_profile(fam::remark_family(3, 5), o);
  std::vector<int> ks;
  for (const auto& r : evaluate("T4.3", p)) ks.push_back(*r.k);
  EXPECT_EQ(ks, (std::vector<int>{2, 3, 4}));
  const auto xk = evaluate("XK", p);
  EXPECT_TRUE(std::any_of(xk.begin(), xk.end(), [](const RuleReport& r) { return r.applicable; }));
}

TEST(Evaluate, MissingField) {
  GraphProfile p = compute_profile(fam::petersen());
  p.nu.erase(2);
  try {
    evaluate_all(p);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::MissingProfileField);
    EXPECT_NE(std::string(e.what()).find("nu2"), std::string::npos);
  }
  EXPECT_THROW(evaluate("zzz", p), Error);
}

TEST(Evaluate, CorruptedProfileViolatesProvedRule) {
  GraphProfile p = compute_profile(fam::petersen());
  p.nu[2] -= 1;
  const auto rs = evaluate_all(p);
  EXPECT_TRUE(std::any_of(rs.begin(), rs.end(),
                          [](const RuleReport& r) { return r.violated() && is_proved_kind(r.kind); }));
}

TEST(Hunt, CubicCorpusHasNoCounterexample) {
  std::vector<MultiGraph> small;
  for (auto& g : cubic_corpus()) {
    if (g.vertex_count() <= 10) small.push_back(std::move(g));
  }
  HuntOptions o;
  o.rules = {"C52/53"};
  const auto r = hunt(small, o);
  EXPECT_TRUE(r.counterexamples.empty());
  EXPECT_EQ(r.examined, small.size());
  EXPECT_GT(r.applicable_counts.at("C52/53"), 0u);
}

TEST(Hunt, TreesAndFig5) {
  const auto trees = fam::generate({"random-tree", {{"count", 500}, {"n", 20}}}, 3);
  HuntOptions o;
  o.rules = {"C1.2"};
  o.threads = 4;
  const auto r = hunt(trees, o);
  EXPECT_TRUE(r.counterexamples.empty());
  EXPECT_EQ(r.examined, 500u);
  const std::vector<MultiGraph> f5 = {fam::fig5_graph28()};
  HuntOptions c;
  c.rules = {"C52/53"};
  const auto h = hunt(f5, c);
  EXPECT_TRUE(h.counterexamples.empty());
  EXPECT_EQ(h.tight_counts.at("C52/53"), 1u);
}

TEST(Hunt, DeterministicAcrossThreadCounts) {
  auto corpus = cubic_corpus();
  corpus.resize(60);
  HuntOptions a;
  a.rules = {"C1.1", "C1.2", "C52/53", "C164/165"};
  HuntOptions b = a;
  b.threads = 8;
  const auto ra = hunt(corpus, a), rb = hunt(corpus, b);
  EXPECT_EQ(ra.applicable_counts, rb.applicable_counts);
  EXPECT_EQ(ra.tight_counts, rb.tight_counts);
  EXPECT_EQ(ra.examined, rb.examined);
}

TEST(Hunt, RejectsNonConjectureAndKeepsGoingOnErrors) {
  const std::vector<MultiGraph> gs = {fam::petersen(), fam::complete_graph(4)};
  HuntOptions o;
  o.rules = {"T2.2.1"};
  EXPECT_THROW(hunt(gs, o), Error);
  o.rules = {"C52/53"};
  o.profile.max_k = 0;
  const auto r = hunt(gs, o);
  EXPECT_EQ(r.errors.size(), 2u);
  EXPECT_EQ(r.examined, 2u);
  o.profile.max_k = 4;
  o.budget = 1;
  EXPECT_EQ(hunt(gs, o).examined, 1u);
}
