#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "nulab/graph.hpp"
#include "nulab/rational.hpp"

namespace nulab {

/// StructureFlags plus the class predicates the rule guards read.
struct ProfileFlags {
  StructureFlags structure;
  bool simple = false;
  bool claw_free = false;
  bool bipartite = false;
  bool nearly_bipartite = false;
  bool has_perfect_matching = false;

  friend bool operator==(const ProfileFlags&, const ProfileFlags&) = default;
};

/// Computed quantities for one graph. Rules read only what is here.
struct GraphProfile {
  std::size_t n = 0;
  std::size_t m = 0;
  std::map<int, std::size_t> nu;  // k -> nu_k
  std::optional<std::size_t> r3;
  std::optional<std::size_t> o;   // fewest odd cycles over 2-factors
  ProfileFlags flags;
  /// k -> x_k for a connected unicyclic graph, where defined.
  std::map<int, std::size_t> cycle_deficiency;
  /// Values of k for which the graph sits in the saturated deficiency regime:
  /// connected unicyclic, every off-cycle vertex a leaf, every cycle vertex of
  /// degree at most k+1.
  std::set<int> deficiency_regime;

  friend bool operator==(const GraphProfile&, const GraphProfile&) = default;
};

enum class RuleKind { Theorem, Proposition, LemmaBound, Conjecture, ExternalCited };

std::string_view to_string(RuleKind kind) noexcept;

/// Theorem, proposition, lemma-bound and external-cited rules are all proved
/// statements; a violation of one of them signals a solver or corpus bug.
bool is_proved_kind(RuleKind kind) noexcept;

struct RuleReport {
  std::string rule_id;
  std::optional<int> k;  // set for the per-k rules
  RuleKind kind = RuleKind::Theorem;
  bool applicable = false;
  bool holds = false;
  bool tight = false;
  std::optional<Rational> lhs;
  std::optional<Rational> rhs;
  std::string relation;  // ">=", "<=", "=", "<", "!="
  std::string note;

  bool violated() const noexcept { return applicable && !holds; }

  friend bool operator==(const RuleReport&, const RuleReport&) = default;
};

}  // namespace nulab
