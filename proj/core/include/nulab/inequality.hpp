#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nulab/graph.hpp"
#include "nulab/nuk_exact.hpp"
#include "nulab/profile.hpp"

namespace nulab {

struct ProfileOptions {
  /// nu_1..nu_max_k are computed. Per-k rules need nu_{k+1}.
  int max_k = 4;
  /// o(G) for cubic graphs with a perfect matching.
  bool odd_cycles = true;
  SolverOptions solver;
};

GraphProfile compute_profile(const MultiGraph& g, const ProfileOptions& options = {});

struct RuleInfo {
  std::string id;
  RuleKind kind = RuleKind::Theorem;
  bool per_k = false;
  std::string statement;  // human-readable guard and relation
};

/// Every registered rule in report order.
const std::vector<RuleInfo>& rule_registry();

/// nullptr for an unknown id.
const RuleInfo* find_rule(std::string_view id);

/// One report per rule, per-k rules once for each k with nu_{k-1}, nu_k and
/// nu_{k+1} present (XK once for each k with x_{k-1} and x_k). Throws
/// MissingProfileField when an applicable fixed rule lacks a nu value.
std::vector<RuleReport> evaluate_all(const GraphProfile& profile);

/// Reports of a single rule id (several for a per-k rule). Throws
/// BadParameter for an unknown id.
std::vector<RuleReport> evaluate(std::string_view rule_id, const GraphProfile& profile);

struct HuntOptions {
  std::vector<std::string> rules;  // conjecture ids
  /// Graphs examined at most.
  std::size_t budget = static_cast<std::size_t>(-1);
  bool stop_at_first = false;
  ProfileOptions profile;
  /// Worker threads for profiling; results merge in corpus order.
  unsigned threads = 1;
};

struct Counterexample {
  std::size_t index = 0;  // position in the corpus
  std::string sparse6;
  GraphProfile profile;
  RuleReport report;
};

struct HuntError {
  std::size_t index = 0;
  std::string message;
};

struct HuntResult {
  std::vector<Counterexample> counterexamples;
  std::size_t examined = 0;
  std::map<std::string, std::size_t> applicable_counts;
  std::map<std::string, std::size_t> tight_counts;
  std::vector<HuntError> errors;
};

/// Profiles each corpus graph and checks the selected conjectures. A solver
/// failure on one graph is recorded in `errors` and the hunt continues.
/// Throws BadParameter if a rule is unknown or not a conjecture.
HuntResult hunt(std::span<const MultiGraph> corpus, const HuntOptions& options);

}  // namespace nulab
