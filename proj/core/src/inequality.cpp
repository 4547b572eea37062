#include "nulab/inequality.hpp"

#include <algorithm>
#include <mutex>
#include <string>

#include "nulab/error.hpp"
#include "nulab/graph_io.hpp"
#include "nulab/matching.hpp"
#include "nulab/nuk_poly.hpp"
#include "nulab/parallel.hpp"
#include "nulab/structure.hpp"

namespace nulab {

std::string_view to_string(RuleKind kind) noexcept {
  switch (kind) {
    case RuleKind::Theorem:
      return "theorem";
    case RuleKind::Proposition:
      return "proposition";
    case RuleKind::LemmaBound:
      return "lemma-bound";
    case RuleKind::Conjecture:
      return "conjecture";
    case RuleKind::ExternalCited:
      return "external-cited";
  }
  return "?";
}

bool is_proved_kind(RuleKind kind) noexcept { return kind != RuleKind::Conjecture; }

GraphProfile compute_profile(const MultiGraph& g, const ProfileOptions& options) {
  if (options.max_k < 1) throw Error(ErrorKind::BadParameter, "max_k must be at least 1");
  GraphProfile p;
  p.n = g.vertex_count();
  p.m = g.edge_count();
  for (int k = 1; k <= options.max_k; ++k) p.nu[k] = nu_k(g, k, options.solver).value;

  p.flags.structure = structure_flags(g);
  p.flags.simple = g.is_simple();
  p.flags.claw_free = is_claw_free(g);
  p.flags.bipartite = is_bipartite(g);
  p.flags.nearly_bipartite = is_nearly_bipartite(g);
  p.flags.has_perfect_matching = p.n % 2 == 0 && max_matching(g).size() * 2 == p.n;

  const auto& s = p.flags.structure;
  if (s.cubic) {
    auto it = p.nu.find(3);
    p.r3 = p.m - (it != p.nu.end() ? it->second : nu_k(g, 3, options.solver).value);
    if (options.odd_cycles && p.flags.has_perfect_matching) p.o = min_odd_two_factor(g);
  }
  if (s.is_unicyclic) {
    for (int k = 1; k <= options.max_k; ++k) {
      if (auto x = poly::cycle_deficiency(g, k)) p.cycle_deficiency[k] = x->x;
      if (poly::in_deficiency_regime(g, k)) p.deficiency_regime.insert(k);
    }
  }
  return p;
}

namespace {

using Eval = std::function<RuleReport(const GraphProfile&, int)>;

struct Rule {
  RuleInfo info;
  Eval eval;
};

Rational nu(const GraphProfile& p, int k) {
  auto it = p.nu.find(k);
  if (it == p.nu.end()) {
    throw Error(ErrorKind::MissingProfileField, "nu" + std::to_string(k));
  }
  return Rational(static_cast<std::int64_t>(it->second));
}

Rational num(std::size_t v) { return Rational(static_cast<std::int64_t>(v)); }

RuleReport verdict(RuleReport r, Rational lhs, Rational rhs) {
  bool holds = false, tight = false;
  if (r.relation == ">=") {
    holds = lhs >= rhs;
    tight = lhs == rhs;
  } else if (r.relation == "<=") {
    holds = lhs <= rhs;
    tight = lhs == rhs;
  } else if (r.relation == "=") {
    holds = tight = lhs == rhs;
  } else if (r.relation == "<") {
    holds = lhs < rhs;
  } else if (r.relation == "!=") {
    holds = lhs != rhs;
  }
  r.applicable = true;
  r.holds = holds;
  r.tight = tight;
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  return r;
}

RuleReport blank(const RuleInfo& info, int k, const char* relation) {
  RuleReport r;
  r.rule_id = info.id;
  r.kind = info.kind;
  if (info.per_k) r.k = k;
  r.relation = relation;
  return r;
}

bool cubic(const GraphProfile& p) { return p.flags.structure.cubic; }
bool bridgeless_cubic(const GraphProfile& p) { return cubic(p) && p.flags.structure.bridgeless; }
bool claw_free_bridgeless_cubic(const GraphProfile& p) {
  return bridgeless_cubic(p) && p.flags.claw_free;
}

std::size_t r3_of(const GraphProfile& p) {
  if (p.r3) return *p.r3;
  auto it = p.nu.find(3);
  if (it == p.nu.end()) throw Error(ErrorKind::MissingProfileField, "nu3");
  return p.m - it->second;
}

// lhs relation rhs, guarded.
Rule simple_rule(std::string id, RuleKind kind, std::string statement, const char* relation,
                 std::function<bool(const GraphProfile&)> guard,
                 std::function<std::pair<Rational, Rational>(const GraphProfile&)> sides,
                 std::string note = {}) {
  RuleInfo info{std::move(id), kind, false, std::move(statement)};
  Eval eval = [info, relation, guard, sides, note](const GraphProfile& p, int) {
    RuleReport r = blank(info, 0, relation);
    r.note = note;
    if (!guard(p)) return r;
    auto [lhs, rhs] = sides(p);
    return verdict(std::move(r), std::move(lhs), std::move(rhs));
  };
  return {std::move(info), std::move(eval)};
}

// nu_2 >= c * (n + 2 nu_3) / 4.
Rule coefficient_rule(std::string id, RuleKind kind, std::string statement, std::int64_t p,
                      std::int64_t q, std::function<bool(const GraphProfile&)> guard,
                      std::string note = {}) {
  return simple_rule(
      std::move(id), kind, std::move(statement), ">=", std::move(guard),
      [p, q](const GraphProfile& g) {
        const Rational avg = (num(g.n) + Rational(2) * nu(g, 3)) / Rational(4);
        return std::make_pair(nu(g, 2), Rational(p, q) * avg);
      },
      std::move(note));
}

Rule per_k_rule(std::string id, RuleKind kind, std::string statement, bool floor_form,
                std::function<bool(const GraphProfile&)> guard) {
  RuleInfo info{std::move(id), kind, true, std::move(statement)};
  Eval eval = [info, floor_form, guard](const GraphProfile& p, int k) {
    RuleReport r = blank(info, k, ">=");
    if (!guard(p)) return r;
    const Rational sum = nu(p, k - 1) + nu(p, k + 1);
    if (floor_form) return verdict(std::move(r), nu(p, k), Rational((sum / Rational(2)).floor()));
    return verdict(std::move(r), Rational(2) * nu(p, k), sum);
  };
  return {std::move(info), std::move(eval)};
}

bool at_most_one_cycle(const GraphProfile& p) { return p.flags.structure.cycle_rank <= 1; }

std::vector<Rule> build_rules() {
  using K = RuleKind;
  std::vector<Rule> rules;
  auto any = [](const GraphProfile&) { return true; };

  rules.push_back(simple_rule("P2.1", K::Proposition, "any graph: 3 nu2 >= 2 nu3", ">=", any,
                              [](const GraphProfile& p) {
                                return std::make_pair(Rational(3) * nu(p, 2), Rational(2) * nu(p, 3));
                              }));
  rules.push_back(simple_rule("T2.2.1", K::Theorem, "cubic: 5 nu2 >= 4 n", ">=", cubic,
                              [](const GraphProfile& p) {
                                return std::make_pair(Rational(5) * nu(p, 2), Rational(4) * num(p.n));
                              }));
  rules.push_back(simple_rule("T2.2.2", K::Theorem, "cubic: 6 nu3 >= 7 n", ">=", cubic,
                              [](const GraphProfile& p) {
                                return std::make_pair(Rational(6) * nu(p, 3), Rational(7) * num(p.n));
                              }));
  rules.push_back(simple_rule("T2.2.3", K::Theorem, "cubic: nu2 + nu3 >= 2 n", ">=", cubic,
                              [](const GraphProfile& p) {
                                return std::make_pair(nu(p, 2) + nu(p, 3), Rational(2) * num(p.n));
                              }));
  rules.push_back(simple_rule("T2.2.4", K::Theorem, "cubic: 4 nu2 <= n + 2 nu3", "<=", cubic,
                              [](const GraphProfile& p) {
                                return std::make_pair(Rational(4) * nu(p, 2),
                                                      num(p.n) + Rational(2) * nu(p, 3));
                              }));
  rules.push_back(coefficient_rule("T16/17", K::Theorem, "cubic: nu2 >= 16/17 (n + 2 nu3)/4", 16,
                                   17, cubic));
  rules.push_back(simple_rule("L5/6", K::LemmaBound, "cubic with a perfect matching: 6 nu2 >= 5 n",
                              ">=",
                              [](const GraphProfile& p) {
                                return cubic(p) && p.flags.has_perfect_matching;
                              },
                              [](const GraphProfile& p) {
                                return std::make_pair(Rational(6) * nu(p, 2), Rational(5) * num(p.n));
                              }));
  rules.push_back(coefficient_rule(
      "T20/21", K::Theorem, "cubic with a perfect matching: nu2 >= 20/21 (n + 2 nu3)/4", 20, 21,
      [](const GraphProfile& p) { return cubic(p) && p.flags.has_perfect_matching; }));
  rules.push_back(simple_rule("P2.6.1", K::Proposition,
                              "bridgeless cubic, r3 <= 2: 4 nu2 = n + 2 nu3", "=",
                              [](const GraphProfile& p) { return bridgeless_cubic(p) && r3_of(p) <= 2; },
                              [](const GraphProfile& p) {
                                return std::make_pair(Rational(4) * nu(p, 2),
                                                      num(p.n) + Rational(2) * nu(p, 3));
                              }));
  rules.push_back(simple_rule("P2.6.2", K::Proposition,
                              "bridgeless cubic, r3 odd: 4 nu2 < n + 2 nu3", "<",
                              [](const GraphProfile& p) {
                                return bridgeless_cubic(p) && r3_of(p) % 2 == 1;
                              },
                              [](const GraphProfile& p) {
                                return std::make_pair(Rational(4) * nu(p, 2),
                                                      num(p.n) + Rational(2) * nu(p, 3));
                              }));
  rules.push_back(simple_rule("NO-R1", K::ExternalCited, "bridgeless cubic: r3 != 1", "!=",
                              bridgeless_cubic,
                              [](const GraphProfile& p) { return std::make_pair(num(r3_of(p)), Rational(1)); }));
  rules.push_back(coefficient_rule("T44/45", K::Theorem,
                                   "bridgeless cubic: nu2 >= 44/45 (n + 2 nu3)/4", 44, 45,
                                   bridgeless_cubic));
  rules.push_back(coefficient_rule("C52/53", K::Conjecture,
                                   "bridgeless cubic: nu2 >= 52/53 (n + 2 nu3)/4", 52, 53,
                                   bridgeless_cubic));
  rules.push_back(simple_rule("S11/12", K::ExternalCited, "bridgeless cubic, n >= 12: 12 nu2 >= 11 n",
                              ">=",
                              [](const GraphProfile& p) { return bridgeless_cubic(p) && p.n >= 12; },
                              [](const GraphProfile& p) {
                                return std::make_pair(Rational(12) * nu(p, 2), Rational(11) * num(p.n));
                              }));
  rules.push_back(simple_rule("T-CF5/6", K::Theorem, "claw-free cubic: 6 nu2 >= 5 n", ">=",
                              [](const GraphProfile& p) { return cubic(p) && p.flags.claw_free; },
                              [](const GraphProfile& p) {
                                return std::make_pair(Rational(6) * nu(p, 2), Rational(5) * num(p.n));
                              }));
  rules.push_back(simple_rule("T29/30", K::Theorem, "claw-free bridgeless cubic: 30 nu2 >= 29 n",
                              ">=", claw_free_bridgeless_cubic,
                              [](const GraphProfile& p) {
                                return std::make_pair(Rational(30) * nu(p, 2), Rational(29) * num(p.n));
                              },
                              "stated without proof"));
  rules.push_back(simple_rule("T43/45", K::Theorem, "claw-free bridgeless cubic: 45 nu3 >= 43 m",
                              ">=", claw_free_bridgeless_cubic,
                              [](const GraphProfile& p) {
                                return std::make_pair(Rational(45) * nu(p, 3), Rational(43) * num(p.m));
                              }));
  rules.push_back(simple_rule("L-n/8", K::ExternalCited, "bridgeless cubic, n >= 16: 8 r3 <= n", "<=",
                              [](const GraphProfile& p) { return bridgeless_cubic(p) && p.n >= 16; },
                              [](const GraphProfile& p) {
                                return std::make_pair(Rational(8) * num(r3_of(p)), num(p.n));
                              }));
  rules.push_back(simple_rule("L-n/24", K::LemmaBound,
                              "claw-free bridgeless cubic, n >= 48: 24 r3 <= n", "<=",
                              [](const GraphProfile& p) { return claw_free_bridgeless_cubic(p) && p.n >= 48; },
                              [](const GraphProfile& p) {
                                return std::make_pair(Rational(24) * num(r3_of(p)), num(p.n));
                              }));
  rules.push_back(simple_rule("T35/36", K::Theorem,
                              "claw-free bridgeless cubic, n >= 48: 36 nu2 >= 35 n", ">=",
                              [](const GraphProfile& p) { return claw_free_bridgeless_cubic(p) && p.n >= 48; },
                              [](const GraphProfile& p) {
                                return std::make_pair(Rational(36) * nu(p, 2), Rational(35) * num(p.n));
                              }));
  rules.push_back(coefficient_rule(
      "T140/141", K::Theorem, "claw-free bridgeless cubic, n >= 48: nu2 >= 140/141 (n + 2 nu3)/4",
      140, 141, [](const GraphProfile& p) { return claw_free_bridgeless_cubic(p) && p.n >= 48; }));
  rules.push_back(coefficient_rule("C164/165", K::Conjecture,
                                   "claw-free bridgeless cubic: nu2 >= 164/165 (n + 2 nu3)/4", 164,
                                   165, claw_free_bridgeless_cubic));
  rules.push_back(per_k_rule("T4.3", K::Theorem,
                             "at most one cycle, k >= 2: nu_k >= floor((nu_{k-1} + nu_{k+1})/2)", true,
                             at_most_one_cycle));
  rules.push_back(per_k_rule("T4.6", K::Theorem,
                             "bipartite, at most one cycle, k >= 2: 2 nu_k >= nu_{k-1} + nu_{k+1}",
                             false, [](const GraphProfile& p) {
                               return p.flags.bipartite && at_most_one_cycle(p);
                             }));
  rules.push_back(per_k_rule("C1.1", K::Conjecture,
                             "nearly bipartite, k >= 2: nu_k >= floor((nu_{k-1} + nu_{k+1})/2)", true,
                             [](const GraphProfile& p) { return p.flags.nearly_bipartite; }));
  rules.push_back(per_k_rule("C1.2", K::Conjecture,
                             "bipartite, k >= 2: 2 nu_k >= nu_{k-1} + nu_{k+1}", false,
                             [](const GraphProfile& p) { return p.flags.bipartite; }));
  rules.push_back(simple_rule("CO4.7", K::Theorem,
                              "tree with a perfect matching and max degree 3: 4 nu2 >= 3 n - 2", ">=",
                              [](const GraphProfile& p) {
                                return p.flags.structure.is_tree && p.flags.has_perfect_matching &&
                                       p.flags.structure.max_degree == 3;
                              },
                              [](const GraphProfile& p) {
                                return std::make_pair(Rational(4) * nu(p, 2),
                                                      Rational(3) * num(p.n) - Rational(2));
                              }));
  {
    RuleInfo info{"XK", K::LemmaBound, true,
                  "unicyclic, off-cycle vertices leaves, cycle degrees <= k+1: x_k <= ceil(x_{k-1}/2)"};
    Eval eval = [info](const GraphProfile& p, int k) {
      RuleReport r = blank(info, k, "<=");
      const auto xk = p.cycle_deficiency.find(k);
      const auto xk1 = p.cycle_deficiency.find(k - 1);
      if (!p.flags.structure.is_unicyclic || !p.deficiency_regime.count(k) ||
          xk == p.cycle_deficiency.end() || xk1 == p.cycle_deficiency.end()) {
        return r;
      }
      return verdict(std::move(r), num(xk->second), Rational((num(xk1->second) / Rational(2)).ceil()));
    };
    rules.push_back({std::move(info), std::move(eval)});
  }
  return rules;
}

const std::vector<Rule>& rules() {
  static const std::vector<Rule> table = build_rules();
  return table;
}

std::vector<int> per_k_values(const GraphProfile& p) {
  std::vector<int> ks;
  for (const auto& [k, _] : p.nu) {
    if (k >= 2 && p.nu.count(k - 1) && p.nu.count(k + 1)) ks.push_back(k);
  }
  return ks;
}

void append(const Rule& rule, const GraphProfile& p, std::vector<RuleReport>& out) {
  if (!rule.info.per_k) {
    out.push_back(rule.eval(p, 0));
    return;
  }
  for (int k : per_k_values(p)) out.push_back(rule.eval(p, k));
}

}  // namespace

const std::vector<RuleInfo>& rule_registry() {
  static const std::vector<RuleInfo> infos = [] {
    std::vector<RuleInfo> v;
    for (const Rule& r : rules()) v.push_back(r.info);
    return v;
  }();
  return infos;
}

const RuleInfo* find_rule(std::string_view id) {
  for (const RuleInfo& r : rule_registry()) {
    if (r.id == id) return &r;
  }
  return nullptr;
}

std::vector<RuleReport> evaluate_all(const GraphProfile& profile) {
  std::vector<RuleReport> out;
  for (const Rule& r : rules()) append(r, profile, out);
  return out;
}

std::vector<RuleReport> evaluate(std::string_view rule_id, const GraphProfile& profile) {
  for (const Rule& r : rules()) {
    if (r.info.id == rule_id) {
      std::vector<RuleReport> out;
      append(r, profile, out);
      return out;
    }
  }
  throw Error(ErrorKind::BadParameter, "unknown rule '" + std::string(rule_id) + "'");
}

HuntResult hunt(std::span<const MultiGraph> corpus, const HuntOptions& options) {
  for (const std::string& id : options.rules) {
    const RuleInfo* info = find_rule(id);
    if (!info) throw Error(ErrorKind::BadParameter, "unknown rule '" + id + "'");
    if (info->kind != RuleKind::Conjecture) {
      throw Error(ErrorKind::BadParameter, "rule '" + id + "' is not a conjecture");
    }
  }

  struct Outcome {
    GraphProfile profile;
    std::vector<RuleReport> reports;
    std::optional<std::string> error;
  };

  HuntResult result;
  const std::size_t total = std::min(corpus.size(), options.budget);
  const std::size_t chunk = std::max<std::size_t>(1, options.threads) * 8;
  for (std::size_t begin = 0; begin < total; begin += chunk) {
    const std::size_t end = std::min(total, begin + chunk);
    std::vector<Outcome> outcomes(end - begin);
    parallel_for(end - begin, options.threads, [&](std::size_t i) {
      Outcome& o = outcomes[i];
      try {
        o.profile = compute_profile(corpus[begin + i], options.profile);
        for (const std::string& id : options.rules) {
          for (RuleReport& r : evaluate(id, o.profile)) o.reports.push_back(std::move(r));
        }
      } catch (const std::exception& ex) {
        o.error = ex.what();
      }
    });
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
      Outcome& o = outcomes[i];
      ++result.examined;
      if (o.error) {
        result.errors.push_back({begin + i, *o.error});
        continue;
      }
      bool found = false;
      for (RuleReport& r : o.reports) {
        if (!r.applicable) continue;
        ++result.applicable_counts[r.rule_id];
        if (r.tight) ++result.tight_counts[r.rule_id];
        if (r.violated()) {
          result.counterexamples.push_back({begin + i, emit_sparse6(corpus[begin + i]), o.profile, r});
          found = true;
        }
      }
      if (found && options.stop_at_first) return result;
    }
  }
  return result;
}

}  // namespace nulab
