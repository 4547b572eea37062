#include "nulab/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "nulab/error.hpp"
#include "nulab/exhaustive.hpp"
#include "nulab/families.hpp"
#include "nulab/graph_io.hpp"
#include "nulab/inequality.hpp"
#include "nulab/nuk_exact.hpp"
#include "nulab/parallel.hpp"
#include "nulab/structure.hpp"

namespace nulab::cli {

namespace {

using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

struct InputLine {
  std::size_t line_no = 0;
  std::string text;
};

struct Input {
  std::string source;
  std::vector<InputLine> lines;
};

class IoFailure : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

Input read_input(const std::string& path, std::istream& in) {
  Input input;
  std::ifstream file;
  std::istream* src = &in;
  if (path.empty() || path == "-") {
    input.source = "stdin";
  } else {
    file.open(path);
    if (!file) throw IoFailure("cannot open '" + path + "'");
    input.source = path;
    src = &file;
  }
  std::string line;
  std::size_t no = 0;
  while (std::getline(*src, line)) {
    ++no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    input.lines.push_back({no, line});
  }
  if (src->bad()) throw IoFailure("read error on " + input.source);
  return input;
}

unsigned thread_count() {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("NU_LAB_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v >= 1) n = std::min<unsigned>(n, static_cast<unsigned>(v));
    } catch (const std::exception&) {
    }
  }
  return n;
}

std::string graph_id(const Input& input, const InputLine& line) {
  return input.source + ":" + std::to_string(line.line_no);
}

std::int64_t elapsed_ms(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

std::string error_line(const std::string& id, std::size_t line_no, const std::exception& ex) {
  json j;
  j["graph_id"] = id;
  j["line"] = line_no;
  j["error"] = ex.what();
  return j.dump();
}

void write_line(std::ostream& out, const std::string& line) {
  out << line << '\n';
  if (!out) throw IoFailure("write error on output");
}

// Runs fn over every line, a chunk at a time, and writes the results in input
// order.
template <class Fn>
void for_each_line(const Input& input, std::ostream& out, Fn fn) {
  const unsigned threads = thread_count();
  const std::size_t chunk = std::size_t{threads} * 4;
  for (std::size_t begin = 0; begin < input.lines.size(); begin += chunk) {
    const std::size_t end = std::min(input.lines.size(), begin + chunk);
    std::vector<std::string> results(end - begin);
    parallel_for(end - begin, threads, [&](std::size_t i) {
      const InputLine& line = input.lines[begin + i];
      try {
        results[i] = fn(line);
      } catch (const std::exception& ex) {
        results[i] = error_line(graph_id(input, line), line.line_no, ex);
      }
    });
    for (const std::string& r : results) write_line(out, r);
  }
}

json certificate_json(const ColorClasses& cc) {
  json a = json::array();
  for (std::uint8_t c : cc.color) a.push_back(c);
  return a;
}

std::string nu_line(const std::string& id, const ParsedGraph& pg, int k, const NuResult& r,
                    const char* solver, bool with_certificate, std::int64_t ms) {
  json j;
  j["graph_id"] = id;
  j["format"] = std::string(to_string(pg.format));
  j["solver"] = solver;
  j["n"] = pg.graph.vertex_count();
  j["m"] = pg.graph.edge_count();
  j["k"] = k;
  j["nu"] = std::to_string(r.value);
  j["certificate"] = with_certificate ? certificate_json(r.certificate) : json(nullptr);
  j["node_count"] = r.node_count;
  j["runtime_ms"] = ms;
  return j.dump();
}

int worst_exit(const std::vector<RuleReport>& reports) {
  int code = kOk;
  for (const RuleReport& r : reports) {
    if (!r.violated()) continue;
    code = std::max(code, is_proved_kind(r.kind) ? int{kProvedRuleViolation}
                                                 : int{kConjectureCounterexample});
  }
  return code;
}

std::vector<RuleReport> run_rules(const std::vector<std::string>& rules, const GraphProfile& p) {
  if (rules.empty()) return evaluate_all(p);
  std::vector<RuleReport> out;
  for (const std::string& id : rules) {
    for (RuleReport& r : evaluate(id, p)) out.push_back(std::move(r));
  }
  return out;
}

GraphProfile profile_from_line(const std::string& text) {
  const json j = json::parse(text);
  if (j.is_object() && j.contains("profile")) return profile_from_json(j["profile"].dump());
  return profile_from_json(text);
}

// --- subcommands ---------------------------------------------------------

struct GenArgs {
  std::string family;
  std::optional<std::int64_t> k, l, r, n, m, count, e, c;
  std::uint64_t seed = 0;
  std::string output;
  bool list = false;
};

int run_gen(const GenArgs& a, std::ostream& out) {
  if (a.list) {
    for (const std::string& name : families::family_names()) write_line(out, name);
    return kOk;
  }
  families::FamilySpec spec;
  spec.name = a.family;
  auto put = [&](const char* key, const std::optional<std::int64_t>& v) {
    if (v) spec.params[key] = *v;
  };
  put("k", a.k);
  put("l", a.l);
  put("r", a.r);
  put("n", a.n);
  put("m", a.m);
  put("count", a.count);
  put("e", a.e);
  put("c", a.c);
  const std::vector<MultiGraph> graphs = families::generate(spec, a.seed);
  std::ofstream file;
  std::ostream* sink = &out;
  if (!a.output.empty() && a.output != "-") {
    file.open(a.output);
    if (!file) throw IoFailure("cannot open '" + a.output + "' for writing");
    sink = &file;
  }
  for (const MultiGraph& g : graphs) write_line(*sink, emit_sparse6(g));
  return kOk;
}

struct SolveArgs {
  std::string input;
  std::optional<int> k;
  bool all_k = false;
  int max_k = 4;
  bool certificate = false;
  bool no_reductions = false;
};

int run_solve(const SolveArgs& a, std::istream& in, std::ostream& out) {
  const Input input = read_input(a.input, in);
  SolverOptions opts;
  if (a.no_reductions) opts = {false, false, false, false};
  for_each_line(input, out, [&](const InputLine& line) {
    const auto start = Clock::now();
    const ParsedGraph pg = parse_graph_line(line.text);
    if (a.all_k) {
      ReportRecord rec;
      rec.graph_id = graph_id(input, line);
      rec.format = std::string(to_string(pg.format));
      ProfileOptions po;
      po.max_k = a.max_k;
      po.solver = opts;
      rec.profile = compute_profile(pg.graph, po);
      rec.runtime_ms = elapsed_ms(start);
      return to_json_line(rec);
    }
    const NuResult r = nu_k(pg.graph, *a.k, opts);
    return nu_line(graph_id(input, line), pg, *a.k, r, "exact", a.certificate, elapsed_ms(start));
  });
  return kOk;
}

struct OracleArgs {
  std::string input;
  int k = 1;
  std::size_t max_edges = exhaustive::kDefaultMaxEdges;
  bool certificate = false;
};

int run_oracle(const OracleArgs& a, std::istream& in, std::ostream& out) {
  const Input input = read_input(a.input, in);
  for_each_line(input, out, [&](const InputLine& line) {
    const auto start = Clock::now();
    const ParsedGraph pg = parse_graph_line(line.text);
    const NuResult r = exhaustive::nu_k(pg.graph, a.k, a.max_edges);
    return nu_line(graph_id(input, line), pg, a.k, r, "oracle", a.certificate, elapsed_ms(start));
  });
  return kOk;
}

struct ProfileArgs {
  std::string input;
  int max_k = 4;
  bool no_odd_cycles = false;
};

int run_profile(const ProfileArgs& a, std::istream& in, std::ostream& out) {
  const Input input = read_input(a.input, in);
  ProfileOptions po;
  po.max_k = a.max_k;
  po.odd_cycles = !a.no_odd_cycles;
  for_each_line(input, out, [&](const InputLine& line) {
    const auto start = Clock::now();
    const ParsedGraph pg = parse_graph_line(line.text);
    ReportRecord rec;
    rec.graph_id = graph_id(input, line);
    rec.format = std::string(to_string(pg.format));
    rec.profile = compute_profile(pg.graph, po);
    rec.runtime_ms = elapsed_ms(start);
    return to_json_line(rec);
  });
  return kOk;
}

struct VerifyArgs {
  std::string input;
  std::string profiles;
  std::vector<std::string> rules;
  int max_k = 4;
};

void check_rule_ids(const std::vector<std::string>& ids) {
  for (const std::string& id : ids) {
    if (!find_rule(id)) throw Error(ErrorKind::BadParameter, "unknown rule '" + id + "'");
  }
}

int run_verify(const VerifyArgs& a, std::istream& in, std::ostream& out) {
  check_rule_ids(a.rules);
  const bool from_profiles = !a.profiles.empty();
  const Input input = read_input(from_profiles ? a.profiles : a.input, in);
  ProfileOptions po;
  po.max_k = a.max_k;
  std::vector<int> codes(input.lines.size(), kOk);
  for_each_line(input, out, [&](const InputLine& line) {
    const auto start = Clock::now();
    ReportRecord rec;
    rec.graph_id = graph_id(input, line);
    if (from_profiles) {
      rec.format = "profile";
      rec.profile = profile_from_line(line.text);
    } else {
      const ParsedGraph pg = parse_graph_line(line.text);
      rec.format = std::string(to_string(pg.format));
      rec.profile = compute_profile(pg.graph, po);
    }
    rec.rule_reports = run_rules(a.rules, rec.profile);
    rec.runtime_ms = elapsed_ms(start);
    const auto idx = static_cast<std::size_t>(&line - input.lines.data());
    codes[idx] = worst_exit(rec.rule_reports);
    return to_json_line(rec);
  });
  return codes.empty() ? int{kOk} : *std::max_element(codes.begin(), codes.end());
}

struct HuntArgs {
  std::string input;
  std::vector<std::string> rules;
  std::optional<std::size_t> budget;
  bool stop_at_first = false;
  bool fail_on_violation = false;
  int max_k = 4;
};

int run_hunt(const HuntArgs& a, std::istream& in, std::ostream& out) {
  HuntOptions opts;
  opts.rules = a.rules;
  if (opts.rules.empty()) {
    for (const RuleInfo& r : rule_registry()) {
      if (r.kind == RuleKind::Conjecture) opts.rules.push_back(r.id);
    }
  }
  check_rule_ids(opts.rules);
  for (const std::string& id : opts.rules) {
    if (find_rule(id)->kind != RuleKind::Conjecture) {
      throw Error(ErrorKind::BadParameter, "rule '" + id + "' is not a conjecture");
    }
  }
  if (a.budget) opts.budget = *a.budget;
  opts.stop_at_first = a.stop_at_first;
  opts.profile.max_k = a.max_k;
  opts.threads = thread_count();

  const Input input = read_input(a.input, in);
  json header;
  header["rules"] = opts.rules;
  header["source"] = input.source;
  header["corpus_scale"] = "desk";
  header["note"] =
      "desk-scale corpus: only the graphs in this input are checked; exhaustive runs over "
      "large graph classes are not reproduced here";
  write_line(out, json{{"hunt", header}}.dump());

  std::vector<MultiGraph> corpus;
  std::vector<std::size_t> origin;  // corpus index -> input line
  for (std::size_t i = 0; i < input.lines.size(); ++i) {
    const InputLine& line = input.lines[i];
    try {
      corpus.push_back(parse_graph_line(line.text).graph);
      origin.push_back(i);
    } catch (const std::exception& ex) {
      write_line(out, error_line(graph_id(input, line), line.line_no, ex));
    }
  }

  const HuntResult result = hunt(corpus, opts);
  for (const HuntError& e : result.errors) {
    const InputLine& line = input.lines[origin[e.index]];
    json j;
    j["graph_id"] = graph_id(input, line);
    j["line"] = line.line_no;
    j["error"] = e.message;
    write_line(out, j.dump());
  }
  for (const Counterexample& c : result.counterexamples) {
    const InputLine& line = input.lines[origin[c.index]];
    json j;
    j["graph_id"] = graph_id(input, line);
    j["sparse6"] = c.sparse6;
    j["profile"] = json::parse(profile_to_json(c.profile));
    j["report"] = json::parse(rule_report_to_json(c.report));
    write_line(out, json{{"counterexample", j}}.dump());
  }
  json summary;
  summary["examined"] = result.examined;
  summary["counterexamples"] = result.counterexamples.size();
  summary["errors"] = result.errors.size();
  summary["applicable"] = result.applicable_counts;
  summary["tight"] = result.tight_counts;
  write_line(out, json{{"summary", summary}}.dump());
  if (a.fail_on_violation && !result.counterexamples.empty()) return kConjectureCounterexample;
  return kOk;
}

struct DecomposeArgs {
  std::string input;
  bool eliminate_multi = false;
};

int run_decompose(const DecomposeArgs& a, std::istream& in, std::ostream& out) {
  const Input input = read_input(a.input, in);
  for_each_line(input, out, [&](const InputLine& line) {
    const auto start = Clock::now();
    MultiGraph g = parse_graph_line(line.text).graph;
    if (a.eliminate_multi) g = eliminate_multi_edges(g);
    const OumDecomposition d = oum_decompose(g);
    json j;
    j["graph_id"] = graph_id(input, line);
    j["n"] = g.vertex_count();
    j["m"] = g.edge_count();
    j["variant"] = std::string(to_string(d.variant));
    if (d.variant == OumVariant::Reduced) {
      j["base_graph"] = emit_sparse6(d.base_graph);
      j["base_n"] = d.base_graph.vertex_count();
      j["base_m"] = d.base_graph.edge_count();
    } else {
      j["base_graph"] = nullptr;
    }
    json strings = json::array();
    for (const ReplacedEdge& r : d.replaced_edges) {
      strings.push_back({{"base_edge", r.base_edge}, {"diamonds", r.diamonds}});
    }
    j["replaced_edges"] = std::move(strings);
    j["triangles"] = d.triangle_map;
    j["diamond_count"] = d.diamond_count();
    j["r3"] = std::to_string(d.variant == OumVariant::Reduced ? resistance_r3(d.base_graph)
                                                              : resistance_r3(g));
    j["runtime_ms"] = elapsed_ms(start);
    return j.dump();
  });
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"nulab: maximum k-edge-colorable subgraphs of small multigraphs"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Write family graphs as sparse6 lines");
  gen_cmd->add_option("family", gen.family, "Family name (see --list)");
  gen_cmd->add_flag("--list", gen.list, "Print the registered family names");
  gen_cmd->add_option("--k", gen.k, "Color count parameter");
  gen_cmd->add_option("--l", gen.l, "Cycle length parameter");
  gen_cmd->add_option("--r", gen.r, "Ring size");
  gen_cmd->add_option("--n", gen.n, "Vertex count or bound");
  gen_cmd->add_option("--m", gen.m, "Edge bound");
  gen_cmd->add_option("--count", gen.count, "Number of random graphs");
  gen_cmd->add_option("--e", gen.e, "Edge id");
  gen_cmd->add_option("--c", gen.c, "Diamond count");
  gen_cmd->add_option("--seed", gen.seed, "Seed for random families");
  gen_cmd->add_option("-o,--output", gen.output, "Output path (default stdout)");

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Exact nu_k per input graph");
  solve_cmd->add_option("input", solve.input, "graph6/sparse6 file (default stdin)");
  auto* solve_k = solve_cmd->add_option("--k", solve.k, "Number of colors")->check(CLI::PositiveNumber);
  auto* solve_all = solve_cmd->add_flag("--all-k", solve.all_k, "Profile nu_1..nu_max-k");
  solve_k->excludes(solve_all);
  solve_cmd->add_option("--max-k", solve.max_k, "Largest k for --all-k")->check(CLI::PositiveNumber);
  solve_cmd->add_flag("--certificate", solve.certificate, "Include the coloring");
  solve_cmd->add_flag("--no-reductions", solve.no_reductions, "Plain branch and bound");

  ProfileArgs profile;
  auto* profile_cmd = app.add_subcommand("profile", "Full profile per input graph");
  profile_cmd->add_option("input", profile.input, "graph6/sparse6 file (default stdin)");
  profile_cmd->add_option("--max-k", profile.max_k, "Largest k")->check(CLI::PositiveNumber);
  profile_cmd->add_flag("--no-odd-cycles", profile.no_odd_cycles, "Skip o(G)");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Evaluate the rule registry");
  verify_cmd->add_option("input", verify.input, "graph6/sparse6 file (default stdin)");
  verify_cmd->add_option("--profiles", verify.profiles, "JSON-Lines profiles instead of graphs");
  verify_cmd->add_option("--rule", verify.rules, "Rule id (repeatable; default all)");
  verify_cmd->add_option("--max-k", verify.max_k, "Largest k profiled")->check(CLI::PositiveNumber);

  HuntArgs hunt_args;
  auto* hunt_cmd = app.add_subcommand("hunt", "Search a corpus for conjecture counterexamples");
  hunt_cmd->add_option("input", hunt_args.input, "graph6/sparse6 file (default stdin)");
  hunt_cmd->add_option("--rule", hunt_args.rules, "Conjecture id (repeatable; default all)");
  hunt_cmd->add_option("--budget", hunt_args.budget, "Examine at most this many graphs");
  hunt_cmd->add_flag("--stop-at-first", hunt_args.stop_at_first, "Stop after the first hit");
  hunt_cmd->add_flag("--fail-on-violation", hunt_args.fail_on_violation,
                     "Exit 2 when a counterexample is found");
  hunt_cmd->add_option("--max-k", hunt_args.max_k, "Largest k profiled")->check(CLI::PositiveNumber);

  DecomposeArgs decompose;
  auto* decompose_cmd = app.add_subcommand("decompose", "Claw-free cubic decomposition");
  decompose_cmd->add_option("input", decompose.input, "graph6/sparse6 file (default stdin)");
  decompose_cmd->add_flag("--eliminate-multi", decompose.eliminate_multi,
                          "Remove double edges first");

  OracleArgs oracle;
  auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive nu_k for small graphs");
  oracle_cmd->add_option("input", oracle.input, "graph6/sparse6 file (default stdin)");
  oracle_cmd->add_option("--k", oracle.k, "Number of colors")->required()->check(CLI::PositiveNumber);
  oracle_cmd->add_option("--max-edges", oracle.max_edges, "Refuse larger graphs");
  oracle_cmd->add_flag("--certificate", oracle.certificate, "Include the coloring");

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? int{kOk} : int{kUsage};
  }

  try {
    if (*gen_cmd) {
      if (!gen.list && gen.family.empty()) throw Error(ErrorKind::BadParameter, "family name required");
      return run_gen(gen, out);
    }
    if (*solve_cmd) {
      if (!solve.k && !solve.all_k) throw Error(ErrorKind::BadParameter, "give --k or --all-k");
      return run_solve(solve, in, out);
    }
    if (*profile_cmd) return run_profile(profile, in, out);
    if (*verify_cmd) {
      if (!verify.input.empty() && !verify.profiles.empty()) {
        throw Error(ErrorKind::BadParameter, "give graphs or --profiles, not both");
      }
      return run_verify(verify, in, out);
    }
    if (*hunt_cmd) return run_hunt(hunt_args, in, out);
    if (*decompose_cmd) return run_decompose(decompose, in, out);
    if (*oracle_cmd) return run_oracle(oracle, in, out);
  } catch (const IoFailure& e) {
    err << "nulab: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "nulab: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace nulab::cli
