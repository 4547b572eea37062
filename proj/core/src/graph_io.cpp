#include "nulab/graph_io.hpp"

#include <algorithm>
#include <ostream>
#include <string>

#include "json.hpp"
#include "nulab/error.hpp"

namespace nulab {

namespace {

using json = nlohmann::ordered_json;

constexpr int kBias = 63;

std::string_view strip_line(std::string_view line) {
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  return line;
}

/// Reads N(n) starting at pos, advancing pos. Returns false on truncation or
/// a byte outside 63..126; `bad` receives the failing offset.
bool read_size(std::string_view s, std::size_t& pos, std::uint64_t& n, std::size_t& bad) {
  auto byte = [&](std::size_t i, int& out) {
    if (i >= s.size()) {
      bad = i;
      return false;
    }
    const int c = static_cast<unsigned char>(s[i]);
    if (c < kBias || c > 126) {
      bad = i;
      return false;
    }
    out = c - kBias;
    return true;
  };
  int c = 0;
  if (!byte(pos, c)) return false;
  if (c < 63) {
    n = static_cast<std::uint64_t>(c);
    pos += 1;
    return true;
  }
  int c2 = 0;
  if (!byte(pos + 1, c2)) return false;
  std::size_t groups = 3;
  std::size_t start = pos + 1;
  if (c2 == 63) {
    groups = 6;
    start = pos + 2;
  }
  n = 0;
  for (std::size_t i = 0; i < groups; ++i) {
    int g = 0;
    if (!byte(start + i, g)) return false;
    n = (n << 6) | static_cast<std::uint64_t>(g);
  }
  pos = start + groups;
  return true;
}

void write_size(std::string& out, std::uint64_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  }
}

/// Packs bits six at a time, padding the last group as the caller directs.
class BitWriter {
 public:
  void push(bool bit) {
    cur_ = (cur_ << 1) | (bit ? 1 : 0);
    if (++filled_ == 6) {
      out_.push_back(static_cast<char>(cur_ + kBias));
      cur_ = 0;
      filled_ = 0;
    }
  }
  void push_bits(std::uint64_t value, int width) {
    for (int i = width - 1; i >= 0; --i) push(((value >> i) & 1) != 0);
  }
  int pending() const { return filled_; }
  std::string take() && { return std::move(out_); }

 private:
  std::string out_;
  int cur_ = 0;
  int filled_ = 0;
};

int bits_for(std::uint64_t n) {
  // Number of bits needed to write n-1; 0 when n <= 1.
  int nb = 0;
  for (std::uint64_t i = n > 0 ? n - 1 : 0; i > 0; i >>= 1) ++nb;
  return nb;
}

std::string size_string(std::size_t v) { return std::to_string(v); }

std::size_t parse_count(const json& j, std::string_view field) {
  if (j.is_number_unsigned() || j.is_number_integer()) return j.get<std::size_t>();
  if (j.is_string()) {
    const auto r = Rational::from_string(j.get<std::string>());
    if (r.denominator() != 1 || r.numerator() < 0) {
      throw Error(ErrorKind::BadParameter, "field '" + std::string(field) + "' is not a count");
    }
    return static_cast<std::size_t>(r.numerator());
  }
  throw Error(ErrorKind::BadParameter, "field '" + std::string(field) + "' has wrong type");
}

json profile_json(const GraphProfile& p) {
  json j;
  j["n"] = p.n;
  j["m"] = p.m;
  for (const auto& [k, value] : p.nu) j["nu" + std::to_string(k)] = size_string(value);
  j["r3"] = p.r3 ? json(size_string(*p.r3)) : json(nullptr);
  j["o"] = p.o ? json(size_string(*p.o)) : json(nullptr);
  const auto& s = p.flags.structure;
  json flags;
  flags["connected"] = s.connected;
  flags["cubic"] = s.cubic;
  flags["bridgeless"] = s.bridgeless;
  flags["max_degree"] = s.max_degree;
  flags["cycle_rank"] = s.cycle_rank;
  flags["is_tree"] = s.is_tree;
  flags["is_unicyclic"] = s.is_unicyclic;
  flags["simple"] = p.flags.simple;
  flags["claw_free"] = p.flags.claw_free;
  flags["bipartite"] = p.flags.bipartite;
  flags["nearly_bipartite"] = p.flags.nearly_bipartite;
  flags["has_perfect_matching"] = p.flags.has_perfect_matching;
  j["flags"] = std::move(flags);
  json x = json::object();
  for (const auto& [k, value] : p.cycle_deficiency) x[std::to_string(k)] = size_string(value);
  j["x"] = std::move(x);
  json regime = json::array();
  for (int k : p.deficiency_regime) regime.push_back(k);
  j["deficiency_regime"] = std::move(regime);
  return j;
}

json report_json(const RuleReport& r) {
  json j;
  j["rule_id"] = r.rule_id;
  if (r.k) j["k"] = *r.k;
  j["kind"] = std::string(to_string(r.kind));
  j["applicable"] = r.applicable;
  j["holds"] = r.applicable ? json(r.holds) : json(nullptr);
  j["tight"] = r.applicable ? json(r.tight) : json(nullptr);
  j["lhs"] = r.lhs ? json(r.lhs->to_string()) : json(nullptr);
  j["rhs"] = r.rhs ? json(r.rhs->to_string()) : json(nullptr);
  j["relation"] = r.relation;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

}  // namespace

std::string_view to_string(GraphFormat format) noexcept {
  return format == GraphFormat::Graph6 ? "graph6" : "sparse6";
}

MultiGraph parse_graph6(std::string_view line) {
  std::string_view s = strip_line(line);
  std::size_t base = 0;
  constexpr std::string_view header = ">>graph6<<";
  if (s.substr(0, header.size()) == header) {
    s.remove_prefix(header.size());
    base = header.size();
  }
  std::size_t pos = 0;
  std::uint64_t n = 0;
  std::size_t bad = 0;
  if (!read_size(s, pos, n, bad)) {
    throw Error(ErrorKind::MalformedGraph6, "bad vertex count at byte " + std::to_string(base + bad));
  }
  const std::uint64_t bits = n * (n == 0 ? 0 : n - 1) / 2;
  const std::uint64_t bytes = (bits + 5) / 6;
  if (s.size() - pos < bytes) {
    throw Error(ErrorKind::MalformedGraph6, "truncated adjacency data at byte " + std::to_string(base + s.size()));
  }
  if (s.size() - pos > bytes) {
    throw Error(ErrorKind::MalformedGraph6, "trailing data at byte " + std::to_string(base + pos + bytes));
  }
  std::vector<Edge> edges;
  std::uint64_t bit = 0;
  for (std::uint64_t j = 1; j < n; ++j) {
    for (std::uint64_t i = 0; i < j; ++i, ++bit) {
      const std::size_t at = pos + bit / 6;
      const int c = static_cast<unsigned char>(s[at]);
      if (c < kBias || c > 126) {
        throw Error(ErrorKind::MalformedGraph6, "byte out of range at offset " + std::to_string(base + at));
      }
      if (((c - kBias) >> (5 - bit % 6)) & 1) {
        edges.push_back({static_cast<VertexId>(i), static_cast<VertexId>(j)});
      }
    }
  }
  for (std::size_t at = pos + bit / 6; at < s.size(); ++at) {
    const int c = static_cast<unsigned char>(s[at]);
    if (c < kBias || c > 126) {
      throw Error(ErrorKind::MalformedGraph6, "byte out of range at offset " + std::to_string(base + at));
    }
  }
  return MultiGraph(static_cast<std::size_t>(n), std::move(edges));
}

std::string emit_graph6(const MultiGraph& g) {
  if (!g.is_simple()) throw Error(ErrorKind::BadParameter, "graph6 cannot encode parallel edges");
  const std::size_t n = g.vertex_count();
  std::vector<bool> adj(n * n, false);
  for (const Edge& e : g.edges()) {
    adj[e.u * n + e.v] = true;
    adj[e.v * n + e.u] = true;
  }
  std::string out;
  write_size(out, n);
  BitWriter bits;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) bits.push(adj[i * n + j]);
  }
  while (bits.pending() != 0) bits.push(false);
  return out + std::move(bits).take();
}

MultiGraph parse_sparse6(std::string_view line) {
  std::string_view s = strip_line(line);
  std::size_t base = 0;
  constexpr std::string_view header = ">>sparse6<<";
  if (s.substr(0, header.size()) == header) {
    s.remove_prefix(header.size());
    base = header.size();
  }
  if (s.empty() || s[0] != ':') {
    throw Error(ErrorKind::MalformedSparse6, "missing ':' at byte " + std::to_string(base));
  }
  std::size_t pos = 1;
  std::uint64_t n = 0;
  std::size_t bad = 0;
  if (!read_size(s, pos, n, bad)) {
    throw Error(ErrorKind::MalformedSparse6, "bad vertex count at byte " + std::to_string(base + bad));
  }
  const int nb = bits_for(n);
  std::vector<Edge> edges;
  std::uint64_t v = 0;
  std::size_t at = pos;
  int cur = 0;
  int left = 0;
  auto next_bit = [&](int& out) {
    if (left == 0) {
      if (at >= s.size()) return false;
      const int c = static_cast<unsigned char>(s[at]);
      if (c < kBias || c > 126) {
        throw Error(ErrorKind::MalformedSparse6, "byte out of range at offset " + std::to_string(base + at));
      }
      cur = c - kBias;
      left = 6;
      ++at;
    }
    --left;
    out = (cur >> left) & 1;
    return true;
  };
  while (true) {
    int b = 0;
    if (!next_bit(b)) break;
    std::uint64_t x = 0;
    bool complete = true;
    for (int i = 0; i < nb; ++i) {
      int bit = 0;
      if (!next_bit(bit)) {
        complete = false;
        break;
      }
      x = (x << 1) | static_cast<std::uint64_t>(bit);
    }
    if (!complete) break;
    if (b) ++v;
    if (x > v) {
      v = x;
    } else if (v < n) {
      if (x == v) {
        throw Error(ErrorKind::LoopRejected, "sparse6 stream encodes a loop at vertex " + std::to_string(v));
      }
      edges.push_back({static_cast<VertexId>(x), static_cast<VertexId>(v)});
    }
  }
  return MultiGraph(static_cast<std::size_t>(n), std::move(edges));
}

std::string emit_sparse6(const MultiGraph& g) {
  const std::size_t n = g.vertex_count();
  const int nb = bits_for(n);
  std::vector<std::pair<VertexId, VertexId>> list;  // (larger, smaller)
  list.reserve(g.edge_count());
  for (const Edge& e : g.edges()) list.emplace_back(std::max(e.u, e.v), std::min(e.u, e.v));
  std::sort(list.begin(), list.end());

  std::string out = ":";
  write_size(out, n);
  BitWriter bits;
  std::uint64_t last = 0;
  for (auto [j, i] : list) {
    if (j == last) {
      bits.push(false);
    } else {
      bits.push(true);
      if (j > last + 1) {
        bits.push_bits(j, nb);
        bits.push(false);
      }
      last = j;
    }
    bits.push_bits(i, nb);
  }
  if (bits.pending() != 0) {
    const int pad = 6 - bits.pending();
    const bool special = pad >= nb + 1 && n >= 2 && last == n - 2 && n == (std::size_t{1} << nb);
    if (special) {
      bits.push(false);
      for (int i = 1; i < pad; ++i) bits.push(true);
    } else {
      for (int i = 0; i < pad; ++i) bits.push(true);
    }
  }
  return out + std::move(bits).take();
}

ParsedGraph parse_graph_line(std::string_view line) {
  std::string_view s = strip_line(line);
  if (s.starts_with(">>sparse6<<") || s.starts_with(":")) {
    return {parse_sparse6(s), GraphFormat::Sparse6};
  }
  if (s.starts_with(";")) throw Error(ErrorKind::MalformedSparse6, "incremental sparse6 is not supported");
  if (s.starts_with("&")) throw Error(ErrorKind::MalformedGraph6, "digraph6 is not supported");
  return {parse_graph6(s), GraphFormat::Graph6};
}

std::string profile_to_json(const GraphProfile& profile) { return profile_json(profile).dump(); }

std::string rule_report_to_json(const RuleReport& report) { return report_json(report).dump(); }

std::string to_json_line(const ReportRecord& record) {
  json j;
  j["graph_id"] = record.graph_id;
  j["format"] = record.format;
  j["profile"] = profile_json(record.profile);
  json reports = json::array();
  for (const auto& r : record.rule_reports) reports.push_back(report_json(r));
  j["rule_reports"] = std::move(reports);
  j["runtime_ms"] = record.runtime_ms;
  return j.dump();
}

GraphProfile profile_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& ex) {
    throw Error(ErrorKind::BadParameter, std::string("profile JSON: ") + ex.what());
  }
  if (j.contains("profile")) j = j["profile"];
  if (!j.is_object() || !j.contains("n") || !j.contains("m")) {
    throw Error(ErrorKind::BadParameter, "profile JSON needs at least 'n' and 'm'");
  }
  try {
    GraphProfile p;
    p.n = parse_count(j["n"], "n");
    p.m = parse_count(j["m"], "m");
    for (const auto& [key, value] : j.items()) {
      if (key.size() > 2 && key.starts_with("nu")) {
        p.nu[std::stoi(key.substr(2))] = parse_count(value, key);
      }
    }
    if (j.contains("r3") && !j["r3"].is_null()) p.r3 = parse_count(j["r3"], "r3");
    if (j.contains("o") && !j["o"].is_null()) p.o = parse_count(j["o"], "o");
    if (j.contains("flags")) {
      const json& f = j["flags"];
      auto flag = [&](const char* name) { return f.contains(name) && f[name].get<bool>(); };
      auto& s = p.flags.structure;
      s.connected = flag("connected");
      s.cubic = flag("cubic");
      s.bridgeless = flag("bridgeless");
      s.is_tree = flag("is_tree");
      s.is_unicyclic = flag("is_unicyclic");
      if (f.contains("max_degree")) s.max_degree = parse_count(f["max_degree"], "max_degree");
      if (f.contains("cycle_rank")) s.cycle_rank = parse_count(f["cycle_rank"], "cycle_rank");
      p.flags.simple = flag("simple");
      p.flags.claw_free = flag("claw_free");
      p.flags.bipartite = flag("bipartite");
      p.flags.nearly_bipartite = flag("nearly_bipartite");
      p.flags.has_perfect_matching = flag("has_perfect_matching");
    }
    if (j.contains("x")) {
      for (const auto& [key, value] : j["x"].items()) p.cycle_deficiency[std::stoi(key)] = parse_count(value, "x");
    }
    if (j.contains("deficiency_regime")) {
      for (const auto& k : j["deficiency_regime"]) p.deficiency_regime.insert(k.get<int>());
    }
    return p;
  } catch (const json::exception& ex) {
    throw Error(ErrorKind::BadParameter, std::string("profile JSON: ") + ex.what());
  } catch (const std::logic_error& ex) {
    throw Error(ErrorKind::BadParameter, std::string("profile JSON: ") + ex.what());
  }
}

void emit_report(std::span<const ReportRecord> records, std::ostream& sink) {
  for (const auto& r : records) {
    sink << to_json_line(r) << '\n';
    if (!sink) throw Error(ErrorKind::SinkWriteError, "report sink rejected a write");
  }
  sink.flush();
  if (!sink) throw Error(ErrorKind::SinkWriteError, "report sink rejected a flush");
}

void ReportWriter::write_line(std::string_view json_object) {
  std::lock_guard lock(mu_);
  sink_ << json_object << '\n';
  sink_.flush();
  if (!sink_) throw Error(ErrorKind::SinkWriteError, "report sink rejected a write");
}

}  // namespace nulab
