#pragma once

#include <cstdint>
#include <iosfwd>
#include <mutex>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nulab/graph.hpp"
#include "nulab/profile.hpp"

namespace nulab {

// graph6 / sparse6 follow the nauty "formats.txt" description. Encoders
// reproduce the gtools bit stream exactly, including its padding rule.

/// Decodes one graph6 line (optional ">>graph6<<" header, trailing newline
/// tolerated). Throws MalformedGraph6 naming the offending byte offset.
MultiGraph parse_graph6(std::string_view line);

/// Throws BadParameter when g has parallel edges.
std::string emit_graph6(const MultiGraph& g);

/// Decodes one sparse6 line. Loops are rejected with LoopRejected, other
/// defects with MalformedSparse6. Edges come out in stream order.
MultiGraph parse_sparse6(std::string_view line);

/// Edges are written sorted by (larger endpoint, smaller endpoint); every
/// parallel copy is written.
std::string emit_sparse6(const MultiGraph& g);

enum class GraphFormat { Graph6, Sparse6 };

std::string_view to_string(GraphFormat format) noexcept;

struct ParsedGraph {
  MultiGraph graph;
  GraphFormat format = GraphFormat::Graph6;
};

/// Picks the decoder from the first byte: ':' sparse6, anything else graph6.
/// Headers are stripped; digraph6 ('&') and incremental sparse6 (';') are
/// rejected.
ParsedGraph parse_graph_line(std::string_view line);

struct ReportRecord {
  std::string graph_id;
  std::string format;
  GraphProfile profile;
  std::vector<RuleReport> rule_reports;
  std::int64_t runtime_ms = 0;
};

/// JSON object text (no trailing newline). The nu, r3, o and x values and every
/// rational are written as strings, rationals as "p" or "p/q" in lowest terms.
std::string profile_to_json(const GraphProfile& profile);
std::string rule_report_to_json(const RuleReport& report);
std::string to_json_line(const ReportRecord& record);

/// Inverse of profile_to_json; throws BadParameter on schema errors.
GraphProfile profile_from_json(std::string_view text);

/// Writes one JSON object per line. Throws SinkWriteError if the stream
/// goes bad.
void emit_report(std::span<const ReportRecord> records, std::ostream& sink);

/// Serializes whole lines from concurrent producers onto one stream.
class ReportWriter {
 public:
  explicit ReportWriter(std::ostream& sink) : sink_(sink) {}

  void write_line(std::string_view json_object);
  void write(const ReportRecord& record) { write_line(to_json_line(record)); }

 private:
  std::mutex mu_;
  std::ostream& sink_;
};

}  // namespace nulab
