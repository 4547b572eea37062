#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "nulab/graph.hpp"

namespace nulab {

/// A partial proper k-edge-coloring: color[e] is 0 for an uncolored edge,
/// otherwise a color in 1..k. Each color class is a matching.
struct ColorClasses {
  int k = 0;
  std::vector<std::uint8_t> color;

  ColorClasses() = default;
  ColorClasses(int k_colors, std::size_t edge_count) : k(k_colors), color(edge_count, 0) {}

  std::size_t colored_count() const noexcept;
  std::vector<EdgeId> color_class(int c) const;

  friend bool operator==(const ColorClasses&, const ColorClasses&) = default;
};

/// Checks shape (one entry per edge, colors within 1..k) and properness.
bool is_valid_coloring(const MultiGraph& g, const ColorClasses& cc);

struct NuResult {
  std::size_t value = 0;
  ColorClasses certificate;
  std::uint64_t node_count = 0;
};

}  // namespace nulab
