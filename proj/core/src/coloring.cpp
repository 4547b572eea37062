#include "nulab/coloring.hpp"

namespace nulab {

std::size_t ColorClasses::colored_count() const noexcept {
  std::size_t c = 0;
  for (auto x : color) c += x != 0 ? 1 : 0;
  return c;
}

std::vector<EdgeId> ColorClasses::color_class(int c) const {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < color.size(); ++e) {
    if (color[e] == c) out.push_back(e);
  }
  return out;
}

bool is_valid_coloring(const MultiGraph& g, const ColorClasses& cc) {
  if (cc.k < 1 || cc.color.size() != g.edge_count()) return false;
  std::vector<std::uint64_t> used(g.vertex_count(), 0);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const int c = cc.color[e];
    if (c == 0) continue;
    if (c > cc.k || c > 64) return false;
    const std::uint64_t bit = std::uint64_t{1} << (c - 1);
    const Edge& ed = g.edges()[e];
    if ((used[ed.u] & bit) || (used[ed.v] & bit)) return false;
    used[ed.u] |= bit;
    used[ed.v] |= bit;
  }
  return true;
}

}  // namespace nulab
