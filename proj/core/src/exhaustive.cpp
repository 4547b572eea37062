#include "nulab/exhaustive.hpp"

#include <bit>
#include <string>
#include <vector>

#include "nulab/error.hpp"

namespace nulab {

namespace exhaustive {

namespace {

bool extend(const MultiGraph& g, int k, const std::vector<EdgeId>& order, std::size_t i,
            std::vector<std::uint64_t>& used, std::vector<std::uint8_t>& color) {
  if (i == order.size()) return true;
  const EdgeId e = order[i];
  const Edge& ed = g.edges()[e];
  for (int c = 1; c <= k; ++c) {
    const std::uint64_t bit = std::uint64_t{1} << (c - 1);
    if ((used[ed.u] & bit) || (used[ed.v] & bit)) continue;
    used[ed.u] |= bit;
    used[ed.v] |= bit;
    color[e] = static_cast<std::uint8_t>(c);
    if (extend(g, k, order, i + 1, used, color)) return true;
    color[e] = 0;
    used[ed.u] &= ~bit;
    used[ed.v] &= ~bit;
  }
  return false;
}

}  // namespace

bool is_k_edge_colorable(const MultiGraph& g, int k, std::uint64_t mask, ColorClasses* witness) {
  if (k < 1) throw Error(ErrorKind::BadParameter, "k must be at least 1");
  const int colors = k > 64 ? 64 : k;
  std::vector<EdgeId> order;
  for (EdgeId e = 0; e < g.edge_count() && e < 64; ++e) {
    if (mask & (std::uint64_t{1} << e)) order.push_back(e);
  }
  std::vector<std::uint64_t> used(g.vertex_count(), 0);
  std::vector<std::uint8_t> color(g.edge_count(), 0);
  const bool ok = extend(g, colors, order, 0, used, color);
  if (ok && witness) {
    witness->k = k;
    witness->color = std::move(color);
  }
  return ok;
}

NuResult nu_k(const MultiGraph& g, int k, std::size_t max_edges) {
  if (k < 1) throw Error(ErrorKind::BadParameter, "k must be at least 1");
  const std::size_t m = g.edge_count();
  if (m > max_edges || m > 63) {
    throw Error(ErrorKind::TooLarge, "graph has " + std::to_string(m) + " edges, limit " +
                                         std::to_string(std::min<std::size_t>(max_edges, 63)));
  }
  NuResult result;
  result.certificate = ColorClasses(k, m);
  const std::uint64_t full = m == 0 ? 0 : (std::uint64_t{1} << m) - 1;
  for (std::size_t size = m + 1; size-- > 0;) {
    // Gosper's hack walks all m-bit masks with `size` bits set.
    std::uint64_t mask = size == 0 ? 0 : (std::uint64_t{1} << size) - 1;
    while (true) {
      ++result.node_count;
      ColorClasses witness;
      if (is_k_edge_colorable(g, k, mask, &witness)) {
        result.value = size;
        result.certificate = std::move(witness);
        return result;
      }
      if (mask == 0) break;
      const std::uint64_t low = mask & -mask;
      const std::uint64_t ripple = mask + low;
      if (ripple == 0 || ripple > full) break;
      mask = ripple | (((mask ^ ripple) >> 2) / low);
      if (mask > full) break;
    }
  }
  return result;
}

}  // namespace exhaustive
}  // namespace nulab
