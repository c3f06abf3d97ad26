#include <algorithm>
#include <bit>
#include <vector>

#include "graphstab/invariants.hpp"

namespace graphstab {

ExtValue eval_min_degree(const Graph& g) {
  if (g.is_null()) return ExtValue::infinity();
  int best = g.order();
  for (int v = 0; v < g.order(); ++v) best = std::min(best, g.degree(v));
  return best;
}

ExtValue eval_max_degree(const Graph& g) {
  int best = 0;
  for (int v = 0; v < g.order(); ++v) best = std::max(best, g.degree(v));
  return best;
}

ExtValue eval_girth(const Graph& g) {
  const int n = g.order();
  int best = n + 1;
  std::vector<int> dist(static_cast<std::size_t>(n));
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::vector<int> queue(static_cast<std::size_t>(n));
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[static_cast<std::size_t>(s)] = 0;
    parent[static_cast<std::size_t>(s)] = -1;
    std::size_t head = 0;
    std::size_t tail = 0;
    queue[tail++] = s;
    while (head < tail) {
      const int u = queue[head++];
      const auto du = dist[static_cast<std::size_t>(u)];
      if (2 * du + 1 >= best) break;
      for (std::uint64_t nb = g.neighbor_mask(u); nb; nb &= nb - 1) {
        const int w = std::countr_zero(nb);
        auto& dw = dist[static_cast<std::size_t>(w)];
        if (dw < 0) {
          dw = du + 1;
          parent[static_cast<std::size_t>(w)] = u;
          queue[tail++] = w;
        } else if (parent[static_cast<std::size_t>(u)] != w) {
          best = std::min(best, du + dw + 1);
        }
      }
    }
  }
  if (best > n) return ExtValue::infinity();
  return best;
}

ExtValue eval_min_component_order(const Graph& g) {
  const ComponentSplit split = components(g);
  if (split.parts.empty()) return ExtValue::infinity();
  int best = g.order();
  for (const Graph& part : split.parts) best = std::min(best, part.order());
  return best;
}

}  // namespace graphstab
