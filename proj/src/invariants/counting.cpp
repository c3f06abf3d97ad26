#include <bit>
#include <string>
#include <unordered_map>
#include <vector>

#include "graphstab/invariants.hpp"

namespace graphstab {

namespace {

class MaskCounter {
 public:
  explicit MaskCounter(const Graph& g) : g_(g) {}

  Integer independent(std::uint64_t mask) {
    if (mask == 0) return 1;
    const int v = std::countr_zero(mask);
    const std::uint64_t rest = mask & (mask - 1);
    const std::uint64_t nb = g_.neighbor_mask(v) & rest;
    if (nb == 0) return 2 * independent(rest);
    return independent(rest) + independent(rest & ~nb);
  }

  Integer matchings(std::uint64_t mask) {
    if (mask == 0 || (mask & (mask - 1)) == 0) return 1;
    if (auto it = memo_.find(mask); it != memo_.end()) return it->second;
    const int v = std::countr_zero(mask);
    const std::uint64_t rest = mask & (mask - 1);
    Integer total = matchings(rest);
    for (std::uint64_t nb = g_.neighbor_mask(v) & rest; nb; nb &= nb - 1)
      total += matchings(rest & ~(std::uint64_t{1} << std::countr_zero(nb)));
    memo_.emplace(mask, total);
    return total;
  }

  Integer perfect(std::uint64_t mask) {
    if (mask == 0) return 1;
    if (std::popcount(mask) % 2 != 0) return 0;
    if (auto it = memo_.find(mask); it != memo_.end()) return it->second;
    const int v = std::countr_zero(mask);
    const std::uint64_t rest = mask & (mask - 1);
    Integer total = 0;
    for (std::uint64_t nb = g_.neighbor_mask(v) & rest; nb; nb &= nb - 1)
      total += perfect(rest & ~(std::uint64_t{1} << std::countr_zero(nb)));
    memo_.emplace(mask, total);
    return total;
  }

 private:
  const Graph& g_;
  std::unordered_map<std::uint64_t, Integer> memo_;
};

// Loopless multigraph as a symmetric multiplicity matrix; used by the
// deletion-contraction forest count, where contraction creates parallel edges.
struct Multigraph {
  int n = 0;
  std::vector<int> mult;

  int& at(int u, int v) { return mult[static_cast<std::size_t>(u * n + v)]; }
  int at(int u, int v) const { return mult[static_cast<std::size_t>(u * n + v)]; }

  Multigraph without_vertex(int x) const {
    Multigraph h;
    h.n = n - 1;
    h.mult.assign(static_cast<std::size_t>(h.n * h.n), 0);
    for (int u = 0, hu = 0; u < n; ++u) {
      if (u == x) continue;
      for (int v = 0, hv = 0; v < n; ++v) {
        if (v == x) continue;
        h.at(hu, hv) = at(u, v);
        ++hv;
      }
      ++hu;
    }
    return h;
  }
};

class ForestCounter {
 public:
  Integer count(Multigraph g) {
    // Strip isolated vertices and leaves: a leaf joined by k parallel edges
    // contributes a factor (1 + k).
    Integer factor = 1;
    for (bool changed = true; changed;) {
      changed = false;
      for (int v = 0; v < g.n; ++v) {
        int neighbours = 0;
        int k = 0;
        for (int w = 0; w < g.n; ++w) {
          if (g.at(v, w) > 0) {
            ++neighbours;
            k = g.at(v, w);
          }
        }
        if (neighbours <= 1) {
          if (neighbours == 1) factor *= 1 + k;
          g = g.without_vertex(v);
          changed = true;
          break;
        }
      }
    }
    if (g.n == 0) return factor;

    std::string key(reinterpret_cast<const char*>(g.mult.data()), g.mult.size() * sizeof(int));
    if (auto it = memo_.find(key); it != memo_.end()) return factor * it->second;

    int u = 0;
    int v = 1;
    while (g.at(u, v) == 0) ++v;
    const int k = g.at(u, v);

    Multigraph deleted = g;
    deleted.at(u, v) = deleted.at(v, u) = 0;

    Multigraph merged = g;
    for (int w = 0; w < g.n; ++w) {
      if (w == u || w == v) continue;
      merged.at(u, w) += g.at(v, w);
      merged.at(w, u) = merged.at(u, w);
    }
    merged.at(u, v) = merged.at(v, u) = 0;
    merged = merged.without_vertex(v);

    Integer result = count(std::move(deleted)) + k * count(std::move(merged));
    memo_.emplace(std::move(key), result);
    return factor * result;
  }

 private:
  std::unordered_map<std::string, Integer> memo_;
};

}  // namespace

ExtValue count_independent_sets(const Graph& g) {
  return ExtValue(Rational(MaskCounter(g).independent(g.vertex_mask())));
}

ExtValue count_matchings(const Graph& g) {
  return ExtValue(Rational(MaskCounter(g).matchings(g.vertex_mask())));
}

ExtValue count_perfect_matchings(const Graph& g) {
  return ExtValue(Rational(MaskCounter(g).perfect(g.vertex_mask())));
}

ExtValue count_spanning_forests(const Graph& g) {
  Multigraph m;
  m.n = g.order();
  m.mult.assign(static_cast<std::size_t>(m.n * m.n), 0);
  for (const Edge& e : g.edges()) m.at(e.u, e.v) = m.at(e.v, e.u) = 1;
  return ExtValue(Rational(ForestCounter{}.count(std::move(m))));
}

}  // namespace graphstab
