#pragma once

// Deliberately naive reference implementations. Nothing here calls into the
// library beyond reading a graph's order and edge list, so agreement with the
// library is evidence rather than tautology.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "graphstab/graph.hpp"

namespace oracle {

constexpr long long kInf = std::numeric_limits<long long>::max();

/// Adjacency-matrix graph with an explicit edge list.
struct Mat {
  int n = 0;
  std::vector<std::vector<char>> a;
  std::vector<std::pair<int, int>> edges;

  explicit Mat(int order = 0) : n(order), a(static_cast<std::size_t>(order), std::vector<char>(static_cast<std::size_t>(order), 0)) {}

  void add(int u, int v) {
    a[u][v] = a[v][u] = 1;
    edges.emplace_back(std::min(u, v), std::max(u, v));
  }
};

inline Mat from(const graphstab::Graph& g) {
  Mat m(g.order());
  for (const auto& e : g.edges()) m.add(e.u, e.v);
  return m;
}

inline graphstab::Graph to_graph(const Mat& m) {
  graphstab::EdgeSet es;
  for (auto [u, v] : m.edges) es.push_back({u, v});
  return graphstab::Graph(m.n, es);
}

/// Minor of the adjacency matrix keeping rows/columns in `keep` (ascending).
inline Mat minor(const Mat& g, const std::vector<int>& keep) {
  Mat h(static_cast<int>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = i + 1; j < keep.size(); ++j)
      if (g.a[keep[i]][keep[j]]) h.add(static_cast<int>(i), static_cast<int>(j));
  return h;
}

inline Mat drop_vertices(const Mat& g, std::uint64_t drop) {
  std::vector<int> keep;
  for (int v = 0; v < g.n; ++v)
    if (!((drop >> v) & 1U)) keep.push_back(v);
  return minor(g, keep);
}

inline Mat drop_edges(const Mat& g, std::uint64_t drop) {
  Mat h(g.n);
  for (std::size_t i = 0; i < g.edges.size(); ++i)
    if (!((drop >> i) & 1U)) h.add(g.edges[i].first, g.edges[i].second);
  return h;
}

inline int degree(const Mat& g, int v) { return static_cast<int>(std::count(g.a[v].begin(), g.a[v].end(), 1)); }

inline long long min_degree(const Mat& g) {
  if (g.n == 0) return kInf;
  int d = g.n;
  for (int v = 0; v < g.n; ++v) d = std::min(d, degree(g, v));
  return d;
}

inline long long max_degree(const Mat& g) {
  int d = 0;
  for (int v = 0; v < g.n; ++v) d = std::max(d, degree(g, v));
  return d;
}

/// Component label per vertex by repeated relaxation.
inline std::vector<int> component_labels(const Mat& g) {
  std::vector<int> label(static_cast<std::size_t>(g.n));
  std::iota(label.begin(), label.end(), 0);
  for (bool changed = true; changed;) {
    changed = false;
    for (auto [u, v] : g.edges) {
      const int m = std::min(label[u], label[v]);
      if (label[u] != m || label[v] != m) {
        label[u] = label[v] = m;
        changed = true;
      }
    }
  }
  return label;
}

inline long long min_component_order(const Mat& g) {
  if (g.n == 0) return kInf;
  const auto label = component_labels(g);
  long long best = kInf;
  for (int c = 0; c < g.n; ++c) {
    const long long size = std::count(label.begin(), label.end(), c);
    if (size > 0) best = std::min(best, size);
  }
  return best;
}

/// Shortest cycle through an edge uv = shortest u-v path avoiding uv, plus 1.
/// Distances by Floyd-Warshall on the graph minus that edge.
inline long long girth(const Mat& g) {
  long long best = kInf;
  const long long far = 1 << 20;
  for (std::size_t k = 0; k < g.edges.size(); ++k) {
    std::vector<std::vector<long long>> d(static_cast<std::size_t>(g.n), std::vector<long long>(static_cast<std::size_t>(g.n), far));
    for (int v = 0; v < g.n; ++v) d[v][v] = 0;
    for (std::size_t j = 0; j < g.edges.size(); ++j) {
      if (j == k) continue;
      d[g.edges[j].first][g.edges[j].second] = d[g.edges[j].second][g.edges[j].first] = 1;
    }
    for (int w = 0; w < g.n; ++w)
      for (int u = 0; u < g.n; ++u)
        for (int v = 0; v < g.n; ++v) d[u][v] = std::min(d[u][v], d[u][w] + d[w][v]);
    const long long dist = d[g.edges[k].first][g.edges[k].second];
    if (dist < far) best = std::min(best, dist + 1);
  }
  return best;
}

inline long long independent_sets(const Mat& g) {
  long long count = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.n); ++s) {
    bool ok = true;
    for (auto [u, v] : g.edges)
      if (((s >> u) & 1U) && ((s >> v) & 1U)) ok = false;
    count += ok;
  }
  return count;
}

/// Edge subsets (ascending bit order) filtered by a predicate on the chosen edges.
template <typename Pred>
long long count_edge_subsets(const Mat& g, Pred&& pred) {
  long long count = 0;
  const std::size_t m = g.edges.size();
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << m); ++s) {
    std::vector<std::pair<int, int>> chosen;
    for (std::size_t i = 0; i < m; ++i)
      if ((s >> i) & 1U) chosen.push_back(g.edges[i]);
    count += pred(chosen);
  }
  return count;
}

inline long long spanning_forests(const Mat& g) {
  return count_edge_subsets(g, [&](const std::vector<std::pair<int, int>>& chosen) {
    // Acyclic iff every edge joins two different union-find classes.
    std::vector<int> parent(static_cast<std::size_t>(g.n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x];
      return x;
    };
    for (auto [u, v] : chosen) {
      const int a = find(u);
      const int b = find(v);
      if (a == b) return false;
      parent[a] = b;
    }
    return true;
  });
}

inline bool is_matching(int n, const std::vector<std::pair<int, int>>& chosen) {
  std::vector<int> used(static_cast<std::size_t>(n), 0);
  for (auto [u, v] : chosen)
    if (used[u]++ || used[v]++) return false;
  return true;
}

inline long long matchings(const Mat& g) {
  return count_edge_subsets(g, [&](const auto& chosen) { return is_matching(g.n, chosen); });
}

inline long long perfect_matchings(const Mat& g) {
  return count_edge_subsets(
      g, [&](const auto& chosen) { return 2 * static_cast<int>(chosen.size()) == g.n && is_matching(g.n, chosen); });
}

/// Chromatic number by DP over vertex subsets: cover[S] = fewest independent
/// sets covering S. Independent of the backtracking colourer.
inline long long chromatic_dp(const Mat& g) {
  if (g.n == 0) return 0;
  const std::uint64_t full = (std::uint64_t{1} << g.n) - 1;
  std::vector<char> independent(full + 1, 1);
  for (std::uint64_t s = 0; s <= full; ++s)
    for (auto [u, v] : g.edges)
      if (((s >> u) & 1U) && ((s >> v) & 1U)) independent[s] = 0;
  std::vector<int> cover(full + 1, 1 << 20);
  cover[0] = 0;
  for (std::uint64_t s = 1; s <= full; ++s) {
    const std::uint64_t low = s & (~s + 1);
    // Fix the lowest vertex's class to avoid counting orderings.
    for (std::uint64_t t = s; t; t = (t - 1) & s)
      if ((t & low) && independent[t]) cover[s] = std::min(cover[s], cover[s & ~t] + 1);
  }
  return cover[full];
}

inline Mat line_graph(const Mat& g) {
  const int m = static_cast<int>(g.edges.size());
  Mat l(m);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      auto [a, b] = g.edges[i];
      auto [c, d] = g.edges[j];
      if (a == c || a == d || b == c || b == d) l.add(i, j);
    }
  return l;
}

/// Vertices then edges; adjacent elements conflict.
inline Mat total_graph(const Mat& g) {
  const int m = static_cast<int>(g.edges.size());
  Mat t(g.n + m);
  for (auto [u, v] : g.edges) t.add(u, v);
  const Mat l = line_graph(g);
  for (auto [i, j] : l.edges) t.add(g.n + i, g.n + j);
  for (int i = 0; i < m; ++i) {
    t.add(g.edges[i].first, g.n + i);
    t.add(g.edges[i].second, g.n + i);
  }
  return t;
}

inline long long edge_chromatic(const Mat& g) { return chromatic_dp(line_graph(g)); }
inline long long total_chromatic(const Mat& g) { return chromatic_dp(total_graph(g)); }

/// Reference graph6 decoder written straight from the format description.
inline std::optional<Mat> decode_graph6(std::string_view s) {
  if (s.empty()) return std::nullopt;
  const int n = static_cast<unsigned char>(s[0]) - 63;
  if (n < 0 || n > 62) return std::nullopt;
  std::vector<int> bits;
  for (std::size_t i = 1; i < s.size(); ++i) {
    const int x = static_cast<unsigned char>(s[i]) - 63;
    if (x < 0 || x > 63) return std::nullopt;
    for (int b = 5; b >= 0; --b) bits.push_back((x >> b) & 1);
  }
  const std::size_t need = static_cast<std::size_t>(n) * (n - 1) / 2;
  if (bits.size() != (need + 5) / 6 * 6) return std::nullopt;
  Mat g(n);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (bits[k++]) g.add(i, j);
  return g;
}

/// Brute-force minimum over masks: smallest popcount first, then the
/// lexicographically least sorted label list. Returns (size or kInf, mask).
template <typename Hit>
std::pair<long long, std::uint64_t> min_subset(int universe, int min_size, int max_size, Hit&& hit) {
  std::optional<std::uint64_t> best;
  auto labels = [](std::uint64_t m) {
    std::vector<int> out;
    for (int i = 0; m; ++i, m >>= 1)
      if (m & 1U) out.push_back(i);
    return out;
  };
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << universe); ++mask) {
    const int size = std::popcount(mask);
    if (size < min_size || size > max_size || !hit(mask)) continue;
    if (!best || size < std::popcount(*best) || (size == std::popcount(*best) && labels(mask) < labels(*best)))
      best = mask;
  }
  if (!best) return {kInf, 0};
  return {std::popcount(*best), *best};
}

/// Oracle value by invariant id. The class invariants are the colouring
/// numbers measured against the maximum degree; nullopt marks the edgeless
/// graphs where they are undefined.
inline std::optional<long long> value(std::string_view id, const Mat& g) {
  if (id == "min_degree") return min_degree(g);
  if (id == "max_degree") return max_degree(g);
  if (id == "girth") return girth(g);
  if (id == "min_component_order") return min_component_order(g);
  if (id == "chromatic") return chromatic_dp(g);
  if (id == "edge_chromatic") return edge_chromatic(g);
  if (id == "total_chromatic") return total_chromatic(g);
  if (id == "class_total") {
    if (g.edges.empty()) return std::nullopt;
    return total_chromatic(g) - max_degree(g);
  }
  if (id == "class_edge") {
    if (g.edges.empty()) return std::nullopt;
    return edge_chromatic(g) - max_degree(g) + 1;
  }
  if (id == "independent_sets") return independent_sets(g);
  if (id == "spanning_forests") return spanning_forests(g);
  if (id == "matchings") return matchings(g);
  if (id == "perfect_matchings") return perfect_matchings(g);
  return std::nullopt;
}

/// Brute-force vertex stability; undefined values count as changed.
/// `proper` excludes deleting every vertex.
inline std::pair<long long, std::uint64_t> vertex_stability(std::string_view id, const Mat& g, bool proper = true) {
  const auto base = value(id, g);
  return min_subset(g.n, 1, proper ? g.n - 1 : g.n,
                    [&](std::uint64_t x) { return value(id, drop_vertices(g, x)) != base; });
}

inline std::pair<long long, std::uint64_t> edge_stability(std::string_view id, const Mat& g) {
  const auto base = value(id, g);
  const int m = static_cast<int>(g.edges.size());
  return min_subset(m, 1, m, [&](std::uint64_t y) { return value(id, drop_edges(g, y)) != base; });
}

}  // namespace oracle
