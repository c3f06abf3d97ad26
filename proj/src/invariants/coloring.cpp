#include <algorithm>
#include <bit>
#include <vector>

#include "graphstab/errors.hpp"
#include "graphstab/invariants.hpp"

namespace graphstab {

namespace {

/// Element i may not share a colour with any element listed in conflicts[i];
/// every listed element precedes i, so a left-to-right assignment only needs
/// to look back. New colours are opened in order (colour c is used only after
/// 0..c-1), which removes colour-permutation symmetry.
class ConflictColorer {
 public:
  explicit ConflictColorer(std::vector<std::vector<int>> conflicts)
      : conflicts_(std::move(conflicts)), colour_(conflicts_.size(), -1) {}

  bool colorable(int k) {
    if (k <= 0) return conflicts_.empty();
    if (k > 64) throw InputError("colourings with more than 64 colours are not supported");
    k_ = k;
    std::fill(colour_.begin(), colour_.end(), -1);
    return assign(0, 0);
  }

 private:
  bool assign(std::size_t i, int used) {
    if (i == conflicts_.size()) return true;
    std::uint64_t blocked = 0;
    for (int j : conflicts_[i]) blocked |= std::uint64_t{1} << colour_[static_cast<std::size_t>(j)];
    const int limit = std::min(k_, used + 1);
    for (int c = 0; c < limit; ++c) {
      if ((blocked >> c) & 1U) continue;
      colour_[i] = c;
      if (assign(i + 1, std::max(used, c + 1))) return true;
    }
    colour_[i] = -1;
    return false;
  }

  std::vector<std::vector<int>> conflicts_;
  std::vector<int> colour_;
  int k_ = 0;
};

std::vector<std::vector<int>> vertex_conflicts(const Graph& g) {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) {
    const std::uint64_t below = g.neighbor_mask(v) & ((std::uint64_t{1} << v) - 1);
    for (std::uint64_t m = below; m; m &= m - 1) out[static_cast<std::size_t>(v)].push_back(std::countr_zero(m));
  }
  return out;
}

std::vector<std::vector<int>> edge_conflicts(const EdgeSet& edges) {
  std::vector<std::vector<int>> out(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const Edge a = edges[i];
      const Edge b = edges[j];
      if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) out[i].push_back(static_cast<int>(j));
    }
  }
  return out;
}

// Elements ordered vertex 0, then for each v: vertex v followed by its edges
// to lower-labelled neighbours.
std::vector<std::vector<int>> total_conflicts(const Graph& g) {
  std::vector<std::vector<int>> out;
  std::vector<int> vertex_index(static_cast<std::size_t>(g.order()));
  std::vector<std::pair<Edge, int>> placed_edges;
  for (int v = 0; v < g.order(); ++v) {
    const int vi = static_cast<int>(out.size());
    vertex_index[static_cast<std::size_t>(v)] = vi;
    std::vector<int> vc;
    const std::uint64_t below = g.neighbor_mask(v) & ((std::uint64_t{1} << v) - 1);
    for (std::uint64_t m = below; m; m &= m - 1) vc.push_back(vertex_index[static_cast<std::size_t>(std::countr_zero(m))]);
    for (const auto& [e, idx] : placed_edges)
      if (e.u == v || e.v == v) vc.push_back(idx);
    out.push_back(std::move(vc));
    for (std::uint64_t m = below; m; m &= m - 1) {
      const Edge e{std::countr_zero(m), v};
      std::vector<int> ec{vertex_index[static_cast<std::size_t>(e.u)], vi};
      for (const auto& [f, idx] : placed_edges)
        if (f.u == e.u || f.v == e.u || f.u == e.v || f.v == e.v) ec.push_back(idx);
      const int ei = static_cast<int>(out.size());
      out.push_back(std::move(ec));
      placed_edges.emplace_back(e, ei);
    }
  }
  return out;
}

int max_degree_of(const Graph& g) {
  int d = 0;
  for (int v = 0; v < g.order(); ++v) d = std::max(d, g.degree(v));
  return d;
}

}  // namespace

bool vertex_colorable(const Graph& g, int k) { return ConflictColorer(vertex_conflicts(g)).colorable(k); }

bool edge_colorable(const Graph& g, int k) { return ConflictColorer(edge_conflicts(g.edges())).colorable(k); }

bool total_colorable(const Graph& g, int k) { return ConflictColorer(total_conflicts(g)).colorable(k); }

ExtValue eval_chromatic(const Graph& g) {
  if (g.is_null()) return 0;
  if (g.is_edgeless()) return 1;
  ConflictColorer colorer(vertex_conflicts(g));
  for (int k = 2;; ++k)
    if (colorer.colorable(k)) return k;
}

ExtValue eval_edge_chromatic(const Graph& g) {
  if (g.is_edgeless()) return 0;
  const int delta = max_degree_of(g);
  ConflictColorer colorer(edge_conflicts(g.edges()));
  if (colorer.colorable(delta)) return delta;
  if (colorer.colorable(delta + 1)) return delta + 1;
  throw InternalError("no proper edge colouring with max degree + 1 colours");
}

ExtValue eval_total_chromatic(const Graph& g) {
  if (g.is_null()) return 0;
  if (g.is_edgeless()) return 1;
  ConflictColorer colorer(total_conflicts(g));
  // 2*Delta + 1 colours always suffice greedily, so this terminates.
  for (int k = max_degree_of(g) + 1;; ++k)
    if (colorer.colorable(k)) return k;
}

ExtValue eval_class(const Graph& g) {
  if (g.is_edgeless()) throw DomainError("class is undefined on edgeless graphs");
  const auto total = eval_total_chromatic(g).as_int64().value();
  return total - max_degree_of(g);
}

ExtValue eval_class_prime(const Graph& g) {
  if (g.is_edgeless()) throw DomainError("class' is undefined on edgeless graphs");
  const auto edge = eval_edge_chromatic(g).as_int64().value();
  return edge - max_degree_of(g) + 1;
}

}  // namespace graphstab
