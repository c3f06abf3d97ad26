#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace graphstab {

/// Unordered vertex pair, stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Normalises the endpoint order. Does not reject loops; Graph does.
inline Edge make_edge(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

using VertexSet = std::vector<int>;
using EdgeSet = std::vector<Edge>;

/// Simple undirected graph on vertices 0..order-1.
///
/// Adjacency is held as one 64-bit row per vertex, so order is capped at 64.
/// Equality is label-sensitive: two isomorphic graphs with different labelings
/// compare unequal.
class Graph {
 public:
  static constexpr int kMaxOrder = 64;

  Graph() = default;
  explicit Graph(int order);
  Graph(int order, std::span<const Edge> edges);

  int order() const noexcept { return order_; }
  std::size_t edge_count() const noexcept { return edge_count_; }
  bool is_null() const noexcept { return order_ == 0; }
  bool is_edgeless() const noexcept { return edge_count_ == 0; }

  bool adjacent(int u, int v) const;
  std::uint64_t neighbor_mask(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(int v) const;
  std::uint64_t vertex_mask() const noexcept;

  /// Edges sorted lexicographically by (u, v).
  EdgeSet edges() const;

  /// Induced subgraph on `keep`, relabelled in ascending original order.
  Graph induced(std::uint64_t keep) const;
  /// Spanning subgraph without the edges at positions set in `drop`, where
  /// positions index `edge_list`, which must equal edges().
  Graph without_edge_indices(std::span<const Edge> edge_list, std::uint64_t drop) const;
  /// Spanning subgraph keeping only the positions set in `keep`.
  Graph with_edge_indices(std::span<const Edge> edge_list, std::uint64_t keep) const;

  bool is_complete() const noexcept;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int order_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<std::uint64_t> adj_;
};

/// Connected components together with their embeddings into the parent graph.
struct ComponentSplit {
  std::vector<Graph> parts;
  /// embeddings[i][local] is the parent label of vertex `local` of parts[i].
  std::vector<std::vector<int>> embeddings;
};

Graph delete_vertices(const Graph& g, const VertexSet& x);
Graph delete_edges(const Graph& g, const EdgeSet& y);
ComponentSplit components(const Graph& g);
Graph disjoint_union(std::span<const Graph> parts);
VertexSet open_neighborhood(const Graph& g, const VertexSet& w);
EdgeSet boundary_edges(const Graph& g, const VertexSet& u);

/// Bitmask of a vertex set after validating every label against `g`.
std::uint64_t to_mask(const Graph& g, const VertexSet& x);
VertexSet from_mask(std::uint64_t mask);

namespace graphs {
Graph complete(int n);
Graph cycle(int n);
Graph path(int n);
Graph empty(int n);
Graph star(int leaves);
}  // namespace graphs

}  // namespace graphstab
