#include "graphstab/graph.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "graphstab/errors.hpp"

namespace graphstab {

namespace {

void check_order(int order) {
  if (order < 0 || order > Graph::kMaxOrder) {
    throw InputError("graph order " + std::to_string(order) + " outside 0.." +
                     std::to_string(Graph::kMaxOrder));
  }
}

void check_label(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) {
    throw InputError("vertex " + std::to_string(v) + " not in graph of order " +
                     std::to_string(g.order()));
  }
}

}  // namespace

Graph::Graph(int order) : order_(order) {
  check_order(order);
  adj_.assign(static_cast<std::size_t>(order), 0);
}

Graph::Graph(int order, std::span<const Edge> edges) : Graph(order) {
  for (const Edge& raw : edges) {
    const Edge e = make_edge(raw.u, raw.v);
    if (e.u < 0 || e.v >= order) {
      throw InputError("edge (" + std::to_string(raw.u) + "," + std::to_string(raw.v) +
                       ") has an endpoint outside 0.." + std::to_string(order - 1));
    }
    if (e.u == e.v) throw InputError("self-loop at vertex " + std::to_string(e.u));
    auto& row = adj_[static_cast<std::size_t>(e.u)];
    if (row >> e.v & 1U) {
      throw InputError("duplicate edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
    }
    row |= std::uint64_t{1} << e.v;
    adj_[static_cast<std::size_t>(e.v)] |= std::uint64_t{1} << e.u;
    ++edge_count_;
  }
}

bool Graph::adjacent(int u, int v) const {
  check_label(*this, u);
  check_label(*this, v);
  return (adj_[static_cast<std::size_t>(u)] >> v) & 1U;
}

int Graph::degree(int v) const { return std::popcount(adj_[static_cast<std::size_t>(v)]); }

std::uint64_t Graph::vertex_mask() const noexcept {
  return order_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << order_) - 1;
}

EdgeSet Graph::edges() const {
  EdgeSet out;
  out.reserve(edge_count_);
  for (int u = 0; u < order_; ++u) {
    std::uint64_t higher = adj_[static_cast<std::size_t>(u)] & ~((std::uint64_t{2} << u) - 1);
    while (higher) {
      const int v = std::countr_zero(higher);
      higher &= higher - 1;
      out.push_back({u, v});
    }
  }
  return out;
}

Graph Graph::induced(std::uint64_t keep) const {
  keep &= vertex_mask();
  Graph h;
  h.order_ = std::popcount(keep);
  h.adj_.resize(static_cast<std::size_t>(h.order_));
  // pdep-style compaction: new label of v is popcount(keep below v).
  int i = 0;
  std::size_t twice_edges = 0;
  for (std::uint64_t rest = keep; rest; rest &= rest - 1, ++i) {
    const int v = std::countr_zero(rest);
    std::uint64_t nb = adj_[static_cast<std::size_t>(v)] & keep;
    std::uint64_t row = 0;
    while (nb) {
      const int w = std::countr_zero(nb);
      nb &= nb - 1;
      row |= std::uint64_t{1} << std::popcount(keep & ((std::uint64_t{1} << w) - 1));
    }
    h.adj_[static_cast<std::size_t>(i)] = row;
    twice_edges += static_cast<std::size_t>(std::popcount(row));
  }
  h.edge_count_ = twice_edges / 2;
  return h;
}

Graph Graph::without_edge_indices(std::span<const Edge> edge_list, std::uint64_t drop) const {
  Graph h = *this;
  while (drop) {
    const int i = std::countr_zero(drop);
    drop &= drop - 1;
    const Edge e = edge_list[static_cast<std::size_t>(i)];
    h.adj_[static_cast<std::size_t>(e.u)] &= ~(std::uint64_t{1} << e.v);
    h.adj_[static_cast<std::size_t>(e.v)] &= ~(std::uint64_t{1} << e.u);
    --h.edge_count_;
  }
  return h;
}

Graph Graph::with_edge_indices(std::span<const Edge> edge_list, std::uint64_t keep) const {
  Graph h(order_);
  while (keep) {
    const int i = std::countr_zero(keep);
    keep &= keep - 1;
    const Edge e = edge_list[static_cast<std::size_t>(i)];
    h.adj_[static_cast<std::size_t>(e.u)] |= std::uint64_t{1} << e.v;
    h.adj_[static_cast<std::size_t>(e.v)] |= std::uint64_t{1} << e.u;
    ++h.edge_count_;
  }
  return h;
}

bool Graph::is_complete() const noexcept {
  const auto n = static_cast<std::size_t>(order_);
  return edge_count_ == n * (n - (n > 0 ? 1 : 0)) / 2;
}

std::uint64_t to_mask(const Graph& g, const VertexSet& x) {
  std::uint64_t mask = 0;
  for (int v : x) {
    check_label(g, v);
    mask |= std::uint64_t{1} << v;
  }
  return mask;
}

VertexSet from_mask(std::uint64_t mask) {
  VertexSet out;
  while (mask) {
    out.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return out;
}

Graph delete_vertices(const Graph& g, const VertexSet& x) {
  return g.induced(g.vertex_mask() & ~to_mask(g, x));
}

Graph delete_edges(const Graph& g, const EdgeSet& y) {
  const EdgeSet all = g.edges();
  std::vector<bool> drop(all.size(), false);
  for (const Edge& raw : y) {
    const Edge e = make_edge(raw.u, raw.v);
    const auto it = std::lower_bound(all.begin(), all.end(), e);
    if (it == all.end() || *it != e) {
      throw InputError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                       ") not in graph");
    }
    drop[static_cast<std::size_t>(it - all.begin())] = true;
  }
  EdgeSet kept;
  for (std::size_t i = 0; i < all.size(); ++i)
    if (!drop[i]) kept.push_back(all[i]);
  return Graph(g.order(), kept);
}

ComponentSplit components(const Graph& g) {
  ComponentSplit split;
  std::uint64_t unseen = g.vertex_mask();
  while (unseen) {
    const std::uint64_t start = unseen & (~unseen + 1);
    std::uint64_t comp = start;
    std::uint64_t frontier = start;
    while (frontier) {
      std::uint64_t next = 0;
      for (std::uint64_t f = frontier; f; f &= f - 1) next |= g.neighbor_mask(std::countr_zero(f));
      frontier = next & ~comp;
      comp |= next;
    }
    unseen &= ~comp;
    split.parts.push_back(g.induced(comp));
    split.embeddings.push_back(from_mask(comp));
  }
  return split;
}

Graph disjoint_union(std::span<const Graph> parts) {
  int total = 0;
  for (const Graph& p : parts) total += p.order();
  EdgeSet edges;
  int offset = 0;
  for (const Graph& p : parts) {
    for (const Edge& e : p.edges()) edges.push_back({e.u + offset, e.v + offset});
    offset += p.order();
  }
  return Graph(total, edges);
}

VertexSet open_neighborhood(const Graph& g, const VertexSet& w) {
  std::uint64_t nb = 0;
  for (std::uint64_t m = to_mask(g, w); m; m &= m - 1) nb |= g.neighbor_mask(std::countr_zero(m));
  return from_mask(nb);
}

EdgeSet boundary_edges(const Graph& g, const VertexSet& u) {
  const std::uint64_t inside = to_mask(g, u);
  EdgeSet out;
  for (const Edge& e : g.edges()) {
    if (((inside >> e.u) & 1U) != ((inside >> e.v) & 1U)) out.push_back(e);
  }
  return out;
}

namespace graphs {

Graph complete(int n) {
  EdgeSet e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.push_back({u, v});
  return Graph(n, e);
}

Graph cycle(int n) {
  if (n < 3) throw InputError("cycle needs at least 3 vertices");
  EdgeSet e;
  for (int i = 0; i < n; ++i) e.push_back(make_edge(i, (i + 1) % n));
  return Graph(n, e);
}

Graph path(int n) {
  EdgeSet e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return Graph(n, e);
}

Graph empty(int n) { return Graph(n); }

Graph star(int leaves) {
  EdgeSet e;
  for (int i = 1; i <= leaves; ++i) e.push_back({0, i});
  return Graph(leaves + 1, e);
}

}  // namespace graphs

}  // namespace graphstab
