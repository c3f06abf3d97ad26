#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "graphstab/ext_value.hpp"
#include "graphstab/graph.hpp"
#include "graphstab/invariants.hpp"
#include "graphstab/stability.hpp"

namespace graphstab {

enum class BoundKind { upper, lower, equality };

std::string_view to_string(BoundKind k);

/// One bound or relation evaluated on one instance with fixed parameters.
///
/// `bound` is present iff `applicable`. For upper bounds it caps the
/// stability number from above, for lower bounds from below, and for
/// equality relations it is the predicted value.
struct BoundReport {
  std::string name;
  BoundKind kind = BoundKind::upper;
  bool applicable = false;
  std::string reason;
  std::optional<ExtNat> bound;
  nlohmann::json parameters = nlohmann::json::object();

  /// Family lower bound only: (1/l) * sum es(H_i), exact, and
  /// sum es(H_i) - m(l-1), which may be negative.
  std::optional<ExtValue> fractional_bound;
  std::optional<ExtNat> additive_bound;
  bool additive_nonpositive = false;

  /// Relations only: the stability number the relation constrains.
  std::optional<ExtNat> observed;
  /// Set when the instance has total chromatic number above max degree + 2.
  bool conjecture_counterexample = false;
};

/// |X| + vs(G - X) for a proper X.
BoundReport ub_vs_lemma1(const Graph& g, const VertexSet& x, const InvariantDescriptor& f,
                         const SearchPolicy& policy = {});
/// |N(V(H)) \ V(H)| + vs(H) for H induced on `h_vertices`; f multiplicative, never zero.
BoundReport ub_vs_induced_multiplicative(const Graph& g, const VertexSet& h_vertices,
                                         const InvariantDescriptor& f, const SearchPolicy& policy = {});
/// min degree + 1 for non-complete G; f multiplicative, never zero, f(K1) != 1.
BoundReport ub_vs_min_degree(const Graph& g, const InvariantDescriptor& f);
/// vs(H) + |X| where G - X splits into H (components attaining the minimum f)
/// and a nonempty remainder H'; f mining.
BoundReport ub_vs_mining_split(const Graph& g, const VertexSet& x, const InvariantDescriptor& f,
                               const SearchPolicy& policy = {});
/// |Y| + es(G - Y).
BoundReport ub_es_lemma2(const Graph& g, const EdgeSet& y, const InvariantDescriptor& f,
                         const SearchPolicy& policy = {});
/// 1 + |E(G)| - |E(H)| for a spanning H with es(H) = 1.
BoundReport ub_es_spanning(const Graph& g, const EdgeSet& h_edges, const InvariantDescriptor& f,
                           const SearchPolicy& policy = {});
/// deg(u) under one of the three sign conditions on f(G - u), f(G), f(K1).
BoundReport ub_es_vertex_incident(const Graph& g, int u, const InvariantDescriptor& f);
/// min over edges xy with f(G - {x, y}) != 0 of d(x) + d(y) - 1; needs f(K2) != f(2K1).
BoundReport ub_es_edge_pair(const Graph& g, const InvariantDescriptor& f, const SearchPolicy& policy = {});
/// es(H) + |E(V(H), V(G) \ V(H))| for H induced on `h_vertices`, f multiplicative, f(G - V(H)) != 0.
BoundReport ub_es_subgraph_multiplicative(const Graph& g, const VertexSet& h_vertices,
                                          const InvariantDescriptor& f, const SearchPolicy& policy = {});
/// Same bound for mining f when f(H) < f(G - V(H)).
BoundReport ub_es_subgraph_mining(const Graph& g, const VertexSet& h_vertices, const InvariantDescriptor& f,
                                  const SearchPolicy& policy = {});
/// Lower bounds from a family of spanning subgraphs with f(H_i) = f(G).
/// Members may repeat; m counts edges in two or more members, l is the
/// largest membership count of any edge.
BoundReport lb_es_family(const Graph& g, std::span<const EdgeSet> family, const InvariantDescriptor& f,
                         const SearchPolicy& policy = {});
/// Total chromatic number versus max degree: a lower bound on vs when
/// chi'' = Delta + 1, an equality with min(vs_Delta, vs_class) when
/// chi'' = Delta + 2.
BoundReport relation_total_chromatic(const Graph& g, const SearchPolicy& policy = {});
/// Edge chromatic analogue with class'.
BoundReport relation_edge_chromatic(const Graph& g, const SearchPolicy& policy = {});

/// Bound tags handled by tightest_bound().
std::span<const std::string_view> bound_tags();
/// Vertex or edge stability is the quantity the tag bounds.
bool bound_is_vertex_side(std::string_view tag);

/// Enumerates every parameter choice for `tag` on `g` (all proper X, all
/// nonempty induced H, all vertices u, all spanning H, all families of at
/// most three members, ...) and returns the tightest applicable report.
/// parameters["choices"] holds the number of applicable choices. For the
/// family bound, the best fractional and additive bounds are tracked
/// separately because they can come from different families.
BoundReport tightest_bound(std::string_view tag, const Graph& g, const InvariantDescriptor& f,
                           const SearchPolicy& policy = {});

}  // namespace graphstab
