#pragma once

#include <cstdint>
#include <string_view>
#include <variant>

#include "graphstab/ext_value.hpp"
#include "graphstab/graph.hpp"
#include "graphstab/invariants.hpp"

namespace graphstab {

/// Which vertex subsets X a vertex search may delete. `proper` excludes
/// X = V(G); `all` admits it (G - V(G) is the null graph).
enum class SubsetRange { proper, all };

/// How a DomainError on a deleted subgraph is scored when f(G) itself is
/// defined.
enum class DomainErrorPolicy { treat_as_changed, treat_as_unchanged };

struct SearchPolicy {
  SubsetRange vertex_subset_range = SubsetRange::proper;
  /// Cap on 2^(universe size) for any single search.
  std::uint64_t max_subset_universe = std::uint64_t{1} << 20;
  DomainErrorPolicy on_domain_error = DomainErrorPolicy::treat_as_changed;
};

std::string_view to_string(SubsetRange r);
SubsetRange parse_subset_range(std::string_view text);

using Witness = std::variant<std::monostate, VertexSet, EdgeSet>;

/// A stability number with the first minimum-size subset found. Subsets are
/// tried by ascending size, then lexicographically by sorted labels (vertex
/// labels, or edge positions in Graph::edges()), so the witness is
/// reproducible. Witness is monostate when value is infinite.
struct StabilityResult {
  ExtNat value = ExtNat::infinity();
  Witness witness;
};

/// min |X| with f(G - X) != f(G); infinite if no subset in range changes f.
StabilityResult vertex_stability(const Graph& g, const InvariantDescriptor& f,
                                 const SearchPolicy& policy = {});
/// min |Y| over Y subset of E(G) with f(G - Y) != f(G).
StabilityResult edge_stability(const Graph& g, const InvariantDescriptor& f,
                               const SearchPolicy& policy = {});

/// min |X| with f(G - X) < theta (X = {} included).
StabilityResult threshold_vertex_stability(const Graph& g, const InvariantDescriptor& f,
                                           const ExtValue& theta, const SearchPolicy& policy = {});
StabilityResult threshold_edge_stability(const Graph& g, const InvariantDescriptor& f,
                                         const ExtValue& theta, const SearchPolicy& policy = {});

struct CoveringResult {
  std::size_t value = 0;
  EdgeSet witness;
  /// Number of nonempty spanning subgraphs H with f(H) = f(G).
  std::size_t covered_subgraphs = 0;
};

/// Smallest edge set meeting E(H) for every nonempty spanning subgraph H of G
/// with f(H) = f(G); zero when there is no such H.
CoveringResult covering_number(const Graph& g, const InvariantDescriptor& f,
                               const SearchPolicy& policy = {});

}  // namespace graphstab
