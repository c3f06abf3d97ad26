#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "graphstab/ext_value.hpp"
#include "graphstab/graph.hpp"

namespace graphstab {

enum class Monotonicity { increasing, decreasing, none };

std::string_view to_string(Monotonicity m);

/// A graph invariant plus the algebraic facts the decomposition and bound
/// calculators rely on.
///
/// Monotonicity uses the convention "increasing: f(G) >= f(H) for every
/// induced (resp. spanning) subgraph H". `value_on_k1` / `value_on_null` are
/// empty for invariants that are undefined there (class, class').
struct InvariantDescriptor {
  std::string id;
  std::function<ExtValue(const Graph&)> evaluate;
  bool multiplicative = false;
  bool mining = false;
  Monotonicity monotone_induced = Monotonicity::none;
  Monotonicity monotone_spanning = Monotonicity::none;
  std::optional<ExtValue> value_on_k1;
  std::optional<ExtValue> value_on_null;
  bool can_be_zero = true;
  /// Position in registry(); keys the evaluation cache.
  std::size_t slot = 0;
};

ExtValue eval_min_degree(const Graph& g);
ExtValue eval_max_degree(const Graph& g);
ExtValue eval_girth(const Graph& g);
ExtValue eval_min_component_order(const Graph& g);
ExtValue eval_chromatic(const Graph& g);
ExtValue eval_edge_chromatic(const Graph& g);
ExtValue eval_total_chromatic(const Graph& g);
/// total chromatic number minus max degree; DomainError on edgeless graphs.
ExtValue eval_class(const Graph& g);
/// edge chromatic number minus max degree plus one; DomainError on edgeless graphs.
ExtValue eval_class_prime(const Graph& g);
ExtValue count_independent_sets(const Graph& g);
ExtValue count_spanning_forests(const Graph& g);
ExtValue count_matchings(const Graph& g);
ExtValue count_perfect_matchings(const Graph& g);

/// Whether a proper colouring with `k` colours exists. Exposed for tests.
bool vertex_colorable(const Graph& g, int k);
bool edge_colorable(const Graph& g, int k);
bool total_colorable(const Graph& g, int k);

/// All registered invariants in their stable order.
std::span<const InvariantDescriptor> registry();
/// Throws InputError for unknown ids.
const InvariantDescriptor& invariant(std::string_view id);

/// Evaluates through a per-thread memo for graphs of order <= 11.
ExtValue evaluate(const InvariantDescriptor& inv, const Graph& g);

/// Drops this thread's memo.
void clear_evaluation_cache();

/// True iff f(g) >= f(H) (increasing) or f(g) <= f(H) (decreasing) for every
/// nonempty induced subgraph H of g. The null graph is excluded: its
/// conventional value (1 or +inf) is an algebraic identity, not a measurement.
/// A domain error on any H makes the check fail. BudgetError if 2^order
/// exceeds `max_subsets`.
bool check_monotone_on_instance(const InvariantDescriptor& inv, const Graph& g,
                                Monotonicity direction, std::uint64_t max_subsets = 1U << 20);

/// Same check over every spanning subgraph (edge deletions), edgeless included.
bool check_spanning_monotone_on_instance(const InvariantDescriptor& inv, const Graph& g,
                                         Monotonicity direction,
                                         std::uint64_t max_subsets = 1U << 20);

}  // namespace graphstab
