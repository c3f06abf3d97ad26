#include "graphstab/stability.hpp"

#include <bit>
#include <optional>
#include <string>
#include <vector>

#include "graphstab/errors.hpp"

namespace graphstab {

std::string_view to_string(SubsetRange r) { return r == SubsetRange::all ? "all" : "proper"; }

SubsetRange parse_subset_range(std::string_view text) {
  if (text == "proper") return SubsetRange::proper;
  if (text == "all") return SubsetRange::all;
  throw InputError("unknown subset range '" + std::string(text) + "'");
}

namespace {

void check_budget(std::size_t universe, const SearchPolicy& policy, const char* what) {
  if (universe >= 63 || (std::uint64_t{1} << universe) > policy.max_subset_universe) {
    throw BudgetError(std::string(what) + ": 2^" + std::to_string(universe) +
                      " candidate subsets exceed the cap of " +
                      std::to_string(policy.max_subset_universe));
  }
}

/// First subset (as a bitmask over positions 0..universe-1) of the smallest
/// size in [min_size, max_size] satisfying `hit`, enumerating each size in
/// lexicographic order of sorted positions.
template <typename Predicate>
std::optional<std::uint64_t> first_subset(int universe, int min_size, int max_size, Predicate&& hit) {
  std::vector<int> idx;
  for (int size = min_size; size <= max_size; ++size) {
    if (size == 0) {
      if (hit(std::uint64_t{0})) return std::uint64_t{0};
      continue;
    }
    if (size > universe) break;
    idx.resize(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
      std::uint64_t mask = 0;
      for (int i : idx) mask |= std::uint64_t{1} << i;
      if (hit(mask)) return mask;
      int i = size - 1;
      while (i >= 0 && idx[static_cast<std::size_t>(i)] == universe - size + i) --i;
      if (i < 0) break;
      ++idx[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < size; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return std::nullopt;
}

bool scored_as_changed(const InvariantDescriptor& f, const Graph& h, const ExtValue& base,
                       const SearchPolicy& policy) {
  try {
    return evaluate(f, h) != base;
  } catch (const DomainError&) {
    return policy.on_domain_error == DomainErrorPolicy::treat_as_changed;
  }
}

bool scored_below(const InvariantDescriptor& f, const Graph& h, const ExtValue& theta,
                  const SearchPolicy& policy) {
  try {
    return evaluate(f, h) < theta;
  } catch (const DomainError&) {
    return policy.on_domain_error == DomainErrorPolicy::treat_as_changed;
  }
}

EdgeSet edges_from_mask(const EdgeSet& edges, std::uint64_t mask) {
  EdgeSet out;
  for (; mask; mask &= mask - 1) out.push_back(edges[static_cast<std::size_t>(std::countr_zero(mask))]);
  return out;
}

template <typename Predicate>
StabilityResult vertex_search(const Graph& g, const SearchPolicy& policy, int min_size, Predicate&& hit) {
  check_budget(static_cast<std::size_t>(g.order()), policy, "vertex stability search");
  const int n = g.order();
  const int max_size = policy.vertex_subset_range == SubsetRange::all ? n : n - 1;
  const std::uint64_t all = g.vertex_mask();
  const auto found = first_subset(n, min_size, max_size,
                                  [&](std::uint64_t x) { return hit(g.induced(all & ~x)); });
  if (!found) return {};
  return {ExtNat(static_cast<std::size_t>(std::popcount(*found))), from_mask(*found)};
}

template <typename Predicate>
StabilityResult edge_search(const Graph& g, const SearchPolicy& policy, int min_size, Predicate&& hit) {
  const EdgeSet edges = g.edges();
  check_budget(edges.size(), policy, "edge stability search");
  const int m = static_cast<int>(edges.size());
  const auto found = first_subset(m, min_size, m, [&](std::uint64_t y) {
    return hit(g.without_edge_indices(edges, y));
  });
  if (!found) return {};
  return {ExtNat(static_cast<std::size_t>(std::popcount(*found))), edges_from_mask(edges, *found)};
}

}  // namespace

StabilityResult vertex_stability(const Graph& g, const InvariantDescriptor& f, const SearchPolicy& policy) {
  const ExtValue base = evaluate(f, g);
  return vertex_search(g, policy, 1, [&](const Graph& h) { return scored_as_changed(f, h, base, policy); });
}

StabilityResult edge_stability(const Graph& g, const InvariantDescriptor& f, const SearchPolicy& policy) {
  // No edge set to delete, so infinite for every f, even one undefined here.
  if (g.is_edgeless()) return {};
  const ExtValue base = evaluate(f, g);
  return edge_search(g, policy, 1, [&](const Graph& h) { return scored_as_changed(f, h, base, policy); });
}

StabilityResult threshold_vertex_stability(const Graph& g, const InvariantDescriptor& f,
                                           const ExtValue& theta, const SearchPolicy& policy) {
  return vertex_search(g, policy, 0, [&](const Graph& h) { return scored_below(f, h, theta, policy); });
}

StabilityResult threshold_edge_stability(const Graph& g, const InvariantDescriptor& f,
                                         const ExtValue& theta, const SearchPolicy& policy) {
  return edge_search(g, policy, 0, [&](const Graph& h) { return scored_below(f, h, theta, policy); });
}

CoveringResult covering_number(const Graph& g, const InvariantDescriptor& f, const SearchPolicy& policy) {
  const EdgeSet edges = g.edges();
  check_budget(edges.size(), policy, "covering number");
  if (edges.empty()) return {};
  const ExtValue base = evaluate(f, g);
  const int m = static_cast<int>(edges.size());
  const std::uint64_t all = m == 0 ? 0 : (std::uint64_t{1} << m) - 1;

  std::vector<std::uint64_t> same;
  for (std::uint64_t keep = 1; keep <= all; ++keep) {
    if (!scored_as_changed(f, g.with_edge_indices(edges, keep), base, policy)) same.push_back(keep);
  }

  CoveringResult result;
  result.covered_subgraphs = same.size();
  if (same.empty()) return result;
  const auto cover = first_subset(m, 1, m, [&](std::uint64_t y) {
    for (std::uint64_t h : same)
      if ((h & y) == 0) return false;
    return true;
  });
  // E(G) itself meets every nonempty H, so a cover always exists.
  result.value = static_cast<std::size_t>(std::popcount(*cover));
  result.witness = edges_from_mask(edges, *cover);
  return result;
}

}  // namespace graphstab
