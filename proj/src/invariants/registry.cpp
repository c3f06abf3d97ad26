#include <array>
#include <bit>
#include <string>
#include <unordered_map>

#include "graphstab/errors.hpp"
#include "graphstab/invariants.hpp"

namespace graphstab {

std::string_view to_string(Monotonicity m) {
  switch (m) {
    case Monotonicity::increasing:
      return "increasing";
    case Monotonicity::decreasing:
      return "decreasing";
    case Monotonicity::none:
      break;
  }
  return "none";
}

namespace {

using M = Monotonicity;

std::vector<InvariantDescriptor> build_registry() {
  const ExtValue inf = ExtValue::infinity();
  // id, evaluator, multiplicative, mining, induced, spanning, f(K1), f(null), can_be_zero
  std::vector<InvariantDescriptor> r = {
      {"min_degree", eval_min_degree, false, true, M::none, M::increasing, 0, inf, true},
      {"max_degree", eval_max_degree, false, false, M::increasing, M::increasing, 0, 0, true},
      {"girth", eval_girth, false, true, M::decreasing, M::decreasing, inf, inf, false},
      {"min_component_order", eval_min_component_order, false, true, M::none, M::increasing, 1, inf, false},
      {"chromatic", eval_chromatic, false, false, M::none, M::increasing, 1, 0, true},
      {"edge_chromatic", eval_edge_chromatic, false, false, M::none, M::increasing, 0, 0, true},
      {"total_chromatic", eval_total_chromatic, false, false, M::none, M::increasing, 1, 0, true},
      {"class_total", eval_class, false, false, M::none, M::none, std::nullopt, std::nullopt, false},
      {"class_edge", eval_class_prime, false, false, M::none, M::none, std::nullopt, std::nullopt, false},
      {"independent_sets", count_independent_sets, true, false, M::none, M::decreasing, 2, 1, false},
      {"spanning_forests", count_spanning_forests, true, false, M::none, M::increasing, 1, 1, false},
      {"matchings", count_matchings, true, false, M::none, M::increasing, 1, 1, false},
      {"perfect_matchings", count_perfect_matchings, true, false, M::none, M::increasing, 0, 1, true},
  };
  for (std::size_t i = 0; i < r.size(); ++i) r[i].slot = i;
  return r;
}

const std::vector<InvariantDescriptor>& registry_storage() {
  static const std::vector<InvariantDescriptor> r = build_registry();
  return r;
}

constexpr int kCacheMaxOrder = 11;
constexpr std::size_t kCacheMaxEntries = std::size_t{1} << 21;
constexpr std::int64_t kInfinite = -1;
constexpr std::int64_t kUndefined = -2;

// Order in the top bits, strict upper triangle (row-major by the larger
// endpoint) below; 4 + 55 bits for order 11.
std::uint64_t cache_key(const Graph& g) {
  std::uint64_t key = static_cast<std::uint64_t>(g.order()) << 59;
  int offset = 0;
  for (int j = 1; j < g.order(); ++j) {
    key |= (g.neighbor_mask(j) & ((std::uint64_t{1} << j) - 1)) << offset;
    offset += j;
  }
  return key;
}

struct EvaluationCache {
  std::vector<std::unordered_map<std::uint64_t, std::int64_t>> maps;
  std::size_t entries = 0;

  void clear() {
    maps.clear();
    entries = 0;
  }
};

EvaluationCache& thread_cache() {
  thread_local EvaluationCache cache;
  return cache;
}

}  // namespace

std::span<const InvariantDescriptor> registry() { return registry_storage(); }

const InvariantDescriptor& invariant(std::string_view id) {
  for (const InvariantDescriptor& d : registry_storage())
    if (d.id == id) return d;
  throw InputError("unknown invariant '" + std::string(id) + "'");
}

ExtValue evaluate(const InvariantDescriptor& inv, const Graph& g) {
  if (g.order() > kCacheMaxOrder) return inv.evaluate(g);
  EvaluationCache& cache = thread_cache();
  if (cache.entries >= kCacheMaxEntries) cache.clear();
  if (cache.maps.size() <= inv.slot) cache.maps.resize(inv.slot + 1);
  auto& map = cache.maps[inv.slot];
  const std::uint64_t key = cache_key(g);
  if (auto it = map.find(key); it != map.end()) {
    if (it->second == kInfinite) return ExtValue::infinity();
    if (it->second == kUndefined) throw DomainError(inv.id + " is undefined on this graph");
    return it->second;
  }
  try {
    ExtValue value = inv.evaluate(g);
    if (value.is_infinite()) {
      map.emplace(key, kInfinite);
      ++cache.entries;
    } else if (auto small = value.as_int64()) {
      map.emplace(key, *small);
      ++cache.entries;
    }
    return value;
  } catch (const DomainError&) {
    map.emplace(key, kUndefined);
    ++cache.entries;
    throw;
  }
}

void clear_evaluation_cache() { thread_cache().clear(); }

namespace {

bool respects(Monotonicity direction, const ExtValue& whole, const ExtValue& part) {
  if (direction == Monotonicity::increasing) return whole >= part;
  if (direction == Monotonicity::decreasing) return whole <= part;
  return true;
}

void check_budget(int universe, std::uint64_t cap, const char* what) {
  if (universe >= 63 || (std::uint64_t{1} << universe) > cap) {
    throw BudgetError(std::string(what) + ": 2^" + std::to_string(universe) +
                      " subsets exceed the cap of " + std::to_string(cap));
  }
}

}  // namespace

bool check_monotone_on_instance(const InvariantDescriptor& inv, const Graph& g,
                                Monotonicity direction, std::uint64_t max_subsets) {
  if (direction == Monotonicity::none) return true;
  check_budget(g.order(), max_subsets, "monotonicity check");
  try {
    const ExtValue whole = evaluate(inv, g);
    const std::uint64_t all = g.vertex_mask();
    for (std::uint64_t keep = all; keep != 0; keep = (keep - 1) & all) {
      if (!respects(direction, whole, evaluate(inv, g.induced(keep)))) return false;
    }
  } catch (const DomainError&) {
    return false;
  }
  return true;
}

bool check_spanning_monotone_on_instance(const InvariantDescriptor& inv, const Graph& g,
                                         Monotonicity direction, std::uint64_t max_subsets) {
  if (direction == Monotonicity::none) return true;
  const EdgeSet edges = g.edges();
  check_budget(static_cast<int>(edges.size()), max_subsets, "spanning monotonicity check");
  try {
    const ExtValue whole = evaluate(inv, g);
    const std::uint64_t all = edges.empty() ? 0 : (std::uint64_t{1} << edges.size()) - 1;
    for (std::uint64_t drop = 1; drop <= all; ++drop) {
      if (!respects(direction, whole, evaluate(inv, g.without_edge_indices(edges, drop)))) return false;
    }
  } catch (const DomainError&) {
    return false;
  }
  return true;
}

}  // namespace graphstab
