#include "graphstab/decomposition.hpp"

#include <array>
#include <functional>

#include "graphstab/errors.hpp"

namespace graphstab {

std::string_view to_string(Side s) { return s == Side::vertex ? "vertex" : "edge"; }

Side parse_side(std::string_view text) {
  if (text == "vertex") return Side::vertex;
  if (text == "edge") return Side::edge;
  throw InputError("unknown side '" + std::string(text) + "'");
}

namespace {

/// Shared setup: parent value, per-component f values, and stabilities on the
/// requested side.
struct Instance {
  const ComponentSplit& split;
  const InvariantDescriptor& f;
  const SearchPolicy& policy;
  Side side;
  UnionFormulaResult result;

  Instance(std::string_view tag, const ComponentSplit& s, const InvariantDescriptor& inv,
           const SearchPolicy& p, Side sd)
      : split(s), f(inv), policy(p), side(sd) {
    result.tag = std::string(tag);
    // Only multiplicative and mining invariants pass any gate here, and those
    // are total; skip evaluating class-like invariants that may be undefined.
    if (f.multiplicative || f.mining) result.parent_value = evaluate(f, disjoint_union(split.parts));
  }

  std::size_t k() const { return split.parts.size(); }

  UnionFormulaResult reject(std::string reason) {
    result.hypotheses_satisfied = false;
    result.reason = std::move(reason);
    result.value.reset();
    return std::move(result);
  }

  UnionFormulaResult accept(std::string case_taken, ExtNat value) {
    result.hypotheses_satisfied = true;
    result.case_taken = std::move(case_taken);
    result.value = value;
    return std::move(result);
  }

  void fill_components() {
    for (const Graph& h : split.parts) {
      ComponentRecord rec;
      rec.order = h.order();
      rec.f_value = evaluate(f, h);
      rec.stability = (side == Side::vertex ? vertex_stability(h, f, policy) : edge_stability(h, f, policy)).value;
      result.components.push_back(rec);
    }
  }

  ExtNat threshold(std::size_t t) {
    auto& rec = result.components[t];
    if (!rec.threshold) {
      const Graph& h = split.parts[t];
      rec.threshold = (side == Side::vertex ? threshold_vertex_stability(h, f, result.parent_value, policy)
                                            : threshold_edge_stability(h, f, result.parent_value, policy))
                          .value;
    }
    return *rec.threshold;
  }

  bool in_i(std::size_t j) const { return result.components[j].f_value == result.parent_value; }
  bool in_j(std::size_t j) const { return result.components[j].stability.is_infinite(); }

  bool j_is_everything() const {
    for (std::size_t j = 0; j < k(); ++j)
      if (!in_j(j)) return false;
    return true;
  }

  bool i_equals_j() const {
    for (std::size_t j = 0; j < k(); ++j)
      if (in_i(j) != in_j(j)) return false;
    return true;
  }

  /// Every component passes `check` for `direction`.
  bool components_monotone(Monotonicity direction,
                           bool (*check)(const InvariantDescriptor&, const Graph&, Monotonicity, std::uint64_t)) {
    for (const Graph& h : split.parts)
      if (!check(f, h, direction, policy.max_subset_universe)) return false;
    return true;
  }
};

ExtNat order_of(const ComponentRecord& rec) { return ExtNat(static_cast<std::size_t>(rec.order)); }

}  // namespace

UnionFormulaResult vs_union_multiplicative_nonzero_nonone(const ComponentSplit& split,
                                                          const InvariantDescriptor& f,
                                                          const SearchPolicy& policy) {
  Instance in("th4", split, f, policy, Side::vertex);
  if (!f.multiplicative) return in.reject("invariant is not multiplicative");
  for (const Graph& h : split.parts) {
    const ExtValue v = evaluate(f, h);
    if (v.is_zero() || v.is_one()) return in.reject("a component has value 0 or 1");
  }
  in.fill_components();
  ExtNat best = ExtNat::infinity();
  for (const ComponentRecord& rec : in.result.components) best = min(best, min(rec.stability, order_of(rec)));
  return in.accept("min_over_components", best);
}

UnionFormulaResult vs_union_multiplicative_general(const ComponentSplit& split, const InvariantDescriptor& f,
                                                   const SearchPolicy& policy) {
  Instance in("th5", split, f, policy, Side::vertex);
  if (!f.multiplicative) return in.reject("invariant is not multiplicative");
  in.fill_components();
  const auto& comps = in.result.components;
  if (in.j_is_everything()) return in.accept("all_infinite", ExtNat::infinity());

  bool zero_seen = false;
  ExtNat zero_sum = 0;
  for (const ComponentRecord& rec : comps) {
    if (rec.f_value.is_zero()) {
      zero_seen = true;
      zero_sum = zero_sum + min(rec.stability, order_of(rec));
    }
  }
  if (zero_seen) return in.accept("zero_components", zero_sum);

  ExtNat best = ExtNat::infinity();
  for (std::size_t j = 0; j < comps.size(); ++j) {
    if (!in.in_j(j)) {
      best = min(best, comps[j].stability);
    } else if (!comps[j].f_value.is_one()) {
      best = min(best, order_of(comps[j]));
    }
  }
  return in.accept("otherwise", best);
}

UnionFormulaResult vs_union_mining_increasing(const ComponentSplit& split, const InvariantDescriptor& f,
                                              const SearchPolicy& policy) {
  Instance in("th6", split, f, policy, Side::vertex);
  if (!f.mining) return in.reject("invariant is not mining");
  if (!in.components_monotone(Monotonicity::increasing, check_monotone_on_instance))
    return in.reject("a component is not monotone increasing on its induced subgraphs");
  in.fill_components();
  const auto& comps = in.result.components;
  if (in.j_is_everything()) return in.accept("all_infinite", ExtNat::infinity());

  ExtNat best = ExtNat::infinity();
  if (in.i_equals_j()) {
    ExtNat removal = 0;
    for (std::size_t i = 0; i < comps.size(); ++i)
      if (in.in_i(i)) removal = removal + order_of(comps[i]);
    best = removal;
    for (std::size_t t = 0; t < comps.size(); ++t)
      if (!in.in_i(t)) best = min(best, in.threshold(t));
    return in.accept("I_equals_J", best);
  }
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (in.in_i(i) && !in.in_j(i)) best = min(best, comps[i].stability);
    if (!in.in_i(i) && !in.in_j(i)) best = min(best, in.threshold(i));
  }
  return in.accept("otherwise", best);
}

UnionFormulaResult vs_union_mining_decreasing(const ComponentSplit& split, const InvariantDescriptor& f,
                                              const SearchPolicy& policy) {
  Instance in("th118", split, f, policy, Side::vertex);
  if (!f.mining) return in.reject("invariant is not mining");
  if (!in.components_monotone(Monotonicity::decreasing, check_monotone_on_instance))
    return in.reject("a component is not monotone decreasing on its induced subgraphs");
  in.fill_components();
  const auto& comps = in.result.components;
  if (in.j_is_everything()) return in.accept("all_infinite", ExtNat::infinity());
  ExtNat total = 0;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (!in.in_i(i)) continue;
    total = total + (in.in_j(i) ? order_of(comps[i]) : comps[i].stability);
  }
  return in.accept("sum", total);
}

UnionFormulaResult es_union_multiplicative(const ComponentSplit& split, const InvariantDescriptor& f,
                                           const SearchPolicy& policy) {
  Instance in("th11", split, f, policy, Side::edge);
  if (!f.multiplicative) return in.reject("invariant is not multiplicative");
  if (in.result.parent_value.is_zero()) return in.reject("f(G) = 0");
  in.fill_components();
  ExtNat best = ExtNat::infinity();
  for (const ComponentRecord& rec : in.result.components) best = min(best, rec.stability);
  return in.accept(best.is_infinite() ? "no_finite_component" : "min_finite", best);
}

UnionFormulaResult es_union_mining_decreasing(const ComponentSplit& split, const InvariantDescriptor& f,
                                              const SearchPolicy& policy) {
  Instance in("th12", split, f, policy, Side::edge);
  if (!f.mining) return in.reject("invariant is not mining");
  if (!in.components_monotone(Monotonicity::decreasing, check_spanning_monotone_on_instance))
    return in.reject("a component is not monotone decreasing on its spanning subgraphs");
  in.fill_components();
  const auto& comps = in.result.components;
  for (std::size_t i = 0; i < comps.size(); ++i)
    if (in.in_i(i) && in.in_j(i)) return in.accept("I_meets_J", ExtNat::infinity());
  ExtNat total = 0;
  for (std::size_t i = 0; i < comps.size(); ++i)
    if (in.in_i(i)) total = total + comps[i].stability;
  return in.accept("sum", total);
}

UnionFormulaResult es_union_mining_increasing(const ComponentSplit& split, const InvariantDescriptor& f,
                                              const SearchPolicy& policy) {
  Instance in("th116", split, f, policy, Side::edge);
  if (!f.mining) return in.reject("invariant is not mining");
  if (!in.components_monotone(Monotonicity::increasing, check_spanning_monotone_on_instance))
    return in.reject("a component is not monotone increasing on its spanning subgraphs");
  in.fill_components();
  const auto& comps = in.result.components;
  if (in.j_is_everything()) return in.accept("all_infinite", ExtNat::infinity());

  ExtNat best = ExtNat::infinity();
  if (in.i_equals_j()) {
    for (std::size_t t = 0; t < comps.size(); ++t)
      if (!in.in_i(t)) best = min(best, in.threshold(t));
    return in.accept("I_equals_J", best);
  }
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (in.in_i(i) && !in.in_j(i)) best = min(best, comps[i].stability);
    if (!in.in_i(i) && !in.in_j(i)) best = min(best, in.threshold(i));
  }
  return in.accept("otherwise", best);
}

namespace {

constexpr std::array<std::string_view, 7> kDecompositionTags = {"th4", "th5", "th6", "th118",
                                                                "th11", "th12", "th116"};

}  // namespace

std::span<const std::string_view> decomposition_tags() { return kDecompositionTags; }

Side decomposition_side(std::string_view tag) {
  if (tag == "th4" || tag == "th5" || tag == "th6" || tag == "th118") return Side::vertex;
  if (tag == "th11" || tag == "th12" || tag == "th116") return Side::edge;
  throw InputError("unknown decomposition theorem '" + std::string(tag) + "'");
}

UnionFormulaResult decompose(std::string_view tag, const ComponentSplit& split, const InvariantDescriptor& f,
                             const SearchPolicy& policy) {
  if (tag == "th4") return vs_union_multiplicative_nonzero_nonone(split, f, policy);
  if (tag == "th5") return vs_union_multiplicative_general(split, f, policy);
  if (tag == "th6") return vs_union_mining_increasing(split, f, policy);
  if (tag == "th118") return vs_union_mining_decreasing(split, f, policy);
  if (tag == "th11") return es_union_multiplicative(split, f, policy);
  if (tag == "th12") return es_union_mining_decreasing(split, f, policy);
  if (tag == "th116") return es_union_mining_increasing(split, f, policy);
  throw InputError("unknown decomposition theorem '" + std::string(tag) + "'");
}

}  // namespace graphstab
