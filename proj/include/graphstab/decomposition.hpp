#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "graphstab/ext_value.hpp"
#include "graphstab/graph.hpp"
#include "graphstab/invariants.hpp"
#include "graphstab/stability.hpp"

namespace graphstab {

/// Brute-force quantities of one component H_j that a formula consumed.
struct ComponentRecord {
  int order = 0;
  ExtValue f_value;
  /// vs_f(H_j) or es_f(H_j), depending on the formula's side.
  ExtNat stability = ExtNat::infinity();
  /// Minimum deletions driving f(H_j) strictly below f(G), when used.
  std::optional<ExtNat> threshold;
};

/// Value of a component-wise formula for the stability number of a disjoint
/// union. `value` is set iff the formula's hypotheses hold on this instance.
struct UnionFormulaResult {
  std::string tag;
  bool hypotheses_satisfied = false;
  std::string reason;
  std::string case_taken;
  std::optional<ExtNat> value;
  ExtValue parent_value;
  std::vector<ComponentRecord> components;
};

enum class Side { vertex, edge };

std::string_view to_string(Side s);
Side parse_side(std::string_view text);

/// f multiplicative, every f(H_j) outside {0, 1}:
/// vs = min_j min(vs(H_j), |V(H_j)|).
UnionFormulaResult vs_union_multiplicative_nonzero_nonone(const ComponentSplit& split,
                                                          const InvariantDescriptor& f,
                                                          const SearchPolicy& policy = {});

/// f multiplicative; I = {i : f(H_i) = 0}, J = {j : vs(H_j) infinite}.
/// Cases in priority order: J covers all -> inf; I nonempty -> sum over I of
/// min(vs, |V|); otherwise min(vs(H_i) for i not in J, |V(H_j)| for j in J
/// with f(H_j) != 1).
UnionFormulaResult vs_union_multiplicative_general(const ComponentSplit& split,
                                                   const InvariantDescriptor& f,
                                                   const SearchPolicy& policy = {});

/// f mining and monotone increasing on every component's nonempty induced
/// subgraphs; I = {i : f(H_i) = f(G)}, J = {j : vs(H_j) infinite}.
UnionFormulaResult vs_union_mining_increasing(const ComponentSplit& split, const InvariantDescriptor& f,
                                              const SearchPolicy& policy = {});

/// f mining and monotone decreasing on every component:
/// J covers all -> inf, else sum_{I\J} vs(H_i) + sum_{I&J} |V(H_i)|.
UnionFormulaResult vs_union_mining_decreasing(const ComponentSplit& split, const InvariantDescriptor& f,
                                              const SearchPolicy& policy = {});

/// f multiplicative with f(G) != 0: es = min over components with finite es.
UnionFormulaResult es_union_multiplicative(const ComponentSplit& split, const InvariantDescriptor& f,
                                           const SearchPolicy& policy = {});

/// f mining, spanning-decreasing on every component:
/// inf if some H_i attains f(G) with infinite es, else sum over I of es(H_i).
UnionFormulaResult es_union_mining_decreasing(const ComponentSplit& split, const InvariantDescriptor& f,
                                              const SearchPolicy& policy = {});

/// Edge analogue of vs_union_mining_increasing, gated on spanning-increasing
/// components and using threshold edge stabilities.
UnionFormulaResult es_union_mining_increasing(const ComponentSplit& split, const InvariantDescriptor& f,
                                              const SearchPolicy& policy = {});

/// Tags accepted by decompose(): th4 th5 th6 th118 th11 th12 th116.
std::span<const std::string_view> decomposition_tags();
Side decomposition_side(std::string_view tag);
UnionFormulaResult decompose(std::string_view tag, const ComponentSplit& split, const InvariantDescriptor& f,
                             const SearchPolicy& policy = {});

}  // namespace graphstab
