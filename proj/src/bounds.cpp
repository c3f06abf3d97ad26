#include "graphstab/bounds.hpp"

#include <array>
#include <bit>

#include "graphstab/errors.hpp"
#include "graphstab/report.hpp"

namespace graphstab {

using nlohmann::json;

std::string_view to_string(BoundKind k) {
  switch (k) {
    case BoundKind::upper:
      return "upper";
    case BoundKind::lower:
      return "lower";
    case BoundKind::equality:
      break;
  }
  return "equality";
}

namespace {

BoundReport start(std::string_view name, BoundKind kind) {
  BoundReport r;
  r.name = std::string(name);
  r.kind = kind;
  return r;
}

BoundReport not_applicable(BoundReport r, std::string reason) {
  r.applicable = false;
  r.reason = std::move(reason);
  r.bound.reset();
  return r;
}

BoundReport with_bound(BoundReport r, ExtNat bound) {
  r.applicable = true;
  r.bound = bound;
  return r;
}

ExtNat size_of(std::size_t n) { return ExtNat(n); }

VertexSet normalized(const Graph& g, const VertexSet& x) { return from_mask(to_mask(g, x)); }

Graph one_vertex() { return Graph(1); }

}  // namespace

BoundReport ub_vs_lemma1(const Graph& g, const VertexSet& x, const InvariantDescriptor& f,
                         const SearchPolicy& policy) {
  BoundReport r = start("lemma1", BoundKind::upper);
  const VertexSet xs = normalized(g, x);
  r.parameters["X"] = xs;
  if (static_cast<int>(xs.size()) >= g.order()) return not_applicable(std::move(r), "X is not a proper subset");
  try {
    const StabilityResult rest = vertex_stability(delete_vertices(g, xs), f, policy);
    r.parameters["vs_rest"] = stability_json(rest.value);
    return with_bound(std::move(r), size_of(xs.size()) + rest.value);
  } catch (const DomainError&) {
    return not_applicable(std::move(r), "f undefined on G - X");
  }
}

BoundReport ub_vs_induced_multiplicative(const Graph& g, const VertexSet& h_vertices,
                                         const InvariantDescriptor& f, const SearchPolicy& policy) {
  BoundReport r = start("th1", BoundKind::upper);
  const VertexSet hs = normalized(g, h_vertices);
  r.parameters["H"] = hs;
  if (!f.multiplicative) return not_applicable(std::move(r), "invariant is not multiplicative");
  if (f.can_be_zero) return not_applicable(std::move(r), "invariant can be zero");
  const std::uint64_t h_mask = to_mask(g, hs);
  std::uint64_t outside = 0;
  for (int v : open_neighborhood(g, hs)) outside |= std::uint64_t{1} << v;
  outside &= ~h_mask;
  const StabilityResult inner = vertex_stability(g.induced(h_mask), f, policy);
  r.parameters["X"] = from_mask(outside);
  r.parameters["vs_H"] = stability_json(inner.value);
  return with_bound(std::move(r), size_of(static_cast<std::size_t>(std::popcount(outside))) + inner.value);
}

BoundReport ub_vs_min_degree(const Graph& g, const InvariantDescriptor& f) {
  BoundReport r = start("th2", BoundKind::upper);
  if (!f.multiplicative) return not_applicable(std::move(r), "invariant is not multiplicative");
  if (f.can_be_zero) return not_applicable(std::move(r), "invariant can be zero");
  if (evaluate(f, one_vertex()).is_one()) return not_applicable(std::move(r), "f(K1) = 1");
  if (g.is_complete()) return not_applicable(std::move(r), "graph is complete");
  const auto delta = eval_min_degree(g).as_int64().value();
  r.parameters["min_degree"] = delta;
  return with_bound(std::move(r), size_of(static_cast<std::size_t>(delta) + 1));
}

BoundReport ub_vs_mining_split(const Graph& g, const VertexSet& x, const InvariantDescriptor& f,
                               const SearchPolicy& policy) {
  BoundReport r = start("th3", BoundKind::upper);
  const VertexSet xs = normalized(g, x);
  r.parameters["X"] = xs;
  if (!f.mining) return not_applicable(std::move(r), "invariant is not mining");
  if (static_cast<int>(xs.size()) >= g.order()) return not_applicable(std::move(r), "X is not a proper subset");

  const std::uint64_t keep = g.vertex_mask() & ~to_mask(g, xs);
  // Components of G - X, mapped back to labels of G.
  const Graph rest = g.induced(keep);
  const ComponentSplit split = components(rest);
  const VertexSet rest_labels = from_mask(keep);
  std::vector<ExtValue> values;
  for (const Graph& part : split.parts) values.push_back(evaluate(f, part));
  ExtValue lowest = ExtValue::infinity();
  for (const ExtValue& v : values) lowest = min(lowest, v);

  std::uint64_t h_mask = 0;
  bool remainder = false;
  for (std::size_t i = 0; i < split.parts.size(); ++i) {
    if (values[i] == lowest) {
      for (int local : split.embeddings[i]) h_mask |= std::uint64_t{1} << rest_labels[static_cast<std::size_t>(local)];
    } else {
      remainder = true;
    }
  }
  if (!remainder) return not_applicable(std::move(r), "no split with f(H) < f(H')");
  const StabilityResult inner = vertex_stability(g.induced(h_mask), f, policy);
  r.parameters["H"] = from_mask(h_mask);
  r.parameters["vs_H"] = stability_json(inner.value);
  return with_bound(std::move(r), inner.value + size_of(xs.size()));
}

BoundReport ub_es_lemma2(const Graph& g, const EdgeSet& y, const InvariantDescriptor& f,
                         const SearchPolicy& policy) {
  BoundReport r = start("lemma2", BoundKind::upper);
  r.parameters["Y"] = edges_json(y);
  try {
    const StabilityResult rest = edge_stability(delete_edges(g, y), f, policy);
    r.parameters["es_rest"] = stability_json(rest.value);
    return with_bound(std::move(r), size_of(y.size()) + rest.value);
  } catch (const DomainError&) {
    return not_applicable(std::move(r), "f undefined on G - Y");
  }
}

BoundReport ub_es_spanning(const Graph& g, const EdgeSet& h_edges, const InvariantDescriptor& f,
                           const SearchPolicy& policy) {
  BoundReport r = start("lemma3", BoundKind::upper);
  r.parameters["H_edges"] = edges_json(h_edges);
  EdgeSet outside;
  {
    EdgeSet sorted;
    for (const Edge& e : h_edges) sorted.push_back(make_edge(e.u, e.v));
    std::sort(sorted.begin(), sorted.end());
    const EdgeSet all = g.edges();
    std::set_difference(all.begin(), all.end(), sorted.begin(), sorted.end(), std::back_inserter(outside));
    if (all.size() - outside.size() != sorted.size()) throw InputError("H is not a spanning subgraph of G");
  }
  try {
    const StabilityResult inner = edge_stability(delete_edges(g, outside), f, policy);
    r.parameters["es_H"] = stability_json(inner.value);
    if (inner.value != ExtNat(1)) return not_applicable(std::move(r), "es(H) != 1");
  } catch (const DomainError&) {
    return not_applicable(std::move(r), "f undefined on H");
  }
  return with_bound(std::move(r), size_of(1 + outside.size()));
}

BoundReport ub_es_vertex_incident(const Graph& g, int u, const InvariantDescriptor& f) {
  BoundReport r = start("th7", BoundKind::upper);
  r.parameters["u"] = u;
  if (!f.multiplicative) return not_applicable(std::move(r), "invariant is not multiplicative");
  const ExtValue whole = evaluate(f, g);
  const ExtValue without = evaluate(f, delete_vertices(g, {u}));
  const ExtValue k1 = evaluate(f, one_vertex());
  const ExtValue one = 1;
  std::string condition;
  if (without > whole && k1 >= one) {
    condition = "f(G-u) > f(G), f(K1) >= 1";
  } else if (without == whole && !whole.is_zero() && k1 != one) {
    condition = "f(G-u) = f(G) != 0, f(K1) != 1";
  } else if (without < whole && k1 <= one) {
    condition = "f(G-u) < f(G), f(K1) <= 1";
  } else {
    return not_applicable(std::move(r), "no sign condition holds");
  }
  r.parameters["condition"] = condition;
  return with_bound(std::move(r), size_of(static_cast<std::size_t>(g.degree(u))));
}

BoundReport ub_es_edge_pair(const Graph& g, const InvariantDescriptor& f, const SearchPolicy&) {
  BoundReport r = start("th8", BoundKind::upper);
  if (!f.multiplicative) return not_applicable(std::move(r), "invariant is not multiplicative");
  if (evaluate(f, graphs::complete(2)) == evaluate(f, graphs::empty(2)))
    return not_applicable(std::move(r), "f(K2) = f(2K1)");
  std::optional<std::size_t> best;
  Edge best_edge;
  for (const Edge& e : g.edges()) {
    if (evaluate(f, delete_vertices(g, {e.u, e.v})).is_zero()) continue;
    const auto value = static_cast<std::size_t>(g.degree(e.u) + g.degree(e.v) - 1);
    if (!best || value < *best) {
      best = value;
      best_edge = e;
    }
  }
  if (!best) return not_applicable(std::move(r), "no edge xy with f(G - {x, y}) != 0");
  r.parameters["edge"] = {best_edge.u, best_edge.v};
  return with_bound(std::move(r), size_of(*best));
}

namespace {

BoundReport subgraph_bound(BoundReport r, const Graph& g, const VertexSet& h_vertices,
                           const InvariantDescriptor& f, const SearchPolicy& policy, bool multiplicative) {
  const VertexSet hs = normalized(g, h_vertices);
  r.parameters["H"] = hs;
  if (multiplicative && !f.multiplicative) return not_applicable(std::move(r), "invariant is not multiplicative");
  if (!multiplicative && !f.mining) return not_applicable(std::move(r), "invariant is not mining");
  const std::uint64_t h_mask = to_mask(g, hs);
  const Graph h = g.induced(h_mask);
  const ExtValue outside_value = evaluate(f, g.induced(g.vertex_mask() & ~h_mask));
  if (multiplicative && outside_value.is_zero()) return not_applicable(std::move(r), "f(G - V(H)) = 0");
  if (!multiplicative && !(evaluate(f, h) < outside_value))
    return not_applicable(std::move(r), "f(H) >= f(G - V(H))");
  const StabilityResult inner = edge_stability(h, f, policy);
  const std::size_t crossing = boundary_edges(g, hs).size();
  r.parameters["es_H"] = stability_json(inner.value);
  r.parameters["boundary"] = crossing;
  return with_bound(std::move(r), inner.value + size_of(crossing));
}

}  // namespace

BoundReport ub_es_subgraph_multiplicative(const Graph& g, const VertexSet& h_vertices,
                                          const InvariantDescriptor& f, const SearchPolicy& policy) {
  return subgraph_bound(start("th9", BoundKind::upper), g, h_vertices, f, policy, true);
}

BoundReport ub_es_subgraph_mining(const Graph& g, const VertexSet& h_vertices, const InvariantDescriptor& f,
                                  const SearchPolicy& policy) {
  return subgraph_bound(start("th10", BoundKind::upper), g, h_vertices, f, policy, false);
}

namespace {

struct FamilyStats {
  std::size_t m = 0;
  std::size_t l = 0;
};

FamilyStats family_stats(const EdgeSet& all, std::span<const std::uint64_t> members) {
  FamilyStats s;
  for (std::size_t e = 0; e < all.size(); ++e) {
    std::size_t count = 0;
    for (std::uint64_t h : members) count += (h >> e) & 1U;
    if (count >= 2) ++s.m;
    s.l = std::max(s.l, count);
  }
  return s;
}

struct FamilyOutcome {
  ExtValue fractional;
  ExtNat additive;
  bool additive_nonpositive = false;
  ExtNat combined;
};

FamilyOutcome family_outcome(ExtNat sum, std::size_t t, FamilyStats s) {
  FamilyOutcome out;
  if (sum.is_infinite()) {
    out.fractional = ExtValue::infinity();
    out.additive = ExtNat::infinity();
    out.combined = ExtNat::infinity();
    return out;
  }
  (void)t;
  out.fractional = ExtValue(Rational(static_cast<long long>(sum.value()), static_cast<long long>(s.l)));
  const std::size_t penalty = s.m * (s.l - 1);
  out.additive_nonpositive = sum.value() <= penalty;
  out.additive = out.additive_nonpositive ? ExtNat(0) : ExtNat(sum.value() - penalty);
  const std::size_t ceiling = (sum.value() + s.l - 1) / s.l;
  out.combined = std::max(ExtNat(ceiling), out.additive);
  return out;
}

std::uint64_t edge_mask_of(const EdgeSet& all, const EdgeSet& member) {
  std::uint64_t mask = 0;
  for (const Edge& raw : member) {
    const Edge e = make_edge(raw.u, raw.v);
    const auto it = std::lower_bound(all.begin(), all.end(), e);
    if (it == all.end() || *it != e) throw InputError("family member uses an edge outside G");
    mask |= std::uint64_t{1} << (it - all.begin());
  }
  return mask;
}

}  // namespace

BoundReport lb_es_family(const Graph& g, std::span<const EdgeSet> family, const InvariantDescriptor& f,
                         const SearchPolicy& policy) {
  BoundReport r = start("th13", BoundKind::lower);
  json members = json::array();
  for (const EdgeSet& h : family) members.push_back(edges_json(h));
  r.parameters["family"] = members;
  if (f.monotone_spanning == Monotonicity::none)
    return not_applicable(std::move(r), "invariant is not monotone on spanning subgraphs");
  if (family.empty()) return not_applicable(std::move(r), "empty family");
  const EdgeSet all = g.edges();
  if (all.size() > 64) throw BudgetError("family bound supports at most 64 edges");
  const ExtValue whole = evaluate(f, g);

  std::vector<std::uint64_t> masks;
  ExtNat sum = 0;
  json es_values = json::array();
  for (const EdgeSet& h : family) {
    const std::uint64_t mask = edge_mask_of(all, h);
    if (mask == 0) return not_applicable(std::move(r), "a member has no edges");
    const Graph member = g.with_edge_indices(all, mask);
    try {
      if (evaluate(f, member) != whole) return not_applicable(std::move(r), "a member has f(H_i) != f(G)");
    } catch (const DomainError&) {
      return not_applicable(std::move(r), "f undefined on a member");
    }
    const ExtNat es = edge_stability(member, f, policy).value;
    es_values.push_back(stability_json(es));
    sum = sum + es;
    masks.push_back(mask);
  }
  const FamilyStats stats = family_stats(all, masks);
  const FamilyOutcome out = family_outcome(sum, family.size(), stats);
  r.parameters["t"] = family.size();
  r.parameters["m"] = stats.m;
  r.parameters["l"] = stats.l;
  r.parameters["es_members"] = es_values;
  r.parameters["t_over_l"] = ExtValue(Rational(static_cast<long long>(family.size()),
                                               static_cast<long long>(stats.l)))
                                 .to_string();
  r.fractional_bound = out.fractional;
  r.additive_bound = out.additive;
  r.additive_nonpositive = out.additive_nonpositive;
  return with_bound(std::move(r), out.combined);
}

namespace {

BoundReport chromatic_relation(const Graph& g, const SearchPolicy& policy, const InvariantDescriptor& colour,
                               const InvariantDescriptor& klass, std::string_view below_name,
                               std::string_view above_name, int offset_low) {
  // offset_low is the excess of the colour number over Delta in the "good"
  // case: 1 for total colourings, 0 for edge colourings.
  BoundReport r = start(below_name, BoundKind::lower);
  if (g.is_edgeless()) return not_applicable(std::move(r), "graph has no edges");
  const InvariantDescriptor& delta_inv = invariant("max_degree");
  const auto delta = evaluate(delta_inv, g).as_int64().value();
  const auto chi = evaluate(colour, g).as_int64().value();
  r.parameters["max_degree"] = delta;
  r.parameters[colour.id] = chi;
  if (chi > delta + offset_low + 1) {
    r.conjecture_counterexample = true;
    return not_applicable(std::move(r), "colour number exceeds the conjectured maximum");
  }
  if (chi < delta + offset_low) throw InternalError(colour.id + " below its lower bound");

  const ExtNat vs_delta = vertex_stability(g, delta_inv, policy).value;
  const ExtNat vs_colour = vertex_stability(g, colour, policy).value;
  const ExtNat vs_class = vertex_stability(g, klass, policy).value;
  r.parameters["vs_max_degree"] = stability_json(vs_delta);
  r.parameters["vs_" + colour.id] = stability_json(vs_colour);
  r.parameters["vs_" + klass.id] = stability_json(vs_class);
  r.observed = vs_colour;
  if (chi == delta + offset_low) return with_bound(std::move(r), vs_delta);
  r.name = std::string(above_name);
  r.kind = BoundKind::equality;
  return with_bound(std::move(r), min(vs_delta, vs_class));
}

}  // namespace

BoundReport relation_total_chromatic(const Graph& g, const SearchPolicy& policy) {
  return chromatic_relation(g, policy, invariant("total_chromatic"), invariant("class_total"), "prop1", "prop2", 1);
}

BoundReport relation_edge_chromatic(const Graph& g, const SearchPolicy& policy) {
  return chromatic_relation(g, policy, invariant("edge_chromatic"), invariant("class_edge"), "prop3", "prop4", 0);
}

namespace {

constexpr std::array<std::string_view, 12> kBoundTags = {"lemma1", "lemma2", "lemma3", "th1",  "th2",  "th3",
                                                         "th7",    "th8",    "th9",    "th10", "th13", "lemma4"};

void check_universe(std::size_t universe, const SearchPolicy& policy, const char* what) {
  if (universe >= 63 || (std::uint64_t{1} << universe) > policy.max_subset_universe) {
    throw BudgetError(std::string(what) + ": 2^" + std::to_string(universe) + " choices exceed the cap of " +
                      std::to_string(policy.max_subset_universe));
  }
}

/// Tags whose bound has no free parameter.
BoundReport single_choice(BoundReport r) {
  if (r.applicable) r.parameters["choices"] = 1;
  return r;
}

/// Keeps the tightest applicable report: smallest upper bound.
struct UpperTracker {
  std::optional<BoundReport> best;
  std::optional<BoundReport> first_rejection;
  std::size_t choices = 0;

  void offer(BoundReport r) {
    if (!r.applicable) {
      if (!first_rejection) first_rejection = std::move(r);
      return;
    }
    ++choices;
    if (!best || *r.bound < *best->bound) best = std::move(r);
  }

  BoundReport finish(std::string_view tag) {
    if (best) {
      best->parameters["choices"] = choices;
      return std::move(*best);
    }
    if (first_rejection) return std::move(*first_rejection);
    BoundReport r = start(tag, BoundKind::upper);
    return not_applicable(std::move(r), "no parameter choice");
  }
};

BoundReport tightest_family_bound(const Graph& g, const InvariantDescriptor& f, const SearchPolicy& policy) {
  BoundReport r = start("th13", BoundKind::lower);
  if (f.monotone_spanning == Monotonicity::none)
    return not_applicable(std::move(r), "invariant is not monotone on spanning subgraphs");
  const EdgeSet all = g.edges();
  check_universe(all.size(), policy, "family enumeration");
  const ExtValue whole = evaluate(f, g);
  const std::uint64_t full = all.empty() ? 0 : (std::uint64_t{1} << all.size()) - 1;

  std::vector<std::uint64_t> members;
  std::vector<ExtNat> es;
  for (std::uint64_t keep = 1; keep <= full; ++keep) {
    const Graph h = g.with_edge_indices(all, keep);
    try {
      if (evaluate(f, h) != whole) continue;
    } catch (const DomainError&) {
      continue;
    }
    members.push_back(keep);
    es.push_back(edge_stability(h, f, policy).value);
  }
  if (members.empty()) return not_applicable(std::move(r), "no nonempty spanning subgraph with f(H) = f(G)");

  const std::size_t count = members.size();
  // Multisets of size 1..3 drawn from the members.
  const double families = static_cast<double>(count) + static_cast<double>(count) * (count + 1) / 2 +
                          static_cast<double>(count) * (count + 1) * (count + 2) / 6;
  if (families > 64.0 * static_cast<double>(policy.max_subset_universe))
    throw BudgetError("family enumeration: too many candidate families");

  struct Best {
    FamilyOutcome outcome;
    std::vector<std::size_t> picks;
    FamilyStats stats;
  };
  std::optional<Best> best_fractional;
  std::optional<Best> best_additive;
  std::size_t choices = 0;

  auto consider = [&](std::initializer_list<std::size_t> picks) {
    std::array<std::uint64_t, 3> chosen{};
    ExtNat sum = 0;
    std::size_t t = 0;
    for (std::size_t p : picks) {
      chosen[t++] = members[p];
      sum = sum + es[p];
    }
    FamilyStats stats;
    const std::uint64_t a = chosen[0];
    const std::uint64_t b = chosen[1];
    const std::uint64_t c = chosen[2];
    const std::uint64_t twice = (a & b) | (a & c) | (b & c);
    stats.m = static_cast<std::size_t>(std::popcount(twice));
    stats.l = (a & b & c) ? 3 : (twice ? 2 : 1);
    const FamilyOutcome out = family_outcome(sum, t, stats);
    ++choices;
    if (!best_fractional || out.fractional > best_fractional->outcome.fractional)
      best_fractional = Best{out, picks, stats};
    if (!best_additive || out.additive > best_additive->outcome.additive ||
        (out.additive == best_additive->outcome.additive && !out.additive_nonpositive &&
         best_additive->outcome.additive_nonpositive))
      best_additive = Best{out, picks, stats};
  };
  for (std::size_t i = 0; i < count; ++i) {
    consider({i});
    for (std::size_t j = i; j < count; ++j) {
      consider({i, j});
      for (std::size_t k = j; k < count; ++k) consider({i, j, k});
    }
  }

  auto describe = [&](const Best& b) {
    json fam = json::array();
    json es_list = json::array();
    for (std::size_t p : b.picks) {
      EdgeSet edges;
      for (std::uint64_t m = members[p]; m; m &= m - 1) edges.push_back(all[static_cast<std::size_t>(std::countr_zero(m))]);
      fam.push_back(edges_json(edges));
      es_list.push_back(stability_json(es[p]));
    }
    return json{{"family", fam}, {"es_members", es_list}, {"t", b.picks.size()}, {"m", b.stats.m}, {"l", b.stats.l}};
  };

  r.fractional_bound = best_fractional->outcome.fractional;
  r.additive_bound = best_additive->outcome.additive;
  r.additive_nonpositive = best_additive->outcome.additive_nonpositive;
  r.parameters["fractional"] = describe(*best_fractional);
  r.parameters["additive"] = describe(*best_additive);
  r.parameters["members"] = count;
  r.parameters["choices"] = choices;
  return with_bound(std::move(r), std::max(best_fractional->outcome.combined, best_additive->outcome.combined));
}

BoundReport covering_equality(const Graph& g, const InvariantDescriptor& f, const SearchPolicy& policy) {
  BoundReport r = start("lemma4", BoundKind::equality);
  if (f.monotone_spanning == Monotonicity::none)
    return not_applicable(std::move(r), "invariant is not monotone on spanning subgraphs");
  const StabilityResult es = edge_stability(g, f, policy);
  if (es.value.is_infinite()) return not_applicable(std::move(r), "es infinite");
  const CoveringResult cover = covering_number(g, f, policy);
  r.parameters["cover"] = edges_json(cover.witness);
  r.parameters["covered_subgraphs"] = cover.covered_subgraphs;
  return with_bound(std::move(r), ExtNat(cover.value));
}

}  // namespace

std::span<const std::string_view> bound_tags() { return kBoundTags; }

bool bound_is_vertex_side(std::string_view tag) {
  return tag == "lemma1" || tag == "th1" || tag == "th2" || tag == "th3";
}

BoundReport tightest_bound(std::string_view tag, const Graph& g, const InvariantDescriptor& f,
                           const SearchPolicy& policy) {
  const int n = g.order();
  const std::uint64_t all_vertices = g.vertex_mask();
  UpperTracker tracker;

  if (tag == "lemma1" || tag == "th3") {
    check_universe(static_cast<std::size_t>(n), policy, "vertex parameter enumeration");
    for (std::uint64_t x = 0; x < all_vertices; ++x) {
      tracker.offer(tag == "lemma1" ? ub_vs_lemma1(g, from_mask(x), f, policy)
                                    : ub_vs_mining_split(g, from_mask(x), f, policy));
      if (tag == "th3" && !f.mining) break;
    }
    return tracker.finish(tag);
  }
  if (tag == "th1" || tag == "th9" || tag == "th10") {
    check_universe(static_cast<std::size_t>(n), policy, "subgraph enumeration");
    for (std::uint64_t h = 1; h <= all_vertices && h != 0; ++h) {
      const VertexSet hs = from_mask(h);
      BoundReport r = tag == "th1"   ? ub_vs_induced_multiplicative(g, hs, f, policy)
                      : tag == "th9" ? ub_es_subgraph_multiplicative(g, hs, f, policy)
                                     : ub_es_subgraph_mining(g, hs, f, policy);
      const bool type_gate = !r.applicable && (r.reason.starts_with("invariant"));
      tracker.offer(std::move(r));
      if (type_gate) break;
      if (h == all_vertices) break;
    }
    return tracker.finish(tag);
  }
  if (tag == "th2") return single_choice(ub_vs_min_degree(g, f));
  if (tag == "th7") {
    for (int u = 0; u < n; ++u) {
      BoundReport r = ub_es_vertex_incident(g, u, f);
      const bool type_gate = !r.applicable && r.reason.starts_with("invariant");
      tracker.offer(std::move(r));
      if (type_gate) break;
    }
    return tracker.finish(tag);
  }
  if (tag == "th8") return single_choice(ub_es_edge_pair(g, f, policy));
  if (tag == "lemma2" || tag == "lemma3") {
    const EdgeSet edges = g.edges();
    check_universe(edges.size(), policy, "edge parameter enumeration");
    const std::uint64_t full = edges.empty() ? 0 : (std::uint64_t{1} << edges.size()) - 1;
    for (std::uint64_t y = 0;; ++y) {
      EdgeSet chosen;
      for (std::uint64_t m = y; m; m &= m - 1) chosen.push_back(edges[static_cast<std::size_t>(std::countr_zero(m))]);
      tracker.offer(tag == "lemma2" ? ub_es_lemma2(g, chosen, f, policy) : ub_es_spanning(g, chosen, f, policy));
      if (y == full) break;
    }
    return tracker.finish(tag);
  }
  if (tag == "th13") return tightest_family_bound(g, f, policy);
  if (tag == "lemma4") return single_choice(covering_equality(g, f, policy));
  throw InputError("unknown bound theorem '" + std::string(tag) + "'");
}

}  // namespace graphstab
