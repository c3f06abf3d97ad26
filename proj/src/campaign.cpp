#include "graphstab/campaign.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <thread>

#include "graphstab/bounds.hpp"
#include "graphstab/codec.hpp"
#include "graphstab/decomposition.hpp"
#include "graphstab/errors.hpp"
#include "graphstab/report.hpp"

namespace graphstab {

using nlohmann::json;

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::confirmed:
      return "confirmed";
    case Verdict::violated:
      return "violated";
    case Verdict::not_applicable:
      return "not_applicable";
    case Verdict::budget_skipped:
      break;
  }
  return "budget_skipped";
}

namespace {

constexpr std::array<std::string_view, 23> kCampaignTags = {
    "lemma1", "lemma2", "lemma3", "th1",  "th2",  "th3",  "th4",   "th5",   "th6",   "th118", "th7",  "th8",
    "th9",    "th10",   "th11",   "th12", "th116", "th13", "lemma4", "prop1", "prop2", "prop3", "prop4"};

bool is_decomposition_tag(std::string_view tag) {
  const auto tags = decomposition_tags();
  return std::find(tags.begin(), tags.end(), tag) != tags.end();
}

TheoremReport start(const Graph& g, std::string_view invariant_id, std::string_view tag, const SearchPolicy& policy) {
  TheoremReport r;
  r.tag = std::string(tag);
  r.graph6 = encode_graph6(g);
  r.invariant = std::string(invariant_id);
  r.policy = policy.vertex_subset_range;
  return r;
}

TheoremReport not_applicable(TheoremReport r, const std::string& reason) {
  r.verdict = Verdict::not_applicable;
  r.hypotheses_satisfied = false;
  r.witness["reason"] = reason;
  return r;
}

StabilityResult oracle(const Graph& g, const InvariantDescriptor& f, Side side, const SearchPolicy& policy) {
  return side == Side::vertex ? vertex_stability(g, f, policy) : edge_stability(g, f, policy);
}

TheoremReport check_decomposition(TheoremReport r, const Graph& g, const InvariantDescriptor& f,
                                  const SearchPolicy& policy) {
  const ComponentSplit split = components(g);
  const UnionFormulaResult formula = decompose(r.tag, split, f, policy);
  if (!formula.hypotheses_satisfied) return not_applicable(std::move(r), formula.reason);

  const StabilityResult truth = oracle(g, f, decomposition_side(r.tag), policy);
  r.hypotheses_satisfied = true;
  r.case_taken = formula.case_taken;
  r.formula = stability_json(*formula.value);
  r.oracle = stability_json(truth.value);
  r.verdict = *formula.value == truth.value ? Verdict::confirmed : Verdict::violated;

  json comps = json::array();
  for (std::size_t i = 0; i < formula.components.size(); ++i) {
    const ComponentRecord& c = formula.components[i];
    json rec = {{"vertices", split.embeddings[i]},
                {"order", c.order},
                {"f", value_json(c.f_value)},
                {"stability", stability_json(c.stability)}};
    if (c.threshold) rec["threshold"] = stability_json(*c.threshold);
    comps.push_back(std::move(rec));
  }
  r.witness["side"] = to_string(decomposition_side(r.tag));
  r.witness["parent_value"] = value_json(formula.parent_value);
  r.witness["components"] = std::move(comps);
  r.witness["oracle_witness"] = witness_json(truth.witness);
  return r;
}

bool satisfies(const BoundReport& b, ExtNat truth) {
  switch (b.kind) {
    case BoundKind::upper:
      return truth <= *b.bound;
    case BoundKind::lower:
      if (b.fractional_bound || b.additive_bound) {
        // Compare against the exact rational, not its ceiling.
        const ExtValue as_value =
            truth.is_infinite() ? ExtValue::infinity() : ExtValue(static_cast<long long>(truth.value()));
        if (b.fractional_bound && as_value < *b.fractional_bound) return false;
        if (b.additive_bound && truth < *b.additive_bound) return false;
        return true;
      }
      return truth >= *b.bound;
    case BoundKind::equality:
      break;
  }
  return truth == *b.bound;
}

TheoremReport check_bound(TheoremReport r, const Graph& g, const InvariantDescriptor& f, const SearchPolicy& policy) {
  const BoundReport b = tightest_bound(r.tag, g, f, policy);
  if (!b.applicable) return not_applicable(std::move(r), b.reason);

  const Side side = bound_is_vertex_side(r.tag) ? Side::vertex : Side::edge;
  const StabilityResult truth = oracle(g, f, side, policy);
  r.hypotheses_satisfied = true;
  r.case_taken = std::string(to_string(b.kind));
  r.formula = stability_json(*b.bound);
  r.oracle = stability_json(truth.value);
  r.verdict = satisfies(b, truth.value) ? Verdict::confirmed : Verdict::violated;
  r.witness["side"] = to_string(side);
  r.witness["parameters"] = b.parameters;
  if (b.fractional_bound) r.witness["fractional_bound"] = value_json(*b.fractional_bound);
  if (b.additive_bound) {
    r.witness["additive_bound"] = stability_json(*b.additive_bound);
    r.witness["additive_nonpositive"] = b.additive_nonpositive;
  }
  r.witness["oracle_witness"] = witness_json(truth.witness);
  return r;
}

TheoremReport check_relation(const Graph& g, std::string_view tag, const SearchPolicy& policy) {
  const bool total = tag == "prop1" || tag == "prop2";
  TheoremReport r = start(g, total ? "total_chromatic" : "edge_chromatic", tag, policy);
  const BoundReport b = total ? relation_total_chromatic(g, policy) : relation_edge_chromatic(g, policy);
  r.witness["parameters"] = b.parameters;
  if (b.conjecture_counterexample) {
    r.verdict = Verdict::violated;
    r.case_taken = "conjecture_counterexample";
    r.witness["reason"] = b.reason;
    return r;
  }
  if (!b.applicable) return not_applicable(std::move(r), b.reason);
  if (b.name != tag) return not_applicable(std::move(r), "instance falls under " + b.name);
  r.hypotheses_satisfied = true;
  r.case_taken = std::string(to_string(b.kind));
  r.formula = stability_json(*b.bound);
  r.oracle = stability_json(*b.observed);
  r.verdict = satisfies(b, *b.observed) ? Verdict::confirmed : Verdict::violated;
  return r;
}

}  // namespace

std::span<const std::string_view> campaign_tags() { return kCampaignTags; }

bool is_relation_tag(std::string_view tag) { return tag.starts_with("prop"); }

TheoremReport check_instance(const Graph& g, const InvariantDescriptor& f, std::string_view tag,
                             const SearchPolicy& policy) {
  const auto tags = campaign_tags();
  if (std::find(tags.begin(), tags.end(), tag) == tags.end())
    throw InputError("unknown theorem tag '" + std::string(tag) + "'");
  const std::string_view id = !is_relation_tag(tag) ? std::string_view(f.id)
                              : tag == "prop1" || tag == "prop2" ? "total_chromatic"
                                                                 : "edge_chromatic";
  try {
    if (is_relation_tag(tag)) return check_relation(g, tag, policy);
    if (is_decomposition_tag(tag)) return check_decomposition(start(g, id, tag, policy), g, f, policy);
    return check_bound(start(g, id, tag, policy), g, f, policy);
  } catch (const BudgetError& e) {
    TheoremReport r = start(g, id, tag, policy);
    r.verdict = Verdict::budget_skipped;
    r.witness["reason"] = e.what();
    return r;
  } catch (const DomainError& e) {
    return not_applicable(start(g, id, tag, policy), std::string("invariant undefined: ") + e.what());
  }
}

CampaignSummary run_campaign(std::span<const Graph> corpus, const CampaignOptions& options) {
  const auto start_time = std::chrono::steady_clock::now();

  std::vector<const InvariantDescriptor*> invariants;
  for (const std::string& id : options.invariants) invariants.push_back(&invariant(id));
  std::vector<std::string_view> per_invariant;
  std::vector<std::string_view> relations;
  for (std::string_view tag : campaign_tags()) {
    if (std::find(options.tags.begin(), options.tags.end(), tag) == options.tags.end()) continue;
    (is_relation_tag(tag) ? relations : per_invariant).push_back(tag);
  }
  for (const std::string& tag : options.tags) {
    const auto tags = campaign_tags();
    if (std::find(tags.begin(), tags.end(), tag) == tags.end())
      throw InputError("unknown theorem tag '" + tag + "'");
  }

  // Relation tags ignore the invariant argument.
  const InvariantDescriptor& relation_invariant = invariant("total_chromatic");
  std::vector<std::vector<TheoremReport>> per_graph(corpus.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    try {
      for (std::size_t i = next++; i < corpus.size(); i = next++) {
        auto& out = per_graph[i];
        for (const InvariantDescriptor* f : invariants)
          for (std::string_view tag : per_invariant) out.push_back(check_instance(corpus[i], *f, tag, options.policy));
        for (std::string_view tag : relations)
          out.push_back(check_instance(corpus[i], relation_invariant, tag, options.policy));
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next = corpus.size();
    }
  };

  const unsigned jobs = std::max(1U, options.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  CampaignSummary summary;
  for (std::string_view tag : campaign_tags()) {
    if (std::find(options.tags.begin(), options.tags.end(), tag) != options.tags.end())
      summary.per_tag.push_back(TagCounts{std::string(tag)});
  }
  for (auto& reports : per_graph) {
    for (TheoremReport& r : reports) {
      auto counts = std::find_if(summary.per_tag.begin(), summary.per_tag.end(),
                                 [&](const TagCounts& c) { return c.tag == r.tag; });
      switch (r.verdict) {
        case Verdict::confirmed:
          ++counts->confirmed;
          break;
        case Verdict::violated:
          ++counts->violated;
          summary.findings.push_back(summary.reports.size());
          break;
        case Verdict::not_applicable:
          ++counts->not_applicable;
          break;
        case Verdict::budget_skipped:
          ++counts->budget_skipped;
          break;
      }
      summary.reports.push_back(std::move(r));
    }
  }
  summary.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_time).count();
  return summary;
}

}  // namespace graphstab
