#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "graphstab/graph.hpp"
#include "graphstab/invariants.hpp"
#include "graphstab/stability.hpp"

namespace graphstab {

enum class Verdict { confirmed, violated, not_applicable, budget_skipped };

std::string_view to_string(Verdict v);

/// Outcome of one (graph, invariant, tag) check.
struct TheoremReport {
  std::string tag;
  std::string graph6;
  std::string invariant;
  SubsetRange policy = SubsetRange::proper;
  Verdict verdict = Verdict::not_applicable;
  bool hypotheses_satisfied = false;
  /// Formula or bound value (stability encoding), null when not applicable.
  nlohmann::json formula;
  /// Brute-force value, null when the oracle was not run.
  nlohmann::json oracle;
  /// Reproduction data: oracle witness, per-component records, bound
  /// parameters, and the rejection reason when not applicable.
  nlohmann::json witness = nlohmann::json::object();
  std::string case_taken;
};

struct TagCounts {
  std::string tag;
  std::size_t confirmed = 0;
  std::size_t violated = 0;
  std::size_t not_applicable = 0;
  std::size_t budget_skipped = 0;

  std::size_t total() const { return confirmed + violated + not_applicable + budget_skipped; }
};

struct CampaignSummary {
  std::vector<TheoremReport> reports;
  /// One entry per requested tag, in campaign tag order.
  std::vector<TagCounts> per_tag;
  /// Indices into `reports` of every violated check.
  std::vector<std::size_t> findings;
  double wall_time_ms = 0;
};

struct CampaignOptions {
  std::vector<std::string> invariants;
  std::vector<std::string> tags;
  SearchPolicy policy;
  unsigned jobs = 1;
};

/// Every tag a campaign accepts, in report order.
std::span<const std::string_view> campaign_tags();
/// Tags checked once per graph against a fixed colouring invariant instead
/// of once per requested invariant.
bool is_relation_tag(std::string_view tag);

/// Gates first, then the formula or bound, then the brute-force oracle.
/// Budget overruns become budget_skipped; undefined invariant values become
/// not_applicable. For relation tags `f` is ignored.
TheoremReport check_instance(const Graph& g, const InvariantDescriptor& f, std::string_view tag,
                             const SearchPolicy& policy = {});

/// Reports come out in corpus order, then invariant order, then tag order,
/// with relation tags after the per-invariant tags of each graph. The output
/// does not depend on `jobs`.
CampaignSummary run_campaign(std::span<const Graph> corpus, const CampaignOptions& options);

}  // namespace graphstab
