#include "graphstab/report.hpp"

namespace graphstab {

using nlohmann::json;

json value_json(const ExtValue& v) {
  if (v.is_infinite()) return json{{"inf", true}};
  return json{{"fin", v.to_string()}};
}

json stability_json(ExtNat n) { return n.is_infinite() ? json("inf") : json(n.value()); }

json edges_json(const EdgeSet& edges) {
  json out = json::array();
  for (const Edge& e : edges) out.push_back({e.u, e.v});
  return out;
}

json witness_json(const Witness& w) {
  if (const auto* vs = std::get_if<VertexSet>(&w)) return json(*vs);
  if (const auto* es = std::get_if<EdgeSet>(&w)) return edges_json(*es);
  return nullptr;
}

json report_json(const TheoremReport& r) {
  return json{{"tag", r.tag},
              {"graph6", r.graph6},
              {"invariant", r.invariant},
              {"policy", to_string(r.policy)},
              {"verdict", to_string(r.verdict)},
              {"hypotheses_satisfied", r.hypotheses_satisfied},
              {"formula", r.formula},
              {"oracle", r.oracle},
              {"witness", r.witness},
              {"case", r.case_taken}};
}

json campaign_json(const CorpusSpec& corpus, std::size_t corpus_size, const CampaignOptions& options,
                   const CampaignSummary& summary, bool include_timing) {
  json campaign = {{"mode", to_string(corpus.mode)},
                   {"n_min", corpus.n_min},
                   {"n_max", corpus.n_max},
                   {"count", corpus.count},
                   {"seed", corpus.seed},
                   {"corpus_size", corpus_size},
                   {"invariants", options.invariants},
                   {"theorems", options.tags},
                   {"policy", to_string(options.policy.vertex_subset_range)},
                   {"max_universe", options.policy.max_subset_universe}};
  campaign["max_edges"] = corpus.max_edges ? json(*corpus.max_edges) : json(nullptr);

  json reports = json::array();
  for (const TheoremReport& r : summary.reports) reports.push_back(report_json(r));

  json per_tag = json::object();
  json totals = {{"confirmed", 0}, {"violated", 0}, {"not_applicable", 0}, {"budget_skipped", 0}};
  for (const TagCounts& c : summary.per_tag) {
    per_tag[c.tag] = {{"confirmed", c.confirmed},
                      {"violated", c.violated},
                      {"not_applicable", c.not_applicable},
                      {"budget_skipped", c.budget_skipped}};
    for (auto& [key, value] : per_tag[c.tag].items()) totals[key] = totals[key].get<std::size_t>() + value.get<std::size_t>();
  }
  json findings = json::array();
  for (std::size_t i : summary.findings) {
    const TheoremReport& r = summary.reports[i];
    findings.push_back({{"report", i}, {"tag", r.tag}, {"graph6", r.graph6}, {"invariant", r.invariant}});
  }
  json timing = include_timing ? json(static_cast<std::int64_t>(summary.wall_time_ms)) : json(nullptr);

  return json{{"schema_version", kReportSchemaVersion},
              {"campaign", std::move(campaign)},
              {"reports", std::move(reports)},
              {"summary",
               {{"per_tag", std::move(per_tag)},
                {"totals", std::move(totals)},
                {"findings", std::move(findings)},
                {"wall_time_ms", std::move(timing)}}}};
}

void write_campaign(std::ostream& out, const json& doc) {
  out << "{\n";
  bool first_key = true;
  for (const auto& [key, value] : doc.items()) {
    if (!first_key) out << ",\n";
    first_key = false;
    out << json(key).dump() << ": ";
    if (key == "reports" && value.is_array() && !value.empty()) {
      out << "[\n";
      for (std::size_t i = 0; i < value.size(); ++i) out << "  " << value[i].dump() << (i + 1 < value.size() ? ",\n" : "\n");
      out << "]";
    } else {
      out << value.dump();
    }
  }
  out << "\n}\n";
}

}  // namespace graphstab
