#pragma once

#include <optional>
#include <ostream>

#include "json.hpp"

#include "graphstab/campaign.hpp"
#include "graphstab/corpus.hpp"
#include "graphstab/ext_value.hpp"
#include "graphstab/stability.hpp"

namespace graphstab {

inline constexpr int kReportSchemaVersion = 1;

/// {"fin": "p/q"} or {"inf": true}.
nlohmann::json value_json(const ExtValue& v);
/// Integer or "inf".
nlohmann::json stability_json(ExtNat n);
/// Vertex labels, [[u, v], ...] edge pairs, or null.
nlohmann::json witness_json(const Witness& w);
nlohmann::json edges_json(const EdgeSet& edges);

nlohmann::json report_json(const TheoremReport& r);

/// Full campaign document. `wall_time_ms` is null unless `include_timing`,
/// so that repeated runs produce identical bytes.
nlohmann::json campaign_json(const CorpusSpec& corpus, std::size_t corpus_size, const CampaignOptions& options,
                             const CampaignSummary& summary, bool include_timing);

/// Serialises a campaign document with one report per line, so large reports
/// stay greppable and diffable.
void write_campaign(std::ostream& out, const nlohmann::json& doc);

}  // namespace graphstab
