#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "graphstab/graph.hpp"

namespace graphstab {

/// graph6 records are supported for order <= 62 (single-byte size prefix).
inline constexpr int kGraph6MaxOrder = 62;

/// Decodes one graph6 record, without line terminator. Throws CodecError with
/// the offending byte offset on malformed bytes, truncation, trailing bytes,
/// nonzero padding, or order > 62.
Graph parse_graph6(std::string_view record);

/// Canonical graph6 encoding (zero padding, no header, no newline).
std::string encode_graph6(const Graph& g);

/// Parses a whole graph6 file: one record per line, blank lines skipped, an
/// optional ">>graph6<<" prefix tolerated. Error offsets are file offsets.
std::vector<Graph> parse_graph6_text(std::string_view text);

/// "n m" header followed by m lines "u v" with 0-based labels.
Graph parse_edge_list(std::string_view text);
std::string encode_edge_list(const Graph& g);

enum class GraphFormat { graph6, edgelist };

GraphFormat parse_format(std::string_view name);
std::vector<Graph> read_graphs(const std::filesystem::path& path, GraphFormat format);

}  // namespace graphstab
