#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "graphstab/graph.hpp"

namespace graphstab {

enum class CorpusMode { exhaustive, random, union_pairs };

std::string_view to_string(CorpusMode m);
CorpusMode parse_corpus_mode(std::string_view text);

/// Largest order the exhaustive and union generators accept.
inline constexpr int kExhaustiveMaxOrder = 8;

struct CorpusSpec {
  CorpusMode mode = CorpusMode::exhaustive;
  /// Exhaustive and random modes draw orders from n_min..n_max. Union mode
  /// pairs components whose orders sum to at most n_max.
  int n_min = 0;
  int n_max = 0;
  /// Random mode: number of graphs. Union mode: 0 keeps every pair, otherwise
  /// a seeded sample of this many pairs.
  std::size_t count = 0;
  std::uint64_t seed = 0;
  /// When set, graphs with more edges are dropped after generation.
  std::optional<std::size_t> max_edges;
};

struct Corpus {
  CorpusSpec spec;
  std::vector<Graph> graphs;
};

/// Exhaustive: every labelled graph of each order once, orders ascending and
/// each order in ascending graph6 order. Random: G(n, 1/2) from a 64-bit
/// Mersenne Twister. Union: unordered pairs (A, B) of connected labelled
/// graphs, |A| <= |B|, laid out as A followed by B.
Corpus generate_corpus(const CorpusSpec& spec);

/// All labelled graphs of order n in ascending graph6 order.
std::vector<Graph> labelled_graphs(int n);
/// The connected members of labelled_graphs(n).
std::vector<Graph> connected_labelled_graphs(int n);

}  // namespace graphstab
