#include "graphstab/corpus.hpp"

#include <array>
#include <bit>
#include <random>
#include <string>

#include "graphstab/errors.hpp"

namespace graphstab {

std::string_view to_string(CorpusMode m) {
  switch (m) {
    case CorpusMode::exhaustive:
      return "exhaustive";
    case CorpusMode::random:
      return "random";
    case CorpusMode::union_pairs:
      break;
  }
  return "union";
}

CorpusMode parse_corpus_mode(std::string_view text) {
  if (text == "exhaustive") return CorpusMode::exhaustive;
  if (text == "random") return CorpusMode::random;
  if (text == "union") return CorpusMode::union_pairs;
  throw InputError("unknown corpus mode '" + std::string(text) + "'");
}

namespace {

/// Vertex pairs in graph6 bit order: column-major upper triangle.
std::vector<Edge> graph6_pairs(int n) {
  std::vector<Edge> pairs;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) pairs.push_back({i, j});
  return pairs;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return false;
  std::uint64_t seen = 1;
  std::uint64_t frontier = 1;
  while (frontier) {
    std::uint64_t next = 0;
    for (std::uint64_t f = frontier; f; f &= f - 1) next |= g.neighbor_mask(std::countr_zero(f));
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == g.vertex_mask();
}

void check_orders(const CorpusSpec& spec, int cap) {
  if (spec.n_max < 1 || spec.n_max > cap)
    throw InputError("n-max must lie in 1.." + std::to_string(cap) + " for " + std::string(to_string(spec.mode)) +
                     " corpora");
  if (spec.n_min < 0 || spec.n_min > spec.n_max) throw InputError("n-min must lie in 0..n-max");
}

}  // namespace

std::vector<Graph> labelled_graphs(int n) {
  if (n < 0 || n > kExhaustiveMaxOrder)
    throw InputError("exhaustive enumeration supports orders 0.." + std::to_string(kExhaustiveMaxOrder));
  const std::vector<Edge> pairs = graph6_pairs(n);
  const std::size_t m = pairs.size();
  std::vector<Graph> out;
  out.reserve(std::size_t{1} << m);
  EdgeSet edges;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << m); ++code) {
    edges.clear();
    // The first pair is the most significant bit, so numeric order of `code`
    // is graph6 string order.
    for (std::size_t k = 0; k < m; ++k)
      if ((code >> (m - 1 - k)) & 1U) edges.push_back(pairs[k]);
    out.emplace_back(n, edges);
  }
  return out;
}

std::vector<Graph> connected_labelled_graphs(int n) {
  std::vector<Graph> out;
  for (Graph& g : labelled_graphs(n))
    if (is_connected(g)) out.push_back(std::move(g));
  return out;
}

Corpus generate_corpus(const CorpusSpec& spec) {
  Corpus corpus{spec, {}};
  switch (spec.mode) {
    case CorpusMode::exhaustive: {
      check_orders(spec, kExhaustiveMaxOrder);
      for (int n = spec.n_min; n <= spec.n_max; ++n) {
        std::vector<Graph> layer = labelled_graphs(n);
        corpus.graphs.insert(corpus.graphs.end(), std::make_move_iterator(layer.begin()),
                             std::make_move_iterator(layer.end()));
      }
      break;
    }
    case CorpusMode::random: {
      check_orders(spec, Graph::kMaxOrder);
      std::mt19937_64 rng(spec.seed);
      const auto span = static_cast<std::uint64_t>(spec.n_max - spec.n_min + 1);
      EdgeSet edges;
      for (std::size_t c = 0; c < spec.count; ++c) {
        const int n = spec.n_min + static_cast<int>(rng() % span);
        edges.clear();
        std::uint64_t bits = 0;
        int left = 0;
        for (const Edge& e : graph6_pairs(n)) {
          if (left == 0) {
            bits = rng();
            left = 64;
          }
          if (bits & 1U) edges.push_back(e);
          bits >>= 1;
          --left;
        }
        corpus.graphs.emplace_back(n, edges);
      }
      break;
    }
    case CorpusMode::union_pairs: {
      check_orders(spec, kExhaustiveMaxOrder);
      std::vector<std::vector<Graph>> connected(static_cast<std::size_t>(spec.n_max));
      for (int n = 1; n < spec.n_max; ++n) connected[static_cast<std::size_t>(n)] = connected_labelled_graphs(n);
      for (int a = 1; 2 * a <= spec.n_max; ++a) {
        for (int b = a; a + b <= spec.n_max; ++b) {
          const auto& left = connected[static_cast<std::size_t>(a)];
          const auto& right = connected[static_cast<std::size_t>(b)];
          for (std::size_t i = 0; i < left.size(); ++i) {
            for (std::size_t j = a == b ? i : 0; j < right.size(); ++j) {
              const std::array<Graph, 2> pair = {left[i], right[j]};
              corpus.graphs.push_back(disjoint_union(pair));
            }
          }
        }
      }
      if (spec.count > 0 && spec.count < corpus.graphs.size()) {
        // Partial Fisher-Yates on raw generator output, so the sample does not
        // depend on the standard library's distribution algorithms.
        std::mt19937_64 rng(spec.seed);
        auto& g = corpus.graphs;
        for (std::size_t i = 0; i < spec.count; ++i) {
          const std::size_t pick = i + static_cast<std::size_t>(rng() % (g.size() - i));
          std::swap(g[i], g[pick]);
        }
        g.resize(spec.count);
      }
      break;
    }
  }
  if (spec.max_edges) {
    std::erase_if(corpus.graphs, [&](const Graph& g) { return g.edge_count() > *spec.max_edges; });
  }
  return corpus;
}

}  // namespace graphstab
