#pragma once

#include <initializer_list>
#include <vector>

#include "graphstab/graph.hpp"
#include "graphstab/invariants.hpp"

namespace fx {

using graphstab::Graph;
namespace graphs = graphstab::graphs;

inline Graph make(int n, std::initializer_list<graphstab::Edge> edges) {
  const std::vector<graphstab::Edge> list(edges);
  return Graph(n, list);
}

inline Graph join(std::initializer_list<Graph> parts) {
  const std::vector<Graph> list(parts);
  return graphstab::disjoint_union(list);
}

inline Graph k1() { return Graph(1); }
inline Graph k2() { return graphs::complete(2); }
inline Graph k3() { return graphs::complete(3); }
inline Graph c(int n) { return graphs::cycle(n); }
inline Graph p(int n) { return graphs::path(n); }

inline const graphstab::InvariantDescriptor& inv(std::string_view id) { return graphstab::invariant(id); }

inline long long as_int(const graphstab::ExtValue& v) { return v.as_int64().value(); }

}  // namespace fx
