#pragma once

#include <cstddef>
#include <vector>

namespace ltlshield::monitor {

using Adjacency = std::vector<std::vector<std::size_t>>;

struct SccDecomposition {
  /// component[v] is the SCC index of vertex v. Indices follow Tarjan
  /// completion order, so every edge u -> v has component[u] >= component[v].
  std::vector<std::size_t> component;
  std::size_t count = 0;
};

/// Iterative Tarjan; safe for graphs far deeper than the call stack.
SccDecomposition strongly_connected_components(const Adjacency& graph);

/// True when the SCC of `v` contains a cycle (more than one vertex, or a self
/// loop on its only vertex).
std::vector<bool> nontrivial_components(const Adjacency& graph, const SccDecomposition& scc);

}  // namespace ltlshield::monitor
