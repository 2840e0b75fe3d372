#include "ltlshield/monitor/graph.hpp"

#include <limits>

namespace ltlshield::monitor {

SccDecomposition strongly_connected_components(const Adjacency& graph) {
  constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();
  const std::size_t n = graph.size();
  SccDecomposition out;
  out.component.assign(n, kUnset);

  std::vector<std::size_t> index(n, kUnset), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  struct Frame {
    std::size_t v;
    std::size_t edge;
  };
  std::vector<Frame> call;
  std::size_t counter = 0;

  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != kUnset) continue;
    call.push_back({root, 0});
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;

    while (!call.empty()) {
      Frame& fr = call.back();
      const auto& edges = graph[fr.v];
      if (fr.edge < edges.size()) {
        std::size_t w = edges[fr.edge++];
        if (index[w] == kUnset) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[fr.v] = std::min(low[fr.v], index[w]);
        }
        continue;
      }
      std::size_t v = fr.v;
      call.pop_back();
      if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
      if (low[v] == index[v]) {
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          out.component[w] = out.count;
        } while (w != v);
        ++out.count;
      }
    }
  }
  return out;
}

std::vector<bool> nontrivial_components(const Adjacency& graph, const SccDecomposition& scc) {
  std::vector<std::size_t> members(scc.count, 0);
  for (auto c : scc.component) ++members[c];
  std::vector<bool> cyclic(scc.count, false);
  for (std::size_t c = 0; c < scc.count; ++c) cyclic[c] = members[c] > 1;
  for (std::size_t v = 0; v < graph.size(); ++v) {
    for (auto w : graph[v]) {
      if (w == v) cyclic[scc.component[v]] = true;
    }
  }
  return cyclic;
}

}  // namespace ltlshield::monitor
