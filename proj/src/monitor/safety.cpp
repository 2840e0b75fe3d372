#include "ltlshield/monitor/safety.hpp"

#include <map>
#include <queue>

#include "ltlshield/errors.hpp"

namespace ltlshield::monitor {

std::string_view to_string(SafetyClass c) noexcept { return c == SafetyClass::Safety ? "Safety" : "NotSafety"; }

SafetyClass classify_safety(const Formula& f, const Alphabet& ap, const CompileOptions& opts) {
  return classify_safety(f, build_monitor(f, ap, opts), opts);
}

SafetyClass classify_safety(const Formula& f, const Monitor& m, const CompileOptions& opts) {
  const Alphabet& ap = m.alphabet();
  const Nba neg = formula_to_nba(to_nnf(Not(f)), ap, opts.state_cap);

  using Key = std::pair<std::size_t, MonitorState>;
  std::map<Key, std::size_t> ids;
  std::vector<Key> keys;
  std::queue<std::size_t> frontier;
  Adjacency graph;
  auto id_of = [&](Key k) {
    if (auto it = ids.find(k); it != ids.end()) return it->second;
    if (keys.size() >= opts.state_cap) {
      throw ResourceLimitError("safety product exceeded the state cap of " + std::to_string(opts.state_cap));
    }
    keys.push_back(k);
    graph.emplace_back();
    ids.emplace(k, keys.size() - 1);
    frontier.push(keys.size() - 1);
    return keys.size() - 1;
  };

  if (m.is_bottom(m.initial())) return SafetyClass::Safety;
  for (auto s : neg.initial()) id_of({s, m.initial()});

  while (!frontier.empty()) {
    auto v = frontier.front();
    frontier.pop();
    auto [s, q] = keys[v];
    for (auto l : ap.letters()) {
      auto q2 = m.step(q, l);
      if (m.is_bottom(q2)) continue;
      for (auto t : neg.successors(s, l)) {
        auto w = id_of({t, q2});
        graph[v].push_back(w);
      }
    }
  }

  auto scc = strongly_connected_components(graph);
  auto cyclic = nontrivial_components(graph, scc);
  for (std::size_t v = 0; v < keys.size(); ++v) {
    if (neg.accepting(keys[v].first) && cyclic[scc.component[v]]) return SafetyClass::NotSafety;
  }
  return SafetyClass::Safety;
}

}  // namespace ltlshield::monitor
