#include "ltlshield/monitor/compile.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <queue>

#include "ltlshield/errors.hpp"

namespace ltlshield::monitor {
namespace {

using StateSet = std::vector<std::size_t>;  // sorted

std::string set_name(const StateSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i]);
  }
  return out + "}";
}

StateSet live_subset(const std::vector<bool>& live, const std::vector<std::size_t>& states) {
  StateSet out;
  for (auto s : states) {
    if (live[s]) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

StateSet live_successors(const Nba& nba, const std::vector<bool>& live, const StateSet& from, Letter l) {
  std::vector<std::size_t> all;
  for (auto s : from) {
    for (auto t : nba.successors(s, l)) all.push_back(t);
  }
  return live_subset(live, all);
}

}  // namespace

Monitor build_unminimized_monitor(const Formula& f, const Alphabet& ap, const CompileOptions& opts) {
  const Nba pos = formula_to_nba(to_nnf(f), ap, opts.state_cap);
  const Nba neg = formula_to_nba(to_nnf(Not(f)), ap, opts.state_cap);
  const auto live_pos = live_states(pos);
  const auto live_neg = live_states(neg);

  using Key = std::pair<StateSet, StateSet>;
  std::map<Key, MonitorState> ids;
  std::vector<Key> keys;
  std::queue<MonitorState> frontier;
  auto id_of = [&](Key k) {
    if (auto it = ids.find(k); it != ids.end()) return it->second;
    if (keys.size() >= opts.state_cap) {
      throw ResourceLimitError("monitor construction exceeded the state cap of " + std::to_string(opts.state_cap));
    }
    keys.push_back(k);
    ids.emplace(std::move(k), keys.size() - 1);
    frontier.push(keys.size() - 1);
    return keys.size() - 1;
  };

  id_of({live_subset(live_pos, pos.initial()), live_subset(live_neg, neg.initial())});
  const std::size_t sigma = ap.letter_count();
  std::vector<MonitorState> delta;
  while (!frontier.empty()) {
    MonitorState q = frontier.front();
    frontier.pop();
    if (delta.size() < (q + 1) * sigma) delta.resize((q + 1) * sigma);
    for (std::uint32_t b = 0; b < sigma; ++b) {
      Key k = keys[q];
      Key next{live_successors(pos, live_pos, k.first, Letter{b}), live_successors(neg, live_neg, k.second, Letter{b})};
      delta[q * sigma + b] = id_of(std::move(next));
    }
  }
  delta.resize(keys.size() * sigma);

  std::vector<std::string> names;
  std::vector<Verdict> outputs;
  for (const auto& [p, n] : keys) {
    names.push_back(set_name(p) + "|" + set_name(n));
    if (!p.empty() && !n.empty()) {
      outputs.push_back(Verdict::Inconclusive);
    } else if (!p.empty()) {
      outputs.push_back(Verdict::Top);
    } else if (!n.empty()) {
      outputs.push_back(Verdict::Bottom);
    } else {
      // Every infinite word satisfies f or !f, so both sides cannot die.
      throw Error("internal error: both monitor components empty for " + f.to_string());
    }
  }
  return Monitor(ap, std::move(names), std::move(outputs), 0, std::move(delta));
}

Monitor build_monitor(const Formula& f, const Alphabet& ap, const CompileOptions& opts) {
  return minimize_dfa(build_unminimized_monitor(f, ap, opts));
}

Monitor minimize_dfa(const Monitor& m) {
  const std::size_t sigma = m.alphabet().letter_count();

  // Reachable states in breadth-first order.
  std::vector<MonitorState> order;
  std::vector<bool> seen(m.size(), false);
  std::queue<MonitorState> q;
  q.push(m.initial());
  seen[m.initial()] = true;
  while (!q.empty()) {
    auto s = q.front();
    q.pop();
    order.push_back(s);
    for (std::uint32_t b = 0; b < sigma; ++b) {
      auto t = m.step(s, Letter{b});
      if (!seen[t]) {
        seen[t] = true;
        q.push(t);
      }
    }
  }

  // Moore refinement over the reachable states.
  std::vector<std::size_t> block(m.size(), 0);
  std::size_t blocks = 0;
  {
    std::map<Verdict, std::size_t> by_output;
    for (auto s : order) {
      auto [it, inserted] = by_output.emplace(m.output(s), by_output.size());
      block[s] = it->second;
    }
    blocks = by_output.size();
  }
  while (true) {
    std::map<std::vector<std::size_t>, std::size_t> signatures;
    std::vector<std::size_t> next(m.size(), 0);
    for (auto s : order) {
      std::vector<std::size_t> sig;
      sig.reserve(sigma + 1);
      sig.push_back(block[s]);
      for (std::uint32_t b = 0; b < sigma; ++b) sig.push_back(block[m.step(s, Letter{b})]);
      auto [it, inserted] = signatures.emplace(std::move(sig), signatures.size());
      next[s] = it->second;
    }
    const bool stable = signatures.size() == blocks;
    block = std::move(next);
    blocks = signatures.size();
    if (stable) break;
  }

  // Renumber blocks breadth-first from the initial block.
  std::vector<MonitorState> rep(blocks, 0);
  std::vector<bool> has_rep(blocks, false);
  for (auto s : order) {
    if (!has_rep[block[s]]) {
      has_rep[block[s]] = true;
      rep[block[s]] = s;
    }
  }
  std::vector<std::size_t> new_id(blocks, SIZE_MAX);
  std::vector<std::size_t> queue_order;
  std::queue<std::size_t> bq;
  new_id[block[m.initial()]] = 0;
  bq.push(block[m.initial()]);
  while (!bq.empty()) {
    auto b0 = bq.front();
    bq.pop();
    queue_order.push_back(b0);
    for (std::uint32_t b = 0; b < sigma; ++b) {
      auto tb = block[m.step(rep[b0], Letter{b})];
      if (new_id[tb] == SIZE_MAX) {
        new_id[tb] = queue_order.size() + bq.size();
        bq.push(tb);
      }
    }
  }

  std::vector<std::string> names(blocks);
  std::vector<Verdict> outputs(blocks);
  std::vector<MonitorState> delta(blocks * sigma);
  std::size_t inc = 0, tops = 0, bots = 0;
  for (auto b0 : queue_order) {
    auto id = new_id[b0];
    auto out = m.output(rep[b0]);
    outputs[id] = out;
    switch (out) {
      case Verdict::Top: names[id] = tops++ ? "top" + std::to_string(tops - 1) : "top"; break;
      case Verdict::Bottom: names[id] = bots++ ? "bot" + std::to_string(bots - 1) : "bot"; break;
      case Verdict::Inconclusive: names[id] = "q" + std::to_string(inc++); break;
    }
    for (std::uint32_t b = 0; b < sigma; ++b) delta[id * sigma + b] = new_id[block[m.step(rep[b0], Letter{b})]];
  }
  return Monitor(m.alphabet(), std::move(names), std::move(outputs), 0, std::move(delta));
}

}  // namespace ltlshield::monitor
