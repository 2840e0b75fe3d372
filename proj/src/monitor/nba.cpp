#include "ltlshield/monitor/nba.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "ltlshield/errors.hpp"

namespace ltlshield::monitor {

Nba::Nba(Alphabet ap, std::vector<NbaState> states, std::vector<std::size_t> initial)
    : ap_(std::move(ap)), states_(std::move(states)), initial_(std::move(initial)) {
  for (auto i : initial_) {
    if (i >= states_.size()) throw Error("NBA initial state out of range");
  }
  for (auto& s : states_) {
    std::sort(s.successors.begin(), s.successors.end());
    s.successors.erase(std::unique(s.successors.begin(), s.successors.end()), s.successors.end());
    for (auto t : s.successors) {
      if (t >= states_.size()) throw Error("NBA transition to unknown state");
    }
    if (!ap_.valid(s.required) || !ap_.valid(s.forbidden)) throw Error("NBA guard outside the alphabet");
  }
}

bool Nba::enabled(std::size_t s, Letter l) const {
  const auto& st = states_.at(s);
  return (l.bits & st.required.bits) == st.required.bits && (l.bits & st.forbidden.bits) == 0;
}

std::span<const std::size_t> Nba::successors(std::size_t s, Letter l) const {
  if (!enabled(s, l)) return {};
  return states_[s].successors;
}

Adjacency Nba::graph() const {
  Adjacency g(states_.size());
  for (std::size_t s = 0; s < states_.size(); ++s) g[s] = states_[s].successors;
  return g;
}

bool Nba::accepts(const Word& prefix, const Word& cycle) const {
  if (cycle.empty()) throw Error("lasso cycle must be non-empty");
  const std::size_t n = prefix.size() + cycle.size();
  const std::size_t loop = prefix.size();
  auto letter_at = [&](std::size_t i) { return i < loop ? prefix[i] : cycle[i - loop]; };
  auto id = [&](std::size_t pos, std::size_t s) { return pos * states_.size() + s; };

  Adjacency g(n * states_.size());
  for (std::size_t pos = 0; pos < n; ++pos) {
    std::size_t next = pos + 1 < n ? pos + 1 : loop;
    for (std::size_t s = 0; s < states_.size(); ++s) {
      for (auto t : successors(s, letter_at(pos))) g[id(pos, s)].push_back(id(next, t));
    }
  }

  std::vector<bool> reached(g.size(), false);
  std::vector<std::size_t> work;
  for (auto s : initial_) {
    if (!reached[id(0, s)]) {
      reached[id(0, s)] = true;
      work.push_back(id(0, s));
    }
  }
  while (!work.empty()) {
    auto v = work.back();
    work.pop_back();
    for (auto w : g[v]) {
      if (!reached[w]) {
        reached[w] = true;
        work.push_back(w);
      }
    }
  }

  auto scc = strongly_connected_components(g);
  auto cyclic = nontrivial_components(g, scc);
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (reached[v] && accepting(v % states_.size()) && cyclic[scc.component[v]]) return true;
  }
  return false;
}

namespace {

// Tableau over the subformula closure of an NNF formula.
class Tableau {
 public:
  Tableau(const Formula& root, const Alphabet& ap) : ap_(ap) { root_ = intern(root); }

  struct Node {
    std::vector<bool> old;
    std::vector<bool> next;
    Letter required;
    Letter forbidden;
  };

  std::size_t root() const { return root_; }
  std::size_t closure_size() const { return closure_.size(); }
  const std::vector<std::size_t>& untils() const { return untils_; }

  // Nodes expanding the obligation set `todo`, identified by index into nodes().
  const std::vector<std::size_t>& expand(const std::vector<bool>& obligations) {
    auto it = expansions_.find(obligations);
    if (it != expansions_.end()) return it->second;

    std::vector<std::size_t> todo;
    for (std::size_t i = 0; i < obligations.size(); ++i) {
      if (obligations[i]) todo.push_back(i);
    }
    std::vector<std::size_t> result;
    struct Partial {
      std::vector<std::size_t> todo;
      Node node;
    };
    std::vector<Partial> work;
    work.push_back({todo, Node{std::vector<bool>(closure_.size()), std::vector<bool>(closure_.size()), {}, {}}});
    while (!work.empty()) {
      Partial p = std::move(work.back());
      work.pop_back();
      bool alive = true;
      while (alive && !p.todo.empty()) {
        std::size_t f = p.todo.back();
        p.todo.pop_back();
        if (p.node.old[f]) continue;
        p.node.old[f] = true;
        const Entry& e = closure_[f];
        switch (e.op) {
          case Op::True: break;
          case Op::False: alive = false; break;
          case Op::Atom:
            if (p.node.forbidden.contains(e.atom)) alive = false;
            p.node.required = p.node.required.with(e.atom);
            break;
          case Op::Not:
            if (p.node.required.contains(e.atom)) alive = false;
            p.node.forbidden = p.node.forbidden.with(e.atom);
            break;
          case Op::And:
            p.todo.push_back(e.lhs);
            p.todo.push_back(e.rhs);
            break;
          case Op::Or: {
            Partial alt = p;
            alt.todo.push_back(e.rhs);
            work.push_back(std::move(alt));
            p.todo.push_back(e.lhs);
            break;
          }
          case Op::Next: p.node.next[e.lhs] = true; break;
          case Op::Until: {
            // a U b  ==  b | (a & X(a U b))
            Partial alt = p;
            alt.todo.push_back(e.lhs);
            alt.node.next[f] = true;
            work.push_back(std::move(alt));
            p.todo.push_back(e.rhs);
            break;
          }
          case Op::Release: {
            // a R b  ==  b & (a | X(a R b))
            Partial alt = p;
            alt.todo.push_back(e.rhs);
            alt.node.next[f] = true;
            work.push_back(std::move(alt));
            p.todo.push_back(e.lhs);
            p.todo.push_back(e.rhs);
            break;
          }
          default: throw Error("tableau input is not in negation normal form");
        }
      }
      if (!alive) continue;
      result.push_back(intern_node(std::move(p.node)));
    }
    std::sort(result.begin(), result.end());
    result.erase(std::unique(result.begin(), result.end()), result.end());
    return expansions_.emplace(obligations, std::move(result)).first->second;
  }

  const Node& node(std::size_t i) const { return nodes_[i]; }

  std::vector<bool> root_obligation() const {
    std::vector<bool> o(closure_.size(), false);
    o[root_] = true;
    return o;
  }

  // Generalized Büchi set for the k-th Until: the until is absent or its
  // right operand holds now.
  bool fulfils(std::size_t node, std::size_t k) const {
    const auto& n = nodes_[node];
    const Entry& e = closure_[untils_[k]];
    return !n.old[untils_[k]] || n.old[e.rhs];
  }

 private:
  struct Entry {
    Op op;
    std::size_t atom = 0;
    std::size_t lhs = 0;
    std::size_t rhs = 0;
  };

  std::size_t intern(const Formula& f) {
    auto key = f.to_string();
    if (auto it = index_.find(key); it != index_.end()) return it->second;
    Entry e{f.op()};
    switch (f.op()) {
      case Op::Atom: e.atom = atom_index(f.name()); break;
      case Op::Not:
        if (f.lhs().op() != Op::Atom) throw Error("tableau input is not in negation normal form");
        e.atom = atom_index(f.lhs().name());
        break;
      case Op::Next: e.lhs = intern(f.lhs()); break;
      case Op::True:
      case Op::False: break;
      case Op::And:
      case Op::Or:
      case Op::Until:
      case Op::Release:
        e.lhs = intern(f.lhs());
        e.rhs = intern(f.rhs());
        break;
      default: throw Error("tableau input is not in negation normal form");
    }
    closure_.push_back(e);
    std::size_t id = closure_.size() - 1;
    if (e.op == Op::Until) untils_.push_back(id);
    index_.emplace(std::move(key), id);
    return id;
  }

  std::size_t atom_index(const std::string& name) const {
    auto idx = ap_.index_of(name);
    if (!idx) throw Error("undeclared proposition '" + name + "'");
    return *idx;
  }

  std::size_t intern_node(Node n) {
    auto key = std::make_pair(n.old, n.next);
    if (auto it = node_index_.find(key); it != node_index_.end()) return it->second;
    nodes_.push_back(std::move(n));
    node_index_.emplace(std::move(key), nodes_.size() - 1);
    return nodes_.size() - 1;
  }

  const Alphabet& ap_;
  std::vector<Entry> closure_;
  std::map<std::string, std::size_t> index_;
  std::vector<std::size_t> untils_;
  std::size_t root_ = 0;
  std::vector<Node> nodes_;
  std::map<std::pair<std::vector<bool>, std::vector<bool>>, std::size_t> node_index_;
  std::map<std::vector<bool>, std::vector<std::size_t>> expansions_;
};

}  // namespace

Nba formula_to_nba(const Formula& nnf_formula, const Alphabet& ap, std::size_t state_cap) {
  if (!is_nnf(nnf_formula)) throw Error("formula_to_nba requires negation normal form");
  Tableau tab(nnf_formula, ap);
  const std::size_t k = tab.untils().size();

  // Degeneralized state = (tableau node, counter). With no Until every state
  // accepts and the counter stays 0.
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> ids;
  std::vector<std::pair<std::size_t, std::size_t>> keys;
  std::queue<std::size_t> frontier;
  auto state_of = [&](std::size_t node, std::size_t counter) {
    auto key = std::make_pair(node, counter);
    if (auto it = ids.find(key); it != ids.end()) return it->second;
    if (keys.size() >= state_cap) {
      throw ResourceLimitError("NBA construction exceeded the state cap of " + std::to_string(state_cap));
    }
    keys.push_back(key);
    ids.emplace(key, keys.size() - 1);
    frontier.push(keys.size() - 1);
    return keys.size() - 1;
  };

  std::vector<std::size_t> initial;
  for (auto node : tab.expand(tab.root_obligation())) initial.push_back(state_of(node, 0));

  std::vector<std::vector<std::size_t>> succ;
  while (!frontier.empty()) {
    std::size_t s = frontier.front();
    frontier.pop();
    auto [node, counter] = keys[s];
    std::size_t next_counter = 0;
    if (k > 0) next_counter = tab.fulfils(node, counter) ? (counter + 1) % k : counter;
    // Copy: expand() may append tableau nodes and invalidate references.
    std::vector<bool> obligations = tab.node(node).next;
    std::vector<std::size_t> targets = tab.expand(obligations);
    std::vector<std::size_t> out;
    out.reserve(targets.size());
    for (auto t : targets) out.push_back(state_of(t, next_counter));
    if (succ.size() <= s) succ.resize(s + 1);
    succ[s] = std::move(out);
  }
  succ.resize(keys.size());

  std::vector<NbaState> states(keys.size());
  for (std::size_t s = 0; s < keys.size(); ++s) {
    auto [node, counter] = keys[s];
    const auto& n = tab.node(node);
    states[s].name = "s" + std::to_string(s);
    states[s].required = n.required;
    states[s].forbidden = n.forbidden;
    states[s].successors = std::move(succ[s]);
    states[s].accepting = k == 0 || (counter == 0 && tab.fulfils(node, 0));
  }
  return Nba(ap, std::move(states), std::move(initial));
}

std::vector<bool> live_states(const Nba& nba) {
  auto g = nba.graph();
  auto scc = strongly_connected_components(g);
  auto cyclic = nontrivial_components(g, scc);

  std::vector<bool> good(scc.count, false);
  for (std::size_t s = 0; s < nba.size(); ++s) {
    if (nba.accepting(s) && cyclic[scc.component[s]]) good[scc.component[s]] = true;
  }
  // Components complete sinks-first, so successors' liveness is known when a
  // component is visited in increasing index order.
  std::vector<std::vector<std::size_t>> members(scc.count);
  for (std::size_t s = 0; s < nba.size(); ++s) members[scc.component[s]].push_back(s);
  std::vector<bool> live_comp(scc.count, false);
  for (std::size_t c = 0; c < scc.count; ++c) {
    bool live = good[c];
    for (std::size_t i = 0; !live && i < members[c].size(); ++i) {
      for (auto t : g[members[c][i]]) {
        if (scc.component[t] != c && live_comp[scc.component[t]]) {
          live = true;
          break;
        }
      }
    }
    live_comp[c] = live;
  }
  std::vector<bool> live(nba.size());
  for (std::size_t s = 0; s < nba.size(); ++s) live[s] = live_comp[scc.component[s]];
  return live;
}

}  // namespace ltlshield::monitor
