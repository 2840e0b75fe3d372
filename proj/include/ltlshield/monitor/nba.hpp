#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "ltlshield/monitor/alphabet.hpp"
#include "ltlshield/monitor/formula.hpp"
#include "ltlshield/monitor/graph.hpp"

namespace ltlshield::monitor {

inline constexpr std::size_t kDefaultStateCap = 1'000'000;

/// A Büchi state whose outgoing transitions are all guarded by the same
/// literal constraint: it may read σ iff required ⊆ σ and forbidden ∩ σ = ∅.
struct NbaState {
  std::string name;
  Letter required;
  Letter forbidden;
  std::vector<std::size_t> successors;  // sorted, unique
  bool accepting = false;
};

/// Nondeterministic Büchi automaton over 2^AP.
class Nba {
 public:
  Nba() = default;
  Nba(Alphabet ap, std::vector<NbaState> states, std::vector<std::size_t> initial);

  const Alphabet& alphabet() const noexcept { return ap_; }
  std::size_t size() const noexcept { return states_.size(); }
  const NbaState& state(std::size_t s) const { return states_.at(s); }
  const std::vector<std::size_t>& initial() const noexcept { return initial_; }

  bool enabled(std::size_t s, Letter l) const;
  bool accepting(std::size_t s) const { return states_.at(s).accepting; }

  /// δ(s, σ); empty when σ violates the state's literal guard.
  std::span<const std::size_t> successors(std::size_t s, Letter l) const;

  /// Letter-agnostic successor graph (every guard is satisfiable).
  Adjacency graph() const;

  /// Whether prefix·cycle^ω has an accepting run. Explores the product of the
  /// automaton with the lasso's position graph and looks for a reachable
  /// accepting cycle.
  bool accepts(const Word& prefix, const Word& cycle) const;

 private:
  Alphabet ap_;
  std::vector<NbaState> states_;
  std::vector<std::size_t> initial_;
};

/// Tableau construction. States are locally consistent sets of subformulas
/// (closed under the U/R/∧/∨ expansion rules) paired with their X-obligations;
/// one Büchi condition per Until, degeneralized with a round-robin counter.
/// `nnf_formula` must be in negation normal form.
/// Throws ResourceLimitError past `state_cap` states.
Nba formula_to_nba(const Formula& nnf_formula, const Alphabet& ap, std::size_t state_cap = kDefaultStateCap);

/// live[s] iff L(nba, s) ≠ ∅, i.e. s reaches a cyclic SCC holding an
/// accepting state.
std::vector<bool> live_states(const Nba& nba);

}  // namespace ltlshield::monitor
