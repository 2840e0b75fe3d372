#pragma once

#include <cstdint>
#include <vector>

#include "ltlshield/monitor/alphabet.hpp"
#include "ltlshield/monitor/formula.hpp"

namespace ltlshield::monitor {

/// Evaluates LTL directly on ultimately periodic words prefix·cycle^ω.
///
/// The word has |prefix| + |cycle| distinct positions; position i's successor
/// is i + 1, except the last, whose successor is |prefix|. Each subformula is
/// evaluated once over all positions (children first), with U/W/F as least
/// and R/G as greatest fixpoints over the successor map. Shares nothing with
/// the automata pipeline, so it serves as the test oracle for it.
class LassoEvaluator {
 public:
  LassoEvaluator(const Formula& f, const Alphabet& ap);

  /// Throws ltlshield::Error if `cycle` is empty.
  bool satisfies(const Word& prefix, const Word& cycle) const;

  /// Truth value at every position of the lasso.
  std::vector<std::uint8_t> evaluate(const Word& prefix, const Word& cycle) const;

 private:
  struct Step {
    Op op;
    std::size_t atom = 0;
    std::size_t lhs = 0;
    std::size_t rhs = 0;
  };

  std::size_t compile(const Formula& f, const Alphabet& ap);

  std::vector<Step> program_;  // children precede parents; root is last
};

bool lasso_satisfies(const Formula& f, const Alphabet& ap, const Word& prefix, const Word& cycle);

}  // namespace ltlshield::monitor
