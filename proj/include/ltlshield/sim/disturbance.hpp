#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "ltlshield/reach/box.hpp"

namespace ltlshield::sim {

enum class Strategy { Uniform, Extreme, Zero };

Strategy parse_strategy(std::string_view name);  // throws Error
std::string_view to_string(Strategy s) noexcept;

/// Seeded disturbance source over a box D.
///   uniform: i.i.d. uniform over D
///   extreme: a vertex of D; each dimension alternates lo/hi for a seeded
///            number of ticks, then sticks to the end `adversary` points at
///   zero:    the center of D
class DisturbanceSampler {
 public:
  DisturbanceSampler(Strategy strategy, reach::Box D, std::uint64_t seed, reach::Vec adversary = {});

  reach::Vec draw();

 private:
  Strategy strategy_;
  reach::Box D_;
  reach::Vec adversary_;
  std::mt19937_64 rng_;
  std::vector<int> alternate_for_;
  std::size_t tick_ = 0;
};

}  // namespace ltlshield::sim
