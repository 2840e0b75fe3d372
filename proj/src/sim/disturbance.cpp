#include "ltlshield/sim/disturbance.hpp"

#include "ltlshield/errors.hpp"

namespace ltlshield::sim {

Strategy parse_strategy(std::string_view name) {
  if (name == "uniform") return Strategy::Uniform;
  if (name == "extreme") return Strategy::Extreme;
  if (name == "zero") return Strategy::Zero;
  throw Error("unknown disturbance strategy '" + std::string(name) + "' (expected uniform, extreme or zero)");
}

std::string_view to_string(Strategy s) noexcept {
  switch (s) {
    case Strategy::Uniform: return "uniform";
    case Strategy::Extreme: return "extreme";
    case Strategy::Zero: return "zero";
  }
  return "?";
}

DisturbanceSampler::DisturbanceSampler(Strategy strategy, reach::Box D, std::uint64_t seed, reach::Vec adversary)
    : strategy_(strategy), D_(std::move(D)), adversary_(std::move(adversary)), rng_(seed) {
  if (!D_.bounded()) throw Error("disturbance box must be bounded");
  if (adversary_.size() == 0) adversary_ = reach::Vec::Zero(D_.lo.size());
  if (adversary_.size() != D_.lo.size()) throw DimensionError("adversary has the wrong dimension");
  if (strategy_ == Strategy::Extreme) {
    std::uniform_int_distribution<int> len(0, 7);
    for (Eigen::Index i = 0; i < D_.lo.size(); ++i) alternate_for_.push_back(len(rng_));
  }
}

reach::Vec DisturbanceSampler::draw() {
  const auto n = D_.lo.size();
  reach::Vec d(n);
  switch (strategy_) {
    case Strategy::Zero:
      d = D_.center();
      break;
    case Strategy::Uniform:
      for (Eigen::Index i = 0; i < n; ++i) {
        if (D_.lo(i) == D_.hi(i)) {
          d(i) = D_.lo(i);
        } else {
          d(i) = std::uniform_real_distribution<double>(D_.lo(i), D_.hi(i))(rng_);
        }
      }
      break;
    case Strategy::Extreme:
      for (Eigen::Index i = 0; i < n; ++i) {
        bool high = tick_ % 2 == 1;
        if (tick_ >= static_cast<std::size_t>(alternate_for_[static_cast<std::size_t>(i)]) && adversary_(i) != 0.0) {
          high = adversary_(i) > 0.0;
        }
        d(i) = high ? D_.hi(i) : D_.lo(i);
      }
      break;
  }
  ++tick_;
  return d;
}

}  // namespace ltlshield::sim
