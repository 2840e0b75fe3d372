#include "ltlshield/monitor/monitor.hpp"

#include <set>

#include "ltlshield/errors.hpp"

namespace ltlshield::monitor {

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::Top: return "top";
    case Verdict::Bottom: return "bot";
    case Verdict::Inconclusive: return "inc";
  }
  return "inc";
}

std::string_view symbol(Verdict v) noexcept {
  switch (v) {
    case Verdict::Top: return "⊤";
    case Verdict::Bottom: return "⊥";
    case Verdict::Inconclusive: return "?";
  }
  return "?";
}

std::optional<Verdict> parse_verdict(std::string_view text) noexcept {
  if (text == "top") return Verdict::Top;
  if (text == "bot") return Verdict::Bottom;
  if (text == "inc") return Verdict::Inconclusive;
  return std::nullopt;
}

Monitor::Monitor(Alphabet ap, std::vector<std::string> names, std::vector<Verdict> outputs, MonitorState initial,
                 std::vector<MonitorState> delta)
    : ap_(std::move(ap)),
      names_(std::move(names)),
      outputs_(std::move(outputs)),
      initial_(initial),
      delta_(std::move(delta)) {
  const std::size_t n = outputs_.size();
  if (n == 0) throw Error("monitor must have at least one state");
  if (names_.size() != n) throw Error("monitor state names do not match state count");
  if (initial_ >= n) throw Error("monitor initial state out of range");
  if (delta_.size() != n * ap_.letter_count()) throw Error("monitor transition table is not total");
  for (auto t : delta_) {
    if (t >= n) throw Error("monitor transition to unknown state");
  }
  std::set<std::string> seen;
  for (const auto& nm : names_) {
    if (!seen.insert(nm).second) throw Error("duplicate monitor state name '" + nm + "'");
  }
}

std::optional<MonitorState> Monitor::find(std::string_view name) const {
  for (MonitorState q = 0; q < names_.size(); ++q) {
    if (names_[q] == name) return q;
  }
  return std::nullopt;
}

MonitorState Monitor::step(MonitorState q, Letter l) const {
  if (q >= size()) throw Error("monitor state out of range");
  if (!ap_.valid(l)) throw Error("letter outside the monitor alphabet");
  return delta_[q * ap_.letter_count() + l.bits];
}

MonitorState Monitor::run_from(MonitorState q, const Word& w) const {
  for (auto l : w) q = step(q, l);
  return q;
}

bool Monitor::verdict_states_are_traps() const {
  for (MonitorState q = 0; q < size(); ++q) {
    if (outputs_[q] == Verdict::Inconclusive) continue;
    for (std::size_t b = 0; b < ap_.letter_count(); ++b) {
      if (delta_[q * ap_.letter_count() + b] != q) return false;
    }
  }
  return true;
}

std::optional<MonitorState> Monitor::first_with(Verdict v) const {
  for (MonitorState q = 0; q < size(); ++q) {
    if (outputs_[q] == v) return q;
  }
  return std::nullopt;
}

}  // namespace ltlshield::monitor
