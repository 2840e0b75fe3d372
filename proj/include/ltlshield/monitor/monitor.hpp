#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ltlshield/monitor/alphabet.hpp"

namespace ltlshield::monitor {

/// LTL3 truth value of a finite word.
enum class Verdict : std::uint8_t { Top, Bottom, Inconclusive };

/// "top" / "bot" / "inc", the spelling used in monitor documents.
std::string_view to_string(Verdict v) noexcept;
/// "⊤" / "⊥" / "?".
std::string_view symbol(Verdict v) noexcept;
std::optional<Verdict> parse_verdict(std::string_view text) noexcept;

using MonitorState = std::size_t;

/// Deterministic, total Moore machine over 2^AP with three-valued outputs.
class Monitor {
 public:
  Monitor() = default;
  /// `delta` is row-major: delta[q * |Σ| + σ.bits]. Throws ltlshield::Error
  /// if the table is not total or references unknown states.
  Monitor(Alphabet ap, std::vector<std::string> names, std::vector<Verdict> outputs, MonitorState initial,
          std::vector<MonitorState> delta);

  const Alphabet& alphabet() const noexcept { return ap_; }
  std::size_t size() const noexcept { return outputs_.size(); }
  MonitorState initial() const noexcept { return initial_; }
  Verdict output(MonitorState q) const { return outputs_.at(q); }
  const std::string& name(MonitorState q) const { return names_.at(q); }
  std::optional<MonitorState> find(std::string_view name) const;

  MonitorState step(MonitorState q, Letter l) const;
  MonitorState run_from(MonitorState q, const Word& w) const;
  MonitorState final_state(const Word& w) const { return run_from(initial_, w); }
  Verdict run(const Word& w) const { return output(final_state(w)); }

  /// First state with output ⊤ / ⊥, if any.
  std::optional<MonitorState> top() const { return first_with(Verdict::Top); }
  std::optional<MonitorState> bottom() const { return first_with(Verdict::Bottom); }
  bool is_bottom(MonitorState q) const { return output(q) == Verdict::Bottom; }

  /// Every ⊤/⊥ state loops to itself on every letter.
  bool verdict_states_are_traps() const;

  const std::vector<MonitorState>& table() const noexcept { return delta_; }

  friend bool operator==(const Monitor&, const Monitor&) = default;

 private:
  std::optional<MonitorState> first_with(Verdict v) const;

  Alphabet ap_;
  std::vector<std::string> names_;
  std::vector<Verdict> outputs_;
  MonitorState initial_ = 0;
  std::vector<MonitorState> delta_;
};

inline MonitorState monitor_step(const Monitor& m, MonitorState q, Letter l) { return m.step(q, l); }
inline Verdict run_word(const Monitor& m, const Word& w) { return m.run(w); }

}  // namespace ltlshield::monitor
