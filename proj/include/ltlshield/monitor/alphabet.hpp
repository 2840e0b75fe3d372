#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ltlshield::monitor {

/// One element of 2^AP, stored as a bit mask over the proposition indices of
/// an Alphabet.
struct Letter {
  std::uint32_t bits = 0;

  constexpr bool contains(std::size_t index) const noexcept { return ((bits >> index) & 1u) != 0; }
  constexpr Letter with(std::size_t index) const noexcept { return Letter{bits | (1u << index)}; }

  friend constexpr auto operator<=>(Letter, Letter) = default;
};

using Word = std::vector<Letter>;

/// The declared atomic propositions. Proposition order fixes the bit layout of
/// Letter; printed letters always list names sorted.
class Alphabet {
 public:
  static constexpr std::size_t kMaxPropositions = 16;

  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> propositions);

  std::size_t size() const noexcept { return propositions_.size(); }
  std::size_t letter_count() const noexcept { return std::size_t{1} << propositions_.size(); }
  const std::vector<std::string>& propositions() const noexcept { return propositions_; }

  std::optional<std::size_t> index_of(std::string_view name) const;
  bool contains(std::string_view name) const { return index_of(name).has_value(); }

  // Throws ltlshield::Error on an undeclared name.
  Letter letter(std::span<const std::string> names) const;
  Letter letter(std::initializer_list<std::string_view> names) const;

  bool valid(Letter l) const noexcept { return (l.bits >> propositions_.size()) == 0; }

  std::vector<std::string> names(Letter l) const;
  /// "{}" for the empty letter, otherwise "{a,b}" with names sorted.
  std::string format(Letter l) const;

  /// All letters in increasing bit order.
  std::vector<Letter> letters() const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::vector<std::string> propositions_;
};

bool is_identifier(std::string_view text);

}  // namespace ltlshield::monitor
