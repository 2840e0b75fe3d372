#include "ltlshield/monitor/alphabet.hpp"

#include <algorithm>
#include <cctype>

#include "ltlshield/errors.hpp"

namespace ltlshield::monitor {

bool is_identifier(std::string_view text) {
  if (text.empty()) return false;
  auto head = static_cast<unsigned char>(text.front());
  if (!std::isalpha(head) && head != '_') return false;
  return std::all_of(text.begin(), text.end(), [](char c) {
    auto u = static_cast<unsigned char>(c);
    return std::isalnum(u) || u == '_';
  });
}

Alphabet::Alphabet(std::vector<std::string> propositions) : propositions_(std::move(propositions)) {
  if (propositions_.size() > kMaxPropositions) {
    throw Error("too many atomic propositions (" + std::to_string(propositions_.size()) + ", max " +
                std::to_string(kMaxPropositions) + ")");
  }
  for (std::size_t i = 0; i < propositions_.size(); ++i) {
    if (!is_identifier(propositions_[i])) {
      throw Error("invalid proposition name '" + propositions_[i] + "'");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (propositions_[i] == propositions_[j]) {
        throw Error("duplicate proposition '" + propositions_[i] + "'");
      }
    }
  }
}

std::optional<std::size_t> Alphabet::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < propositions_.size(); ++i) {
    if (propositions_[i] == name) return i;
  }
  return std::nullopt;
}

Letter Alphabet::letter(std::span<const std::string> names) const {
  Letter l;
  for (const auto& n : names) {
    auto idx = index_of(n);
    if (!idx) throw Error("undeclared proposition '" + n + "'");
    l = l.with(*idx);
  }
  return l;
}

Letter Alphabet::letter(std::initializer_list<std::string_view> names) const {
  Letter l;
  for (auto n : names) {
    auto idx = index_of(n);
    if (!idx) throw Error("undeclared proposition '" + std::string(n) + "'");
    l = l.with(*idx);
  }
  return l;
}

std::vector<std::string> Alphabet::names(Letter l) const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < propositions_.size(); ++i) {
    if (l.contains(i)) out.push_back(propositions_[i]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string Alphabet::format(Letter l) const {
  std::string out = "{";
  bool first = true;
  for (const auto& n : names(l)) {
    if (!first) out += ',';
    out += n;
    first = false;
  }
  out += '}';
  return out;
}

std::vector<Letter> Alphabet::letters() const {
  std::vector<Letter> out;
  out.reserve(letter_count());
  for (std::uint32_t b = 0; b < letter_count(); ++b) out.push_back(Letter{b});
  return out;
}

}  // namespace ltlshield::monitor
