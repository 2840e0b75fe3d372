#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace ltlshield::monitor {

enum class Op : std::uint8_t {
  True,
  False,
  Atom,
  Not,
  And,
  Or,
  Next,
  Until,
  WeakUntil,
  Release,
  Globally,
  Finally,
};

std::string_view op_name(Op op) noexcept;
int arity(Op op) noexcept;

/// Immutable LTL syntax tree. Copies share structure, so passing by value is
/// cheap and safe across threads.
class Formula {
 public:
  /// Defaults to `true`.
  Formula();

  static Formula constant(bool value);
  static Formula atom(std::string name);
  static Formula unary(Op op, Formula child);
  static Formula binary(Op op, Formula lhs, Formula rhs);

  Op op() const noexcept;
  /// Atom name; empty for other kinds.
  const std::string& name() const noexcept;
  /// First child (the only child for unary operators).
  const Formula& lhs() const;
  const Formula& rhs() const;

  bool is_literal() const noexcept;

  /// Number of nodes in the tree.
  std::size_t size() const noexcept;

  /// Parseable rendering; binary operators are fully parenthesized, so the
  /// string doubles as a structural key.
  std::string to_string() const;

  /// Sorted, duplicate-free atom names.
  std::vector<std::string> atoms() const;

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

Formula True();
Formula False();
Formula Atom(std::string name);
Formula Not(Formula f);
Formula And(Formula a, Formula b);
Formula Or(Formula a, Formula b);
Formula Next(Formula f);
Formula Until(Formula a, Formula b);
Formula WeakUntil(Formula a, Formula b);
Formula Release(Formula a, Formula b);
Formula Globally(Formula f);
Formula Finally(Formula f);

/// Negation normal form: negations only on atoms, F/G/W eliminated in favour
/// of U and R. Language-equivalent to the input.
Formula to_nnf(const Formula& f);

bool is_nnf(const Formula& f);

}  // namespace ltlshield::monitor
