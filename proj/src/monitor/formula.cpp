#include "ltlshield/monitor/formula.hpp"

#include <algorithm>
#include <cassert>
#include <functional>

#include "ltlshield/errors.hpp"

namespace ltlshield::monitor {

struct Formula::Node {
  Op op = Op::True;
  std::string name;
  std::vector<Formula> children;
  std::size_t size = 1;
};

std::string_view op_name(Op op) noexcept {
  switch (op) {
    case Op::True: return "true";
    case Op::False: return "false";
    case Op::Atom: return "atom";
    case Op::Not: return "!";
    case Op::And: return "&";
    case Op::Or: return "|";
    case Op::Next: return "X";
    case Op::Until: return "U";
    case Op::WeakUntil: return "W";
    case Op::Release: return "R";
    case Op::Globally: return "G";
    case Op::Finally: return "F";
  }
  return "?";
}

int arity(Op op) noexcept {
  switch (op) {
    case Op::True:
    case Op::False:
    case Op::Atom: return 0;
    case Op::Not:
    case Op::Next:
    case Op::Globally:
    case Op::Finally: return 1;
    default: return 2;
  }
}

Formula::Formula() : Formula(constant(true)) {}

Formula::Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Formula Formula::constant(bool value) {
  static const auto t = std::make_shared<const Node>(Node{Op::True, {}, {}, 1});
  static const auto f = std::make_shared<const Node>(Node{Op::False, {}, {}, 1});
  return Formula(value ? t : f);
}

Formula Formula::atom(std::string name) {
  if (name.empty()) throw Error("atom name must be non-empty");
  return Formula(std::make_shared<const Node>(Node{Op::Atom, std::move(name), {}, 1}));
}

Formula Formula::unary(Op op, Formula child) {
  if (arity(op) != 1) throw Error(std::string("operator ") + std::string(op_name(op)) + " is not unary");
  std::size_t sz = 1 + child.size();
  return Formula(std::make_shared<const Node>(Node{op, {}, {std::move(child)}, sz}));
}

Formula Formula::binary(Op op, Formula lhs, Formula rhs) {
  if (arity(op) != 2) throw Error(std::string("operator ") + std::string(op_name(op)) + " is not binary");
  std::size_t sz = 1 + lhs.size() + rhs.size();
  return Formula(std::make_shared<const Node>(Node{op, {}, {std::move(lhs), std::move(rhs)}, sz}));
}

Op Formula::op() const noexcept { return node_->op; }
const std::string& Formula::name() const noexcept { return node_->name; }

const Formula& Formula::lhs() const {
  assert(!node_->children.empty());
  return node_->children[0];
}

const Formula& Formula::rhs() const {
  assert(node_->children.size() == 2);
  return node_->children[1];
}

bool Formula::is_literal() const noexcept {
  return op() == Op::Atom || (op() == Op::Not && lhs().op() == Op::Atom);
}

std::size_t Formula::size() const noexcept { return node_->size; }

std::string Formula::to_string() const {
  switch (op()) {
    case Op::True: return "true";
    case Op::False: return "false";
    case Op::Atom: return name();
    case Op::Not: return "!" + lhs().to_string();
    case Op::Next:
    case Op::Globally:
    case Op::Finally: return std::string(op_name(op())) + " " + lhs().to_string();
    default:
      return "(" + lhs().to_string() + " " + std::string(op_name(op())) + " " + rhs().to_string() + ")";
  }
}

std::vector<std::string> Formula::atoms() const {
  std::vector<std::string> out;
  std::function<void(const Formula&)> walk = [&](const Formula& f) {
    if (f.op() == Op::Atom) out.push_back(f.name());
    for (const auto& c : f.node_->children) walk(c);
  };
  walk(*this);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.op() != b.op() || a.size() != b.size() || a.name() != b.name()) return false;
  const auto& ca = a.node_->children;
  const auto& cb = b.node_->children;
  for (std::size_t i = 0; i < ca.size(); ++i) {
    if (!(ca[i] == cb[i])) return false;
  }
  return true;
}

Formula True() { return Formula::constant(true); }
Formula False() { return Formula::constant(false); }
Formula Atom(std::string name) { return Formula::atom(std::move(name)); }
Formula Not(Formula f) { return Formula::unary(Op::Not, std::move(f)); }
Formula And(Formula a, Formula b) { return Formula::binary(Op::And, std::move(a), std::move(b)); }
Formula Or(Formula a, Formula b) { return Formula::binary(Op::Or, std::move(a), std::move(b)); }
Formula Next(Formula f) { return Formula::unary(Op::Next, std::move(f)); }
Formula Until(Formula a, Formula b) { return Formula::binary(Op::Until, std::move(a), std::move(b)); }
Formula WeakUntil(Formula a, Formula b) { return Formula::binary(Op::WeakUntil, std::move(a), std::move(b)); }
Formula Release(Formula a, Formula b) { return Formula::binary(Op::Release, std::move(a), std::move(b)); }
Formula Globally(Formula f) { return Formula::unary(Op::Globally, std::move(f)); }
Formula Finally(Formula f) { return Formula::unary(Op::Finally, std::move(f)); }

namespace {

Formula nnf(const Formula& f, bool negate) {
  switch (f.op()) {
    case Op::True: return negate ? False() : True();
    case Op::False: return negate ? True() : False();
    case Op::Atom: return negate ? Not(f) : f;
    case Op::Not: return nnf(f.lhs(), !negate);
    case Op::And:
      return negate ? Or(nnf(f.lhs(), true), nnf(f.rhs(), true)) : And(nnf(f.lhs(), false), nnf(f.rhs(), false));
    case Op::Or:
      return negate ? And(nnf(f.lhs(), true), nnf(f.rhs(), true)) : Or(nnf(f.lhs(), false), nnf(f.rhs(), false));
    case Op::Next: return Next(nnf(f.lhs(), negate));
    case Op::Until:
      return negate ? Release(nnf(f.lhs(), true), nnf(f.rhs(), true))
                    : Until(nnf(f.lhs(), false), nnf(f.rhs(), false));
    case Op::Release:
      return negate ? Until(nnf(f.lhs(), true), nnf(f.rhs(), true))
                    : Release(nnf(f.lhs(), false), nnf(f.rhs(), false));
    case Op::WeakUntil:
      // a W b == b R (a | b);  !(a W b) == !b U (!a & !b)
      if (negate) return Until(nnf(f.rhs(), true), And(nnf(f.lhs(), true), nnf(f.rhs(), true)));
      return Release(nnf(f.rhs(), false), Or(nnf(f.lhs(), false), nnf(f.rhs(), false)));
    case Op::Globally:
      return negate ? Until(True(), nnf(f.lhs(), true)) : Release(False(), nnf(f.lhs(), false));
    case Op::Finally:
      return negate ? Release(False(), nnf(f.lhs(), true)) : Until(True(), nnf(f.lhs(), false));
  }
  return f;
}

}  // namespace

Formula to_nnf(const Formula& f) { return nnf(f, false); }

bool is_nnf(const Formula& f) {
  switch (f.op()) {
    case Op::True:
    case Op::False:
    case Op::Atom: return true;
    case Op::Not: return f.lhs().op() == Op::Atom;
    case Op::WeakUntil:
    case Op::Globally:
    case Op::Finally: return false;
    case Op::Next: return is_nnf(f.lhs());
    default: return is_nnf(f.lhs()) && is_nnf(f.rhs());
  }
}

}  // namespace ltlshield::monitor
