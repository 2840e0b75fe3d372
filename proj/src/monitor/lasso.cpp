#include "ltlshield/monitor/lasso.hpp"

#include "ltlshield/errors.hpp"

namespace ltlshield::monitor {

LassoEvaluator::LassoEvaluator(const Formula& f, const Alphabet& ap) { compile(f, ap); }

std::size_t LassoEvaluator::compile(const Formula& f, const Alphabet& ap) {
  Step s{f.op()};
  switch (arity(f.op())) {
    case 0:
      if (f.op() == Op::Atom) {
        auto idx = ap.index_of(f.name());
        if (!idx) throw Error("undeclared proposition '" + f.name() + "'");
        s.atom = *idx;
      }
      break;
    case 1: s.lhs = compile(f.lhs(), ap); break;
    default:
      s.lhs = compile(f.lhs(), ap);
      s.rhs = compile(f.rhs(), ap);
      break;
  }
  program_.push_back(s);
  return program_.size() - 1;
}

std::vector<std::uint8_t> LassoEvaluator::evaluate(const Word& prefix, const Word& cycle) const {
  if (cycle.empty()) throw Error("lasso cycle must be non-empty");
  const std::size_t n = prefix.size() + cycle.size();
  const std::size_t loop = prefix.size();
  auto letter_at = [&](std::size_t i) { return i < loop ? prefix[i] : cycle[i - loop]; };
  auto succ = [&](std::size_t i) { return i + 1 < n ? i + 1 : loop; };

  std::vector<std::vector<std::uint8_t>> val(program_.size(), std::vector<std::uint8_t>(n, 0));

  // Sweeping positions backwards settles the prefix in one pass; the cycle
  // needs at most two, so iterate until nothing changes.
  auto fixpoint = [&](std::vector<std::uint8_t>& out, std::uint8_t init, auto&& update) {
    std::fill(out.begin(), out.end(), init);
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t k = n; k-- > 0;) {
        std::uint8_t v = update(k, out[succ(k)]);
        if (v != out[k]) {
          out[k] = v;
          changed = true;
        }
      }
    }
  };

  for (std::size_t id = 0; id < program_.size(); ++id) {
    const Step& s = program_[id];
    auto& out = val[id];
    const auto& a = val[s.lhs];
    const auto& b = val[s.rhs];
    switch (s.op) {
      case Op::True: std::fill(out.begin(), out.end(), 1); break;
      case Op::False: break;
      case Op::Atom:
        for (std::size_t i = 0; i < n; ++i) out[i] = letter_at(i).contains(s.atom) ? 1 : 0;
        break;
      case Op::Not:
        for (std::size_t i = 0; i < n; ++i) out[i] = a[i] ? 0 : 1;
        break;
      case Op::And:
        for (std::size_t i = 0; i < n; ++i) out[i] = (a[i] && b[i]) ? 1 : 0;
        break;
      case Op::Or:
        for (std::size_t i = 0; i < n; ++i) out[i] = (a[i] || b[i]) ? 1 : 0;
        break;
      case Op::Next:
        for (std::size_t i = 0; i < n; ++i) out[i] = a[succ(i)];
        break;
      case Op::Until:
        fixpoint(out, 0, [&](std::size_t i, std::uint8_t next) { return std::uint8_t(b[i] || (a[i] && next)); });
        break;
      case Op::WeakUntil:
        fixpoint(out, 1, [&](std::size_t i, std::uint8_t next) { return std::uint8_t(b[i] || (a[i] && next)); });
        break;
      case Op::Release:
        fixpoint(out, 1, [&](std::size_t i, std::uint8_t next) { return std::uint8_t(b[i] && (a[i] || next)); });
        break;
      case Op::Finally:
        fixpoint(out, 0, [&](std::size_t i, std::uint8_t next) { return std::uint8_t(a[i] || next); });
        break;
      case Op::Globally:
        fixpoint(out, 1, [&](std::size_t i, std::uint8_t next) { return std::uint8_t(a[i] && next); });
        break;
    }
  }
  return val.back();
}

bool LassoEvaluator::satisfies(const Word& prefix, const Word& cycle) const {
  return evaluate(prefix, cycle)[0] != 0;
}

bool lasso_satisfies(const Formula& f, const Alphabet& ap, const Word& prefix, const Word& cycle) {
  return LassoEvaluator(f, ap).satisfies(prefix, cycle);
}

}  // namespace ltlshield::monitor
