#include "ltlshield/sim/simulate.hpp"

#include <fmt/format.h>

#include "ltlshield/sim/disturbance.hpp"
#include "ltlshield/sim/driver.hpp"

namespace ltlshield::sim {
namespace {

void summarize(Trace& t, const Scenario& sc, const shield::ShieldConfig& cfg, const Vec& x, monitor::MonitorState q) {
  auto& s = t.summary;
  s.ticks = t.records.size();
  const auto landmark = sc.landmark.empty() ? std::nullopt : t.ap.index_of(sc.landmark);
  for (const auto& r : t.records) {
    if (landmark && !s.crossing_tick && r.letter.contains(*landmark)) {
      s.crossing_tick = r.tick;
      s.crossing_state = r.x;
    }
    s.bottom_reached |= cfg.monitor.is_bottom(r.q);
    if (r.verdict == "FAULT") {
      if (!s.first_fault_tick) s.first_fault_tick = r.tick;
      ++s.faults;
    }
  }
  s.final_x = x;
  s.final_q = q;
  s.final_letter = cfg.labels.label(x);
}

}  // namespace

Trace simulate(const Scenario& sc, const SimOptions& opts) { return simulate(sc, build_config(sc), opts); }

Trace simulate(const Scenario& sc, std::shared_ptr<const shield::ShieldConfig> cfg, const SimOptions& opts) {
  const auto& dyn = cfg->dynamics;
  const auto& m = cfg->monitor;
  if (static_cast<std::size_t>(sc.x0.size()) != dyn.n()) throw DimensionError("x0 has the wrong dimension");
  const std::size_t ticks = opts.ticks.value_or(sc.horizon);
  auto driver = make_driver(sc.driver, dyn);
  DisturbanceSampler env(parse_strategy(sc.strategy), dyn.D, opts.seed, sc.adversary);

  Trace t;
  t.scenario = sc.name;
  t.seed = opts.seed;
  t.shielded = opts.shield;
  t.ap = m.alphabet();
  for (monitor::MonitorState q = 0; q < m.size(); ++q) t.state_names.push_back(m.name(q));

  if (opts.shield) {
    shield::ShieldSession session(cfg, sc.x0);
    for (std::size_t k = 0; k < ticks; ++k) {
      const Vec x = session.x();
      const auto q = session.q();
      shield::ListProposal src(driver->propose(k, x, cfg->nmax + 1));
      Vec d = env.draw();
      auto dec = session.step(src, d);
      t.records.push_back({k, x, q, cfg->labels.label(x), std::string(shield::to_string(dec.mode)),
                           std::string(shield::to_string(dec.verdict)), dec.u, d});
    }
    t.events = session.events();
    summarize(t, sc, *cfg, session.x(), session.q());
    return t;
  }

  Vec x = sc.x0;
  auto q = m.step(m.initial(), cfg->labels.label(x));
  for (std::size_t k = 0; k < ticks; ++k) {
    auto items = driver->propose(k, x, 1);
    Vec u = items.at(0).evaluate(x, dyn.U);
    Vec d = env.draw();
    t.records.push_back({k, x, q, cfg->labels.label(x), "UNSHIELDED", "UNSHIELDED", u, d});
    x = dyn.step(x, u, d);
    q = m.step(q, cfg->labels.label(x));
  }
  summarize(t, sc, *cfg, x, q);
  return t;
}

monitor::Verdict check_trace(const Trace& t, const monitor::Monitor& m) {
  auto q = m.initial();
  for (const auto& r : t.records) {
    q = m.step(q, r.letter);
    if (q != r.q) {
      throw TraceMismatch(fmt::format("tick {}: recorded state {} but the monitor is in {}", r.tick, m.name(r.q),
                                      m.name(q)));
    }
  }
  return m.output(q);
}

}  // namespace ltlshield::sim
