#include "ltlshield/shield/recovery.hpp"

#include <fmt/format.h>

namespace ltlshield::shield {
namespace {

// Constant inputs must lie in U; feedback laws saturate into U by construction.
bool admissible(const ControlLaw& g, const reach::AffineDynamics& dyn) {
  if (g.kind == ControlLaw::Kind::Feedback) {
    return g.K.rows() == dyn.B.cols() && g.K.cols() == dyn.A.rows() && g.k.size() == dyn.B.cols();
  }
  return g.u.size() == dyn.B.cols() && dyn.U.contains(g.u);
}

RecoveryResult fail(std::string reason) {
  RecoveryResult r;
  r.reason = std::move(reason);
  return r;
}

}  // namespace

void ShieldConfig::validate() const {
  dynamics.validate();
  if (nmax == 0) throw Error("nmax must be at least 1");
  if (mode == DisturbanceMode::Deterministic && !dynamics.deterministic()) {
    throw Error("deterministic mode needs a point disturbance set");
  }
  for (const auto& [q, region] : sb.regions()) {
    if (q >= monitor.size()) throw Error("high assurance region names an unknown monitor state");
    if (monitor.is_bottom(q)) throw Error("high assurance region must exclude the bottom monitor state");
    for (const auto& h : region.constraints()) {
      if (static_cast<std::size_t>(h.a.size()) != dynamics.n()) throw DimensionError("region constraint dimension");
    }
  }
  if (!admissible(backup, dynamics)) throw Error("backup law is not admissible");
}

std::vector<ControlLaw> constant_hold(const Vec& u, std::size_t count) {
  return std::vector<ControlLaw>(count, ControlLaw::constant(u));
}

RecoveryResult recovery(const Vec& x, MonitorState q, ProposalSource& src, const ShieldConfig& cfg) {
  if (!cfg.dynamics.deterministic()) throw Error("point recovery search needs a point disturbance set");
  if (cfg.monitor.is_bottom(q)) throw Error("recovery search started in the bottom monitor state");
  const Vec d = cfg.dynamics.D.lo;
  Recovery rec;
  Vec xi = x;
  MonitorState qi = q;
  for (std::size_t i = 0; i <= cfg.nmax && !cfg.monitor.is_bottom(qi); ++i) {
    auto g = src.request(i);
    if (!g) return fail(fmt::format("proposal ended after {} items", i));
    if (!admissible(*g, cfg.dynamics)) return fail(fmt::format("item {} is outside the input bounds", i));
    if (!g->domain.contains(xi)) return fail(fmt::format("state leaves the declared domain of item {}", i));
    xi = cfg.dynamics.step(xi, g->evaluate(xi, cfg.dynamics.U), d);
    qi = cfg.monitor.step(qi, cfg.labels.label(xi));
    rec.laws.push_back(std::move(*g));
    rec.tube.push_back(reach::ProductSet::singleton(qi, reach::Box::point(xi)));
    if (cfg.in_sb(xi, qi)) return RecoveryResult{std::move(rec), {}};
  }
  return fail(cfg.monitor.is_bottom(qi) ? "prediction reaches the bottom monitor state"
                                        : "no return to the high assurance region within nmax");
}

RecoveryResult recovery_d(const Vec& x, MonitorState q, ProposalSource& src, const ShieldConfig& cfg) {
  if (cfg.monitor.is_bottom(q)) throw Error("recovery search started in the bottom monitor state");
  Recovery rec;
  auto r = reach::ProductSet::singleton(q, reach::Box::point(x));
  for (std::size_t i = 0; i <= cfg.nmax; ++i) {
    auto g = src.request(i);
    if (!g) return fail(fmt::format("proposal ended after {} items", i));
    if (!admissible(*g, cfg.dynamics)) return fail(fmt::format("item {} is outside the input bounds", i));
    for (const auto& [qi, boxes] : r.pieces()) {
      for (const auto& b : boxes) {
        if (!reach::box_in_polyhedron(b, g->domain)) {
          return fail(fmt::format("reach set leaves the declared domain of item {}", i));
        }
      }
    }
    r = reach::product_step(r, cfg.dynamics, *g, cfg.labels, cfg.monitor);
    rec.laws.push_back(std::move(*g));
    rec.tube.push_back(r);
    if (reach::product_in_region(r, cfg.sb)) return RecoveryResult{std::move(rec), {}};
    // ⊥ is a trap outside S^b, so no later step can succeed.
    if (auto bot = cfg.monitor.bottom(); bot && r.has(*bot)) return fail("prediction reaches the bottom monitor state");
  }
  return fail("no return to the high assurance region within nmax");
}

}  // namespace ltlshield::shield
