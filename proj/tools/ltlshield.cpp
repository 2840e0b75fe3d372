#include <cstdio>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "ltlshield/gateway/server.hpp"
#include "ltlshield/monitor/compile.hpp"
#include "ltlshield/monitor/document.hpp"
#include "ltlshield/monitor/parser.hpp"
#include "ltlshield/monitor/safety.hpp"
#include "ltlshield/reach/validate.hpp"
#include "ltlshield/sim/trace.hpp"

using namespace ltlshield;

namespace {

enum Exit { Ok = 0, Violated = 1, Usage = 2, Internal = 3 };

class UsageError : public Error {
 public:
  using Error::Error;
};

std::vector<std::string> split_ap(const std::string& list) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : list + ",") {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  return out;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

monitor::Formula formula_arg(const std::string& text, const monitor::Alphabet& ap) {
  try {
    return monitor::parse_formula(text, ap);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

monitor::Alphabet ap_arg(const std::string& list) {
  try {
    return monitor::Alphabet(split_ap(list));
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

int report_trace(const sim::Trace& t, const std::optional<std::string>& out) {
  if (out) write_file(*out, ends_with(*out, ".json") ? sim::trace_json(t).dump(2) + "\n" : sim::trace_csv(t));
  std::cout << sim::summary_text(t);
  return t.summary.bottom_reached ? Violated : Ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Runtime shield for LTL safety properties over affine systems"};
  app.require_subcommand(1);

  std::string formula, ap, out, dot, scenario, driver = "faulty-late";
  std::optional<std::string> trace_out;
  double cell = 0.0;
  std::uint64_t seed = 0;
  std::size_t ticks = 0;
  bool no_shield = false;
  std::uint16_t port = 8765;
  int tick_ms = 250;

  auto* compile = app.add_subcommand("compile", "Build and minimize the LTL3 monitor of a formula");
  compile->add_option("--formula", formula, "LTL formula")->required();
  compile->add_option("--ap", ap, "comma-separated propositions")->required();
  compile->add_option("--out", out, "monitor document path")->required();
  compile->add_option("--dot", dot, "Graphviz output path");

  auto* safety = app.add_subcommand("check-safety", "Decide whether a formula is a safety property");
  safety->add_option("--formula", formula, "LTL formula")->required();
  safety->add_option("--ap", ap, "comma-separated propositions")->required();

  auto* validate = app.add_subcommand("validate-sb", "Check that the backup law keeps S^b invariant");
  validate->add_option("--scenario", scenario, "scenario file")->required()->check(CLI::ExistingFile);
  validate->add_option("--cell", cell, "grid cell side (default: the scenario's)")->check(CLI::PositiveNumber);

  auto* run = app.add_subcommand("run", "Simulate a scenario and write the trace");
  run->add_option("--scenario", scenario, "scenario file")->required()->check(CLI::ExistingFile);
  run->add_option("--seed", seed, "disturbance seed")->required();
  run->add_option("--ticks", ticks, "ticks to simulate")->required();
  run->add_option("--out", trace_out, "trace path (.json or .csv)")->required();
  run->add_flag("--no-shield", no_shield, "apply proposals unchecked");

  auto* casestudy = app.add_subcommand("casestudy", "Run the DeLorean case study");
  casestudy->add_option("--driver", driver, "safe, faulty-late or full-throttle")->required();
  casestudy->add_option("--seed", seed, "disturbance seed")->required();
  casestudy->add_option("--out", trace_out, "trace path (.json or .csv)");

  auto* serve = app.add_subcommand("serve", "Start the websocket gateway");
  serve->add_option("--port", port, "listen port");
  serve->add_option("--tick-ms", tick_ms, "tick period in milliseconds")->check(CLI::PositiveNumber);
  serve->add_option("--scenario", scenario, "scenario file")->required()->check(CLI::ExistingFile);
  serve->add_option("--seed", seed, "disturbance seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? Ok : Usage;
  }

  try {
    if (*compile) {
      auto alphabet = ap_arg(ap);
      auto m = monitor::build_monitor(formula_arg(formula, alphabet), alphabet);
      write_file(out, monitor::to_document_text(m));
      if (!dot.empty()) write_file(dot, monitor::to_dot(m));
      std::cout << fmt::format("monitor: {} states, initial {}\n", m.size(), m.name(m.initial()));
      return Ok;
    }
    if (*safety) {
      auto alphabet = ap_arg(ap);
      auto cls = monitor::classify_safety(formula_arg(formula, alphabet), alphabet);
      std::cout << monitor::to_string(cls) << "\n";
      return cls == monitor::SafetyClass::Safety ? Ok : Violated;
    }
    if (*validate) {
      auto sc = sim::load_scenario(scenario);
      auto cfg = sim::build_config(sc);
      auto report = reach::validate_high_assurance(cfg->sb, cfg->backup, cfg->dynamics, cfg->labels, cfg->monitor,
                                                   cell > 0 ? cell : sc.cell, sc.frame);
      std::cout << fmt::format("{}: {} cells, {} witnesses\n", report.pass ? "pass" : "fail", report.cells,
                               report.witnesses.size());
      std::size_t shown = 0;
      for (const auto& w : report.witnesses) {
        if (shown++ == 10) break;
        std::cout << fmt::format("  {} cell {}: {}\n", cfg->monitor.name(w.q), w.cell, reach::format(w.box));
      }
      return report.pass ? Ok : Violated;
    }
    if (*run) {
      auto sc = sim::load_scenario(scenario);
      return report_trace(sim::simulate(sc, {seed, ticks, !no_shield}), trace_out);
    }
    if (*casestudy) {
      sim::Scenario sc;
      try {
        sc = sim::delorean_scenario(driver);
      } catch (const Error& e) {
        throw UsageError(e.what());
      }
      auto t = sim::simulate(sc, {seed, std::nullopt, true});
      const int code = report_trace(t, trace_out);
      const auto& s = t.summary;
      if (s.first_fault_tick) {
        std::cout << fmt::format("intervention at tick {}\n", *s.first_fault_tick);
      } else {
        std::cout << "no intervention\n";
      }
      if (s.crossing_tick) {
        std::cout << fmt::format("tower crossed at tick {} with v = {:.3f}\n", *s.crossing_tick, (*s.crossing_state)(1));
      } else {
        std::cout << "tower not reached\n";
      }
      return code;
    }
    if (*serve) {
      auto sc = sim::load_scenario(scenario);
      gateway::ServerOptions opts;
      opts.port = port;
      opts.tick = std::chrono::milliseconds(tick_ms);
      opts.seed = seed;
      gateway::Server server(sc, opts);
      auto bound = server.listen();
      std::cout << fmt::format("gateway listening on ws://{}:{}/ (tick {} ms)\n", opts.address, bound, tick_ms)
                << std::flush;
      server.run();
      return Ok;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return Usage;
  } catch (const sim::ScenarioError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return Usage;
  } catch (const shield::NotInHighAssurance& e) {
    std::cerr << "error: " << e.what() << "\n";
    return Usage;
  } catch (const shield::NotSafetyFormula& e) {
    std::cerr << "error: " << e.what() << "\n";
    return Violated;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return Internal;
  }
  return Internal;
}
