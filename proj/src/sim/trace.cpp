#include "ltlshield/sim/trace.hpp"

#include <fmt/format.h>

namespace ltlshield::sim {
namespace {

using nlohmann::json;

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string vec_text(const Vec& v) {
  std::string out = "[";
  for (Eigen::Index i = 0; i < v.size(); ++i) out += fmt::format("{}{}", i ? ", " : "", v(i));
  return out + "]";
}

json vec_json(const Vec& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

std::vector<std::pair<std::string, std::string>> summary_fields(const Trace& t) {
  const auto& s = t.summary;
  auto opt_tick = [](const std::optional<std::size_t>& k) { return k ? std::to_string(*k) : std::string("none"); };
  return {
      {"scenario", t.scenario},
      {"seed", std::to_string(t.seed)},
      {"shielded", t.shielded ? "true" : "false"},
      {"ticks", std::to_string(s.ticks)},
      {"crossing_tick", opt_tick(s.crossing_tick)},
      {"crossing_state", s.crossing_state ? vec_text(*s.crossing_state) : "none"},
      {"bottom_reached", s.bottom_reached ? "true" : "false"},
      {"faults", std::to_string(s.faults)},
      {"first_fault_tick", opt_tick(s.first_fault_tick)},
      {"final_x", vec_text(s.final_x)},
      {"final_q", t.state_names.at(s.final_q)},
      {"final_letter", t.ap.format(s.final_letter)},
  };
}

}  // namespace

std::string trace_csv(const Trace& t) {
  std::string out = "tick";
  const auto n = t.records.empty() ? t.summary.final_x.size() : t.records.front().x.size();
  const auto m = t.records.empty() ? 0 : t.records.front().u.size();
  const auto p = t.records.empty() ? 0 : t.records.front().d.size();
  for (Eigen::Index i = 0; i < n; ++i) out += fmt::format(",x{}", i);
  out += ",q,letter,mode,verdict";
  for (Eigen::Index i = 0; i < m; ++i) out += fmt::format(",u{}", i);
  for (Eigen::Index i = 0; i < p; ++i) out += fmt::format(",d{}", i);
  out += '\n';
  for (const auto& r : t.records) {
    out += std::to_string(r.tick);
    for (Eigen::Index i = 0; i < r.x.size(); ++i) out += fmt::format(",{}", r.x(i));
    out += "," + csv_cell(t.state_names.at(r.q)) + "," + csv_cell(t.ap.format(r.letter)) + "," + r.mode + "," + r.verdict;
    for (Eigen::Index i = 0; i < r.u.size(); ++i) out += fmt::format(",{}", r.u(i));
    for (Eigen::Index i = 0; i < r.d.size(); ++i) out += fmt::format(",{}", r.d(i));
    out += '\n';
  }
  for (const auto& [k, v] : summary_fields(t)) out += "# " + k + ": " + v + "\n";
  return out;
}

json trace_json(const Trace& t) {
  json j;
  j["scenario"] = t.scenario;
  j["seed"] = t.seed;
  j["shielded"] = t.shielded;
  j["ap"] = t.ap.propositions();
  j["states"] = t.state_names;
  j["records"] = json::array();
  for (const auto& r : t.records) {
    j["records"].push_back({{"tick", r.tick},
                            {"x", vec_json(r.x)},
                            {"q", t.state_names.at(r.q)},
                            {"letter", t.ap.names(r.letter)},
                            {"mode", r.mode},
                            {"verdict", r.verdict},
                            {"u", vec_json(r.u)},
                            {"d", vec_json(r.d)}});
  }
  j["events"] = json::array();
  for (const auto& e : t.events) j["events"].push_back({{"tick", e.tick}, {"kind", e.kind}, {"detail", e.detail}});
  const auto& s = t.summary;
  json sj;
  sj["ticks"] = s.ticks;
  sj["crossing_tick"] = s.crossing_tick ? json(*s.crossing_tick) : json(nullptr);
  sj["crossing_state"] = s.crossing_state ? vec_json(*s.crossing_state) : json(nullptr);
  sj["bottom_reached"] = s.bottom_reached;
  sj["faults"] = s.faults;
  sj["first_fault_tick"] = s.first_fault_tick ? json(*s.first_fault_tick) : json(nullptr);
  sj["final_x"] = vec_json(s.final_x);
  sj["final_q"] = t.state_names.at(s.final_q);
  sj["final_letter"] = t.ap.names(s.final_letter);
  j["summary"] = sj;
  return j;
}

std::string summary_text(const Trace& t) {
  std::string out;
  for (const auto& [k, v] : summary_fields(t)) out += fmt::format("{:<17} {}\n", k + ":", v);
  return out;
}

}  // namespace ltlshield::sim
