#include "ltlshield/sim/scenario.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include <fmt/format.h>

#include "ltlshield/monitor/compile.hpp"
#include "ltlshield/monitor/parser.hpp"

namespace ltlshield::sim {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ScenarioError(fmt::format("scenario {}: {}", path.empty() ? "/" : path, what));
}

const json& field(const json& j, const std::string& path, const char* key) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path + "/" + key, "missing field");
  return *it;
}

double number(const json& j, const std::string& path) {
  if (!j.is_number()) fail(path, "expected a number");
  return j.get<double>();
}

// Infinite bounds are written as null.
double bound(const json& j, const std::string& path, double if_null) {
  if (j.is_null()) return if_null;
  return number(j, path);
}

Vec vector_of(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of numbers");
  Vec v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = number(j[i], fmt::format("{}/{}", path, i));
  return v;
}

reach::Mat matrix_of(const json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) fail(path, "expected a non-empty array of rows");
  const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
  reach::Mat m(static_cast<Eigen::Index>(j.size()), static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < j.size(); ++r) {
    auto row = vector_of(j[r], fmt::format("{}/{}", path, r));
    if (static_cast<std::size_t>(row.size()) != cols) fail(fmt::format("{}/{}", path, r), "rows differ in length");
    m.row(static_cast<Eigen::Index>(r)) = row.transpose();
  }
  return m;
}

Box box_of(const json& j, const std::string& path) {
  const double inf = std::numeric_limits<double>::infinity();
  const auto& lo = field(j, path, "lo");
  const auto& hi = field(j, path, "hi");
  if (!lo.is_array() || !hi.is_array() || lo.size() != hi.size()) fail(path, "lo and hi must be arrays of equal length");
  Vec l(static_cast<Eigen::Index>(lo.size())), h(static_cast<Eigen::Index>(hi.size()));
  for (std::size_t i = 0; i < lo.size(); ++i) {
    l(static_cast<Eigen::Index>(i)) = bound(lo[i], fmt::format("{}/lo/{}", path, i), -inf);
    h(static_cast<Eigen::Index>(i)) = bound(hi[i], fmt::format("{}/hi/{}", path, i), inf);
  }
  try {
    return Box(l, h);
  } catch (const Error& e) {
    fail(path, e.what());
  }
}

reach::Polyhedron polyhedron_of(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of half-spaces");
  std::vector<reach::HalfSpace> hs;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto p = fmt::format("{}/{}", path, i);
    reach::HalfSpace h;
    h.a = vector_of(field(j[i], p, "a"), p + "/a");
    h.b = number(field(j[i], p, "b"), p + "/b");
    if (auto it = j[i].find("strict"); it != j[i].end()) {
      if (!it->is_boolean()) fail(p + "/strict", "expected a boolean");
      h.strict = it->get<bool>();
    }
    hs.push_back(std::move(h));
  }
  try {
    return reach::Polyhedron(std::move(hs));
  } catch (const Error& e) {
    fail(path, e.what());
  }
}

reach::ControlLaw law_of(const json& j, const std::string& path) {
  reach::Polyhedron domain;
  if (j.contains("domain")) domain = polyhedron_of(j["domain"], path + "/domain");
  if (j.contains("u")) return reach::ControlLaw::constant(vector_of(j["u"], path + "/u"), domain);
  if (j.contains("K")) {
    try {
      return reach::ControlLaw::feedback(matrix_of(j["K"], path + "/K"), vector_of(field(j, path, "k"), path + "/k"),
                                         domain);
    } catch (const DimensionError& e) {
      fail(path, e.what());
    }
  }
  fail(path, "a control law needs either \"u\" or \"K\" and \"k\"");
}

std::string string_of(const json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

std::size_t count_of(const json& j, const std::string& path) {
  if (!j.is_number_unsigned()) fail(path, "expected a non-negative integer");
  return j.get<std::size_t>();
}

bool flag_of(const json& j, const std::string& path) {
  if (!j.is_boolean()) fail(path, "expected a boolean");
  return j.get<bool>();
}

json vec_json(const Vec& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

json bound_json(const Vec& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::isinf(v(i))) {
      a.push_back(nullptr);
    } else {
      a.push_back(v(i));
    }
  }
  return a;
}

json mat_json(const reach::Mat& m) {
  json a = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) a.push_back(vec_json(m.row(r).transpose()));
  return a;
}

json box_json(const Box& b) { return {{"lo", bound_json(b.lo)}, {"hi", bound_json(b.hi)}}; }

json poly_json(const reach::Polyhedron& p) {
  json a = json::array();
  for (const auto& h : p.constraints()) {
    json e = {{"a", vec_json(h.a)}, {"b", h.b}};
    if (h.strict) e["strict"] = true;
    a.push_back(e);
  }
  return a;
}

json law_json(const reach::ControlLaw& g) {
  json j;
  if (g.kind == reach::ControlLaw::Kind::Constant) {
    j["u"] = vec_json(g.u);
  } else {
    j["K"] = mat_json(g.K);
    j["k"] = vec_json(g.k);
  }
  if (!g.domain.trivial()) j["domain"] = poly_json(g.domain);
  return j;
}

DriverSpec driver_of(const json& j, const std::string& path) {
  DriverSpec d;
  d.name = string_of(field(j, path, "name"), path + "/name");
  if (j.contains("inputs")) {
    const auto& in = j["inputs"];
    if (!in.is_array()) fail(path + "/inputs", "expected an array");
    for (std::size_t i = 0; i < in.size(); ++i) d.inputs.push_back(vector_of(in[i], fmt::format("{}/inputs/{}", path, i)));
  }
  if (j.contains("switch_tick")) d.switch_tick = count_of(j["switch_tick"], path + "/switch_tick");
  if (j.contains("throttle")) d.throttle = number(j["throttle"], path + "/throttle");
  if (j.contains("brake")) d.brake = number(j["brake"], path + "/brake");
  if (j.contains("late")) d.late = number(j["late"], path + "/late");
  if (j.contains("gentle")) d.gentle = number(j["gentle"], path + "/gentle");
  if (j.contains("gate")) {
    auto p = polyhedron_of(json::array({j["gate"]}), path + "/gate");
    d.gate = p.constraints().front();
  }
  return d;
}

json driver_json(const DriverSpec& d) {
  json j = {{"name", d.name}};
  if (!d.inputs.empty()) {
    j["inputs"] = json::array();
    for (const auto& u : d.inputs) j["inputs"].push_back(vec_json(u));
  }
  j["switch_tick"] = d.switch_tick;
  j["throttle"] = d.throttle;
  j["brake"] = d.brake;
  j["late"] = d.late;
  j["gentle"] = d.gentle;
  if (d.gate.a.size() > 0) j["gate"] = poly_json(reach::Polyhedron({d.gate}))[0];
  return j;
}

std::string line_context(const std::string& text, std::size_t byte) {
  std::size_t line = 1, start = 0;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      start = i + 1;
    }
  }
  auto end = text.find('\n', start);
  std::string content = text.substr(start, end == std::string::npos ? std::string::npos : end - start);
  const std::size_t column = byte >= start ? byte - start + 1 : 1;
  return fmt::format("line {}, column {}: {}", line, column, content);
}

}  // namespace

json to_json(const Scenario& s) {
  json j;
  j["name"] = s.name;
  const auto& d = s.dynamics;
  j["dynamics"] = {{"A", mat_json(d.A)}, {"B", mat_json(d.B)}, {"E", mat_json(d.E)}, {"c", vec_json(d.c)},
                   {"U", box_json(d.U)}, {"D", box_json(d.D)}, {"clamp", box_json(d.clamp)}};
  j["ap"] = s.ap;
  j["labels"] = json::array();
  for (const auto& l : s.labels) j["labels"].push_back({{"letter", l.letter}, {"halfspaces", poly_json(l.region)}});
  j["formula"] = s.formula;
  j["sb"] = json::array();
  for (const auto& [q, p] : s.sb) j["sb"].push_back({{"q", q}, {"halfspaces", poly_json(p)}});
  j["backup"] = law_json(s.backup);
  j["nmax"] = s.nmax;
  j["reengage"] = s.reengage;
  j["mode"] = s.mode == shield::DisturbanceMode::Deterministic ? "deterministic" : "disturbed";
  j["allow_non_safety"] = s.allow_non_safety;
  j["x0"] = vec_json(s.x0);
  j["horizon"] = s.horizon;
  j["driver"] = driver_json(s.driver);
  j["strategy"] = s.strategy;
  j["adversary"] = vec_json(s.adversary);
  if (s.frame) j["frame"] = box_json(*s.frame);
  j["cell"] = s.cell;
  j["landmark"] = s.landmark;
  return j;
}

Scenario scenario_from_json(const json& j) {
  Scenario s;
  if (!j.is_object()) fail("", "expected an object");
  s.name = j.contains("name") ? string_of(j["name"], "/name") : "";
  const auto& dyn = field(j, "", "dynamics");
  s.dynamics.A = matrix_of(field(dyn, "/dynamics", "A"), "/dynamics/A");
  s.dynamics.B = matrix_of(field(dyn, "/dynamics", "B"), "/dynamics/B");
  s.dynamics.E = matrix_of(field(dyn, "/dynamics", "E"), "/dynamics/E");
  s.dynamics.c = vector_of(field(dyn, "/dynamics", "c"), "/dynamics/c");
  s.dynamics.U = box_of(field(dyn, "/dynamics", "U"), "/dynamics/U");
  s.dynamics.D = box_of(field(dyn, "/dynamics", "D"), "/dynamics/D");
  s.dynamics.clamp = dyn.contains("clamp") ? box_of(dyn["clamp"], "/dynamics/clamp") : Box::unbounded(s.dynamics.A.rows());
  try {
    s.dynamics.validate();
  } catch (const DimensionError& e) {
    fail("/dynamics", e.what());
  }

  const auto& ap = field(j, "", "ap");
  if (!ap.is_array()) fail("/ap", "expected an array of names");
  for (std::size_t i = 0; i < ap.size(); ++i) s.ap.push_back(string_of(ap[i], fmt::format("/ap/{}", i)));

  const auto& labels = field(j, "", "labels");
  if (!labels.is_array() || labels.empty()) fail("/labels", "expected a non-empty array");
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const auto p = fmt::format("/labels/{}", i);
    LabelSpec l;
    const auto& letter = field(labels[i], p, "letter");
    if (!letter.is_array()) fail(p + "/letter", "expected an array of names");
    for (std::size_t k = 0; k < letter.size(); ++k) l.letter.push_back(string_of(letter[k], fmt::format("{}/letter/{}", p, k)));
    l.region = polyhedron_of(field(labels[i], p, "halfspaces"), p + "/halfspaces");
    s.labels.push_back(std::move(l));
  }

  s.formula = string_of(field(j, "", "formula"), "/formula");
  const auto& sb = field(j, "", "sb");
  if (!sb.is_array()) fail("/sb", "expected an array");
  for (std::size_t i = 0; i < sb.size(); ++i) {
    const auto p = fmt::format("/sb/{}", i);
    s.sb.emplace_back(string_of(field(sb[i], p, "q"), p + "/q"), polyhedron_of(field(sb[i], p, "halfspaces"), p + "/halfspaces"));
  }
  s.backup = law_of(field(j, "", "backup"), "/backup");
  if (j.contains("nmax")) s.nmax = count_of(j["nmax"], "/nmax");
  if (j.contains("reengage")) s.reengage = flag_of(j["reengage"], "/reengage");
  if (j.contains("mode")) {
    auto m = string_of(j["mode"], "/mode");
    if (m == "deterministic") {
      s.mode = shield::DisturbanceMode::Deterministic;
    } else if (m == "disturbed") {
      s.mode = shield::DisturbanceMode::Disturbed;
    } else {
      fail("/mode", "expected \"deterministic\" or \"disturbed\"");
    }
  }
  if (j.contains("allow_non_safety")) s.allow_non_safety = flag_of(j["allow_non_safety"], "/allow_non_safety");
  s.x0 = vector_of(field(j, "", "x0"), "/x0");
  if (j.contains("horizon")) s.horizon = count_of(j["horizon"], "/horizon");
  if (j.contains("driver")) s.driver = driver_of(j["driver"], "/driver");
  if (j.contains("strategy")) s.strategy = string_of(j["strategy"], "/strategy");
  s.adversary = j.contains("adversary") ? vector_of(j["adversary"], "/adversary") : Vec::Zero(s.dynamics.E.cols());
  if (j.contains("frame")) s.frame = box_of(j["frame"], "/frame");
  if (j.contains("cell")) s.cell = number(j["cell"], "/cell");
  if (j.contains("landmark")) s.landmark = string_of(j["landmark"], "/landmark");
  return s;
}

Scenario parse_scenario(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ScenarioError(fmt::format("scenario syntax error at {}", line_context(text, e.byte == 0 ? 0 : e.byte - 1)));
  }
  return scenario_from_json(j);
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ScenarioError("cannot read scenario file " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_scenario(ss.str());
  } catch (const ScenarioError& e) {
    throw ScenarioError(path.string() + ": " + e.what());
  }
}

std::string scenario_text(const Scenario& s) { return to_json(s).dump(2) + "\n"; }

std::shared_ptr<shield::ShieldConfig> build_config(const Scenario& s) {
  auto cfg = std::make_shared<shield::ShieldConfig>();
  monitor::Alphabet ap;
  try {
    ap = monitor::Alphabet(s.ap);
    cfg->formula = monitor::parse_formula(s.formula, ap);
  } catch (const Error& e) {
    throw ScenarioError(fmt::format("scenario /formula: {}", e.what()));
  }
  cfg->monitor = monitor::build_monitor(*cfg->formula, ap);
  cfg->dynamics = s.dynamics;

  std::vector<reach::LabelRegion> regions;
  for (std::size_t i = 0; i < s.labels.size(); ++i) {
    try {
      regions.push_back({ap.letter(std::span<const std::string>(s.labels[i].letter)), s.labels[i].region});
    } catch (const Error& e) {
      fail(fmt::format("/labels/{}/letter", i), e.what());
    }
  }
  cfg->labels = reach::LabelMap(std::move(regions));

  for (std::size_t i = 0; i < s.sb.size(); ++i) {
    auto q = cfg->monitor.find(s.sb[i].first);
    if (!q) fail(fmt::format("/sb/{}/q", i), fmt::format("monitor has no state named '{}'", s.sb[i].first));
    cfg->sb.set(*q, s.sb[i].second);
  }
  cfg->backup = s.backup;
  cfg->nmax = s.nmax;
  cfg->reengage = s.reengage;
  cfg->mode = s.mode;
  cfg->allow_non_safety = s.allow_non_safety;
  try {
    cfg->validate();
  } catch (const Error& e) {
    throw ScenarioError(fmt::format("scenario: {}", e.what()));
  }
  return cfg;
}

Scenario delorean_scenario(const std::string& profile) {
  if (profile != "safe" && profile != "faulty-late" && profile != "full-throttle") {
    throw Error("unknown driver profile '" + profile + "' (expected safe, faulty-late or full-throttle)");
  }
  const double inf = std::numeric_limits<double>::infinity();
  auto v2 = [](double a, double b) {
    Vec v(2);
    v << a, b;
    return v;
  };
  auto h = [&](double a0, double a1, double b, bool strict = false) { return reach::HalfSpace{v2(a0, a1), b, strict}; };

  Scenario s;
  s.name = "delorean";
  s.dynamics.A = reach::Mat{{1.0, 0.25}, {0.0, 1.0}};
  s.dynamics.B = reach::Mat{{0.0}, {0.25}};
  s.dynamics.E = reach::Mat{{0.0}, {-0.25}};
  s.dynamics.c = Vec::Zero(2);
  s.dynamics.U = Box(Vec::Constant(1, -2.0), Vec::Constant(1, 2.0));
  s.dynamics.D = Box(Vec::Constant(1, 0.0), Vec::Constant(1, 0.2));
  s.dynamics.clamp = Box(v2(-inf, 0.0), v2(inf, inf));
  s.ap = {"tower", "fast"};
  s.labels = {
      {{}, reach::Polyhedron({h(1, 0, 2.54, true), h(0, 1, 2.0, true)})},
      {{"tower"}, reach::Polyhedron({h(-1, 0, -2.54), h(0, 1, 2.0, true)})},
      {{"fast"}, reach::Polyhedron({h(1, 0, 2.54, true), h(0, -1, -2.0)})},
      {{"tower", "fast"}, reach::Polyhedron({h(-1, 0, -2.54), h(0, -1, -2.0)})},
  };
  s.formula = "(!tower) W (tower & fast)";
  s.sb = {{"top", reach::Polyhedron{}}, {"q0", reach::Polyhedron({h(0.69, 1.0, 1.66)})}};
  s.backup = reach::ControlLaw::constant(Vec::Constant(1, -2.0));
  s.nmax = 8;
  s.x0 = Vec::Zero(2);
  s.horizon = 200;
  s.driver.name = profile;
  s.driver.switch_tick = 4;
  s.driver.gate = h(0.69, 1.0, 1.0);
  s.strategy = "uniform";
  s.adversary = Vec::Constant(1, 1.0);
  s.frame = Box(v2(0.0, 0.0), v2(10.0, 5.0));
  s.cell = 0.05;
  s.landmark = "tower";
  return s;
}

}  // namespace ltlshield::sim
