#include "ltlshield/monitor/document.hpp"

#include <map>
#include <sstream>

#include "ltlshield/errors.hpp"

namespace ltlshield::monitor {

using nlohmann::json;

json to_document(const Monitor& m) {
  const auto& ap = m.alphabet();
  json doc;
  doc["ap"] = ap.propositions();
  json states = json::array();
  for (MonitorState q = 0; q < m.size(); ++q) {
    states.push_back({{"id", q}, {"name", m.name(q)}, {"output", std::string(to_string(m.output(q)))}});
  }
  doc["states"] = std::move(states);
  doc["initial"] = m.initial();
  json rows = json::array();
  for (MonitorState q = 0; q < m.size(); ++q) {
    for (auto l : ap.letters()) rows.push_back({{"state", q}, {"letter", ap.names(l)}, {"next", m.step(q, l)}});
  }
  doc["transitions"] = std::move(rows);
  return doc;
}

Monitor from_document(const json& doc) {
  try {
    Alphabet ap(doc.at("ap").get<std::vector<std::string>>());
    const auto& states = doc.at("states");
    const std::size_t n = states.size();
    std::vector<std::string> names(n);
    std::vector<Verdict> outputs(n);
    std::vector<bool> defined(n, false);
    for (const auto& s : states) {
      auto id = s.at("id").get<std::size_t>();
      if (id >= n || defined[id]) throw Error("monitor document: bad or repeated state id " + std::to_string(id));
      defined[id] = true;
      names[id] = s.at("name").get<std::string>();
      auto out = parse_verdict(s.at("output").get<std::string>());
      if (!out) throw Error("monitor document: unknown output '" + s.at("output").get<std::string>() + "'");
      outputs[id] = *out;
    }
    const std::size_t sigma = ap.letter_count();
    std::vector<MonitorState> delta(n * sigma, 0);
    std::vector<bool> filled(n * sigma, false);
    for (const auto& row : doc.at("transitions")) {
      auto q = row.at("state").get<std::size_t>();
      auto letter = ap.letter(row.at("letter").get<std::vector<std::string>>());
      auto next = row.at("next").get<std::size_t>();
      if (q >= n) throw Error("monitor document: transition from unknown state " + std::to_string(q));
      auto slot = q * sigma + letter.bits;
      if (filled[slot]) throw Error("monitor document: duplicate transition row");
      filled[slot] = true;
      delta[slot] = next;
    }
    for (std::size_t i = 0; i < filled.size(); ++i) {
      if (!filled[i]) throw Error("monitor document: missing transition for state " + std::to_string(i / sigma));
    }
    return Monitor(std::move(ap), std::move(names), std::move(outputs), doc.at("initial").get<std::size_t>(),
                   std::move(delta));
  } catch (const json::exception& e) {
    throw Error(std::string("monitor document: ") + e.what());
  }
}

std::string to_document_text(const Monitor& m) { return to_document(m).dump(2) + "\n"; }

Monitor parse_document_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(std::string("monitor document: ") + e.what());
  }
  return from_document(doc);
}

std::string to_dot(const Monitor& m) {
  const auto& ap = m.alphabet();
  std::ostringstream out;
  out << "digraph monitor {\n  rankdir=LR;\n  __start [shape=point];\n";
  for (MonitorState q = 0; q < m.size(); ++q) {
    out << "  q" << q << " [label=\"" << m.name(q) << "\\n" << symbol(m.output(q)) << "\"";
    switch (m.output(q)) {
      case Verdict::Top: out << ", shape=circle, peripheries=2"; break;
      case Verdict::Bottom: out << ", shape=circle, style=dashed"; break;
      case Verdict::Inconclusive: out << ", shape=circle"; break;
    }
    out << "];\n";
  }
  out << "  __start -> q" << m.initial() << ";\n";
  for (MonitorState q = 0; q < m.size(); ++q) {
    std::map<MonitorState, std::vector<std::string>> edges;
    for (auto l : ap.letters()) edges[m.step(q, l)].push_back(ap.format(l));
    for (const auto& [t, labels] : edges) {
      out << "  q" << q << " -> q" << t << " [label=\"";
      for (std::size_t i = 0; i < labels.size(); ++i) out << (i ? " " : "") << labels[i];
      out << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace ltlshield::monitor
