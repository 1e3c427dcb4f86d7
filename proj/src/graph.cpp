#include "ic/graph.hpp"

#include <deque>

#include "json.hpp"

namespace ic {

ImageGraph to_graph(const AnfTerm& source, const LexemeLookup& lex,
                    const std::vector<MarkedArc>& marks) {
  ImageGraph g;
  for (AssociativePair p : source.canonical()) {
    g.edges.insert(p);
    g.nodes.emplace(p.head, lex(p.head));
    g.nodes.emplace(p.dependent, lex(p.dependent));
  }
  for (const MarkedArc& m : marks) {
    if (!g.edges.count(m.arc))
      throw error("marked pair " + pair_index_text(m.arc) + " not found in term");
    g.marked.push_back(m);
  }
  return g;
}

std::set<AssociativePair> reachable_edges(const ImageGraph& g, int start,
                                          const std::set<AssociativePair>& blocked) {
  if (!g.nodes.count(start))
    throw error("node " + std::to_string(start) + " not found in graph");
  std::set<AssociativePair> out;
  std::set<int> seen{start};
  std::deque<int> queue{start};
  while (!queue.empty()) {
    const int node = queue.front();
    queue.pop_front();
    for (AssociativePair e : g.edges) {
      if (e.head != node || blocked.count(e)) continue;
      out.insert(e);
      if (seen.insert(e.dependent).second) queue.push_back(e.dependent);
    }
  }
  return out;
}

std::string export_dot(const ImageGraph& g) {
  std::string out = "digraph ic {\n";
  for (const auto& [id, lexeme] : g.nodes)
    out += "  " + std::to_string(id) + " [label=\"" + lexeme + "\"];\n";
  for (AssociativePair e : g.edges) {
    out += "  " + std::to_string(e.head) + " -> " + std::to_string(e.dependent);
    for (const MarkedArc& m : g.marked)
      if (m.arc == e) {
        out += " [label=\"" + m.label + "\"]";
        break;
      }
    out += ";\n";
  }
  out += "}\n";
  return out;
}

std::string export_json(const ImageGraph& g) {
  nlohmann::ordered_json j;
  j["nodes"] = nlohmann::ordered_json::array();
  for (const auto& [id, lexeme] : g.nodes)
    j["nodes"].push_back({{"id", id}, {"lexeme", lexeme}});
  j["edges"] = nlohmann::ordered_json::array();
  for (AssociativePair e : g.edges)
    j["edges"].push_back({{"head", e.head}, {"dependent", e.dependent}});
  j["marked"] = nlohmann::ordered_json::array();
  for (const MarkedArc& m : g.marked)
    j["marked"].push_back({{"head", m.arc.head},
                           {"dependent", m.arc.dependent},
                           {"label", m.label}});
  return j.dump(2) + "\n";
}

ImageGraph import_json(const std::string& text) {
  ImageGraph g;
  try {
    const auto j = nlohmann::json::parse(text);
    for (const auto& n : j.at("nodes"))
      g.nodes[n.at("id").get<int>()] = n.at("lexeme").get<std::string>();
    for (const auto& e : j.at("edges"))
      g.edges.insert({e.at("head").get<int>(), e.at("dependent").get<int>()});
    for (const auto& m : j.at("marked"))
      g.marked.push_back({{m.at("head").get<int>(), m.at("dependent").get<int>()},
                          m.at("label").get<std::string>()});
  } catch (const nlohmann::json::exception& e) {
    throw error(std::string("bad graph json: ") + e.what());
  }
  return g;
}

}  // namespace ic
