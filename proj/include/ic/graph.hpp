#ifndef IC_GRAPH_HPP
#define IC_GRAPH_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "ic/core.hpp"

namespace ic {

struct MarkedArc {
  AssociativePair arc;
  std::string label;
};

// Digraph of a term: one node per image, one arc per canonical pair.
struct ImageGraph {
  std::map<int, std::string> nodes;  // index -> lexeme
  std::set<AssociativePair> edges;
  std::vector<MarkedArc> marked;
};

ImageGraph to_graph(const AnfTerm& source, const LexemeLookup& lex,
                    const std::vector<MarkedArc>& marks = {});

// Arcs on paths following arc direction from `start`, with `blocked` arcs
// removed entirely. Exhaustive BFS; this is the reference oracle for the
// question/answer split.
std::set<AssociativePair> reachable_edges(const ImageGraph& g, int start,
                                          const std::set<AssociativePair>& blocked);

std::string export_dot(const ImageGraph& g);
std::string export_json(const ImageGraph& g);
ImageGraph import_json(const std::string& text);

}  // namespace ic

#endif
