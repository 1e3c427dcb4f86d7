#include "ic/graph.hpp"

#include <algorithm>
#include <random>

#include "doctest.h"
#include "ic/normalize.hpp"
#include "test_util.hpp"

using namespace ic;

namespace {

EncodedSyntagma example1() {
  return encode({{"once", 3}, {"I", 3}, {"saw", 2}, {"little", 5}, {"bird", 3}});
}

EncodedSyntagma example2() {
  return encode({{"Забытую", 2},
                 {"песню", 3},
                 {"несет", 4},
                 {"ветерок", 3},
                 {"задумчивых", 6},
                 {"травах", 7},
                 {"звеня", 3}});
}

}  // namespace

TEST_CASE("to_graph builds one node per image and one arc per pair") {
  const auto s = example1();
  const auto g = to_graph(to_anf(s), s.lookup(), {{{3, 1}, "when?"}});
  CHECK(g.nodes.size() == 5);
  CHECK(g.edges.size() == 5);
  REQUIRE(g.marked.size() == 1);
  CHECK(g.marked[0].arc == AssociativePair{3, 1});

  const auto s2 = example2();
  const auto g2 = to_graph(to_anf(s2), s2.lookup(),
                           {{{3, 2}, "what?"}, {{3, 7}, "how?"}});
  CHECK(g2.nodes.size() == 7);
  CHECK(g2.edges.size() == 7);
  CHECK(g2.marked.size() == 2);

  CHECK(to_graph(AnfTerm{}, s.lookup()).nodes.empty());
  CHECK_THROWS_AS(to_graph(to_anf(s), s.lookup(), {{{1, 2}, "x"}}), error);
}

TEST_CASE("reachable_edges") {
  const auto s2 = example2();
  const auto g2 = to_graph(to_anf(s2), s2.lookup());
  CHECK(reachable_edges(g2, 7, {{3, 7}, {7, 3}}) ==
        std::set<AssociativePair>{{7, 6}, {6, 5}});

  const auto s1 = example1();
  const auto g1 = to_graph(to_anf(s1), s1.lookup());
  CHECK(reachable_edges(g1, 1, {{3, 1}, {1, 3}}).empty());
  CHECK(reachable_edges(g1, 4, {}).empty());  // no outgoing arcs
  CHECK_THROWS_AS(reachable_edges(g1, 9, {}), error);
}

TEST_CASE("blocking more arcs never enlarges the reachable set") {
  std::mt19937 rng(53);
  for (int i = 0; i < 100; ++i) {
    const auto s = ic::test::random_syntagma(rng);
    const auto g = to_graph(to_anf(s), s.lookup());
    if (g.nodes.empty()) continue;
    std::uniform_int_distribution<int> pick(1, static_cast<int>(s.size()));
    int start = pick(rng);
    while (!g.nodes.count(start)) start = pick(rng);

    std::set<AssociativePair> blocked;
    auto previous = reachable_edges(g, start, blocked);
    for (AssociativePair e : g.edges) {
      blocked.insert(e);
      const auto now = reachable_edges(g, start, blocked);
      CHECK(std::includes(previous.begin(), previous.end(), now.begin(),
                          now.end()));
      previous = now;
    }
  }
}

TEST_CASE("dot export is deterministic and shows marks") {
  const auto s = example1();
  const auto g = to_graph(to_anf(s), s.lookup(), {{{3, 1}, "when?"}});
  const std::string dot = export_dot(g);
  CHECK(dot ==
        "digraph ic {\n"
        "  1 [label=\"once\"];\n"
        "  2 [label=\"I\"];\n"
        "  3 [label=\"saw\"];\n"
        "  4 [label=\"little\"];\n"
        "  5 [label=\"bird\"];\n"
        "  2 -> 3;\n"
        "  3 -> 1 [label=\"when?\"];\n"
        "  3 -> 2;\n"
        "  3 -> 5;\n"
        "  5 -> 4;\n"
        "}\n");
  CHECK(export_dot(ImageGraph{}) == "digraph ic {\n}\n");
}

TEST_CASE("json export/import round-trip") {
  const auto s = example2();
  const auto g = to_graph(to_anf(s), s.lookup(),
                          {{{3, 2}, "what?"}, {{3, 7}, "how?"}});
  const std::string json = export_json(g);
  const auto back = import_json(json);
  CHECK(export_json(back) == json);
  CHECK(back.nodes == g.nodes);
  CHECK(back.edges == g.edges);
  CHECK_THROWS_AS(import_json("{]"), error);
  CHECK_THROWS_AS(import_json("{}"), error);
}

TEST_CASE("canonically equal terms export byte-identical graphs") {
  const auto s = example1();
  const auto a = to_anf(s);
  AnfTerm b = oplus(a, a);  // same canonical set, different pair sequence
  std::vector<AssociativePair> shuffled(b.pairs().rbegin(), b.pairs().rend());
  b = AnfTerm::from_pairs(shuffled);
  REQUIRE(canonical_eq(a, b));
  CHECK(export_dot(to_graph(a, s.lookup())) ==
        export_dot(to_graph(b, s.lookup())));
  CHECK(export_json(to_graph(a, s.lookup())) ==
        export_json(to_graph(b, s.lookup())));
}
