#include "ic/qa.hpp"

#include <random>

#include "doctest.h"
#include "ic/graph.hpp"
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

TEST_CASE("partition of the worked examples") {
  SUBCASE("example 1, selected 3\\1: empty answer") {
    const auto p = partition(to_anf(example1()), {3, 1});
    CHECK(p.answer.empty());
    CHECK(p.question.canonical() ==
          std::set<AssociativePair>{{3, 2}, {2, 3}, {3, 5}, {5, 4}});
  }
  SUBCASE("example 2, selected 3\\2") {
    const auto p = partition(to_anf(example2()), {3, 2});
    CHECK(p.answer.canonical() == std::set<AssociativePair>{{2, 1}});
    CHECK(p.question.canonical() ==
          std::set<AssociativePair>{{4, 3}, {3, 4}, {6, 5}, {7, 6}, {3, 7}});
  }
  SUBCASE("example 2, selected 3\\7") {
    const auto p = partition(to_anf(example2()), {3, 7});
    CHECK(p.answer.canonical() == std::set<AssociativePair>{{7, 6}, {6, 5}});
    CHECK(p.question.canonical() ==
          std::set<AssociativePair>{{4, 3}, {3, 4}, {3, 2}, {2, 1}});
  }
  SUBCASE("pair not in the term") {
    CHECK_THROWS_AS(partition(to_anf(example1()), {4, 1}), error);
  }
}

TEST_CASE("linearize reproduces the reference orderings") {
  const auto e1 = to_anf(example1());
  const auto q1 = linearize(partition(e1, {3, 1}), "when?");
  CHECK(q1.tq == std::vector<int>{3, 2, 5, 4});
  CHECK(q1.ta == std::vector<int>{1});
  CHECK(render(q1, example1().lookup()) == "when? saw I bird little ? once");

  const auto e2 = to_anf(example2());
  const auto q2 = linearize(partition(e2, {3, 2}), "what?");
  CHECK(q2.tq == std::vector<int>{3, 4, 7, 6, 5});
  CHECK(q2.ta == std::vector<int>{2, 1});

  const auto q3 = linearize(partition(e2, {3, 7}), "how?");
  CHECK(q3.tq == std::vector<int>{3, 4, 2, 1});
  CHECK(q3.ta == std::vector<int>{7, 6, 5});
}

TEST_CASE("enumerate_questions") {
  const auto labeler = [](AssociativePair) { return std::string("which?"); };
  SUBCASE("example 1 yields one entry per pair") {
    const auto entries = enumerate_questions(to_anf(example1()), labeler);
    REQUIRE(entries.size() == 5);
    CHECK(entries[0].first == AssociativePair{3, 1});
    CHECK(entries[0].second.tq == std::vector<int>{3, 2, 5, 4});
    CHECK(entries[0].second.ta == std::vector<int>{1});
  }
  SUBCASE("empty term yields nothing") {
    CHECK(enumerate_questions(AnfTerm{}, labeler).empty());
  }
  SUBCASE("two-node cycle") {
    const auto entries = enumerate_questions(cross(1, 2), labeler);
    REQUIRE(entries.size() == 2);
    // Selecting 1\2 blocks the reverse pair, so both parts are singletons.
    CHECK(entries[0].first == AssociativePair{1, 2});
    CHECK(entries[0].second.tq == std::vector<int>{1});
    CHECK(entries[0].second.ta == std::vector<int>{2});
    CHECK(entries[1].first == AssociativePair{2, 1});
    CHECK(entries[1].second.tq == std::vector<int>{2});
    CHECK(entries[1].second.ta == std::vector<int>{1});
  }
}

TEST_CASE("partition property and reachability oracle agree") {
  std::mt19937 rng(41);
  for (int i = 0; i < 200; ++i) {
    const auto s = ic::test::random_syntagma(rng);
    const auto source = to_anf(s);
    const auto g = to_graph(source, s.lookup());
    for (AssociativePair selected : source.canonical()) {
      const auto p = partition(source, selected);

      // Disjoint three-way split covering the source.
      std::set<AssociativePair> all{selected};
      for (AssociativePair e : p.answer.canonical()) CHECK(all.insert(e).second);
      for (AssociativePair e : p.question.canonical())
        CHECK(all.insert(e).second);
      CHECK(all == source.canonical());

      // Independent BFS oracle.
      const AssociativePair reverse{selected.dependent, selected.head};
      CHECK(p.answer.canonical() ==
            reachable_edges(g, selected.dependent, {selected, reverse}));
    }
  }
}

TEST_CASE("tq and ta are duplicate-free and justified") {
  std::mt19937 rng(43);
  for (int i = 0; i < 100; ++i) {
    const auto s = ic::test::random_syntagma(rng);
    const auto source = to_anf(s);
    for (AssociativePair selected : source.canonical()) {
      const auto p = partition(source, selected);
      const auto q = linearize(p, "which?");
      auto check_part = [](const std::vector<int>& seq, const AnfTerm& part,
                           int anchor) {
        std::set<int> seen;
        for (int idx : seq) {
          CHECK(seen.insert(idx).second);
          bool justified = idx == anchor;
          for (AssociativePair e : part.canonical())
            justified |= e.head == idx || e.dependent == idx;
          CHECK(justified);
        }
        CHECK_FALSE(seq.empty());
      };
      check_part(q.tq, p.question, selected.head);
      check_part(q.ta, p.answer, selected.dependent);
    }
  }
}

TEST_CASE("leaf dependent anchors an empty answer") {
  std::mt19937 rng(47);
  for (int i = 0; i < 100; ++i) {
    const auto source = ic::test::random_term(rng);
    for (AssociativePair selected : source.canonical()) {
      bool leaf = true;
      for (AssociativePair e : source.canonical())
        if (e != selected && e.head == selected.dependent &&
            !(e.head == selected.dependent && e.dependent == selected.head))
          leaf = false;
      if (!leaf) continue;
      const auto q = linearize(partition(source, selected), "which?");
      CHECK(q.ta == std::vector<int>{selected.dependent});
    }
  }
}

TEST_CASE("determinism across runs") {
  const auto source = to_anf(example2());
  const auto a = linearize(partition(source, {3, 7}), "how?");
  const auto b = linearize(partition(source, {3, 7}), "how?");
  CHECK(a.tq == b.tq);
  CHECK(a.ta == b.ta);
}

TEST_CASE("question pairs disconnected from the head are still rendered") {
  // 1<->2 cycle plus an island 4\3; selecting 1\2 leaves the island in the
  // question with no path from image 1.
  const auto source =
      AnfTerm::from_pairs({{1, 2}, {2, 1}, {4, 3}});
  const auto q = linearize(partition(source, {1, 2}), "which?");
  CHECK(q.tq == std::vector<int>{1, 4, 3});
  CHECK(q.ta == std::vector<int>{2});
}
