#include "ic/qa.hpp"

#include <algorithm>
#include <set>

namespace ic {

QaPartition partition(const AnfTerm& source, AssociativePair selected) {
  if (!source.contains(selected))
    throw error("pair " + pair_index_text(selected) + " not found in term");
  const AssociativePair reverse{selected.dependent, selected.head};

  // Nodes reachable from the dependent with the selected pair and its
  // reverse removed.
  std::set<int> reached{selected.dependent};
  std::vector<int> stack{selected.dependent};
  while (!stack.empty()) {
    const int node = stack.back();
    stack.pop_back();
    for (AssociativePair e : source.canonical()) {
      if (e == selected || e == reverse || e.head != node) continue;
      if (reached.insert(e.dependent).second) stack.push_back(e.dependent);
    }
  }

  QaPartition p;
  p.selected = selected;
  p.source = reduce(source);
  std::vector<AssociativePair> answer, question;
  for (AssociativePair e : p.source.pairs()) {
    if (e == selected) continue;
    if (e != reverse && reached.count(e.head))
      answer.push_back(e);
    else
      question.push_back(e);
  }
  p.answer = AnfTerm::from_pairs(std::move(answer));
  p.question = AnfTerm::from_pairs(std::move(question));
  return p;
}

namespace {

// Preorder with the cycle partner first among a node's dependents, the rest
// in ascending index order.
void preorder(int node, const std::set<AssociativePair>& edges,
              std::set<int>& visited, std::vector<int>& out) {
  if (!visited.insert(node).second) return;
  out.push_back(node);
  std::vector<int> partners, rest;
  for (AssociativePair e : edges) {
    if (e.head != node) continue;
    if (edges.count({e.dependent, node}))
      partners.push_back(e.dependent);
    else
      rest.push_back(e.dependent);
  }
  for (int d : partners) preorder(d, edges, visited, out);
  for (int d : rest) preorder(d, edges, visited, out);
}

std::vector<int> linear_part(int start, const AnfTerm& part) {
  std::set<int> visited;
  std::vector<int> out;
  preorder(start, part.canonical(), visited, out);
  // Pairs fully disconnected from the start still contribute their images,
  // smallest (head, dependent) first.
  for (AssociativePair e : part.canonical())
    if (!visited.count(e.head) && !visited.count(e.dependent))
      preorder(e.head, part.canonical(), visited, out);
  return out;
}

}  // namespace

LinearQA linearize(const QaPartition& p, std::string pronoun_label) {
  LinearQA q;
  q.pronoun_label = std::move(pronoun_label);
  q.tq = linear_part(p.selected.head, p.question);
  q.ta = linear_part(p.selected.dependent, p.answer);
  return q;
}

std::string render(const LinearQA& q, const LexemeLookup& lex) {
  std::string out = q.pronoun_label;
  for (int i : q.tq) out += " " + lex(i);
  out += " ?";
  for (int i : q.ta) out += " " + lex(i);
  return out;
}

std::vector<std::pair<AssociativePair, LinearQA>> enumerate_questions(
    const AnfTerm& source, const Labeler& label) {
  std::vector<std::pair<AssociativePair, LinearQA>> out;
  const AnfTerm reduced = reduce(source);
  for (AssociativePair p : reduced.pairs())
    out.emplace_back(p, linearize(partition(source, p), label(p)));
  return out;
}

}  // namespace ic
