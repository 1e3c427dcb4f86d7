#ifndef IC_QA_HPP
#define IC_QA_HPP

#include <string>
#include <utility>
#include <vector>

#include "ic/core.hpp"

namespace ic {

// Split of a term around the selected interrogative pair: the answer is the
// part reachable from the pair's dependent, the question is everything else.
struct QaPartition {
  AssociativePair selected;
  AnfTerm answer;
  AnfTerm question;
  AnfTerm source;
};

struct LinearQA {
  std::string pronoun_label;
  std::vector<int> tq;
  std::vector<int> ta;
};

// Depth-first from the dependent of `selected`, never traversing the
// selected pair or its reverse. Throws ic::error if the pair is not in the
// term.
QaPartition partition(const AnfTerm& source, AssociativePair selected);

// Preorder over the question part from the selected head and over the answer
// part from the selected dependent; a visited set performs the left-to-right
// duplicate removal. Singleton fallbacks when a part is empty.
LinearQA linearize(const QaPartition& p, std::string pronoun_label);

// "<label> <tq lexemes> ? <ta lexemes>"
std::string render(const LinearQA& q, const LexemeLookup& lex);

using Labeler = std::function<std::string(AssociativePair)>;

// One (pair, linearization) per canonical pair, in derivation order.
std::vector<std::pair<AssociativePair, LinearQA>> enumerate_questions(
    const AnfTerm& source, const Labeler& label);

}  // namespace ic

#endif
