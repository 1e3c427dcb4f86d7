#include "ic/core.hpp"

namespace ic {

AnfTerm AnfTerm::single(AssociativePair p) {
  AnfTerm t;
  t.pairs_.push_back(p);
  t.canonical_.insert(p);
  return t;
}

AnfTerm AnfTerm::from_pairs(std::vector<AssociativePair> ps) {
  AnfTerm t;
  t.pairs_ = std::move(ps);
  t.canonical_.insert(t.pairs_.begin(), t.pairs_.end());
  return t;
}

AssociativePair make_pair(int head, int dependent) {
  if (head < 1 || dependent < 1)
    throw error("invalid pair " + std::to_string(head) + "\\" +
                std::to_string(dependent) + ": indices must be positive");
  if (head == dependent)
    throw error("invalid pair " + std::to_string(head) + "\\" +
                std::to_string(dependent) + ": self-loop");
  return AssociativePair{head, dependent};
}

AnfTerm oplus(const AnfTerm& a, const AnfTerm& b) {
  std::vector<AssociativePair> ps = a.pairs();
  ps.insert(ps.end(), b.pairs().begin(), b.pairs().end());
  return AnfTerm::from_pairs(std::move(ps));
}

AnfTerm reduce(const AnfTerm& a) {
  std::vector<AssociativePair> ps;
  std::set<AssociativePair> seen;
  for (AssociativePair p : a.pairs())
    if (seen.insert(p).second) ps.push_back(p);
  return AnfTerm::from_pairs(std::move(ps));
}

bool canonical_eq(const AnfTerm& a, const AnfTerm& b) {
  return a.canonical() == b.canonical();
}

AnfTerm cross(int i, int j) {
  AnfTerm t = AnfTerm::single(make_pair(i, j));
  return oplus(t, AnfTerm::single(make_pair(j, i)));
}

std::string pair_text(AssociativePair p, const LexemeLookup& lex) {
  return lex(p.head) + "\\" + lex(p.dependent);
}

std::string pair_index_text(AssociativePair p) {
  return "x" + std::to_string(p.head) + "\\x" + std::to_string(p.dependent);
}

static std::string join_pairs(const std::vector<AssociativePair>& ps,
                              const std::function<std::string(AssociativePair)>& f) {
  std::string out;
  for (size_t i = 0; i < ps.size(); ++i) {
    if (i) out += " (+) ";
    out += f(ps[i]);
  }
  return out;
}

std::string anf_text(const AnfTerm& t, const LexemeLookup& lex) {
  return join_pairs(reduce(t).pairs(),
                    [&](AssociativePair p) { return pair_text(p, lex); });
}

std::string anf_index_text(const AnfTerm& t) {
  return join_pairs(reduce(t).pairs(), pair_index_text);
}

}  // namespace ic
