#ifndef IC_CORE_HPP
#define IC_CORE_HPP

#include <compare>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace ic {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Placeholder { none, unknown_subject, unknown_predicate };

// One meaningful word of a syntagma, 1-based position index.
struct Image {
  int index = 0;
  std::string lexeme;
  Placeholder placeholder = Placeholder::none;
};

// Elementary term head\dependent: directed principal->subordinate relation.
struct AssociativePair {
  int head = 0;
  int dependent = 0;
  auto operator<=>(const AssociativePair&) const = default;
};

// A (+)-combination of associative pairs. Keeps the derivation order of the
// pairs and the order-free, duplicate-free canonical set; equality is
// equality of canonical sets.
class AnfTerm {
 public:
  AnfTerm() = default;

  static AnfTerm single(AssociativePair p);
  static AnfTerm from_pairs(std::vector<AssociativePair> ps);

  const std::vector<AssociativePair>& pairs() const { return pairs_; }
  const std::set<AssociativePair>& canonical() const { return canonical_; }
  bool empty() const { return canonical_.empty(); }
  bool contains(AssociativePair p) const { return canonical_.count(p) != 0; }

 private:
  std::vector<AssociativePair> pairs_;
  std::set<AssociativePair> canonical_;
};

// Throws ic::error on head == dependent or a non-positive index.
AssociativePair make_pair(int head, int dependent);

AnfTerm oplus(const AnfTerm& a, const AnfTerm& b);

// Keeps the first occurrence of each pair; idempotent.
AnfTerm reduce(const AnfTerm& a);

bool canonical_eq(const AnfTerm& a, const AnfTerm& b);

// Subject-predicate cycle: {i\j, j\i}.
AnfTerm cross(int i, int j);

using LexemeLookup = std::function<std::string(int)>;

std::string pair_text(AssociativePair p, const LexemeLookup& lex);
std::string pair_index_text(AssociativePair p);

// Pairs joined by " (+) " in derivation order after reduce.
std::string anf_text(const AnfTerm& t, const LexemeLookup& lex);
std::string anf_index_text(const AnfTerm& t);

}  // namespace ic

#endif
