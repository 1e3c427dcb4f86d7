#ifndef IC_NORMALIZE_HPP
#define IC_NORMALIZE_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ic/core.hpp"

namespace ic {

// Homogeneous parts: members share one head, and a member that heads some
// image makes every other member head it too.
struct CoordinationGroup {
  std::vector<int> members;
  int shared_head = 0;
};

// kPendingHead marks the one entry whose principal is not known yet (a
// sentence still missing its subject or predicate); ensure_subject_predicate
// resolves it, to_anf rejects it.
inline constexpr int kPendingHead = 0;

struct SyntagmaEntry {
  Image image;
  int head = 0;
};

// The Rule-1 string of a k-word syntagma: entry i holds word x_i and the
// index of its principal word.
struct EncodedSyntagma {
  std::vector<SyntagmaEntry> entries;
  std::vector<CoordinationGroup> groups;

  int size() const { return static_cast<int>(entries.size()); }
  const std::string& lexeme(int index) const {
    return entries.at(static_cast<size_t>(index - 1)).image.lexeme;
  }
  LexemeLookup lookup() const {
    return [this](int i) { return lexeme(i); };
  }
};

// Validates and builds the encoding; head kPendingHead is allowed for at
// most one entry. Errors name the offending 1-based position.
EncodedSyntagma encode(
    const std::vector<std::pair<std::string, int>>& words,
    const std::vector<CoordinationGroup>& groups = {});

// Rewrites each coordination member's head to the shared head.
EncodedSyntagma expand_homogeneous(const EncodedSyntagma& s);

// Injects Y and/or Z placeholder images (indices k+1, k+2) for a declared
// missing subject/predicate and wires the subject-predicate cycle through
// the pending-head entry. Both flags false: returns the input unchanged.
EncodedSyntagma ensure_subject_predicate(const EncodedSyntagma& s,
                                         bool missing_subject,
                                         bool missing_predicate);

// String -> ANF: one pair head\i per entry in string order, coordination
// extras appended, then reduced.
AnfTerm to_anf(const EncodedSyntagma& s);

// Same, recording one line per product application:
//   "3.12: <remaining-string> => <pairs-so-far>"  (interior entries)
//   "3.13: <remaining-string> => <pairs-so-far>"  (final entry)
//   "3.14: <reduced ANF>"
AnfTerm to_anf_traced(const EncodedSyntagma& s, std::vector<std::string>& trace);

}  // namespace ic

#endif
