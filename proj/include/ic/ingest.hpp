#ifndef IC_INGEST_HPP
#define IC_INGEST_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "ic/core.hpp"
#include "ic/normalize.hpp"

namespace ic {

// Native line format: "index<TAB>lexeme<TAB>head", plus optional
// "#group: i,j -> h" coordination lines. Head 0 marks the pending root.
EncodedSyntagma parse_native(const std::string& text);
std::string render_native(const EncodedSyntagma& s);

struct TreebankOptions {
  // Part-of-speech tags treated as function words and dropped.
  std::set<std::string> function_tags{"PUNCT", "ADP", "PART", "DET", "AUX"};
  // Relation supplying the subject-predicate cycle.
  std::string subject_relation = "nsubj";
  // Root tags that count as a predicate; any other root is taken as a
  // subject and gets a Z placeholder instead of a Y.
  std::set<std::string> predicate_tags{"VERB"};
};

// One 10-column tab-separated sentence block. Drops function words, remaps
// heads through them to the nearest surviving ancestor, renumbers survivors
// contiguously, wires the subject-predicate cycle, injects placeholders when
// a role is absent.
EncodedSyntagma parse_treebank_subset(const std::string& text,
                                      const TreebankOptions& opt = {});

struct PronounLexicon {
  std::map<std::pair<int, int>, std::string> by_pair;
  std::map<std::string, std::string> by_lexeme;  // dependent lexeme
  std::string default_label = "which?";
};

// Line format: "key<TAB>label" where key is "i,j" or a lexeme, and
// "@default<TAB>label".
PronounLexicon parse_lexicon(const std::string& text);

// Index-pair key wins over dependent-lexeme key wins over default.
std::string lookup_label(const PronounLexicon& lex, AssociativePair pair,
                         const EncodedSyntagma& s);

}  // namespace ic

#endif
