#include "ic/normalize.hpp"

#include <algorithm>
#include <set>

namespace ic {

static void check_index(int idx, int k, int position, const char* what) {
  if (idx < 1 || idx > k)
    throw error("position " + std::to_string(position) + ": " + what + " " +
                std::to_string(idx) + " out of range 1.." + std::to_string(k));
}

EncodedSyntagma encode(const std::vector<std::pair<std::string, int>>& words,
                       const std::vector<CoordinationGroup>& groups) {
  const int k = static_cast<int>(words.size());
  EncodedSyntagma s;
  s.entries.reserve(words.size());
  int pending = 0;
  for (int i = 1; i <= k; ++i) {
    const auto& [lexeme, head] = words[static_cast<size_t>(i - 1)];
    if (lexeme.empty())
      throw error("position " + std::to_string(i) + ": empty lexeme");
    if (head == kPendingHead) {
      if (++pending > 1)
        throw error("position " + std::to_string(i) +
                    ": more than one pending head");
    } else {
      check_index(head, k, i, "head");
      if (head == i)
        throw error("position " + std::to_string(i) + ": self-head");
    }
    s.entries.push_back({Image{i, lexeme, Placeholder::none}, head});
  }
  for (const auto& g : groups) {
    check_index(g.shared_head, k, g.shared_head, "shared head");
    std::set<int> seen;
    for (int m : g.members) {
      check_index(m, k, m, "group member");
      if (m == g.shared_head)
        throw error("position " + std::to_string(m) +
                    ": group member equals its shared head");
      if (!seen.insert(m).second)
        throw error("position " + std::to_string(m) +
                    ": duplicate group member");
    }
  }
  s.groups = groups;
  return s;
}

EncodedSyntagma expand_homogeneous(const EncodedSyntagma& s) {
  EncodedSyntagma out = s;
  for (const auto& g : out.groups)
    for (int m : g.members) {
      if (m == g.shared_head)
        throw error("position " + std::to_string(m) +
                    ": group member equals its shared head");
      out.entries[static_cast<size_t>(m - 1)].head = g.shared_head;
    }
  return out;
}

static std::string fresh_lexeme(const EncodedSyntagma& s, std::string base) {
  auto taken = [&](const std::string& lex) {
    return std::any_of(s.entries.begin(), s.entries.end(),
                       [&](const SyntagmaEntry& e) { return e.image.lexeme == lex; });
  };
  while (taken(base)) base += "'";
  return base;
}

static int pending_entry(const EncodedSyntagma& s) {
  for (const auto& e : s.entries)
    if (e.head == kPendingHead) return e.image.index;
  return 0;
}

EncodedSyntagma ensure_subject_predicate(const EncodedSyntagma& s,
                                         bool missing_subject,
                                         bool missing_predicate) {
  if (!missing_subject && !missing_predicate) return s;

  EncodedSyntagma out = s;
  const int root = pending_entry(out);
  if (root == 0 && !(missing_subject && missing_predicate))
    throw error("missing role declared but no entry awaits a head");

  auto append = [&](Placeholder kind, const char* base) {
    const int idx = out.size() + 1;
    out.entries.push_back(
        {Image{idx, fresh_lexeme(out, base), kind}, kPendingHead});
    return idx;
  };

  if (missing_subject && missing_predicate) {
    const int y = append(Placeholder::unknown_subject, "Y");
    const int z = append(Placeholder::unknown_predicate, "Z");
    out.entries[static_cast<size_t>(y - 1)].head = z;
    out.entries[static_cast<size_t>(z - 1)].head = y;
    if (root != 0) out.entries[static_cast<size_t>(root - 1)].head = z;
    return out;
  }

  const int added = missing_subject
                        ? append(Placeholder::unknown_subject, "Y")
                        : append(Placeholder::unknown_predicate, "Z");
  out.entries[static_cast<size_t>(added - 1)].head = root;
  out.entries[static_cast<size_t>(root - 1)].head = added;
  return out;
}

// Coordination extras: a member that heads an image makes every other
// member of its group head that image too.
static std::vector<AssociativePair> coordination_extras(const EncodedSyntagma& s) {
  std::vector<AssociativePair> extras;
  for (const auto& e : s.entries)
    for (const auto& g : s.groups)
      for (int m1 : g.members) {
        if (e.head != m1) continue;
        for (int m2 : g.members)
          if (m2 != m1 && m2 != e.image.index)
            extras.push_back(make_pair(m2, e.image.index));
      }
  return extras;
}

static std::string remaining_string(const EncodedSyntagma& s, size_t from) {
  if (from >= s.entries.size()) return "∅";
  std::string out;
  for (size_t i = from; i < s.entries.size(); ++i) {
    const auto& e = s.entries[i];
    out += "x" + std::to_string(e.image.index) + " " + std::to_string(e.head);
  }
  return out;
}

static AnfTerm to_anf_impl(const EncodedSyntagma& s,
                           std::vector<std::string>* trace) {
  const EncodedSyntagma x = expand_homogeneous(s);
  for (const auto& e : x.entries)
    if (e.head == kPendingHead)
      throw error("position " + std::to_string(e.image.index) +
                  ": unresolved head (run ensure_subject_predicate)");

  std::vector<AssociativePair> ps;
  std::string emitted;
  for (size_t i = 0; i < x.entries.size(); ++i) {
    const auto& e = x.entries[i];
    AssociativePair p = make_pair(e.head, e.image.index);
    ps.push_back(p);
    if (trace) {
      if (!emitted.empty()) emitted += " (+) ";
      emitted += pair_index_text(p);
      const char* product = (i + 1 == x.entries.size()) ? "3.13" : "3.12";
      trace->push_back(std::string(product) + ": " +
                       remaining_string(x, i + 1) + " => " + emitted);
    }
  }
  for (AssociativePair p : coordination_extras(x)) ps.push_back(p);

  AnfTerm result = reduce(AnfTerm::from_pairs(std::move(ps)));
  if (trace) trace->push_back("3.14: " + anf_index_text(result));
  return result;
}

AnfTerm to_anf(const EncodedSyntagma& s) { return to_anf_impl(s, nullptr); }

AnfTerm to_anf_traced(const EncodedSyntagma& s,
                      std::vector<std::string>& trace) {
  return to_anf_impl(s, &trace);
}

}  // namespace ic
