#include "ic/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <sstream>

namespace ic {

namespace {

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string line;
  std::istringstream in(text);
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> fields;
  size_t start = 0;
  while (true) {
    const size_t tab = line.find('\t', start);
    fields.push_back(line.substr(start, tab - start));
    if (tab == std::string::npos) break;
    start = tab + 1;
  }
  return fields;
}

std::optional<int> parse_int(const std::string& s) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

[[noreturn]] void fail(size_t line_no, const std::string& what) {
  throw error("line " + std::to_string(line_no) + ": " + what);
}

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

CoordinationGroup parse_group_line(const std::string& body, size_t line_no) {
  const size_t arrow = body.find("->");
  if (arrow == std::string::npos) fail(line_no, "group line missing '->'");
  CoordinationGroup g;
  std::string members = body.substr(0, arrow);
  std::istringstream in(members);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto m = parse_int(trim(item));
    if (!m) fail(line_no, "bad group member '" + trim(item) + "'");
    g.members.push_back(*m);
  }
  const auto h = parse_int(trim(body.substr(arrow + 2)));
  if (!h) fail(line_no, "bad group head");
  g.shared_head = *h;
  if (g.members.empty()) fail(line_no, "empty group");
  return g;
}

}  // namespace

EncodedSyntagma parse_native(const std::string& text) {
  struct Row {
    std::string lexeme;
    int head;
    size_t line_no;
  };
  std::map<int, Row> rows;
  std::vector<CoordinationGroup> groups;

  const auto lines = split_lines(text);
  for (size_t n = 0; n < lines.size(); ++n) {
    const std::string& line = lines[n];
    const size_t line_no = n + 1;
    if (line.empty()) continue;
    if (line.rfind("#group:", 0) == 0) {
      groups.push_back(parse_group_line(line.substr(7), line_no));
      continue;
    }
    if (line[0] == '#') continue;
    const auto fields = split_tabs(line);
    if (fields.size() != 3) fail(line_no, "expected index<TAB>lexeme<TAB>head");
    const auto index = parse_int(fields[0]);
    const auto head = parse_int(fields[2]);
    if (!index || *index < 1) fail(line_no, "bad index '" + fields[0] + "'");
    if (fields[1].empty()) fail(line_no, "empty lexeme");
    if (!head || *head < 0) fail(line_no, "bad head '" + fields[2] + "'");
    if (!rows.emplace(*index, Row{fields[1], *head, line_no}).second)
      fail(line_no, "duplicate index " + std::to_string(*index));
  }

  const int k = static_cast<int>(rows.size());
  std::vector<std::pair<std::string, int>> words;
  for (int i = 1; i <= k; ++i) {
    const auto it = rows.find(i);
    if (it == rows.end())
      throw error("gap in numbering: index " + std::to_string(i) + " missing");
    const Row& r = it->second;
    if (r.head > k) fail(r.line_no, "head " + std::to_string(r.head) +
                                        " out of range 1.." + std::to_string(k));
    if (r.head == i) fail(r.line_no, "self-head");
    words.emplace_back(r.lexeme, r.head);
  }
  return encode(words, groups);
}

std::string render_native(const EncodedSyntagma& s) {
  std::string out;
  for (const auto& e : s.entries)
    out += std::to_string(e.image.index) + "\t" + e.image.lexeme + "\t" +
           std::to_string(e.head) + "\n";
  for (const auto& g : s.groups) {
    out += "#group: ";
    for (size_t i = 0; i < g.members.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(g.members[i]);
    }
    out += " -> " + std::to_string(g.shared_head) + "\n";
  }
  return out;
}

EncodedSyntagma parse_treebank_subset(const std::string& text,
                                      const TreebankOptions& opt) {
  struct Token {
    int id;
    std::string form;
    std::string upos;
    int head;
    std::string deprel;
    size_t line_no;
    bool dropped;
  };
  std::map<int, Token> tokens;

  const auto lines = split_lines(text);
  for (size_t n = 0; n < lines.size(); ++n) {
    const std::string& line = lines[n];
    const size_t line_no = n + 1;
    if (line.empty() || line[0] == '#') continue;
    const auto f = split_tabs(line);
    if (f.size() < 8) fail(line_no, "expected 10 tab-separated columns");
    const auto id = parse_int(f[0]);
    if (!id) continue;  // multiword-token and empty-node rows
    const auto head = parse_int(f[6]);
    if (!head || *head < 0) fail(line_no, "bad head '" + f[6] + "'");
    if (f[1].empty()) fail(line_no, "empty form");
    Token t{*id, f[1], f[3], *head, f[7], line_no,
            opt.function_tags.count(f[3]) != 0};
    if (!tokens.emplace(*id, t).second)
      fail(line_no, "duplicate token id " + std::to_string(*id));
  }
  if (tokens.empty()) throw error("empty sentence block");

  auto token_at = [&](int id) -> Token& {
    const auto it = tokens.find(id);
    if (it == tokens.end())
      throw error("head " + std::to_string(id) + " refers to no token");
    return it->second;
  };

  // Nearest surviving ancestor of a token's head.
  auto remap_head = [&](const Token& t) {
    std::set<int> visited;
    int h = t.head;
    while (h != 0 && token_at(h).dropped) {
      if (!visited.insert(h).second)
        fail(t.line_no, "cyclic head chain through dropped tokens");
      if (token_at(h).head == 0)
        fail(token_at(h).line_no, "root is a function word");
      h = token_at(h).head;
    }
    return h;
  };

  std::vector<const Token*> survivors;
  std::map<int, int> renumber;
  for (const auto& [id, t] : tokens)
    if (!t.dropped) {
      renumber[id] = static_cast<int>(survivors.size()) + 1;
      survivors.push_back(&t);
    }
  if (survivors.empty()) throw error("no content words in sentence block");

  const Token* root = nullptr;
  std::vector<int> heads;
  for (const Token* t : survivors) {
    const int h = remap_head(*t);
    heads.push_back(h);
    if (h == 0) {
      if (root) fail(t->line_no, "more than one root");
      root = t;
    }
  }
  if (!root) throw error("missing root");

  // Subject-predicate cycle: the root's head becomes its subject.
  const Token* subject = nullptr;
  for (size_t i = 0; i < survivors.size(); ++i)
    if (survivors[i] != root && heads[i] == root->id &&
        survivors[i]->deprel == opt.subject_relation) {
      subject = survivors[i];
      break;
    }

  std::vector<std::pair<std::string, int>> words;
  for (size_t i = 0; i < survivors.size(); ++i) {
    int h = heads[i];
    if (survivors[i] == root && subject) h = subject->id;
    words.emplace_back(survivors[i]->form, h == 0 ? kPendingHead : renumber.at(h));
  }

  EncodedSyntagma s = encode(words);
  if (!subject) {
    const bool root_is_predicate = opt.predicate_tags.count(root->upos) != 0;
    s = ensure_subject_predicate(s, /*missing_subject=*/root_is_predicate,
                                 /*missing_predicate=*/!root_is_predicate);
  }
  return s;
}

PronounLexicon parse_lexicon(const std::string& text) {
  PronounLexicon lex;
  const auto lines = split_lines(text);
  for (size_t n = 0; n < lines.size(); ++n) {
    const std::string& line = lines[n];
    if (line.empty() || line[0] == '#') continue;
    const auto f = split_tabs(line);
    if (f.size() != 2 || f[1].empty())
      fail(n + 1, "expected key<TAB>label");
    if (f[0] == "@default") {
      lex.default_label = f[1];
      continue;
    }
    const size_t comma = f[0].find(',');
    const auto h = comma == std::string::npos
                       ? std::nullopt
                       : parse_int(f[0].substr(0, comma));
    const auto d = comma == std::string::npos
                       ? std::nullopt
                       : parse_int(f[0].substr(comma + 1));
    if (h && d) {
      if (!lex.by_pair.emplace(std::make_pair(*h, *d), f[1]).second)
        fail(n + 1, "duplicate key '" + f[0] + "'");
    } else if (!lex.by_lexeme.emplace(f[0], f[1]).second) {
      fail(n + 1, "duplicate key '" + f[0] + "'");
    }
  }
  return lex;
}

std::string lookup_label(const PronounLexicon& lex, AssociativePair pair,
                         const EncodedSyntagma& s) {
  if (const auto it = lex.by_pair.find({pair.head, pair.dependent});
      it != lex.by_pair.end())
    return it->second;
  if (pair.dependent >= 1 && pair.dependent <= s.size())
    if (const auto it = lex.by_lexeme.find(s.lexeme(pair.dependent));
        it != lex.by_lexeme.end())
      return it->second;
  return lex.default_label;
}

}  // namespace ic
