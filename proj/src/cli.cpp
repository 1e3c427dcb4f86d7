#include "ic/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "ic/graph.hpp"
#include "ic/ingest.hpp"
#include "ic/normalize.hpp"
#include "ic/qa.hpp"

namespace ic::cli {

namespace {

struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string command;
  std::string input_path;
  std::string from = "native";
  std::string format;  // empty: per-command default
  std::string lexicon_path;
  std::vector<std::string> pairs;
  std::vector<std::string> labels;
  std::string output_path;
  bool trace = false;
};

std::string slurp(std::istream& in) {
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::string read_input(const Options& opt, std::istream& in) {
  if (opt.input_path.empty()) return slurp(in);
  std::ifstream f(opt.input_path);
  if (!f) throw error("cannot open input file '" + opt.input_path + "'");
  return slurp(f);
}

std::vector<EncodedSyntagma> load_syntagmas(const Options& opt,
                                            const std::string& text) {
  if (opt.from == "native") return {parse_native(text)};
  // Treebank input: blank lines separate sentence blocks.
  std::vector<EncodedSyntagma> out;
  std::string block;
  std::istringstream in(text);
  std::string line;
  auto flush = [&] {
    if (block.find_first_not_of(" \t\r\n#") != std::string::npos)
      out.push_back(parse_treebank_subset(block));
    block.clear();
  };
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r")
      flush();
    else
      block += line + "\n";
  }
  flush();
  if (out.empty()) throw error("no sentence block in input");
  return out;
}

AssociativePair resolve_pair(const std::string& text, const EncodedSyntagma& s) {
  const size_t comma = text.find(',');
  if (comma == std::string::npos || comma == 0 || comma + 1 == text.size())
    throw usage_error("--pair expects 'head,dependent'");
  const std::string a = text.substr(0, comma), b = text.substr(comma + 1);

  auto resolve_one = [&](const std::string& part) {
    try {
      return std::stoi(part);
    } catch (const std::exception&) {
      for (const auto& e : s.entries)
        if (e.image.lexeme == part) return e.image.index;
      throw error("no word '" + part + "' in syntagma");
    }
  };
  const int head = resolve_one(a), dependent = resolve_one(b);
  if (head == dependent || head < 1 || dependent < 1)
    throw usage_error("invalid pair " + std::to_string(head) + "," +
                      std::to_string(dependent));
  return AssociativePair{head, dependent};
}

nlohmann::ordered_json question_json(const AssociativePair& selected,
                                     const LinearQA& q,
                                     const EncodedSyntagma& s) {
  nlohmann::ordered_json j;
  j["selected"] = {{"head", selected.head}, {"dependent", selected.dependent}};
  j["label"] = q.pronoun_label;
  j["tq"] = q.tq;
  j["ta"] = q.ta;
  auto lexemes = [&](const std::vector<int>& idx) {
    std::vector<std::string> out;
    for (int i : idx) out.push_back(s.lexeme(i));
    return out;
  };
  j["tq_lexemes"] = lexemes(q.tq);
  j["ta_lexemes"] = lexemes(q.ta);
  return j;
}

void run_normalize(const Options& opt, const EncodedSyntagma& s,
                   std::ostream& out) {
  std::vector<std::string> trace;
  const AnfTerm anf = opt.trace ? to_anf_traced(s, trace) : to_anf(s);
  if (opt.format == "json") {
    nlohmann::ordered_json j;
    j["pairs"] = nlohmann::ordered_json::array();
    for (AssociativePair p : anf.pairs())
      j["pairs"].push_back({{"head", p.head},
                            {"dependent", p.dependent},
                            {"head_lexeme", s.lexeme(p.head)},
                            {"dependent_lexeme", s.lexeme(p.dependent)}});
    if (opt.trace) j["trace"] = trace;
    out << j.dump(2) << "\n";
    return;
  }
  for (const std::string& line : trace) out << line << "\n";
  for (AssociativePair p : anf.pairs())
    out << pair_text(p, s.lookup()) << "\n";
}

void run_questions(const Options& opt, const EncodedSyntagma& s,
                   const PronounLexicon& lex, std::ostream& out) {
  const AnfTerm anf = to_anf(s);
  const auto entries = enumerate_questions(
      anf, [&](AssociativePair p) { return lookup_label(lex, p, s); });
  for (const auto& [pair, q] : entries) {
    if (opt.format == "json")
      out << question_json(pair, q, s).dump() << "\n";
    else
      out << pair_text(pair, s.lookup()) << "\t" << render(q, s.lookup())
          << "\n";
  }
}

void run_ask(const Options& opt, const EncodedSyntagma& s,
             const PronounLexicon& lex, std::ostream& out) {
  if (opt.pairs.size() != 1)
    throw usage_error("ask requires exactly one --pair");
  const AssociativePair selected = resolve_pair(opt.pairs[0], s);
  const std::string label = !opt.labels.empty()
                                ? opt.labels[0]
                                : lookup_label(lex, selected, s);
  const LinearQA q = linearize(partition(to_anf(s), selected), label);
  if (opt.format == "json")
    out << question_json(selected, q, s).dump() << "\n";
  else
    out << render(q, s.lookup()) << "\n";
}

void run_graph(const Options& opt, const EncodedSyntagma& s,
               const PronounLexicon& lex, std::ostream& out) {
  const AnfTerm anf = to_anf(s);
  std::vector<MarkedArc> marks;
  for (size_t i = 0; i < opt.pairs.size(); ++i) {
    const AssociativePair p = resolve_pair(opt.pairs[i], s);
    const std::string label =
        i < opt.labels.size() ? opt.labels[i] : lookup_label(lex, p, s);
    marks.push_back({p, label});
  }
  const ImageGraph g = to_graph(anf, s.lookup(), marks);
  out << (opt.format == "json" ? export_json(g) : export_dot(g));
}

int dispatch(const Options& opt, std::istream& in, std::ostream& out_stream) {
  PronounLexicon lex;
  if (!opt.lexicon_path.empty()) {
    std::ifstream f(opt.lexicon_path);
    if (!f) throw error("cannot open lexicon file '" + opt.lexicon_path + "'");
    lex = parse_lexicon(slurp(f));
  }

  std::ofstream file_out;
  std::ostream* out = &out_stream;
  if (!opt.output_path.empty()) {
    file_out.open(opt.output_path);
    if (!file_out)
      throw error("cannot open output file '" + opt.output_path + "'");
    out = &file_out;
  }

  const auto syntagmas = load_syntagmas(opt, read_input(opt, in));
  for (size_t i = 0; i < syntagmas.size(); ++i) {
    if (i) *out << "\n";
    const EncodedSyntagma& s = syntagmas[i];
    if (opt.command == "normalize")
      run_normalize(opt, s, *out);
    else if (opt.command == "questions")
      run_questions(opt, s, lex, *out);
    else if (opt.command == "ask")
      run_ask(opt, s, lex, *out);
    else
      run_graph(opt, s, lex, *out);
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"associative-normal-form question generator"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub, std::vector<std::string> formats,
                        std::string default_format) {
    sub->add_option("input", opt.input_path, "input file (default: stdin)");
    sub->add_option("--from", opt.from, "input format")
        ->check(CLI::IsMember({"native", "treebank"}));
    sub->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember(formats));
    sub->add_option("--lexicon", opt.lexicon_path, "pronoun lexicon file");
    sub->add_option("--output", opt.output_path, "write output to file");
    sub->callback([&opt, sub, default_format] {
      opt.command = sub->get_name();
      if (opt.format.empty()) opt.format = default_format;
    });
  };

  auto* normalize = app.add_subcommand("normalize", "print the reduced ANF");
  normalize->add_flag("--trace", opt.trace, "print the product-application trace");
  add_common(normalize, {"text", "json"}, "text");

  auto* questions = app.add_subcommand("questions", "enumerate all questions");
  add_common(questions, {"text", "json"}, "text");

  auto* ask = app.add_subcommand("ask", "one question for a selected pair");
  ask->add_option("--pair", opt.pairs, "selected pair: i,j or head,dependent lexemes");
  ask->add_option("--label", opt.labels, "pronoun label");
  add_common(ask, {"text", "json"}, "text");

  auto* graph = app.add_subcommand("graph", "export the image graph");
  graph->add_option("--pair", opt.pairs, "marked pair (repeatable)");
  graph->add_option("--label", opt.labels, "label for the matching --pair");
  add_common(graph, {"dot", "json"}, "dot");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    return dispatch(opt, in, out);
  } catch (const usage_error& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace ic::cli
