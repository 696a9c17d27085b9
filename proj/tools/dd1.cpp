#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "dotdepth/classifier.hpp"
#include "dotdepth/errors.hpp"
#include "dotdepth/suites.hpp"

using namespace dotdepth;

namespace {

enum Exit { kOk = 0, kNegative = 1, kInput = 2, kResource = 3 };

struct Config {
  std::string alphabet;
  std::string regex;
  std::string dfaPath;
  std::string format = "human";
  std::size_t degreeCap = 4;
  std::size_t blockCap = 4;
  std::size_t maxLen = 7;
  std::size_t semigroupCap = kDefaultSemigroupCap;
  std::uint64_t seed = 1;
  std::string fragment;
  std::string formula;
  std::string word;
  std::string suite;
};

const char* kDefaultAlphabet = "ab";

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

bool json_out(const Config& c) { return c.format == "json"; }

ClassificationReport load(const Config& c) {
  if (!c.dfaPath.empty() && !c.regex.empty()) throw InputError("give either --regex or --dfa, not both");
  if (!c.dfaPath.empty()) {
    Dfa d = dfa_from_json(read_file(c.dfaPath));
    if (!c.alphabet.empty() && Alphabet(c.alphabet) != d.alphabet())
      throw InputError("--alphabet does not match the DFA alphabet");
    bool eps = d.accepting(d.initial());
    return classify(without_epsilon(d), c.dfaPath, eps, c.semigroupCap);
  }
  if (c.regex.empty()) throw InputError("missing --regex or --dfa");
  return classify(c.regex, Alphabet(c.alphabet.empty() ? kDefaultAlphabet : c.alphabet), c.semigroupCap);
}

int cmd_classify(const Config& c) {
  auto r = load(c);
  if (json_out(c))
    std::cout << r.to_json().dump(2) << "\n";
  else
    std::cout << r.to_table();
  return kOk;
}

int cmd_explain(const Config& c) {
  if (c.fragment.empty()) throw InputError("missing --fragment");
  auto id = parse_fragment(c.fragment);
  auto r = load(c);
  const auto& v = r.verdict(id);
  if (!v.definable) {
    if (json_out(c))
      std::cout << nlohmann::json{{"fragment", id.key()}, {"definable", false}, {"evidence", v.evidence}}.dump(2) << "\n";
    else
      std::cout << id.key() << ": not definable\n" << v.evidence << "\n";
    return kNegative;
  }
  auto e = explain(r, id, {c.degreeCap, c.blockCap});
  if (json_out(c)) {
    std::cout << e.to_json().dump(2) << "\n";
  } else {
    std::cout << "fragment: " << id.key() << "\n";
    if (e.cover) {
      std::cout << "cover (" << e.cover->monomials.size() << " monomials, degree < " << e.cover->boundDegree
                << ", blocks <= " << e.cover->boundCount << "):\n";
      for (const auto& m : e.cover->monomials) std::cout << "  " << m.to_string() << "\n";
    }
    if (e.sentence) std::cout << "formula: " << to_string(Formula::leaf(*e.sentence)) << "\n";
    if (e.description) {
      std::cout << "combination: " << e.description->combination.to_json().dump() << "\n";
      if (e.description->witness) std::cout << "mismatch on: " << *e.description->witness << "\n";
    }
    if (e.formula) std::cout << "formula: " << to_string(*e.formula) << "\n";
    std::cout << "verified: " << (e.verified ? "true" : "false") << "\n";
  }
  return e.verified ? kOk : kNegative;
}

int cmd_semigroup(const Config& c) {
  auto r = load(c);
  auto j = semigroup_json(r.data, r.green);
  std::cout << (json_out(c) ? j.dump(2) : j.dump(1)) << "\n";
  return kOk;
}

int cmd_check(const Config& c) {
  if (c.formula.empty()) throw InputError("missing --formula");
  std::string text = std::filesystem::is_regular_file(c.formula) ? read_file(c.formula) : c.formula;
  std::string letters = c.alphabet;
  if (letters.empty()) {
    std::set<char> seen(c.word.begin(), c.word.end());
    // letters named in (label x a) atoms
    std::vector<std::string> toks;
    std::istringstream in(text);
    for (std::string tok; in >> tok;) {
      std::string t;
      for (char ch : tok)
        if (ch != '(' && ch != ')') t += ch;
      if (!t.empty()) toks.push_back(t);
    }
    for (std::size_t i = 0; i + 2 < toks.size(); ++i)
      if (toks[i] == "label" && toks[i + 2].size() == 1) seen.insert(toks[i + 2][0]);
    letters.assign(seen.begin(), seen.end());
    if (letters.empty()) letters = kDefaultAlphabet;
  }
  Alphabet ab(letters);
  ab.validate(c.word);
  auto f = parse_formula(text, ab);
  bool v = eval(f, c.word);
  if (json_out(c))
    std::cout << nlohmann::json{{"word", c.word}, {"value", v}}.dump() << "\n";
  else
    std::cout << (v ? "true" : "false") << "\n";
  return v ? kOk : kNegative;
}

int cmd_oracle(const Config& c) {
  if (c.suite.empty()) throw InputError("missing --suite");
  SuiteOptions o;
  o.maxLen = c.maxLen;
  o.seed = c.seed;
  auto reports = run_suite(c.suite, o);
  bool all = true;
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : reports) {
    all = all && r.passed;
    if (json_out(c))
      arr.push_back({{"name", r.name}, {"passed", r.passed}, {"cases", r.cases}, {"detail", r.detail}});
    else
      std::cout << (r.passed ? "pass " : "FAIL ") << r.name << " (" << r.cases << " cases)"
                << (r.detail.empty() ? "" : ": " + r.detail) << "\n";
  }
  if (json_out(c))
    std::cout << nlohmann::json{{"suite", c.suite}, {"passed", all}, {"results", arr}}.dump(2) << "\n";
  else
    std::cout << c.suite << ": " << (all ? "pass" : "FAIL") << "\n";
  return all ? kOk : kNegative;
}

int cmd_words(const Config& c) {
  std::optional<Dfa> d;
  Alphabet ab(c.alphabet.empty() ? kDefaultAlphabet : c.alphabet);
  if (!c.regex.empty() || !c.dfaPath.empty()) {
    auto r = load(c);
    d = r.data.sourceDfa;
    ab = d->alphabet();
  }
  for_each_word(ab, c.maxLen, [&](const Word& w) {
    if (!w.empty() && (!d || accepts(*d, w))) std::cout << w << "\n";
    return true;
  });
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dd1: dot-depth one fragment classifier"};
  app.require_subcommand(1);
  Config c;
  app.add_option("--alphabet", c.alphabet, "letters of the alphabet (default ab)");
  app.add_option("--regex", c.regex, "language as a regular expression");
  app.add_option("--dfa", c.dfaPath, "language as a DFA JSON file");
  app.add_option("--format", c.format)->check(CLI::IsMember({"human", "json"}));
  auto positive = CLI::PositiveNumber;
  app.add_option("--degree-cap", c.degreeCap)->check(positive);
  app.add_option("--block-cap", c.blockCap)->check(positive);
  app.add_option("--max-len", c.maxLen)->check(positive);
  app.add_option("--semigroup-cap", c.semigroupCap)->check(positive);
  app.add_option("--seed", c.seed);
  app.add_option("--fragment", c.fragment, "fragment key, e.g. S1[<,+1,min]");
  app.add_option("--formula", c.formula, "formula file or inline s-expression");
  app.add_option("--word", c.word);
  app.add_option("--suite", c.suite);

  int (*handler)(const Config&) = nullptr;
  auto sub = [&](const char* name, const char* help, int (*fn)(const Config&)) {
    app.add_subcommand(name, help)->fallthrough()->callback([&handler, fn] { handler = fn; });
  };
  sub("classify", "verdicts for the eight fragments", cmd_classify);
  sub("explain", "constructive description for one fragment", cmd_explain);
  sub("semigroup", "syntactic semigroup dump", cmd_semigroup);
  sub("check", "evaluate a formula on a word", cmd_check);
  sub("oracle", "run a property suite", cmd_oracle);
  sub("words", "enumerate words (of the language) up to --max-len", cmd_words);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }
  try {
    return handler(c);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const ResourceError& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return kResource;
  } catch (const PreconditionError& e) {
    std::cerr << e.what() << "\n";
    return kNegative;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kNegative;
  }
}
