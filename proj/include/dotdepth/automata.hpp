#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dotdepth/errors.hpp"

namespace dotdepth {

using State = std::size_t;
using Letter = std::size_t;  // index into an Alphabet
using Word = std::string;    // letters are single characters

/// Ordered finite set of single-character letters. The declaration order is
/// the canonical order for every enumeration in the library.
class Alphabet {
 public:
  Alphabet();
  explicit Alphabet(std::string_view letters);

  std::size_t size() const noexcept { return letters_.size(); }
  char at(Letter i) const { return letters_.at(i); }
  const std::string& letters() const noexcept { return letters_; }

  bool contains(char c) const noexcept { return index_[static_cast<unsigned char>(c)] >= 0; }
  /// Throws InputError for characters outside the alphabet.
  Letter index_of(char c) const;
  /// Throws InputError if any symbol of `w` is not a letter.
  void validate(std::string_view w) const;

  bool operator==(const Alphabet& o) const noexcept { return letters_ == o.letters_; }

 private:
  std::string letters_;
  int index_[256];
  void build_index();
};

/// Extended regular expression syntax tree.
struct RegexNode;
using Regex = std::shared_ptr<const RegexNode>;

struct RegexNode {
  enum class Kind { Letter, AnyLetter, EmptySet, EmptyWord, Concat, Union, Intersect, Complement, Star, Plus };
  Kind kind;
  char letter = 0;
  std::vector<Regex> children;
};

namespace regex {
Regex letter(char c);
Regex any();
Regex empty_set();
Regex empty_word();
Regex concat(Regex a, Regex b);
Regex alt(Regex a, Regex b);
Regex intersect(Regex a, Regex b);
Regex complement(Regex a);
Regex star(Regex a);
Regex plus(Regex a);
}  // namespace regex

/// Structural equality of two regex trees.
bool same_tree(const Regex& a, const Regex& b);
std::string to_string(const Regex& r);

/// Grammar:
///   expr := term ('|' term)* ; term := factor+ ; factor := atom ('*'|'+')*
///   atom := letter | '.' | '(' expr ')' | '~' atom | '[' expr '&' expr ']'
/// Whitespace is not significant.
Regex parse_regex(std::string_view text, const Alphabet& alphabet);

/// Complete deterministic automaton. The structure itself may accept the empty
/// word (used internally); the public language semantics are always over
/// non-empty words.
class Dfa {
 public:
  Dfa(Alphabet alphabet, std::size_t states, State initial);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t state_count() const noexcept { return accepting_.size(); }
  State initial() const noexcept { return initial_; }

  State next(State q, Letter a) const { return delta_[q * alphabet_.size() + a]; }
  void set_next(State q, Letter a, State to);
  bool accepting(State q) const { return accepting_[q]; }
  void set_accepting(State q, bool v = true) { accepting_[q] = v; }
  void set_initial(State q);

  /// Run from `from` over `w` (letters as characters).
  State run(std::string_view w, State from) const;
  State run(std::string_view w) const { return run(w, initial_); }

  bool operator==(const Dfa& o) const = default;

 private:
  Alphabet alphabet_;
  State initial_;
  std::vector<bool> accepting_;
  std::vector<State> delta_;
};

struct CompileResult {
  Dfa dfa;
  bool epsilonRemoved = false;
};

/// Minimal complete DFA (see minimize_nonempty) for L(ast) minus the empty word.
CompileResult compile(const Regex& ast, const Alphabet& alphabet);
/// Convenience: parse + compile.
CompileResult compile(std::string_view regex, const Alphabet& alphabet);

/// Drop unreachable states, merge equivalent ones and renumber states in
/// breadth-first order from the initial state (letters in alphabet order).
Dfa minimize(const Dfa& d);

/// The same automaton with the empty word removed from its language.
Dfa without_epsilon(const Dfa& d);

/// Smallest complete DFA for the non-empty words of d: the minimal DFA with
/// or without ε, whichever is smaller (without on ties). Γ⁺ gets one state.
Dfa minimize_nonempty(const Dfa& d);

enum class BoolOp { And, Or, Minus, Xor };
Dfa product(const Dfa& a, const Dfa& b, BoolOp op);
/// Complement relative to non-empty words.
Dfa complement(const Dfa& d);

struct Equivalence {
  bool equal = true;
  std::optional<Word> counterexample;  // shortest, length-lex smallest
};

/// Language equality over non-empty words.
Equivalence equivalent(const Dfa& a, const Dfa& b);

/// Membership of a non-empty word. The empty word is an InputError because
/// languages here are sets of non-empty words.
bool accepts(const Dfa& d, std::string_view w);

/// Shortest length-lex smallest non-empty accepted word, if any.
std::optional<Word> shortest_accepted(const Dfa& d);

/// All non-empty words of length <= maxLen, length-then-lex order.
std::vector<Word> enumerate_words(const Alphabet& alphabet, std::size_t maxLen);
/// Streaming variant; stops early when `visit` returns false.
void for_each_word(const Alphabet& alphabet, std::size_t maxLen, const std::function<bool(const Word&)>& visit);

/// Length-k factors of `u` in sorted order (empty when |u| < k).
std::vector<Word> factors_of_length(std::string_view u, std::size_t k);

/// DFA JSON interchange (see README).
Dfa dfa_from_json(std::string_view text);
std::string dfa_to_json(const Dfa& d);

}  // namespace dotdepth
