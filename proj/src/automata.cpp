#include "dotdepth/automata.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <utility>

#include "nfa.hpp"

namespace dotdepth {

// ---------------------------------------------------------------- Alphabet

Alphabet::Alphabet() { build_index(); }

Alphabet::Alphabet(std::string_view letters) : letters_(letters) {
  if (letters_.empty()) throw InputError("alphabet must contain at least one letter");
  build_index();
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    auto c = static_cast<unsigned char>(letters_[i]);
    if (index_[c] != static_cast<int>(i)) throw InputError(std::string("duplicate letter '") + letters_[i] + "' in alphabet");
    static constexpr std::string_view reserved = "|*+().~[&]<>\"\\ \t\n";
    if (reserved.find(letters_[i]) != std::string_view::npos)
      throw InputError(std::string("reserved character '") + letters_[i] + "' cannot be a letter");
  }
}

void Alphabet::build_index() {
  std::fill(std::begin(index_), std::end(index_), -1);
  // Keep the first occurrence so that duplicates are detectable.
  for (std::size_t i = letters_.size(); i-- > 0;) index_[static_cast<unsigned char>(letters_[i])] = static_cast<int>(i);
}

Letter Alphabet::index_of(char c) const {
  int i = index_[static_cast<unsigned char>(c)];
  if (i < 0) throw InputError(std::string("letter '") + c + "' is not in the alphabet {" + letters_ + "}");
  return static_cast<Letter>(i);
}

void Alphabet::validate(std::string_view w) const {
  for (char c : w) index_of(c);
}

// ------------------------------------------------------------------- Regex

namespace regex {
namespace {
Regex make(RegexNode::Kind k, std::vector<Regex> children = {}, char c = 0) {
  return std::make_shared<const RegexNode>(RegexNode{k, c, std::move(children)});
}
}  // namespace
Regex letter(char c) { return make(RegexNode::Kind::Letter, {}, c); }
Regex any() { return make(RegexNode::Kind::AnyLetter); }
Regex empty_set() { return make(RegexNode::Kind::EmptySet); }
Regex empty_word() { return make(RegexNode::Kind::EmptyWord); }
Regex concat(Regex a, Regex b) { return make(RegexNode::Kind::Concat, {std::move(a), std::move(b)}); }
Regex alt(Regex a, Regex b) { return make(RegexNode::Kind::Union, {std::move(a), std::move(b)}); }
Regex intersect(Regex a, Regex b) { return make(RegexNode::Kind::Intersect, {std::move(a), std::move(b)}); }
Regex complement(Regex a) { return make(RegexNode::Kind::Complement, {std::move(a)}); }
Regex star(Regex a) { return make(RegexNode::Kind::Star, {std::move(a)}); }
Regex plus(Regex a) { return make(RegexNode::Kind::Plus, {std::move(a)}); }
}  // namespace regex

bool same_tree(const Regex& a, const Regex& b) {
  if (a->kind != b->kind || a->letter != b->letter || a->children.size() != b->children.size()) return false;
  for (std::size_t i = 0; i < a->children.size(); ++i)
    if (!same_tree(a->children[i], b->children[i])) return false;
  return true;
}

std::string to_string(const Regex& r) {
  using K = RegexNode::Kind;
  switch (r->kind) {
    case K::Letter: return std::string(1, r->letter);
    case K::AnyLetter: return ".";
    // The grammar has no atoms for these; print equivalent expressions.
    case K::EmptySet: return "[.&~.]";
    case K::EmptyWord: return "~(.+)";
    case K::Concat: return "(" + to_string(r->children[0]) + to_string(r->children[1]) + ")";
    case K::Union: return "(" + to_string(r->children[0]) + "|" + to_string(r->children[1]) + ")";
    case K::Intersect: return "[" + to_string(r->children[0]) + "&" + to_string(r->children[1]) + "]";
    case K::Complement: return "~(" + to_string(r->children[0]) + ")";
    case K::Star: return to_string(r->children[0]) + "*";
    case K::Plus: return to_string(r->children[0]) + "+";
  }
  return {};
}

namespace {

class RegexParser {
 public:
  RegexParser(std::string_view text, const Alphabet& alphabet) : text_(text), alphabet_(alphabet) {}

  Regex parse() {
    auto r = expr();
    skip();
    if (pos_ != text_.size()) throw SyntaxError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return r;
  }

 private:
  std::string_view text_;
  const Alphabet& alphabet_;
  std::size_t pos_ = 0;

  void skip() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n')) ++pos_;
  }
  bool at_end() {
    skip();
    return pos_ >= text_.size();
  }
  char peek() { return at_end() ? '\0' : text_[pos_]; }
  void expect(char c) {
    if (peek() != c) {
      if (at_end()) throw SyntaxError(std::string("expected '") + c + "' but input ended", pos_);
      throw SyntaxError(std::string("expected '") + c + "'", pos_);
    }
    ++pos_;
  }
  bool starts_atom() {
    if (at_end()) return false;
    char c = text_[pos_];
    if (c == '.' || c == '(' || c == '~' || c == '[') return true;
    static constexpr std::string_view special = "|*+)&]";
    return special.find(c) == std::string_view::npos;
  }

  Regex expr() {
    auto r = term();
    while (peek() == '|') {
      ++pos_;
      r = regex::alt(r, term());
    }
    return r;
  }

  Regex term() {
    if (!starts_atom()) {
      if (at_end()) throw SyntaxError("expected an expression but input ended", pos_);
      throw SyntaxError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    }
    auto r = factor();
    while (starts_atom()) r = regex::concat(r, factor());
    return r;
  }

  Regex factor() {
    auto r = atom();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        r = regex::star(r);
      } else if (c == '+') {
        ++pos_;
        r = regex::plus(r);
      } else {
        return r;
      }
    }
  }

  Regex atom() {
    skip();
    if (pos_ >= text_.size()) throw SyntaxError("expected an atom but input ended", pos_);
    char c = text_[pos_];
    switch (c) {
      case '.':
        ++pos_;
        return regex::any();
      case '(': {
        ++pos_;
        auto r = expr();
        expect(')');
        return r;
      }
      case '~':
        ++pos_;
        return regex::complement(atom());
      case '[': {
        ++pos_;
        auto a = expr();
        expect('&');
        auto b = expr();
        expect(']');
        return regex::intersect(a, b);
      }
      default:
        if (!alphabet_.contains(c))
          throw InputError(std::string("letter '") + c + "' at offset " + std::to_string(pos_) +
                           " is not in the alphabet {" + alphabet_.letters() + "}");
        ++pos_;
        return regex::letter(c);
    }
  }
};

}  // namespace

Regex parse_regex(std::string_view text, const Alphabet& alphabet) { return RegexParser(text, alphabet).parse(); }

// --------------------------------------------------------------------- Dfa

Dfa::Dfa(Alphabet alphabet, std::size_t states, State initial)
    : alphabet_(std::move(alphabet)), initial_(initial), accepting_(states, false), delta_(states * alphabet_.size(), 0) {
  if (alphabet_.size() == 0) throw InputError("DFA needs a non-empty alphabet");
  if (states == 0) throw InputError("DFA needs at least one state");
  if (initial >= states) throw InputError("initial state out of range");
}

void Dfa::set_next(State q, Letter a, State to) {
  if (to >= state_count()) throw InputError("transition target out of range");
  delta_.at(q * alphabet_.size() + a) = to;
}

void Dfa::set_initial(State q) {
  if (q >= state_count()) throw InputError("initial state out of range");
  initial_ = q;
}

State Dfa::run(std::string_view w, State from) const {
  State q = from;
  for (char c : w) q = next(q, alphabet_.index_of(c));
  return q;
}

Dfa minimize(const Dfa& d) {
  const auto k = d.alphabet().size();
  // Reachable states.
  std::vector<bool> reach(d.state_count(), false);
  std::vector<State> order{d.initial()};
  reach[d.initial()] = true;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (Letter a = 0; a < k; ++a) {
      State r = d.next(order[i], a);
      if (!reach[r]) {
        reach[r] = true;
        order.push_back(r);
      }
    }

  // Moore refinement over reachable states.
  std::vector<std::size_t> cls(d.state_count(), 0);
  for (auto q : order) cls[q] = d.accepting(q) ? 1 : 0;
  std::size_t classes = 0;
  for (;;) {
    std::map<std::vector<std::size_t>, std::size_t> sig;
    std::vector<std::size_t> next(d.state_count(), 0);
    for (auto q : order) {
      std::vector<std::size_t> key{cls[q]};
      for (Letter a = 0; a < k; ++a) key.push_back(cls[d.next(q, a)]);
      auto [it, fresh] = sig.emplace(std::move(key), sig.size());
      next[q] = it->second;
    }
    cls = std::move(next);
    if (sig.size() == classes) break;
    classes = sig.size();
  }

  // Canonical BFS numbering of the classes.
  std::vector<State> rename(classes, classes);
  std::vector<State> rep;
  rename[cls[d.initial()]] = 0;
  rep.push_back(d.initial());
  for (std::size_t i = 0; i < rep.size(); ++i)
    for (Letter a = 0; a < k; ++a) {
      auto c = cls[d.next(rep[i], a)];
      if (rename[c] == classes) {
        rename[c] = rep.size();
        rep.push_back(d.next(rep[i], a));
      }
    }
  Dfa m(d.alphabet(), rep.size(), 0);
  for (State q = 0; q < rep.size(); ++q) {
    m.set_accepting(q, d.accepting(rep[q]));
    for (Letter a = 0; a < k; ++a) m.set_next(q, a, rename[cls[d.next(rep[q], a)]]);
  }
  return m;
}

Dfa without_epsilon(const Dfa& d) {
  if (!d.accepting(d.initial())) return d;
  Dfa e(d.alphabet(), d.state_count() + 1, d.state_count());
  for (State q = 0; q < d.state_count(); ++q) {
    e.set_accepting(q, d.accepting(q));
    for (Letter a = 0; a < d.alphabet().size(); ++a) e.set_next(q, a, d.next(q, a));
  }
  for (Letter a = 0; a < d.alphabet().size(); ++a) e.set_next(d.state_count(), a, d.next(d.initial(), a));
  return minimize(e);
}

namespace {

bool combine(bool x, bool y, BoolOp op) {
  switch (op) {
    case BoolOp::And: return x && y;
    case BoolOp::Or: return x || y;
    case BoolOp::Minus: return x && !y;
    case BoolOp::Xor: return x != y;
  }
  return false;
}

void require_same_alphabet(const Dfa& a, const Dfa& b) {
  if (!(a.alphabet() == b.alphabet()))
    throw InputError("alphabet mismatch: {" + a.alphabet().letters() + "} vs {" + b.alphabet().letters() + "}");
}

// Structural product; also combines acceptance of the empty word.
Dfa raw_product(const Dfa& a, const Dfa& b, BoolOp op) {
  require_same_alphabet(a, b);
  const auto k = a.alphabet().size();
  std::map<std::pair<State, State>, State> ids;
  std::vector<std::pair<State, State>> pairs{{a.initial(), b.initial()}};
  ids.emplace(pairs[0], 0);
  std::vector<std::vector<State>> trans;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    trans.emplace_back(k);
    for (Letter c = 0; c < k; ++c) {
      std::pair<State, State> t{a.next(pairs[i].first, c), b.next(pairs[i].second, c)};
      auto [it, fresh] = ids.emplace(t, pairs.size());
      if (fresh) pairs.push_back(t);
      trans[i][c] = it->second;
    }
  }
  Dfa p(a.alphabet(), pairs.size(), 0);
  for (State q = 0; q < pairs.size(); ++q) {
    p.set_accepting(q, combine(a.accepting(pairs[q].first), b.accepting(pairs[q].second), op));
    for (Letter c = 0; c < k; ++c) p.set_next(q, c, trans[q][c]);
  }
  return p;
}

Dfa raw_complement(const Dfa& d) {
  Dfa c = d;
  for (State q = 0; q < d.state_count(); ++q) c.set_accepting(q, !d.accepting(q));
  return c;
}

Dfa single_letter_dfa(const Alphabet& alphabet, const std::vector<bool>& letters) {
  Dfa d(alphabet, 3, 0);
  for (Letter a = 0; a < alphabet.size(); ++a) {
    d.set_next(0, a, letters[a] ? 1 : 2);
    d.set_next(1, a, 2);
    d.set_next(2, a, 2);
  }
  d.set_accepting(1);
  return d;
}

// Language over all words (the empty word included).
Dfa compile_node(const Regex& r, const Alphabet& alphabet) {
  using K = RegexNode::Kind;
  switch (r->kind) {
    case K::Letter: {
      std::vector<bool> ls(alphabet.size(), false);
      ls[alphabet.index_of(r->letter)] = true;
      return single_letter_dfa(alphabet, ls);
    }
    case K::AnyLetter: return single_letter_dfa(alphabet, std::vector<bool>(alphabet.size(), true));
    case K::EmptySet: return Dfa(alphabet, 1, 0);
    case K::EmptyWord: {
      Dfa d(alphabet, 2, 0);
      for (Letter a = 0; a < alphabet.size(); ++a) {
        d.set_next(0, a, 1);
        d.set_next(1, a, 1);
      }
      d.set_accepting(0);
      return d;
    }
    case K::Union:
      return minimize(raw_product(compile_node(r->children[0], alphabet), compile_node(r->children[1], alphabet), BoolOp::Or));
    case K::Intersect:
      return minimize(
          raw_product(compile_node(r->children[0], alphabet), compile_node(r->children[1], alphabet), BoolOp::And));
    case K::Complement: return raw_complement(compile_node(r->children[0], alphabet));
    case K::Concat: {
      detail::NfaBuilder nfa(alphabet);
      auto a = nfa.embed(compile_node(r->children[0], alphabet));
      auto b = nfa.embed(compile_node(r->children[1], alphabet));
      return minimize(nfa.determinize(nfa.concat(a, b)));
    }
    case K::Star:
    case K::Plus: {
      detail::NfaBuilder nfa(alphabet);
      auto a = nfa.embed(compile_node(r->children[0], alphabet));
      return minimize(nfa.determinize(r->kind == K::Star ? nfa.star(a) : nfa.plus(a)));
    }
  }
  throw InternalError("unknown regex node");
}

}  // namespace

Dfa minimize_nonempty(const Dfa& d) {
  Dfa without = minimize(without_epsilon(d));
  // Same language plus ε: a fresh accepting copy of the initial state.
  const auto n = d.state_count();
  Dfa with(d.alphabet(), n + 1, n);
  for (State q = 0; q <= n; ++q) {
    const State from = q == n ? d.initial() : q;
    for (Letter a = 0; a < d.alphabet().size(); ++a) with.set_next(q, a, d.next(from, a));
    with.set_accepting(q, q == n || d.accepting(q));
  }
  with = minimize(with);
  return with.state_count() < without.state_count() ? with : without;
}

CompileResult compile(const Regex& ast, const Alphabet& alphabet) {
  Dfa full = compile_node(ast, alphabet);
  bool eps = full.accepting(full.initial());
  return {minimize_nonempty(full), eps};
}

CompileResult compile(std::string_view text, const Alphabet& alphabet) {
  return compile(parse_regex(text, alphabet), alphabet);
}

Dfa product(const Dfa& a, const Dfa& b, BoolOp op) {
  return minimize_nonempty(raw_product(a, b, op));
}

Dfa complement(const Dfa& d) { return minimize_nonempty(raw_complement(d)); }

namespace {

// Breadth-first search over non-empty words; returns the length-lex smallest
// word reaching a state satisfying `goal`.
template <class Goal>
std::optional<Word> bfs_nonempty(const Dfa& d, Goal goal) {
  const auto k = d.alphabet().size();
  std::vector<bool> seen(d.state_count(), false);
  std::deque<std::pair<State, Word>> queue;
  for (Letter a = 0; a < k; ++a) {
    State r = d.next(d.initial(), a);
    if (!seen[r]) {
      seen[r] = true;
      queue.emplace_back(r, Word(1, d.alphabet().at(a)));
    }
  }
  while (!queue.empty()) {
    auto [q, w] = std::move(queue.front());
    queue.pop_front();
    if (goal(q)) return w;
    for (Letter a = 0; a < k; ++a) {
      State r = d.next(q, a);
      if (!seen[r]) {
        seen[r] = true;
        queue.emplace_back(r, w + d.alphabet().at(a));
      }
    }
  }
  return std::nullopt;
}

}  // namespace

Equivalence equivalent(const Dfa& a, const Dfa& b) {
  require_same_alphabet(a, b);
  Dfa x = raw_product(a, b, BoolOp::Xor);
  auto w = bfs_nonempty(x, [&](State q) { return x.accepting(q); });
  return {!w.has_value(), w};
}

std::optional<Word> shortest_accepted(const Dfa& d) {
  return bfs_nonempty(d, [&](State q) { return d.accepting(q); });
}

bool accepts(const Dfa& d, std::string_view w) {
  if (w.empty()) throw InputError("the empty word is not a valid input: languages are sets of non-empty words");
  return d.accepting(d.run(w));
}

void for_each_word(const Alphabet& alphabet, std::size_t maxLen, const std::function<bool(const Word&)>& visit) {
  const auto k = alphabet.size();
  for (std::size_t len = 1; len <= maxLen; ++len) {
    std::vector<Letter> digits(len, 0);
    Word w(len, alphabet.at(0));
    bool more = true;
    while (more) {
      if (!visit(w)) return;
      // Odometer increment, last position fastest.
      more = false;
      for (std::size_t i = len; i-- > 0;) {
        if (++digits[i] < k) {
          w[i] = alphabet.at(digits[i]);
          more = true;
          break;
        }
        digits[i] = 0;
        w[i] = alphabet.at(0);
      }
    }
  }
}

std::vector<Word> enumerate_words(const Alphabet& alphabet, std::size_t maxLen) {
  std::vector<Word> out;
  for_each_word(alphabet, maxLen, [&](const Word& w) {
    out.push_back(w);
    return true;
  });
  return out;
}

std::vector<Word> factors_of_length(std::string_view u, std::size_t k) {
  std::vector<Word> out;
  if (k == 0 || u.size() < k) return out;
  for (std::size_t i = 0; i + k <= u.size(); ++i) out.emplace_back(u.substr(i, k));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace dotdepth
