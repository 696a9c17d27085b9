#include <doctest.h>

#include <regex>

#include "dotdepth/automata.hpp"
#include "dotdepth/corpus.hpp"
#include "dotdepth/errors.hpp"
#include "oracles.hpp"

using namespace dotdepth;

namespace {
const Alphabet ab("ab");

Dfa dfa(std::string_view re) { return compile(re, ab).dfa; }

/// Translate the library regex syntax without '~' and '&' to ECMAScript.
std::regex ecma(std::string re) {
  std::string out;
  for (char c : re) out += c == '.' ? std::string("[ab]") : std::string(1, c);
  return std::regex(out);
}
}  // namespace

TEST_CASE("parse_regex reads the grammar") {
  using namespace regex;
  CHECK(same_tree(parse_regex("a.*", ab), concat(letter('a'), star(any()))));
  CHECK(same_tree(parse_regex("(ab)+", ab), plus(concat(letter('a'), letter('b')))));
  CHECK(same_tree(parse_regex("a|b", ab), alt(letter('a'), letter('b'))));
  CHECK(same_tree(parse_regex("~a", ab), complement(letter('a'))));
  CHECK(same_tree(parse_regex("[a.*&.*b]", ab),
                  intersect(concat(letter('a'), star(any())), concat(star(any()), letter('b')))));
}

TEST_CASE("parse_regex errors") {
  try {
    parse_regex("a(", ab);
    FAIL("expected a syntax error");
  } catch (const SyntaxError& e) {
    CHECK(e.offset() == 2);
  }
  CHECK_THROWS_AS(parse_regex("ac", ab), InputError);
  CHECK_THROWS_AS(parse_regex("a)", ab), SyntaxError);
  CHECK_THROWS_AS(parse_regex("", ab), SyntaxError);
}

TEST_CASE("compile drops the empty word") {
  auto r = compile(".*", ab);
  CHECK(r.epsilonRemoved);
  CHECK(r.dfa.state_count() == 1);
  CHECK(accepts(r.dfa, "a"));
  CHECK_FALSE(compile("a.*", ab).epsilonRemoved);
  CHECK(dfa("a.*").state_count() == 3);
  CHECK(dfa(".*ab.*").state_count() == 3);
}

TEST_CASE("accepts") {
  CHECK(accepts(dfa("a.*"), "ab"));
  CHECK(accepts(dfa("(ab)+"), "abab"));
  CHECK_FALSE(accepts(dfa("(ab)+"), "aab"));
  CHECK_THROWS_AS(accepts(dfa("a.*"), ""), InputError);
  CHECK_THROWS_AS(accepts(dfa("a.*"), "ac"), InputError);
}

TEST_CASE("equivalent") {
  CHECK(equivalent(dfa("a.*"), dfa("a.*|ab")).equal);
  auto e = equivalent(dfa("(ab)+"), dfa("a.*b"));
  CHECK_FALSE(e.equal);
  REQUIRE(e.counterexample);
  CHECK(e.counterexample->size() == 3);
  CHECK((*e.counterexample == "aab" || *e.counterexample == "abb"));
  auto d = dfa(".*aa.*");
  CHECK(equivalent(d, d).equal);
}

TEST_CASE("minimize") {
  // 0 -a-> 1, 0 -b-> 2, 1 and 2 equivalent accepting sinks, 3 reject sink, 4 unreachable.
  Dfa d(ab, 5, 0);
  d.set_next(0, 0, 1);
  d.set_next(0, 1, 3);
  d.set_next(1, 0, 2);
  d.set_next(1, 1, 2);
  d.set_next(2, 0, 1);
  d.set_next(2, 1, 1);
  d.set_next(3, 0, 3);
  d.set_next(3, 1, 3);
  d.set_next(4, 0, 4);
  d.set_next(4, 1, 4);
  d.set_accepting(1);
  d.set_accepting(2);
  auto m = minimize(d);
  CHECK(m.state_count() == 3);
  CHECK(equivalent(m, dfa("a.*")).equal);
  CHECK(minimize(m) == m);

  Dfa five(ab, 5, 0);  // 0 -a-> 1 -a-> {2,3} accept sinks, everything else to 4
  five.set_next(0, 0, 1);
  five.set_next(0, 1, 4);
  five.set_next(1, 0, 2);
  five.set_next(1, 1, 3);
  for (State q : {2, 3}) {
    five.set_next(q, 0, q);
    five.set_next(q, 1, q);
    five.set_accepting(q);
  }
  five.set_next(4, 0, 4);
  five.set_next(4, 1, 4);
  CHECK(minimize(five).state_count() == 4);
}

TEST_CASE("enumerate_words and factors") {
  CHECK(enumerate_words(ab, 1) == std::vector<Word>{"a", "b"});
  CHECK(enumerate_words(ab, 2) == std::vector<Word>{"a", "b", "aa", "ab", "ba", "bb"});
  CHECK(enumerate_words(Alphabet("a"), 3) == std::vector<Word>{"a", "aa", "aaa"});
  CHECK(factors_of_length("abab", 2) == std::vector<Word>{"ab", "ba"});
  CHECK(factors_of_length("aaa", 1) == std::vector<Word>{"a"});
  CHECK(factors_of_length("ab", 3).empty());
}

TEST_CASE("compiled DFAs agree with std::regex") {
  for (const char* re : {"a.*", ".*ab.*", "(ab)+", "a.*b", "(aa)+|b", "a(b|a)*a", "(a|bb)+"}) {
    auto d = dfa(re);
    auto r = ecma(re);
    for (const auto& w : oracle::words("ab", 8)) CHECK_MESSAGE(accepts(d, w) == std::regex_match(w, r), re << " on " << w);
  }
}

TEST_CASE("properties on random regexes") {
  Rng rng(7);
  for (int i = 0; i < 60; ++i) {
    const Alphabet gamma(i % 3 == 0 ? "abc" : "ab");
    auto ast = random_regex(rng, gamma, 10);
    auto d = compile(ast, gamma).dfa;
    auto again = compile(parse_regex(to_string(ast), gamma), gamma).dfa;
    CHECK(equivalent(d, again).equal);
    CHECK(minimize(d) == d);
    CHECK(equivalent(complement(complement(d)), d).equal);
    auto other = compile(random_regex(rng, gamma, 6), gamma).dfa;
    auto conj = product(d, other, BoolOp::And), disj = product(d, other, BoolOp::Or);
    auto diff = product(d, other, BoolOp::Minus), sym = product(d, other, BoolOp::Xor);
    for (const auto& w : enumerate_words(gamma, 6)) {
      const bool x = accepts(d, w), y = accepts(other, w);
      CHECK(accepts(conj, w) == (x && y));
      CHECK(accepts(disj, w) == (x || y));
      CHECK(accepts(diff, w) == (x && !y));
      CHECK(accepts(sym, w) == (x != y));
      CHECK(accepts(complement(d), w) == !x);
    }
  }
}

TEST_CASE("DFA JSON round trip") {
  auto d = dfa("(ab)+");
  CHECK(dfa_from_json(dfa_to_json(d)) == d);
  CHECK_THROWS_AS(dfa_from_json("{bad"), InputError);
  CHECK_THROWS_AS(dfa_from_json(R"({"alphabet":["a"],"states":1,"initial":3,"accepting":[],"transitions":{"0":{"a":0}}})"),
                  InputError);
}
