#include <doctest.h>

#include <set>

#include "dotdepth/corpus.hpp"
#include "dotdepth/errors.hpp"
#include "dotdepth/signatures.hpp"
#include "oracles.hpp"

using namespace dotdepth;

namespace {
const Alphabet ab("ab");
SyntacticData synt(std::string_view re) { return syntactic(compile(re, ab).dfa); }
Monomial M(std::string_view text) { return parse_monomial(text); }

// Every shape-conforming monomial text, checked against w with std::regex.
std::set<std::string> brute_signature(const std::string& w, Anchor flavor, std::size_t degreeCap,
                                      std::size_t blockCap, Gap kind) {
  const std::string g = kind == Gap::Star ? "<*>" : "<+>";
  const bool pinL = flavor == Anchor::Both || flavor == Anchor::Left;
  const bool pinR = flavor == Anchor::Both || flavor == Anchor::Right;
  std::set<std::string> out;
  auto consider = [&](const std::string& text) {
    if (oracle::regex_member(oracle::monomial_regex(text), w)) out.insert(M(text).to_string());
  };
  consider(g);
  std::vector<std::string> blocks;
  std::function<void(std::size_t)> rec = [&](std::size_t room) {
    if (!blocks.empty()) {
      for (bool l : {false, true})
        for (bool r : {false, true}) {
          if ((l && !pinL) || (r && !pinR)) continue;
          std::string text = l ? "" : g;
          for (std::size_t i = 0; i < blocks.size(); ++i) {
            if (i) text += " " + g + " ";
            text += " \"" + blocks[i] + "\" ";
          }
          if (!r) text += g;
          consider(text);
        }
    }
    if (blocks.size() == blockCap) return;
    for (const auto& b : oracle::words("ab", room)) {
      blocks.push_back(b);
      rec(room - b.size());
      blocks.pop_back();
    }
  };
  rec(degreeCap);
  return out;
}

std::set<std::string> texts(const std::vector<Monomial>& ms) {
  std::set<std::string> out;
  for (const auto& m : ms) out.insert(m.to_string());
  return out;
}

bool evaluate(const Combination& c, const std::string& w) {
  using K = Combination::Kind;
  switch (c.kind) {
    case K::True: return true;
    case K::False: return false;
    case K::Member: return oracle::regex_member(oracle::monomial_regex(c.monomial.to_string()), w);
    case K::Not: return !evaluate(c.children[0], w);
    case K::And:
      for (const auto& x : c.children)
        if (!evaluate(x, w)) return false;
      return true;
    case K::Or:
      for (const auto& x : c.children)
        if (evaluate(x, w)) return true;
      return false;
  }
  return false;
}

void check_description(const BooleanDescription& d, const oracle::Pred& in, std::size_t maxLen) {
  for (const auto& w : oracle::words("ab", maxLen)) CHECK_MESSAGE(evaluate(d.combination, w) == in(w), w);
}

const oracle::Language& lang(const std::string& name) {
  static const auto all = oracle::corpus();
  for (const auto& l : all)
    if (l.name == name) return l;
  throw std::logic_error(name);
}
}  // namespace

TEST_CASE("signature examples") {
  const FamilySpec none{Anchor::None, 2, 2, Gap::Star};
  auto sig = texts(signature("ab", none));
  CHECK(sig == std::set<std::string>{"<*>", "<*> \"a\" <*>", "<*> \"b\" <*>", "<*> \"ab\" <*>",
                                     "<*> \"a\" <*> \"b\" <*>"});
  auto other = texts(signature("aab", none));
  CHECK(other != sig);
  CHECK(other.count("<*> \"aa\" <*>"));
  CHECK(texts(signature("abba", {Anchor::Both, 0, 0, Gap::Star})) == std::set<std::string>{"<*>"});
}

TEST_CASE("signature agrees with brute-force enumeration") {
  const Anchor flavors[] = {Anchor::Both, Anchor::Left, Anchor::Right, Anchor::None};
  for (auto kind : {Gap::Star, Gap::Plus})
    for (auto flavor : flavors)
      for (const auto& w : oracle::words("ab", 5))
        for (std::size_t d = 0; d <= 3; ++d)
          for (std::size_t k = 1; k <= 2; ++k) {
            const FamilySpec spec{flavor, d, k, kind};
            auto got = signature(w, spec);
            INFO(w << " " << anchor_name(flavor) << " " << d << " " << k);
            CHECK(texts(got) == brute_signature(w, flavor, d, k, kind));
            for (const auto& m : got) CHECK(in_family(m, spec));
          }
}

TEST_CASE("refine_check") {
  auto top = synt(".+");
  for (auto flavor : {Anchor::Both, Anchor::Left, Anchor::Right, Anchor::None})
    CHECK(refine_check(top, {flavor, 0, 0, Gap::Star}, 4).refines);

  auto d = synt(".*ab.*");
  CHECK(refine_check(d, {Anchor::Both, 6, 4, Gap::Star}, 7).refines);
  auto r = refine_check(d, {Anchor::Both, 1, 1, Gap::Star}, 4);
  CHECK_FALSE(r.refines);
  REQUIRE(r.witness);
  const auto& [u, v] = *r.witness;
  CHECK(d.eval(u) != d.eval(v));
  CHECK(texts(signature(u, {Anchor::Both, 1, 1, Gap::Star})) == texts(signature(v, {Anchor::Both, 1, 1, Gap::Star})));

  CHECK_THROWS_AS(refine_check(synt("(aa)+"), {Anchor::Both, 2, 2, Gap::Star}, 4), PreconditionError);
}

TEST_CASE("refinement is monotone in the caps") {
  auto d = synt("a.*b");
  bool before = false;
  for (std::size_t cap = 0; cap <= 5; ++cap) {
    const bool now = refine_check(d, {Anchor::Both, cap, cap, Gap::Star}, 6).refines;
    if (before) CHECK(now);
    before = now;
  }
  CHECK(before);
}

TEST_CASE("minimal_refining_degree") {
  auto top = minimal_refining_degree(synt(".+"), Anchor::Both, 6);
  CHECK(top.degree == 0);

  auto left = minimal_refining_degree(synt("a.*"), Anchor::Both, 7);
  CHECK(left.bound == 16);
  CHECK(left.degree < 16);
  CHECK(left.withinBound);

  auto d = synt(".*ab.*");
  auto none = minimal_refining_degree(d, Anchor::None, 7);
  CHECK(none.bound == 192);
  CHECK(none.degree < 192);
  CHECK(refine_check(d, {Anchor::None, none.degree, none.blockCap, Gap::Star}, 7).refines);
  if (none.degree > 0)
    CHECK_FALSE(refine_check(d, {Anchor::None, none.degree - 1, none.degree - 1, Gap::Star}, 7).refines);
}

TEST_CASE("boolean_combination examples") {
  auto top = boolean_combination(synt(".+"), {Anchor::None, 0, 0, Gap::Star});
  CHECK(top.verified);
  CHECK(top.combination.kind == Combination::Kind::True);

  auto abPlus = boolean_combination(synt("(ab)+"), {Anchor::Both, 2, 2, Gap::Star});
  CHECK(abPlus.verified);
  check_description(abPlus, lang("(ab)+").in, 10);

  auto left = boolean_combination(synt("a.*"), {Anchor::Left, 1, 1, Gap::Star});
  CHECK(left.verified);
  check_description(left, lang("aG*").in, 10);
}

TEST_CASE("boolean_combination on the corpus") {
  for (const auto& l : oracle::corpus()) {
    auto d = synt(l.regex);
    auto desc = boolean_combination(d, {Anchor::Both, 3, 3, Gap::Star});
    INFO(l.name);
    if (desc.verified) {
      CHECK_FALSE(desc.witness.has_value());
      check_description(desc, l.in, 9);
    } else {
      REQUIRE(desc.witness);
      CHECK(evaluate(desc.combination, *desc.witness) != l.in(*desc.witness));
    }
  }
  // Not Knast: no family can describe (aa)+.
  auto aa = boolean_combination(synt("(aa)+"), {Anchor::Both, 4, 4, Gap::Star});
  CHECK_FALSE(aa.verified);
  REQUIRE(aa.witness);
}
