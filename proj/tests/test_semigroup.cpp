#include <doctest.h>

#include "dotdepth/corpus.hpp"
#include "dotdepth/errors.hpp"
#include "dotdepth/semigroup.hpp"
#include "oracles.hpp"

using namespace dotdepth;

namespace {
const Alphabet ab("ab");

SyntacticData synt(std::string_view re) { return syntactic(compile(re, ab).dfa); }

Element el(const SyntacticData& d, std::string_view name) {
  auto x = d.semigroup.find(name);
  REQUIRE(x.has_value());
  return *x;
}

std::vector<std::string> names_of(const FiniteSemigroup& s, const std::vector<Element>& xs) {
  std::vector<std::string> out;
  for (auto x : xs) out.push_back(s.name(x));
  std::sort(out.begin(), out.end());
  return out;
}

using V = std::vector<std::string>;
}  // namespace

TEST_CASE("syntactic semigroup of aG*") {
  auto d = synt("a.*");
  const auto& S = d.semigroup;
  CHECK(S.size() == 2);
  CHECK(names_of(S, {0, 1}) == V{"a", "b"});
  const auto a = el(d, "a"), b = el(d, "b");
  CHECK(S.mul(a, b) == a);
  CHECK(S.mul(b, a) == b);
  CHECK(names_of(S, d.image_of_language()) == V{"a"});
  CHECK(names_of(S, idempotents(S)) == V{"a", "b"});
}

TEST_CASE("syntactic semigroup of G*abG*") {
  auto d = synt(".*ab.*");
  const auto& S = d.semigroup;
  CHECK(S.size() == 4);
  CHECK(names_of(S, {0, 1, 2, 3}) == V{"a", "ab", "b", "ba"});
  const auto z = el(d, "ab");
  for (Element x = 0; x < S.size(); ++x) {
    CHECK(S.mul(x, z) == z);
    CHECK(S.mul(z, x) == z);
  }
  CHECK(d.eval("aba") == z);
  CHECK(d.eval("bab") == z);
  CHECK(names_of(S, d.image_of_language()) == V{"ab"});
  CHECK(names_of(S, idempotents(S)) == V{"a", "ab", "b"});
  CHECK(omega_power(S, el(d, "ba")) == z);
  CHECK(omega_power(S, el(d, "a")) == el(d, "a"));
  // [ab] is the minimum of the order
  for (Element x = 0; x < S.size(); ++x) CHECK(S.leq(z, x));
}

TEST_CASE("trivial semigroups") {
  for (const char* re : {".+", "[a&b]"}) {
    auto d = synt(re);
    CHECK(d.semigroup.size() == 1);
    CHECK(d.semigroup.order() == Relation(1, true));
    CHECK(idempotents(d.semigroup).size() == 1);
    auto g = green(d.semigroup);
    CHECK(g.classesR.size() == 1);
    CHECK(g.classesL.size() == 1);
    CHECK(g.classesJ.size() == 1);
  }
  CHECK(synt(".+").image_of_language().size() == 1);
  CHECK(synt("[a&b]").image_of_language().empty());
}

TEST_CASE("finite language L = G") {
  auto d = synt(".");
  CHECK(d.semigroup.size() == 2);
  CHECK(d.eval("a") == d.eval("b"));
  CHECK(d.in_image(d.eval("b")));
  CHECK_FALSE(d.in_image(d.eval("ab")));
}

TEST_CASE("cyclic group") {
  auto z2 = cyclic_group(2);
  CHECK(omega_power(z2, 1) == 0);
  CHECK(idempotents(z2) == std::vector<Element>{0});
  auto g = green(z2);
  CHECK(g.classesJ.size() == 1);
  CHECK(z2.associativity_violation() == std::nullopt);
}

TEST_CASE("order ideals and class unions") {
  auto d = synt("a.*");
  auto g = green(d.semigroup);
  const auto a = el(d, "a"), b = el(d, "b");
  std::vector<bool> onlyA(2, false);
  onlyA[a] = true;
  CHECK_FALSE(order_ideal_check(onlyA, g.leqR).has_value());
  auto v = order_ideal_check(onlyA, g.leqJ);
  REQUIRE(v);
  CHECK(v->below == b);
  CHECK(v->above == a);
  CHECK_FALSE(order_ideal_check({true, true}, g.leqJ).has_value());

  CHECK_FALSE(union_of_classes_check(onlyA, g.classesR).has_value());
  auto c = union_of_classes_check(onlyA, g.classesL);
  REQUIRE(c);
  CHECK(c->cls.size() == 2);
  CHECK_FALSE(union_of_classes_check({false, false}, g.classesL).has_value());
}

TEST_CASE("stabilized prefix") {
  FiniteSemigroup one(1, {0});
  auto p = stabilized_prefix(one, std::vector<Element>{0});
  CHECK(p.length == 1);
  CHECK(p.idempotent == 0);

  auto d = synt("a.*");
  // [b][a] = [b] and [b][b] = [b]: both idempotents stabilize the prefix [b].
  auto q = stabilized_prefix(d.semigroup, d.images("ba"));
  CHECK(q.length == 1);
  CHECK(d.semigroup.mul(el(d, "b"), q.idempotent) == el(d, "b"));

  auto e = synt(".*ab.*");
  auto r = stabilized_prefix(e.semigroup, e.images("baba"));
  CHECK(r.length == 1);
  CHECK(r.idempotent == el(e, "b"));

  CHECK_THROWS_AS(stabilized_prefix(e.semigroup, e.images("ab")), PreconditionError);
}

TEST_CASE("stabilized factorization examples") {
  FiniteSemigroup one(1, {0});
  const std::vector<Element> w1{0};
  auto f = stabilized_factorization(one, w1);
  CHECK(f.m() == 0);
  CHECK(f.tail == 1);
  CHECK(factorization_violation(one, w1, f).empty());

  auto d = synt("a.*");
  auto w = d.images("ab");
  auto g = stabilized_factorization(d.semigroup, w);
  CHECK(g.m() <= 2);
  CHECK(factorization_violation(d.semigroup, w, g).empty());

  // Null semigroup {a, 0}: no idempotent stabilizes [a], so m = 0 and the
  // whole word is the tail.
  FiniteSemigroup null(2, {1, 1, 1, 1}, {"a", "0"});
  const std::vector<Element> wa{0};
  auto h = stabilized_factorization(null, wa);
  CHECK(h.m() == 0);
  CHECK(h.tail == 1);
}

TEST_CASE("stabilized factorization invariants, exhaustive") {
  for (const auto& [name, S] : suite_semigroups()) {
    if (S.size() > 4) continue;
    std::vector<Element> w;
    std::function<void(std::size_t)> rec = [&](std::size_t left) {
      if (!w.empty()) {
        auto f = stabilized_factorization(S, w);
        CHECK_MESSAGE(factorization_violation(S, w, f).empty(), name);
      }
      if (left == 0) return;
      for (Element x = 0; x < S.size(); ++x) {
        w.push_back(x);
        rec(left - 1);
        w.pop_back();
      }
    };
    rec(6);
  }
}

TEST_CASE("transition semigroup matches the context oracle") {
  for (const auto& lang : oracle::corpus()) {
    auto d = synt(lang.regex);
    const auto& S = d.semigroup;
    oracle::Synt o(lang.in, "ab", 2 * d.sourceDfa.state_count());
    INFO(lang.name);
    REQUIRE(o.size() == static_cast<int>(S.size()));
    // The map oracle element -> library element via representatives is a
    // bijection preserving product, order, image and Green preorders.
    std::vector<Element> to(o.size());
    std::set<Element> hit;
    for (int i = 0; i < o.size(); ++i) {
      to[i] = d.eval(o.rep[i]);
      hit.insert(to[i]);
    }
    CHECK(hit.size() == S.size());
    auto g = green(S);
    for (int i = 0; i < o.size(); ++i) {
      CHECK(d.in_image(to[i]) == o.in_image(i));
      for (int j = 0; j < o.size(); ++j) {
        CHECK(to[o.mul(i, j)] == S.mul(to[i], to[j]));
        CHECK(S.leq(to[i], to[j]) == o.leq(i, j));
        CHECK(g.leqR(to[i], to[j]) == o.leqR(i, j));
        CHECK(g.leqL(to[i], to[j]) == o.leqL(i, j));
        CHECK(g.leqJ(to[i], to[j]) == o.leqJ(i, j));
      }
    }
  }
}

TEST_CASE("semigroup properties on random languages") {
  Rng rng(11);
  for (int i = 0; i < 40; ++i) {
    auto dfa = compile(random_regex(rng, ab, 9), ab).dfa;
    std::optional<SyntacticData> maybe;
    try {
      maybe = syntactic(dfa, 200);
    } catch (const ResourceError&) {
      continue;
    }
    const auto& d = *maybe;
    const auto& S = d.semigroup;
    CHECK_FALSE(S.associativity_violation().has_value());
    CHECK(S.order_is_compatible());
    CHECK(S.order() == syntactic_order(d));
    for (const auto& w : enumerate_words(ab, 8)) CHECK(d.in_image(d.eval(w)) == accepts(dfa, w));
    for (Element x = 0; x < S.size(); ++x) {
      const Element e = omega_power(S, x);
      CHECK(is_idempotent(S, e));
      CHECK(d.eval(S.name(x)) == x);
    }
    auto g = green(S);
    for (const auto* rel : {&g.leqR, &g.leqL, &g.leqJ}) {
      CHECK(rel->is_reflexive());
      CHECK(rel->is_transitive());
    }
    for (Element x = 0; x < S.size(); ++x)
      for (Element y = 0; y < S.size(); ++y) {
        if (g.leqR(x, y) || g.leqL(x, y)) CHECK(g.leqJ(x, y));
      }
  }
}

TEST_CASE("semigroup cap") {
  CHECK_THROWS_AS(syntactic(compile("(aaaaaaa)+", Alphabet("a")).dfa, 3), ResourceError);
}
