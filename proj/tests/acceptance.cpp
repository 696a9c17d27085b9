// Acceptance runner: one pass/fail line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "dotdepth/classifier.hpp"
#include "dotdepth/corpus.hpp"
#include "dotdepth/errors.hpp"
#include "dotdepth/suites.hpp"
#include "golden.hpp"
#include "oracles.hpp"

using namespace dotdepth;

namespace {

const Alphabet ab("ab");
const Anchor kAnchors[] = {Anchor::Both, Anchor::Left, Anchor::Right, Anchor::None};

struct Outcome {
  bool ok = true;
  std::string note;
  void fail(const std::string& why) {
    if (ok) note = why;
    ok = false;
  }
};

bool ends_with(const std::string& w, const std::string& q) {
  return w.size() >= q.size() && w.compare(w.size() - q.size(), q.size(), q) == 0;
}

bool eval_combination(const Combination& c, const std::string& w) {
  using K = Combination::Kind;
  switch (c.kind) {
    case K::True: return true;
    case K::False: return false;
    case K::Member: return oracle::regex_member(oracle::monomial_regex(c.monomial.to_string()), w);
    case K::Not: return !eval_combination(c.children[0], w);
    case K::And:
      for (const auto& x : c.children)
        if (!eval_combination(x, w)) return false;
      return true;
    case K::Or:
      for (const auto& x : c.children)
        if (eval_combination(x, w)) return true;
      return false;
  }
  return false;
}

const oracle::Language& oracle_lang(const std::string& name) {
  static const auto all = oracle::corpus();
  for (const auto& l : all)
    if (l.name == name) return l;
  throw std::logic_error(name);
}

void suites(Outcome& o, std::initializer_list<const char*> names) {
  for (const char* name : names)
    for (const auto& r : run_suite(name, {}))
      if (!r.passed) o.fail(std::string(name) + "/" + r.name + ": " + r.detail);
}

// 1. Classification matrix
void matrix(Outcome& o) {
  for (const auto& row : golden::table1()) {
    auto r = classify(row.regex, ab);
    oracle::Synt s(oracle_lang(row.name).in, "ab", 2 * r.data.sourceDfa.state_count());
    const auto v = s.verdicts();
    for (std::size_t i = 0; i < 8; ++i) {
      if (r.fragments[i].definable != row.expected[i]) o.fail(row.name + " " + all_fragments()[i].key() + " classify");
      if (v[i] != row.expected[i]) o.fail(row.name + " " + all_fragments()[i].key() + " oracle");
    }
  }
}

// 2. Cover bounds for both-anchored descriptions
void cover_bounds(Outcome& o) {
  for (const auto& g : golden_corpus()) {
    auto data = syntactic(compile(g.regex, ab).dfa);
    if (!check_b_half(data.semigroup).holds) continue;
    const auto n = data.semigroup.size();
    auto c = cover(data, Anchor::Both);
    if (!equivalent(union_dfa(c.monomials, ab), data.sourceDfa).equal) o.fail(g.name + ": cover not equivalent");
    for (const auto& m : c.monomials) {
      if (m.degree() >= 2 * n * n * n + n * n) o.fail(g.name + ": degree " + m.to_string());
      if (m.block_count() > n * n) o.fail(g.name + ": blocks " + m.to_string());
    }
  }
}

// 3. Class inclusions
void inclusions(Outcome& o) {
  for (const auto& [name, s] : suite_semigroups()) {
    InclusionVerdicts v{};
    if (!suite_class_inclusions(s, &v).passed) o.fail(name + ": inclusion broken");
    if (name == "(ab)+" && !(!v.bHalf && v.knast && v.lr)) o.fail("(ab)+ verdicts");
    if (name == "(aa)+" && (v.bHalf || v.knast || v.lr)) o.fail("(aa)+ verdicts");
  }
}

// 6. Logic round trips, checked against std::regex and plain enumeration
void logic_roundtrips(Outcome& o) {
  Rng rng(61);
  const auto ws = oracle::words("ab", 8);
  for (int i = 0; i < 50; ++i) {
    auto m = random_monomial(rng, ab, 4, 3, kAnchors[i % 4]);
    auto s = from_monomial(m);
    auto re = oracle::monomial_regex(m.to_string());
    for (const auto& w : ws)
      if (eval(s, w) != oracle::regex_member(re, w)) {
        o.fail("from_monomial " + m.to_string() + " on " + w);
        break;
      }
  }
  for (int i = 0; i < 20; ++i) {
    auto s = random_sentence(rng, ab, 3);
    auto ms = sigma1_to_monomials(s, ab);
    std::vector<std::regex> res;
    for (const auto& m : ms) {
      if (m.degree() > s.vars.size() + 2) o.fail("degree of " + m.to_string());
      res.push_back(oracle::monomial_regex(m.to_string()));
    }
    for (const auto& w : ws) {
      bool in = false;
      for (const auto& re : res) in = in || oracle::regex_member(re, w);
      if (in != eval(s, w)) {
        o.fail("sigma1_to_monomials " + to_string(Formula::leaf(s)) + " on " + w);
        break;
      }
    }
  }
}

// 7. Quotient monomials
void quotients(Outcome& o) {
  Rng rng(71);
  int cases = 0;
  while (cases < 100) {
    auto p = random_monomial(rng, ab, 4, 3, kAnchors[cases % 4]);
    auto in = oracle::words("ab", 7, 2);
    std::erase_if(in, [&](const std::string& w) { return !member(p, w); });
    if (in.empty()) continue;
    ++cases;
    const auto w = in[rng() % in.size()];
    const auto cut = 1 + rng() % (w.size() - 1);
    const auto u = w.substr(0, cut), q = w.substr(cut);
    auto pq = quotient_monomial(p, u, q);
    auto re = oracle::monomial_regex(p.to_string()), reQ = oracle::monomial_regex(pq.to_string());
    const auto tag = p.to_string() + " u=" + u + " q=" + q;
    if (!oracle::regex_member(reQ, w)) o.fail(tag + ": uq not in P'");
    if (pq.degree() > p.degree() + q.size()) o.fail(tag + ": degree");
    for (const auto& x : oracle::words("ab", w.size() + 4))
      if (oracle::regex_member(reQ, x) && !(oracle::regex_member(re, x) && ends_with(x, q))) {
        o.fail(tag + ": P' not inside P on " + x);
        break;
      }
  }
}

// 8. Both-anchored monomials satisfy x^w y x^w <= x^w
void monomial_b_half(Outcome& o) {
  Rng rng(81);
  for (int i = 0; i < 30; ++i) {
    auto m = random_monomial(rng, ab, 6, 3, Anchor::Both);
    if (!check_b_half(syntactic(to_dfa(m, ab)).semigroup).holds) o.fail(m.to_string());
  }
}

// 9. Boolean combinations at caps (4, 4)
void combinations(Outcome& o) {
  for (const char* name : {"(ab)+", "G*abG*"}) {
    const auto& l = oracle_lang(name);
    auto data = syntactic(compile(l.regex, ab).dfa);
    auto d = boolean_combination(data, {Anchor::Both, 4, 4, Gap::Star});
    if (!d.verified) o.fail(std::string(name) + ": not verified");
    for (const auto& w : oracle::words("ab", 10))
      if (eval_combination(d.combination, w) != l.in(w)) {
        o.fail(std::string(name) + ": differs on " + w);
        break;
      }
  }
}

struct Criterion {
  int id;
  const char* title;
  double limitSeconds;  // 0: no limit
  std::function<void(Outcome&)> run;
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "classification matrix", 5, matrix},
      {2, "cover bounds", 30, cover_bounds},
      {3, "class inclusions", 0, inclusions},
      {4, "identity suites", 60, [](Outcome& o) { suites(o, {"lemma1", "lemma7", "lemma8", "lemma15", "lemma17"}); }},
      {5, "signature refinement bounds", 120, [](Outcome& o) { suites(o, {"cor19", "lemma21", "lemma23"}); }},
      {6, "logic round trips", 120, logic_roundtrips},
      {7, "quotient monomials", 0, quotients},
      {8, "both-anchored monomials in B_HALF", 0, monomial_b_half},
      {9, "boolean combinations", 60, combinations},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limitSeconds > 0 && secs > c.limitSeconds) {
      std::ostringstream os;
      os << "over the " << c.limitSeconds << " s limit";
      o.fail(os.str());
    }
    std::printf("%s criterion %d: %s (%.2f s)%s%s\n", o.ok ? "PASS" : "FAIL", c.id, c.title, secs,
                o.ok ? "" : " - ", o.note.c_str());
    std::fflush(stdout);
    if (!o.ok) ++failed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed, std::size(criteria));
  return failed ? 1 : 0;
}
