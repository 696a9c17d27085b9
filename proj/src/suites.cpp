#include "dotdepth/suites.hpp"

#include <functional>
#include <map>
#include <sstream>

#include "dotdepth/corpus.hpp"

namespace dotdepth {

namespace {

using Reports = std::vector<SuiteReport>;

/// Every word over the elements of S with lengths in [lo, hi].
void for_each_element_word(std::size_t n, std::size_t lo, std::size_t hi,
                           const std::function<void(const ElementWord&)>& visit) {
  for (std::size_t len = lo; len <= hi; ++len) {
    ElementWord w(len, 0);
    for (;;) {
      visit(w);
      std::size_t i = len;
      while (i > 0 && w[i - 1] + 1 == n) w[--i] = 0;
      if (i == 0) break;
      ++w[i - 1];
    }
  }
}

std::string show(const FiniteSemigroup& s, const ElementWord& w) {
  std::string out;
  for (auto x : w) out += "[" + s.name(x) + "]";
  return out;
}

Reports lemma1(const SuiteOptions& o) {
  Reports out;
  for (const auto& [name, S] : suite_semigroups()) {
    if (S.size() > o.smallCap) continue;
    SuiteReport r{name, true, 0, {}};
    for_each_element_word(S.size(), S.size(), 6, [&](const ElementWord& w) {
      if (!r.passed) return;
      ++r.cases;
      auto p = stabilized_prefix(S, w);
      Element prefix = S.eval(std::span(w).first(p.length));
      if (p.length == 0 || p.length > S.size() || !is_idempotent(S, p.idempotent) ||
          S.mul(prefix, p.idempotent) != prefix) {
        r.passed = false;
        r.detail = "bad stabilized prefix for " + show(S, w);
      }
    });
    out.push_back(r);
  }
  return out;
}

Reports lemma2(const SuiteOptions&) {
  Reports out;
  for (const auto& [name, S] : suite_semigroups()) {
    auto r = suite_class_inclusions(S);
    r.name = name;
    out.push_back(r);
  }
  return out;
}

Reports lemma7(const SuiteOptions& o) {
  Reports out;
  for (const auto& [name, S] : suite_semigroups()) {
    if (S.size() > o.smallCap) continue;
    SuiteReport r{name, true, 0, {}};
    for_each_element_word(S.size(), 1, 6, [&](const ElementWord& w) {
      if (!r.passed) return;
      ++r.cases;
      auto f = stabilized_factorization(S, w);
      if (auto err = factorization_violation(S, w, f); !err.empty()) {
        r.passed = false;
        r.detail = show(S, w) + ": " + err;
      }
    });
    out.push_back(r);
  }
  return out;
}

template <typename Suite>
Reports guarded(const SuiteOptions& o, std::size_t cap, Suite suite) {
  Reports out;
  for (const auto& [name, S] : suite_semigroups()) {
    if (S.size() > std::min(cap, o.smallCap)) continue;
    try {
      auto r = suite(S);
      r.name = name;
      out.push_back(r);
    } catch (const PreconditionError&) {
      // The implication is only claimed inside the variety.
    }
  }
  return out;
}

Reports refinement(const SuiteOptions& o, std::vector<Anchor> flavors) {
  Reports out;
  for (const auto& lang : golden_corpus()) {
    auto data = syntactic(compile(lang.regex, Alphabet(lang.alphabet)).dfa);
    if (!check_knast(data.semigroup).holds) continue;
    for (auto flavor : flavors) {
      auto d = minimal_refining_degree(data, flavor, o.maxLen);
      std::ostringstream os;
      os << anchor_name(flavor) << ": d = " << d.degree << " (bound " << d.bound << ", " << d.buckets << " classes)";
      out.push_back({lang.name, d.withinBound, 1, os.str()});
    }
  }
  return out;
}

Reports lemma20(const SuiteOptions& o) {
  Rng rng(o.seed);
  const Alphabet ab("ab");
  SuiteReport r{"quotient", true, 0, {}};
  while (r.cases < 100 && r.passed) {
    auto p = random_monomial(rng, ab, 4, 3, Anchor::Both);
    // A word of P: blocks joined by random short gap words.
    Word w = p.blocks().empty() ? "" : p.blocks().front();
    for (std::size_t i = 1; i < p.blocks().size(); ++i) {
      auto fill = std::uniform_int_distribution<std::size_t>(0, 2)(rng);
      for (std::size_t k = 0; k < fill; ++k) w += ab.at(rng() % 2);
      w += p.blocks()[i];
    }
    if (w.size() < 2) continue;
    const auto cut = std::uniform_int_distribution<std::size_t>(1, w.size() - 1)(rng);
    const auto u = w.substr(0, cut), q = w.substr(cut);
    ++r.cases;
    auto pq = quotient_monomial(p, u, q);
    std::string problem;
    if (!member(pq, w)) problem = "uq not in P'";
    if (pq.degree() > p.degree() + q.size()) problem = "degree too large";
    for_each_word(ab, w.size() + 4, [&](const Word& x) {
      if (!problem.empty()) return false;
      if (member(pq, x) && (!member(p, x) || x.size() < q.size() || x.compare(x.size() - q.size(), q.size(), q) != 0))
        problem = "P' contains " + x + " outside (Pq^-1)q";
      return true;
    });
    if (!problem.empty()) {
      r.passed = false;
      r.detail = p.to_string() + ", u=" + u + ", q=" + q + " -> " + pq.to_string() + ": " + problem;
    }
  }
  return {r};
}

Reports roundtrip_logic(const SuiteOptions& o) {
  Rng rng(o.seed);
  const Alphabet ab("ab");
  SuiteReport a{"monomial->formula", true, 0, {}};
  const Anchor anchors[] = {Anchor::Both, Anchor::Left, Anchor::Right, Anchor::None};
  for (std::size_t i = 0; i < 50 && a.passed; ++i) {
    auto m = random_monomial(rng, ab, 4, 3, anchors[i % 4]);
    auto s = from_monomial(m);
    ++a.cases;
    for_each_word(ab, 8, [&](const Word& w) {
      if (eval(s, w) == member(m, w)) return true;
      a.passed = false;
      a.detail = m.to_string() + " disagrees on " + w;
      return false;
    });
  }
  SuiteReport b{"sentence->monomials", true, 0, {}};
  for (std::size_t i = 0; i < 20 && b.passed; ++i) {
    auto s = random_sentence(rng, ab, 3);
    auto ms = sigma1_to_monomials(s, ab);
    ++b.cases;
    for (const auto& m : ms)
      if (m.degree() > s.vars.size() + 2) {
        b.passed = false;
        b.detail = m.to_string() + " exceeds degree m+2";
      }
    for_each_word(ab, 8, [&](const Word& w) {
      bool any = std::any_of(ms.begin(), ms.end(), [&](const Monomial& m) { return member(m, w); });
      if (any == eval(s, w)) return true;
      b.passed = false;
      b.detail = to_string(Formula::leaf(s)) + " disagrees on " + w;
      return false;
    });
  }
  return {a, b};
}

Reports roundtrip_monomial(const SuiteOptions& o) {
  Rng rng(o.seed);
  const Alphabet ab("ab");
  SuiteReport dfa{"member-vs-dfa", true, 0, {}}, plus{"expand-plus", true, 0, {}}, bHalf{"b_half-of-monomial", true, 0, {}};
  const Anchor anchors[] = {Anchor::Both, Anchor::Left, Anchor::Right, Anchor::None};
  for (std::size_t i = 0; i < 40; ++i) {
    const Gap kind = i % 2 ? Gap::Plus : Gap::Star;
    auto m = random_monomial(rng, ab, 5, 3, anchors[(i / 2) % 4], kind);
    auto d = to_dfa(m, ab);
    ++dfa.cases;
    for_each_word(ab, 8, [&](const Word& w) {
      if (member(m, w) == accepts(d, w)) return true;
      dfa.passed = false;
      dfa.detail = m.to_string() + " on " + w;
      return false;
    });
    if (kind == Gap::Plus) {
      ++plus.cases;
      auto parts = expand_plus(m, ab);
      for_each_word(ab, 8, [&](const Word& w) {
        bool any = std::any_of(parts.begin(), parts.end(), [&](const Monomial& p) { return member(p, w); });
        if (any == member(m, w)) return true;
        plus.passed = false;
        plus.detail = m.to_string() + " on " + w;
        return false;
      });
    } else if (m.anchor() == Anchor::Both) {
      ++bHalf.cases;
      if (!check_b_half(syntactic(d).semigroup).holds) {
        bHalf.passed = false;
        bHalf.detail = m.to_string();
      }
    }
  }
  return {dfa, plus, bHalf};
}

Reports covers(const SuiteOptions&) {
  Reports out;
  for (const auto& lang : golden_corpus()) {
    auto report = classify(lang.regex, Alphabet(lang.alphabet));
    for (std::size_t i = 0; i < 4; ++i) {
      if (!report.fragments[i].definable) continue;
      const Anchor a = all_fragments()[i].anchor();
      auto c = cover(report.data, a);
      SuiteReport r{lang.name + " " + anchor_name(a), c.verifiedEquivalent, c.monomials.size(), {}};
      for (const auto& m : c.monomials)
        if (m.degree() >= c.boundDegree || m.block_count() > c.boundCount) {
          r.passed = false;
          r.detail = m.to_string() + " violates the bounds";
        }
      if (r.passed)
        r.detail = std::to_string(c.monomials.size()) + " monomials, bounds " + std::to_string(c.boundDegree) + "/" +
                   std::to_string(c.boundCount);
      out.push_back(r);
    }
  }
  return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"lemma1",  "lemma2",  "lemma7",          "lemma8",
                                              "lemma15", "lemma17", "lemma20",         "cor19",
                                              "lemma21", "lemma23", "roundtrip-logic", "roundtrip-monomial",
                                              "cover"};
  return names;
}

std::vector<SuiteReport> run_suite(const std::string& name, const SuiteOptions& o) {
  if (name == "lemma1") return lemma1(o);
  if (name == "lemma2") return lemma2(o);
  if (name == "lemma7") return lemma7(o);
  if (name == "lemma8") return guarded(o, o.smallCap, [](const FiniteSemigroup& s) { return suite_r_absorption(s); });
  if (name == "lemma15")
    return guarded(o, kDefaultFactorSuiteCap, [](const FiniteSemigroup& s) { return suite_factor_change(s); });
  if (name == "lemma17")
    return guarded(o, o.smallCap, [](const FiniteSemigroup& s) { return suite_knast_substitution(s); });
  if (name == "lemma20") return lemma20(o);
  if (name == "cor19") return refinement(o, {Anchor::Both});
  if (name == "lemma21") return refinement(o, {Anchor::Left, Anchor::Right});
  if (name == "lemma23") return refinement(o, {Anchor::None});
  if (name == "roundtrip-logic") return roundtrip_logic(o);
  if (name == "roundtrip-monomial") return roundtrip_monomial(o);
  if (name == "cover") return covers(o);
  throw InputError("unknown suite '" + name + "'");
}

}  // namespace dotdepth
