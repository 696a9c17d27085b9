#include "dotdepth/classifier.hpp"

#include <algorithm>
#include <sstream>

namespace dotdepth {

std::string FragmentId::key() const {
  std::string k = quantifier == Quantifier::Sigma1 ? "S1[<,+1" : "BS1[<,+1";
  if (min) k += ",min";
  if (max) k += ",max";
  return k + "]";
}

Anchor FragmentId::anchor() const {
  if (min && max) return Anchor::Both;
  if (min) return Anchor::Left;
  if (max) return Anchor::Right;
  return Anchor::None;
}

const std::array<FragmentId, 8>& all_fragments() {
  static const std::array<FragmentId, 8> ids{{
      {Quantifier::Sigma1, true, true},
      {Quantifier::Sigma1, true, false},
      {Quantifier::Sigma1, false, true},
      {Quantifier::Sigma1, false, false},
      {Quantifier::BSigma1, true, true},
      {Quantifier::BSigma1, true, false},
      {Quantifier::BSigma1, false, true},
      {Quantifier::BSigma1, false, false},
  }};
  return ids;
}

FragmentId parse_fragment(std::string_view key) {
  for (const auto& id : all_fragments())
    if (id.key() == key) return id;
  if (key == "S1[<]" || key == "BS1[<]")
    throw InputError("fragment " + std::string(key) + " (without +1) is not implemented");
  throw InputError("unknown fragment '" + std::string(key) + "'; expected e.g. S1[<,+1,min] or BS1[<,+1]");
}

namespace {

std::string bracket(const FiniteSemigroup& s, Element x) { return "[" + s.name(x) + "]"; }

const char* relation_name(Anchor a) {
  switch (a) {
    case Anchor::Left: return "R";
    case Anchor::Right: return "L";
    default: return "J";
  }
}

const Relation& preorder_for(const GreenStructure& g, Anchor a) {
  return a == Anchor::Left ? g.leqR : a == Anchor::Right ? g.leqL : g.leqJ;
}

const std::vector<std::vector<Element>>& classes_for(const GreenStructure& g, Anchor a) {
  return a == Anchor::Left ? g.classesR : a == Anchor::Right ? g.classesL : g.classesJ;
}

std::string describe(const FiniteSemigroup& s, const EquationWitness& w) {
  std::ostringstream os;
  os << equation_name(w.equation) << " fails at";
  for (const auto& [var, x] : w.assignment) os << ' ' << var << '=' << bracket(s, x);
  os << ": " << bracket(s, w.lhs) << (w.equation == Equation::BHalf ? " is not <= " : " != ") << bracket(s, w.rhs);
  return os.str();
}

}  // namespace

bool FragmentVerdict::evidence_revalidates(const SyntacticData& data, const GreenStructure& g) const {
  if (definable) return true;
  const auto& S = data.semigroup;
  const Anchor a = id.anchor();
  if (equation) return !equation->holds && revalidate(S, *equation);
  if (ideal) return preorder_for(g, a)(ideal->below, ideal->above) && data.in_image(ideal->above) && !data.in_image(ideal->below);
  if (split) {
    const Relation& pre = preorder_for(g, a);
    for (auto x : split->cls)
      for (auto y : split->cls)
        if (!pre(x, y)) return false;
    auto has = [&](Element x) { return std::find(split->cls.begin(), split->cls.end(), x) != split->cls.end(); };
    return has(split->inside) && has(split->outside) && data.in_image(split->inside) && !data.in_image(split->outside);
  }
  return false;
}

const FragmentVerdict& ClassificationReport::verdict(const FragmentId& id) const {
  for (const auto& v : fragments)
    if (v.id == id) return v;
  throw InputError("unknown fragment " + id.key());
}

std::vector<std::string> ClassificationReport::monotonicity_violations() const {
  std::vector<std::string> out;
  auto check = [&](const FragmentId& small, const FragmentId& big) {
    if (verdict(small).definable && !verdict(big).definable)
      out.push_back(small.key() + " definable but " + big.key() + " is not");
  };
  for (auto q : {Quantifier::Sigma1, Quantifier::BSigma1}) {
    check({q, false, false}, {q, true, false});
    check({q, false, false}, {q, false, true});
    check({q, true, false}, {q, true, true});
    check({q, false, true}, {q, true, true});
  }
  for (bool mn : {false, true})
    for (bool mx : {false, true}) check({Quantifier::Sigma1, mn, mx}, {Quantifier::BSigma1, mn, mx});
  return out;
}

ClassificationReport classify(const Dfa& dfa, std::string language, bool epsilonRemoved, std::size_t semigroupCap) {
  ClassificationReport r{std::move(language), epsilonRemoved, syntactic(without_epsilon(dfa), semigroupCap), {}, {}};
  r.green = green(r.data.semigroup);
  const auto& S = r.data.semigroup;
  const auto& g = r.green;

  const auto bHalf = check_b_half(S);
  const auto knast = check_knast(S);
  for (std::size_t i = 0; i < 8; ++i) {
    FragmentVerdict v;
    v.id = all_fragments()[i];
    const Anchor a = v.id.anchor();
    const auto& base = v.id.quantifier == Quantifier::Sigma1 ? bHalf : knast;
    if (!base.holds) {
      v.definable = false;
      v.equation = base.witness;
      v.evidence = describe(S, *base.witness);
    } else if (a != Anchor::Both && v.id.quantifier == Quantifier::Sigma1) {
      if (auto bad = order_ideal_check(r.data.inImage, preorder_for(g, a))) {
        v.definable = false;
        v.ideal = bad;
        v.evidence = std::string("h(L) is not a <=_") + relation_name(a) + "-order ideal: " + bracket(S, bad->below) +
                     " <=_" + relation_name(a) + " " + bracket(S, bad->above) + ", " + bracket(S, bad->above) +
                     " in h(L), " + bracket(S, bad->below) + " not";
      }
    } else if (a != Anchor::Both) {
      if (auto bad = union_of_classes_check(r.data.inImage, classes_for(g, a))) {
        v.definable = false;
        v.split = bad;
        std::string cls;
        for (auto x : bad->cls) cls += (cls.empty() ? "" : ", ") + bracket(S, x);
        v.evidence = std::string("h(L) is not a union of ") + relation_name(a) + "-classes: {" + cls + "} contains " +
                     bracket(S, bad->inside) + " in h(L) and " + bracket(S, bad->outside) + " outside";
      }
    }
    if (v.definable) v.evidence = "conditions hold";
    r.fragments[i] = std::move(v);
  }
  return r;
}

ClassificationReport classify(std::string_view regex, const Alphabet& alphabet, std::size_t semigroupCap) {
  auto c = compile(regex, alphabet);
  return classify(c.dfa, std::string(regex), c.epsilonRemoved, semigroupCap);
}

nlohmann::json semigroup_json(const SyntacticData& data, const GreenStructure& g) {
  using nlohmann::json;
  const auto& S = data.semigroup;
  const auto n = S.size();
  json table = json::array();
  for (Element x = 0; x < n; ++x) {
    json row = json::array();
    for (Element y = 0; y < n; ++y) row.push_back(S.name(S.mul(x, y)));
    table.push_back(row);
  }
  auto names = [&](const std::vector<Element>& xs) {
    json a = json::array();
    for (auto x : xs) a.push_back(S.name(x));
    return a;
  };
  auto classes = [&](const std::vector<std::vector<Element>>& cs) {
    json a = json::array();
    for (const auto& c : cs) a.push_back(names(c));
    return a;
  };
  json order = json::array();
  for (auto [x, y] : S.order().pairs())
    if (x != y) order.push_back(json::array({S.name(x), S.name(y)}));
  json letters = json::object();
  const auto& alphabet = data.sourceDfa.alphabet();
  for (Letter a = 0; a < alphabet.size(); ++a) letters[std::string(1, alphabet.at(a))] = S.name(data.letterImage[a]);
  return {{"size", n},
          {"elements", S.names()},
          {"letterImage", letters},
          {"table", table},
          {"order", order},
          {"idempotents", names(idempotents(S))},
          {"green", {{"R", classes(g.classesR)}, {"L", classes(g.classesL)}, {"J", classes(g.classesJ)}}},
          {"imageOfL", names(data.image_of_language())}};
}

nlohmann::json ClassificationReport::to_json() const {
  using nlohmann::json;
  json frags = json::object();
  json row = json::array();
  for (const auto& v : fragments) {
    json e{{"definable", v.definable}, {"evidence", v.evidence}};
    if (v.equation) {
      json assignment = json::object();
      for (const auto& [var, x] : v.equation->assignment) assignment[var] = data.semigroup.name(x);
      e["witness"] = {{"equation", equation_name(v.equation->equation)},
                      {"assignment", assignment},
                      {"lhs", data.semigroup.name(v.equation->lhs)},
                      {"rhs", data.semigroup.name(v.equation->rhs)}};
    }
    frags[v.id.key()] = e;
    row.push_back(v.id.key());
  }
  auto sg = semigroup_json(data, green);
  sg["idempotentCount"] = idempotents(data.semigroup).size();
  return {{"language", language},
          {"warningEpsilonRemoved", epsilonRemoved},
          {"semigroup", sg},
          {"fragments", frags},
          {"tableRow", row},
          {"notImplemented", json::array({"S1[<]", "BS1[<]"})}};
}

std::string ClassificationReport::to_table() const {
  std::ostringstream os;
  os << "language: " << language << "\n";
  if (epsilonRemoved) os << "warning: the empty word was removed from the language\n";
  os << "semigroup: " << data.semigroup.size() << " elements, " << idempotents(data.semigroup).size()
     << " idempotents\n\n";
  os << "                  Σ₁   𝔹Σ₁\n";
  const char* rows[] = {"[<,+1,min,max]", "[<,+1,min]    ", "[<,+1,max]    ", "[<,+1]        "};
  for (std::size_t i = 0; i < 4; ++i)
    os << "  " << rows[i] << "  " << (fragments[i].definable ? "✓" : "✗") << "    "
       << (fragments[i + 4].definable ? "✓" : "✗") << "\n";
  os << "  [<]             not implemented\n";
  bool header = false;
  for (const auto& v : fragments) {
    if (v.definable) continue;
    if (!header) os << "\nevidence:\n";
    header = true;
    os << "  " << v.id.key() << ": " << v.evidence << "\n";
  }
  return os.str();
}

Formula combination_formula(const Combination& c, const Alphabet& alphabet) {
  using K = Combination::Kind;
  Formula f;
  switch (c.kind) {
    case K::True: return Formula::leaf(Sentence{{}, Matrix::top()});
    case K::False: return Formula::leaf(Sentence{{}, Matrix::negate(Matrix::top())});
    case K::Member: {
      if (c.monomial.uniform(Gap::Star)) return Formula::leaf(from_monomial(c.monomial));
      std::vector<Sentence> parts;
      for (const auto& m : expand_plus(c.monomial, alphabet)) parts.push_back(from_monomial(m));
      return Formula::leaf(union_formula(parts, alphabet));
    }
    case K::And: f.kind = Formula::Kind::And; break;
    case K::Or: f.kind = Formula::Kind::Or; break;
    case K::Not: f.kind = Formula::Kind::Not; break;
  }
  for (const auto& child : c.children) f.children.push_back(combination_formula(child, alphabet));
  return f;
}

Explanation explain(const ClassificationReport& report, const FragmentId& fragment, const ExplainCaps& caps) {
  const auto& v = report.verdict(fragment);
  if (!v.definable) throw PreconditionError(fragment.key() + " is not definable: " + v.evidence);
  Explanation e;
  e.fragment = fragment;
  const Alphabet& alphabet = report.data.sourceDfa.alphabet();
  if (fragment.quantifier == Quantifier::Sigma1) {
    e.cover = cover(report.data, fragment.anchor());
    std::vector<Sentence> parts;
    for (const auto& m : e.cover->monomials) parts.push_back(from_monomial(m));
    e.sentence = union_formula(parts, alphabet);
    e.verified = e.cover->verifiedEquivalent;
  } else {
    e.description =
        boolean_combination(report.data, {fragment.anchor(), caps.degreeCap, caps.blockCap, Gap::Star});
    e.formula = combination_formula(e.description->combination, alphabet);
    e.verified = e.description->verified;
  }
  return e;
}

nlohmann::json Explanation::to_json() const {
  using nlohmann::json;
  json j{{"fragment", fragment.key()}, {"verified", verified}};
  if (cover) {
    json ms = json::array();
    for (const auto& m : cover->monomials) ms.push_back(m.to_string());
    j["cover"] = {{"monomials", ms},
                  {"boundDegree", cover->boundDegree},
                  {"boundCount", cover->boundCount},
                  {"verifiedEquivalent", cover->verifiedEquivalent}};
  }
  if (sentence) {
    j["formula"] = to_string(Formula::leaf(*sentence));
    j["signature"] = signature_of(Formula::leaf(*sentence)).to_string();
  }
  if (description) j["description"] = description->to_json();
  if (formula) {
    j["formula"] = to_string(*formula);
    j["signature"] = signature_of(*formula).to_string();
  }
  return j;
}

std::vector<SelftestEntry> decidability_selftest(const std::vector<CorpusLanguage>& corpus) {
  std::vector<SelftestEntry> out;
  for (const auto& lang : corpus) {
    SelftestEntry e{lang.name, true, {}};
    try {
      auto r = classify(lang.regex, Alphabet(lang.alphabet));
      for (std::size_t i = 0; i < 8; ++i) {
        const auto& v = r.fragments[i];
        if (v.definable == lang.expected[i]) continue;
        e.matched = false;
        e.detail += v.id.key() + ": expected " + (lang.expected[i] ? "yes" : "no") + ", got " +
                    (v.definable ? "yes" : "no") + " (" + v.evidence + "); ";
      }
    } catch (const std::exception& ex) {
      e.matched = false;
      e.detail = ex.what();
    }
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace dotdepth
