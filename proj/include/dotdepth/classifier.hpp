#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "dotdepth/identities.hpp"
#include "dotdepth/logic.hpp"
#include "dotdepth/monomials.hpp"
#include "dotdepth/semigroup.hpp"
#include "dotdepth/signatures.hpp"

namespace dotdepth {

enum class Quantifier { Sigma1, BSigma1 };

/// One of the eight fragments Σ₁/𝔹Σ₁ over [<,+1] plus a subset of {min,max}.
struct FragmentId {
  Quantifier quantifier = Quantifier::Sigma1;
  bool min = true, max = true;

  /// "S1[<,+1,min,max]", "BS1[<,+1]", ...
  std::string key() const;
  /// Anchoring of the matching monomials: min pins the left end, max the right.
  Anchor anchor() const;
  bool operator==(const FragmentId&) const = default;
};

/// Table order: Σ₁ rows (min,max), (min), (max), () then the 𝔹Σ₁ rows.
const std::array<FragmentId, 8>& all_fragments();
/// Accepts the keys produced by FragmentId::key(); InputError otherwise.
FragmentId parse_fragment(std::string_view key);

struct FragmentVerdict {
  FragmentId id;
  bool definable = true;
  std::optional<EquationWitness> equation;
  std::optional<IdealViolation> ideal;
  std::optional<ClassViolation> split;
  std::string evidence;  // human-readable; "conditions hold" when definable

  /// Re-checks the attached witness against the semigroup.
  bool evidence_revalidates(const SyntacticData& data, const GreenStructure& g) const;
};

struct ClassificationReport {
  std::string language;
  bool epsilonRemoved = false;
  SyntacticData data;
  GreenStructure green;
  std::array<FragmentVerdict, 8> fragments;

  const FragmentVerdict& verdict(const FragmentId& id) const;
  /// Violations of the inclusions Σ₁[C] ⊆ 𝔹Σ₁[C], [] ⊆ [min],[max] ⊆ [min,max].
  std::vector<std::string> monotonicity_violations() const;
  nlohmann::json to_json() const;
  std::string to_table() const;
};

ClassificationReport classify(const Dfa& dfa, std::string language, bool epsilonRemoved = false,
                              std::size_t semigroupCap = kDefaultSemigroupCap);
ClassificationReport classify(std::string_view regex, const Alphabet& alphabet,
                              std::size_t semigroupCap = kDefaultSemigroupCap);

/// Semigroup dump: elements, table, order, idempotents, Green classes, h(L).
nlohmann::json semigroup_json(const SyntacticData& data, const GreenStructure& g);

struct Explanation {
  FragmentId fragment;
  // Σ₁ fragments
  std::optional<Cover> cover;
  std::optional<Sentence> sentence;
  // 𝔹Σ₁ fragments
  std::optional<BooleanDescription> description;
  std::optional<Formula> formula;
  bool verified = false;

  nlohmann::json to_json() const;
};

struct ExplainCaps {
  std::size_t degreeCap = 4;
  std::size_t blockCap = 4;
};

/// Constructive description for a definable fragment. Throws
/// PreconditionError (carrying the evidence) when the verdict is "no".
Explanation explain(const ClassificationReport& report, const FragmentId& fragment, const ExplainCaps& caps = {});

/// Boolean combination of Σ₁ sentences mirroring a monomial combination
/// (PLUS-gap monomials are expanded first).
Formula combination_formula(const Combination& c, const Alphabet& alphabet);

struct CorpusLanguage {
  std::string name;
  std::string alphabet;
  std::string regex;
  std::array<bool, 8> expected;  // all_fragments() order
};

struct SelftestEntry {
  std::string name;
  bool matched = true;
  std::string detail;
};

/// Classifies every language and compares against its expected row.
std::vector<SelftestEntry> decidability_selftest(const std::vector<CorpusLanguage>& corpus);

}  // namespace dotdepth
