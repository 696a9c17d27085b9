#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "dotdepth/monomials.hpp"
#include "dotdepth/semigroup.hpp"

namespace dotdepth {

/// A finite monomial family: uniform gap kind, non-empty blocks, degree and
/// block count capped. The flavor fixes which boundaries may be pinned:
///   Both:  either boundary may be pinned (w1 or wn may be empty)
///   Left:  left may be pinned, right is open      (w1 G ... wn G)
///   Right: mirror of Left
///   None:  both open                              (G w1 ... wn G)
/// The zero-block monomial <G> is always in the family.
struct FamilySpec {
  Anchor flavor = Anchor::Both;
  std::size_t degreeCap = 0;
  std::size_t blockCap = 0;
  Gap gapKind = Gap::Star;
};

inline constexpr std::size_t kDefaultSignatureLimit = 1'000'000;

/// The members of the family containing w, in canonical order.
std::vector<Monomial> signature(std::string_view w, const FamilySpec& spec,
                                std::size_t sizeLimit = kDefaultSignatureLimit);

/// True iff m belongs to the family described by spec.
bool in_family(const Monomial& m, const FamilySpec& spec);

struct RefineResult {
  bool refines = true;
  std::optional<std::pair<Word, Word>> witness;  // same signature, images not related
  std::size_t buckets = 0;
  std::size_t words = 0;
};

/// Buckets all words up to maxLen by signature and checks that words in one
/// bucket have related images: Both: equal, Left: R, Right: L, None: J.
/// Requires the semigroup to satisfy Knast's identity.
RefineResult refine_check(const SyntacticData& data, const FamilySpec& spec, std::size_t maxLen);

struct RefiningDegree {
  std::size_t degree = 0;
  std::size_t blockCap = 0;  // used for the search (2|S| for Both, else the degree)
  std::size_t bound = 0;     // 4|S|^2, 8|S|^2 or 12|S|^2
  bool withinBound = true;
  std::size_t buckets = 0;
};

/// Least STAR degree cap refining the flavor's relation on words up to maxLen.
/// Right uses the Left bound by symmetry.
RefiningDegree minimal_refining_degree(const SyntacticData& data, Anchor flavor, std::size_t maxLen);

/// Boolean combination over family monomials.
struct Combination {
  enum class Kind { True, False, Member, And, Or, Not };
  Kind kind = Kind::True;
  Monomial monomial;
  std::vector<Combination> children;

  nlohmann::json to_json() const;
};

struct BooleanDescription {
  Combination combination;
  bool verified = false;
  std::optional<Word> witness;  // shortest word on which description and L differ
  FamilySpec spec;
  std::size_t probeLength = 0;

  nlohmann::json to_json() const;
};

/// Buckets the words up to the probe length (default max(8, 2|S|, degreeCap))
/// by signature; L is described as the disjunction, over buckets meeting L,
/// of "in every member and in no other family monomial". Verified by a
/// breadth-first search over L's DFA times all family monomial DFAs.
BooleanDescription boolean_combination(const SyntacticData& data, const FamilySpec& spec,
                                       std::size_t probeLength = 0);

}  // namespace dotdepth
