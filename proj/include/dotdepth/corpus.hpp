#pragma once

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "dotdepth/classifier.hpp"

namespace dotdepth {

/// Languages over {a,b} with their expected Table 1 rows.
const std::vector<CorpusLanguage>& golden_corpus();

struct NamedSemigroup {
  std::string name;
  FiniteSemigroup semigroup;  // ordered
};

/// Syntactic semigroups of the golden corpus plus the cyclic groups of order
/// 2 and 3 (ordered by equality).
std::vector<NamedSemigroup> suite_semigroups();

using Rng = std::mt19937_64;

/// Random monomial with 1..maxBlocks non-empty blocks, total degree <= maxDegree,
/// uniform gap kind and the given anchoring.
Monomial random_monomial(Rng& rng, const Alphabet& alphabet, std::size_t maxDegree, std::size_t maxBlocks,
                         Anchor anchor, Gap kind = Gap::Star);

/// Random Σ₁ sentence with 1..maxVars variables and a small matrix.
Sentence random_sentence(Rng& rng, const Alphabet& alphabet, std::size_t maxVars);

/// Random extended regex with about `size` nodes.
Regex random_regex(Rng& rng, const Alphabet& alphabet, std::size_t size);

}  // namespace dotdepth
