#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "dotdepth/automata.hpp"
#include "dotdepth/semigroup.hpp"

namespace dotdepth {

/// Gap between (or around) the blocks of a monomial: nothing, any word, or
/// any non-empty word.
enum class Gap { None, Star, Plus };

/// Which boundaries are pinned to the start/end of the word.
///   Both:  w1 G w2 ... G wn        Left:  w1 G ... wn G
///   Right: G w1 ... G wn           None:  G w1 ... wn G
enum class Anchor { Both, Left, Right, None };

std::string anchor_name(Anchor a);

/// A gapped word pattern g0 w1 g1 w2 ... wn gn. Always kept in canonical form:
/// empty blocks are merged into their neighbouring gaps unless both are PLUS
/// (Γ⁺εΓ⁺ ≠ Γ⁺).
class Monomial {
 public:
  /// The empty monomial <*> (every word).
  Monomial() : gaps_{Gap::Star} {}
  /// `gaps` must have blocks.size()+1 entries; inner gaps must not be None.
  Monomial(std::vector<Word> blocks, std::vector<Gap> gaps);

  /// Uniform-gap constructor: blocks joined by `kind`, with the
  /// boundaries opened to `kind` on the unanchored sides.
  static Monomial shaped(Anchor anchor, std::vector<Word> blocks, Gap kind = Gap::Star);
  static Monomial exact(Word w) { return Monomial({std::move(w)}, {Gap::None, Gap::None}); }

  const std::vector<Word>& blocks() const noexcept { return blocks_; }
  const std::vector<Gap>& gaps() const noexcept { return gaps_; }
  Gap left() const noexcept { return gaps_.front(); }
  Gap right() const noexcept { return gaps_.back(); }

  std::size_t degree() const;
  std::size_t block_count() const noexcept { return blocks_.size(); }
  Anchor anchor() const;
  /// True when every inner gap and every non-None boundary is `kind`.
  bool uniform(Gap kind) const;

  std::string to_string() const;

  bool operator==(const Monomial&) const = default;
  /// Canonical order: degree, block count, then blocks, then gaps.
  std::strong_ordering operator<=>(const Monomial& o) const;

 private:
  std::vector<Word> blocks_;
  std::vector<Gap> gaps_;
  void canonicalize();
};

/// Text format: optional leading gap, quoted blocks separated by gap tokens,
/// optional trailing gap. Tokens: `<*>`, `<+>`, `"word"`.
Monomial parse_monomial(std::string_view text);

/// Word membership by dynamic programming over block placements.
bool member(const Monomial& m, std::string_view w);

/// Minimal complete DFA for the monomial's non-empty words.
Dfa to_dfa(const Monomial& m, const Alphabet& alphabet);
/// Minimal DFA of a finite union (empty vector: the empty language).
Dfa union_dfa(const std::vector<Monomial>& ms, const Alphabet& alphabet);

/// Open the boundaries that `anchor` leaves unpinned (None becomes Star).
Monomial open_boundaries(const Monomial& m, Anchor anchor);

/// Rewrite a PLUS-gap monomial as a union of STAR-gap monomials: each Γ⁺
/// becomes one letter absorbed into the adjacent block followed by Γ*.
/// Throws PreconditionError if any gap is STAR.
std::vector<Monomial> expand_plus(const Monomial& m, const Alphabet& alphabet);

/// Given a STAR monomial P and uq in P (u, q non-empty), a STAR monomial P'
/// with uq in P' ⊆ P ∩ Γ*q and degree(P') <= degree(P) + |q|. The last block
/// of P' is the longest suffix q' = yq that can absorb the blocks meeting q.
Monomial quotient_monomial(const Monomial& p, std::string_view u, std::string_view q);

struct Cover {
  std::vector<Monomial> monomials;
  std::size_t boundDegree = 0;  // every degree is strictly below
  std::size_t boundCount = 0;   // every block count is at most
  bool verifiedEquivalent = false;
};

/// Description of L as a finite union of STAR monomials of the given anchoring.
/// Requires the syntactic ordered semigroup to satisfy x^w y x^w <= x^w and,
/// for Left/Right/None, h(L) to be a <=_R / <=_L / <=_J order ideal.
///
/// For a word u the generator monomial P_u is built along the R-descent of the
/// prefixes of u: split u = v a w where h(va) is the first prefix image
/// R-equivalent to h(u), recurse on v, factor the images of aw with
/// stabilized_factorization and replace each stabilized middle part w_i by Γ*.
/// Words are drawn as shortest counterexamples between L and the union built
/// so far, so the loop stops exactly when the union equals L.
///
/// With `generalize`, each P_u is then relaxed by deleting whole blocks as
/// long as the result stays inside L (checked on DFAs). Deleting a block only
/// enlarges the language and lowers degree and block count.
Cover cover(const SyntacticData& data, Anchor anchor, bool generalize = true);

/// Greedy block deletion keeping the monomial inside L (left to right, restart
/// after every success).
Monomial generalize_within(const Monomial& p, const Dfa& language);

/// The generator monomial P_u (both-anchored) for a single non-empty word.
Monomial descent_monomial(const SyntacticData& data, const GreenStructure& g, std::string_view u);

}  // namespace dotdepth
