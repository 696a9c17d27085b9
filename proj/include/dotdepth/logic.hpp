#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "dotdepth/automata.hpp"
#include "dotdepth/monomials.hpp"

namespace dotdepth {

/// Quantifier-free matrix of a Σ₁ sentence. Positions are variables; the atoms
/// are x < y, y = x + 1 (written (succ y x)), x = y, min(x), max(x),
/// λ(x) = a and ⊤.
struct Matrix {
  enum class Kind { Less, Succ, Eq, Min, Max, Label, True, And, Or, Not };
  Kind kind = Kind::True;
  std::string x, y;  // variable operands
  char letter = 0;   // Label only
  std::vector<Matrix> children;

  static Matrix atom(Kind k, std::string x = {}, std::string y = {});
  static Matrix label(std::string x, char a);
  static Matrix top() { return {}; }
  static Matrix all(std::vector<Matrix> cs);
  static Matrix any(std::vector<Matrix> cs);
  static Matrix negate(Matrix m);
};

/// ∃x1 ... ∃xm: matrix
struct Sentence {
  std::vector<std::string> vars;
  Matrix matrix;
};

/// Boolean combination of Σ₁ sentences (a single sentence is a leaf).
struct Formula {
  enum class Kind { Sentence, And, Or, Not };
  Kind kind = Kind::Sentence;
  Sentence sentence;
  std::vector<Formula> children;

  static Formula leaf(Sentence s);
  bool is_sentence() const noexcept { return kind == Kind::Sentence; }
};

/// Predicates beyond [<,+1] actually used by the formula.
struct LogicSignature {
  bool min = false, max = false;
  std::string to_string() const;  // "[<,+1]", "[<,+1,min]", ...
  bool operator==(const LogicSignature&) const = default;
};
LogicSignature signature_of(const Formula& f);

/// S-expression syntax:
///   (exists (x1 x2) (and (label x1 a) (succ x2 x1)))
///   (or F1 (not F2))           Boolean prefix over sentences
/// Matrix forms: (less x y) (succ y x) (eq x y) (min x) (max x) (label x a)
/// (true) (and ...) (or ...) (not M).
Formula parse_formula(std::string_view text, const Alphabet& alphabet);
std::string to_string(const Formula& f);
std::string to_string(const Matrix& m);

/// Truth on a non-empty word by backtracking over assignments.
bool eval(const Formula& f, std::string_view w);
bool eval(const Sentence& s, std::string_view w);

/// Sentence defining a STAR monomial: one variable per block letter, labels
/// plus successor chains inside blocks, < between blocks, min/max on the
/// pinned boundaries. Throws PreconditionError for PLUS gaps.
Sentence from_monomial(const Monomial& m);

/// One sentence for the disjunction: variables renamed apart, quantifier
/// blocks concatenated, matrices joined by `or`. Empty input gives an
/// unsatisfiable sentence.
Sentence union_formula(const std::vector<Sentence>& fs, const Alphabet& alphabet);

inline constexpr std::size_t kDefaultVariableCap = 6;

/// Finite union of PLUS-gap monomials equal to L(s). Every model u with an
/// assignment marks the assigned positions; the maximal runs of marked
/// positions become blocks separated by Γ⁺, and the first/last block is pinned
/// to the boundary when it touches it. All atoms are decided by this
/// template, so enumerating templates and keeping those satisfying the matrix
/// gives the union. Degrees are at most the number of variables.
std::vector<Monomial> sigma1_to_monomials(const Sentence& s, const Alphabet& alphabet,
                                          std::size_t variableCap = kDefaultVariableCap);

}  // namespace dotdepth
