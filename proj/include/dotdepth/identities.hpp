#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dotdepth/semigroup.hpp"

namespace dotdepth {

/// Equations checked by brute force over the multiplication table.
///   BHalf: x^w y x^w <= x^w                     (needs an order)
///   Knast: (exfy)^w exf (tesf)^w = (exfy)^w esf (tesf)^w   for e, f idempotent
///   LR:    (exeye)^w exe = (exeye)^w             for e idempotent
enum class Equation { BHalf, Knast, LR };

std::string equation_name(Equation eq);  // "B_HALF", "KNAST", "LR"

struct EquationWitness {
  Equation equation;
  std::vector<std::pair<std::string, Element>> assignment;  // variable order of the equation
  Element lhs;
  Element rhs;
  bool holds;  // always false for a returned counterexample
};

/// Result of an equation check; `witness` is the lexicographically smallest
/// failing assignment (variables in equation order, element indices) if any.
struct EquationResult {
  bool holds = true;
  std::optional<EquationWitness> witness;
};

inline constexpr std::size_t kDefaultKnastCap = 60;

EquationResult check_b_half(const FiniteSemigroup& s);
EquationResult check_knast(const FiniteSemigroup& s, std::size_t cap = kDefaultKnastCap);
EquationResult check_lr(const FiniteSemigroup& s);

/// Recomputes both sides from the assignment and checks they match the
/// recorded values and verdict.
bool revalidate(const FiniteSemigroup& s, const EquationWitness& w);

/// Outcome of one of the exhaustive property suites.
struct SuiteReport {
  std::string name;
  bool passed = true;
  std::size_t cases = 0;  // implication instances whose premise held
  std::string detail;     // verdicts or the first counterexample
};

/// BHalf => Knast => LR on this semigroup. Also returns the three verdicts.
struct InclusionVerdicts {
  bool bHalf, knast, lr;
};
SuiteReport suite_class_inclusions(const FiniteSemigroup& s, InclusionVerdicts* verdicts = nullptr);

/// For S in LR: u = ue, x = xe and ux R u imply ux = u.
SuiteReport suite_r_absorption(const FiniteSemigroup& s);

inline constexpr std::size_t kDefaultFactorSuiteCap = 3;
/// For S in LR and k = |S|+1: u R ux >_R uxa implies alph_k(x) != alph_k(xa),
/// for words x over S with k <= |x| <= k+1.
SuiteReport suite_factor_change(const FiniteSemigroup& s, std::size_t cap = kDefaultFactorSuiteCap);

inline constexpr std::size_t kDefaultSubstitutionSuiteCap = 20;
/// For S in B1: u R uexf and esfv L v imply uexfv = uesfv.
SuiteReport suite_knast_substitution(const FiniteSemigroup& s, std::size_t cap = kDefaultSubstitutionSuiteCap);

}  // namespace dotdepth
