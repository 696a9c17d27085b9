#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dotdepth/automata.hpp"

namespace dotdepth {

using Element = std::size_t;
/// A word whose letters are semigroup elements.
using ElementWord = std::vector<Element>;

/// Binary relation on the elements of a finite semigroup, stored densely.
class Relation {
 public:
  Relation() = default;
  explicit Relation(std::size_t n, bool value = false) : n_(n), bits_(n * n, value) {}

  std::size_t size() const noexcept { return n_; }
  bool operator()(Element x, Element y) const { return bits_[x * n_ + y]; }
  void set(Element x, Element y, bool v = true) { bits_[x * n_ + y] = v; }

  bool is_reflexive() const;
  bool is_transitive() const;
  bool is_antisymmetric() const;
  /// Pairs (x, y) with x related to y, in index order.
  std::vector<std::pair<Element, Element>> pairs() const;
  /// Classes of the relation intersected with its converse (assumes a preorder),
  /// ordered by smallest member.
  std::vector<std::vector<Element>> classes() const;

  bool operator==(const Relation&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<bool> bits_;
};

/// Finite semigroup given by its multiplication table, with an optional
/// compatible partial order.
class FiniteSemigroup {
 public:
  FiniteSemigroup() = default;
  /// `table` is row-major: table[x * size + y] = x*y.
  FiniteSemigroup(std::size_t size, std::vector<Element> table, std::vector<std::string> names = {});

  std::size_t size() const noexcept { return size_; }
  Element mul(Element x, Element y) const { return table_[x * size_ + y]; }
  Element eval(std::span<const Element> word) const;
  Element power(Element x, std::size_t k) const;

  const std::string& name(Element x) const { return names_[x]; }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<Element> find(std::string_view name) const;

  bool has_order() const noexcept { return order_.has_value(); }
  const Relation& order() const;
  bool leq(Element x, Element y) const { return order()(x, y); }
  void set_order(Relation order);

  /// O(n^3) associativity check; nullopt or a failing triple.
  std::optional<std::array<Element, 3>> associativity_violation() const;
  /// True iff the order is a partial order compatible with multiplication.
  bool order_is_compatible() const;

 private:
  std::size_t size_ = 0;
  std::vector<Element> table_;
  std::vector<std::string> names_;
  std::optional<Relation> order_;
};

/// Cyclic group Z_n ordered by equality; elements are named "1", "g", "g^2", ...
FiniteSemigroup cyclic_group(std::size_t n);

struct SyntacticData {
  FiniteSemigroup semigroup;
  std::vector<Element> letterImage;  // per alphabet letter
  std::vector<bool> inImage;         // h_L(L) as a membership mask
  Dfa sourceDfa;
  std::vector<std::vector<State>> transformations;

  Element eval(std::string_view word) const;
  std::vector<Element> image_of_language() const;
  bool in_image(Element x) const { return inImage[x]; }
  ElementWord images(std::string_view word) const;
};

inline constexpr std::size_t kDefaultSemigroupCap = 500;

/// Transition semigroup of the minimal DFA of `d` (the syntactic semigroup of
/// its language) together with the syntactic order.
SyntacticData syntactic(const Dfa& d, std::size_t cap = kDefaultSemigroupCap);

/// x <= y iff every context accepting y accepts x, computed from right-language
/// containment between DFA states.
Relation syntactic_order(const SyntacticData& data);

/// Right-language containment on a complete DFA: result(p, q) iff L_q ⊆ L_p.
Relation state_containment(const Dfa& d);

std::vector<Element> idempotents(const FiniteSemigroup& s);
bool is_idempotent(const FiniteSemigroup& s, Element x);
Element omega_power(const FiniteSemigroup& s, Element x);

struct GreenStructure {
  Relation leqR, leqL, leqJ;
  std::vector<std::vector<Element>> classesR, classesL, classesJ;

  bool R(Element x, Element y) const { return leqR(x, y) && leqR(y, x); }
  bool L(Element x, Element y) const { return leqL(x, y) && leqL(y, x); }
  bool J(Element x, Element y) const { return leqJ(x, y) && leqJ(y, x); }
  /// x <_R y
  bool strictlyBelowR(Element x, Element y) const { return leqR(x, y) && !leqR(y, x); }
};

GreenStructure green(const FiniteSemigroup& s);

/// Witness of a failed downward-closure test: `below` <= `above`, `above` in
/// the set, `below` not.
struct IdealViolation {
  Element below;
  Element above;
};
std::optional<IdealViolation> order_ideal_check(const std::vector<bool>& subset, const Relation& preorder);

/// Witness of a class split by a subset.
struct ClassViolation {
  std::vector<Element> cls;
  Element inside;
  Element outside;
};
std::optional<ClassViolation> union_of_classes_check(const std::vector<bool>& subset,
                                                     const std::vector<std::vector<Element>>& partition);

/// A non-empty prefix p of a word over S together with an idempotent e such
/// that p*e = p.
struct PrefixStabilizer {
  std::size_t length;
  Element idempotent;
};
/// Every word of length >= |S| has such a prefix of length <= |S|. Returns the
/// shortest one, ties on e broken by the smallest element index. Throws
/// PreconditionError when |word| < |S|.
PrefixStabilizer stabilized_prefix(const FiniteSemigroup& s, std::span<const Element> word);
/// Same search without the length precondition; nullopt if none exists.
std::optional<PrefixStabilizer> find_stabilized_prefix(const FiniteSemigroup& s, std::span<const Element> word);

/// word = x_1 w_1 y_1 ... x_m w_m y_m s with x_i e_i = x_i, y_i e_i = y_i,
/// |y_i| <= |S|, m <= |S| and |x_1 y_1 ... x_m y_m s| < 2|S|^2 + |S|.
/// Stored as lengths so the pieces can be lifted to any word with the same
/// letter positions.
struct StabilizedSegment {
  std::size_t x, w, y;
  Element idempotent;
};
struct StabilizedFactorization {
  std::vector<StabilizedSegment> segments;
  std::size_t tail = 0;

  std::size_t m() const noexcept { return segments.size(); }
  /// |x_1 y_1 ... x_m y_m s|
  std::size_t kept_length() const;
};

/// Induction on the number of idempotents that stabilize a short factor: peel
/// a stabilized prefix x (stabilizer e), then either recurse on the rest (e no
/// longer stabilizes a short factor) or jump to the last short factor y0
/// stabilized by e and recurse after it.
StabilizedFactorization stabilized_factorization(const FiniteSemigroup& s, std::span<const Element> word);
/// Empty string if every invariant holds, otherwise a description of the first failure.
std::string factorization_violation(const FiniteSemigroup& s, std::span<const Element> word,
                                    const StabilizedFactorization& f);

}  // namespace dotdepth
