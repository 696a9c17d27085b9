#include "dotdepth/semigroup.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace dotdepth {

// ---------------------------------------------------------------- Relation

bool Relation::is_reflexive() const {
  for (Element x = 0; x < n_; ++x)
    if (!(*this)(x, x)) return false;
  return true;
}

bool Relation::is_transitive() const {
  for (Element x = 0; x < n_; ++x)
    for (Element y = 0; y < n_; ++y)
      if ((*this)(x, y))
        for (Element z = 0; z < n_; ++z)
          if ((*this)(y, z) && !(*this)(x, z)) return false;
  return true;
}

bool Relation::is_antisymmetric() const {
  for (Element x = 0; x < n_; ++x)
    for (Element y = x + 1; y < n_; ++y)
      if ((*this)(x, y) && (*this)(y, x)) return false;
  return true;
}

std::vector<std::pair<Element, Element>> Relation::pairs() const {
  std::vector<std::pair<Element, Element>> out;
  for (Element x = 0; x < n_; ++x)
    for (Element y = 0; y < n_; ++y)
      if ((*this)(x, y)) out.emplace_back(x, y);
  return out;
}

std::vector<std::vector<Element>> Relation::classes() const {
  std::vector<std::vector<Element>> out;
  std::vector<bool> done(n_, false);
  for (Element x = 0; x < n_; ++x) {
    if (done[x]) continue;
    std::vector<Element> cls;
    for (Element y = x; y < n_; ++y)
      if (!done[y] && (*this)(x, y) && (*this)(y, x)) {
        cls.push_back(y);
        done[y] = true;
      }
    out.push_back(std::move(cls));
  }
  return out;
}

// --------------------------------------------------------- FiniteSemigroup

FiniteSemigroup::FiniteSemigroup(std::size_t size, std::vector<Element> table, std::vector<std::string> names)
    : size_(size), table_(std::move(table)), names_(std::move(names)) {
  if (size_ == 0) throw InputError("a semigroup needs at least one element");
  if (table_.size() != size_ * size_) throw InputError("multiplication table has wrong dimensions");
  for (auto v : table_)
    if (v >= size_) throw InputError("multiplication table entry out of range");
  if (names_.empty())
    for (Element x = 0; x < size_; ++x) names_.push_back(std::to_string(x));
  if (names_.size() != size_) throw InputError("one name per element required");
}

Element FiniteSemigroup::eval(std::span<const Element> word) const {
  if (word.empty()) throw PreconditionError("cannot evaluate the empty word in a semigroup");
  Element acc = word[0];
  for (std::size_t i = 1; i < word.size(); ++i) acc = mul(acc, word[i]);
  return acc;
}

Element FiniteSemigroup::power(Element x, std::size_t k) const {
  if (k == 0) throw PreconditionError("semigroup powers start at 1");
  Element acc = x;
  for (std::size_t i = 1; i < k; ++i) acc = mul(acc, x);
  return acc;
}

std::optional<Element> FiniteSemigroup::find(std::string_view name) const {
  for (Element x = 0; x < size_; ++x)
    if (names_[x] == name) return x;
  return std::nullopt;
}

const Relation& FiniteSemigroup::order() const {
  if (!order_) throw PreconditionError("semigroup has no order attached");
  return *order_;
}

void FiniteSemigroup::set_order(Relation order) {
  if (order.size() != size_) throw InputError("order has wrong dimensions");
  order_ = std::move(order);
}

std::optional<std::array<Element, 3>> FiniteSemigroup::associativity_violation() const {
  for (Element x = 0; x < size_; ++x)
    for (Element y = 0; y < size_; ++y)
      for (Element z = 0; z < size_; ++z)
        if (mul(mul(x, y), z) != mul(x, mul(y, z))) return std::array<Element, 3>{x, y, z};
  return std::nullopt;
}

bool FiniteSemigroup::order_is_compatible() const {
  const auto& le = order();
  if (!le.is_reflexive() || !le.is_antisymmetric() || !le.is_transitive()) return false;
  for (auto [p, q] : le.pairs())
    for (auto [s, t] : le.pairs())
      if (!le(mul(p, s), mul(q, t))) return false;
  return true;
}

FiniteSemigroup cyclic_group(std::size_t n) {
  std::vector<Element> table(n * n);
  std::vector<std::string> names;
  for (Element x = 0; x < n; ++x) {
    names.push_back(x == 0 ? "1" : (x == 1 ? "g" : "g^" + std::to_string(x)));
    for (Element y = 0; y < n; ++y) table[x * n + y] = (x + y) % n;
  }
  FiniteSemigroup s(n, std::move(table), std::move(names));
  Relation eq(n);
  for (Element x = 0; x < n; ++x) eq.set(x, x);
  s.set_order(std::move(eq));
  return s;
}

// ----------------------------------------------------------- SyntacticData

Element SyntacticData::eval(std::string_view word) const {
  if (word.empty()) throw InputError("the empty word has no image in the syntactic semigroup");
  Element acc = letterImage[sourceDfa.alphabet().index_of(word[0])];
  for (std::size_t i = 1; i < word.size(); ++i) acc = semigroup.mul(acc, letterImage[sourceDfa.alphabet().index_of(word[i])]);
  return acc;
}

ElementWord SyntacticData::images(std::string_view word) const {
  ElementWord out;
  out.reserve(word.size());
  for (char c : word) out.push_back(letterImage[sourceDfa.alphabet().index_of(c)]);
  return out;
}

std::vector<Element> SyntacticData::image_of_language() const {
  std::vector<Element> out;
  for (Element x = 0; x < inImage.size(); ++x)
    if (inImage[x]) out.push_back(x);
  return out;
}

Relation state_containment(const Dfa& d) {
  const auto n = d.state_count();
  const auto k = d.alphabet().size();
  Relation rel(n, true);
  for (State p = 0; p < n; ++p)
    for (State q = 0; q < n; ++q)
      if (d.accepting(q) && !d.accepting(p)) rel.set(p, q, false);
  bool changed = true;
  while (changed) {
    changed = false;
    for (State p = 0; p < n; ++p)
      for (State q = 0; q < n; ++q) {
        if (!rel(p, q)) continue;
        for (Letter a = 0; a < k; ++a)
          if (!rel(d.next(p, a), d.next(q, a))) {
            rel.set(p, q, false);
            changed = true;
            break;
          }
      }
  }
  return rel;
}

Relation syntactic_order(const SyntacticData& data) {
  const auto n = data.semigroup.size();
  const auto contains = state_containment(data.sourceDfa);
  Relation le(n);
  for (Element f = 0; f < n; ++f)
    for (Element g = 0; g < n; ++g) {
      bool ok = true;
      for (State p = 0; p < data.sourceDfa.state_count() && ok; ++p)
        ok = contains(data.transformations[f][p], data.transformations[g][p]);
      le.set(f, g, ok);
    }
  return le;
}

SyntacticData syntactic(const Dfa& input, std::size_t cap) {
  Dfa d = minimize(input);
  const auto n = d.state_count();
  const auto k = d.alphabet().size();
  std::map<std::vector<State>, Element> ids;
  std::vector<std::vector<State>> elems;
  std::vector<std::string> names;

  auto intern = [&](std::vector<State> t, std::string name) -> Element {
    auto [it, fresh] = ids.emplace(t, elems.size());
    if (fresh) {
      if (elems.size() >= cap)
        throw ResourceError("syntactic semigroup exceeds the size cap of " + std::to_string(cap) + " elements");
      elems.push_back(std::move(t));
      names.push_back(std::move(name));
    }
    return it->second;
  };

  std::vector<Element> letterImage(k);
  for (Letter a = 0; a < k; ++a) {
    std::vector<State> t(n);
    for (State q = 0; q < n; ++q) t[q] = d.next(q, a);
    letterImage[a] = intern(std::move(t), std::string(1, d.alphabet().at(a)));
  }
  // Breadth-first right extension: names come out shortest, length-lex first.
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (Letter a = 0; a < k; ++a) {
      std::vector<State> t(n);
      for (State q = 0; q < n; ++q) t[q] = d.next(elems[i][q], a);
      intern(std::move(t), names[i] + d.alphabet().at(a));
    }

  const auto size = elems.size();
  std::vector<Element> table(size * size);
  for (Element x = 0; x < size; ++x)
    for (Element y = 0; y < size; ++y) {
      std::vector<State> t(n);
      for (State q = 0; q < n; ++q) t[q] = elems[y][elems[x][q]];
      table[x * size + y] = ids.at(t);
    }

  std::vector<bool> inImage(size);
  for (Element x = 0; x < size; ++x) inImage[x] = d.accepting(elems[x][d.initial()]);

  SyntacticData data{FiniteSemigroup(size, std::move(table), std::move(names)), std::move(letterImage),
                     std::move(inImage), d, std::move(elems)};
  data.semigroup.set_order(syntactic_order(data));
  return data;
}

// ------------------------------------------------------ idempotents, omega

bool is_idempotent(const FiniteSemigroup& s, Element x) { return s.mul(x, x) == x; }

std::vector<Element> idempotents(const FiniteSemigroup& s) {
  std::vector<Element> out;
  for (Element x = 0; x < s.size(); ++x)
    if (is_idempotent(s, x)) out.push_back(x);
  return out;
}

Element omega_power(const FiniteSemigroup& s, Element x) {
  Element p = x;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (is_idempotent(s, p)) return p;
    p = s.mul(p, x);
  }
  throw InternalError("no idempotent power found; table is not a semigroup");
}

// ------------------------------------------------------------------- Green

GreenStructure green(const FiniteSemigroup& s) {
  const auto n = s.size();
  GreenStructure g{Relation(n), Relation(n), Relation(n), {}, {}, {}};
  for (Element y = 0; y < n; ++y) {
    g.leqR.set(y, y);
    g.leqL.set(y, y);
    g.leqJ.set(y, y);
    for (Element t = 0; t < n; ++t) {
      g.leqR.set(s.mul(y, t), y);
      g.leqL.set(s.mul(t, y), y);
      g.leqJ.set(s.mul(y, t), y);
      g.leqJ.set(s.mul(t, y), y);
      for (Element u = 0; u < n; ++u) g.leqJ.set(s.mul(s.mul(t, y), u), y);
    }
  }
  g.classesR = g.leqR.classes();
  g.classesL = g.leqL.classes();
  g.classesJ = g.leqJ.classes();
  return g;
}

std::optional<IdealViolation> order_ideal_check(const std::vector<bool>& subset, const Relation& preorder) {
  for (Element x = 0; x < preorder.size(); ++x) {
    if (subset[x]) continue;
    for (Element y = 0; y < preorder.size(); ++y)
      if (subset[y] && preorder(x, y)) return IdealViolation{x, y};
  }
  return std::nullopt;
}

std::optional<ClassViolation> union_of_classes_check(const std::vector<bool>& subset,
                                                     const std::vector<std::vector<Element>>& partition) {
  for (const auto& cls : partition) {
    std::optional<Element> in, out;
    for (auto x : cls) {
      if (subset[x] && !in) in = x;
      if (!subset[x] && !out) out = x;
    }
    if (in && out) return ClassViolation{cls, *in, *out};
  }
  return std::nullopt;
}

// ------------------------------------------------- stabilized factorizations

std::optional<PrefixStabilizer> find_stabilized_prefix(const FiniteSemigroup& s, std::span<const Element> word) {
  const auto idem = idempotents(s);
  const auto limit = std::min(word.size(), s.size());
  Element p = 0;
  for (std::size_t len = 1; len <= limit; ++len) {
    p = len == 1 ? word[0] : s.mul(p, word[len - 1]);
    for (auto e : idem)
      if (s.mul(p, e) == p) return PrefixStabilizer{len, e};
  }
  return std::nullopt;
}

PrefixStabilizer stabilized_prefix(const FiniteSemigroup& s, std::span<const Element> word) {
  if (word.size() < s.size())
    throw PreconditionError("stabilized prefix needs a word of length >= |S| = " + std::to_string(s.size()));
  auto r = find_stabilized_prefix(s, word);
  if (!r) throw InternalError("no stabilized prefix in a word of length >= |S|");
  return *r;
}

std::size_t StabilizedFactorization::kept_length() const {
  std::size_t total = tail;
  for (const auto& seg : segments) total += seg.x + seg.y;
  return total;
}

namespace {

// Does e stabilize some factor of `word` of length 1..|S|?
bool stabilizes_short_factor(const FiniteSemigroup& s, std::span<const Element> word, Element e) {
  for (std::size_t i = 0; i < word.size(); ++i) {
    Element p = word[i];
    for (std::size_t len = 1; len <= s.size() && i + len <= word.size(); ++len) {
      if (len > 1) p = s.mul(p, word[i + len - 1]);
      if (s.mul(p, e) == p) return true;
    }
  }
  return false;
}

}  // namespace

StabilizedFactorization stabilized_factorization(const FiniteSemigroup& s, std::span<const Element> word) {
  StabilizedFactorization f;
  if (word.empty()) return f;
  auto pre = find_stabilized_prefix(s, word);
  if (!pre) {
    // No stabilized prefix: the word is shorter than |S|.
    f.tail = word.size();
    return f;
  }
  const auto x = pre->length;
  const auto e = pre->idempotent;
  auto rest = word.subspan(x);

  if (!stabilizes_short_factor(s, rest, e)) {
    f = stabilized_factorization(s, rest);
    if (f.m() >= 1)
      f.segments.front().x += x;
    else
      f.tail += x;
    return f;
  }

  // Last short factor y0 of `rest` stabilized by e: latest end, then shortest.
  std::size_t bestEnd = 0, bestLen = 0;
  for (std::size_t end = rest.size(); end >= 1 && bestLen == 0; --end) {
    for (std::size_t len = 1; len <= s.size() && len <= end; ++len) {
      auto y = rest.subspan(end - len, len);
      Element v = s.eval(y);
      if (s.mul(v, e) == v) {
        bestEnd = end;
        bestLen = len;
        break;
      }
    }
  }
  f = stabilized_factorization(s, rest.subspan(bestEnd));
  f.segments.insert(f.segments.begin(), StabilizedSegment{x, bestEnd - bestLen, bestLen, e});
  return f;
}

std::string factorization_violation(const FiniteSemigroup& s, std::span<const Element> word,
                                    const StabilizedFactorization& f) {
  std::ostringstream err;
  const auto n = s.size();
  std::size_t pos = 0;
  for (std::size_t i = 0; i < f.m(); ++i) {
    const auto& seg = f.segments[i];
    if (seg.x == 0 || seg.y == 0) return "segment " + std::to_string(i) + " has an empty x or y";
    if (seg.y > n) return "segment " + std::to_string(i) + " has |y| > |S|";
    if (pos + seg.x + seg.w + seg.y > word.size()) return "segments overrun the word";
    if (!is_idempotent(s, seg.idempotent)) return "segment " + std::to_string(i) + " carries a non-idempotent";
    Element xv = s.eval(word.subspan(pos, seg.x));
    Element yv = s.eval(word.subspan(pos + seg.x + seg.w, seg.y));
    if (s.mul(xv, seg.idempotent) != xv) return "x_" + std::to_string(i + 1) + " is not stabilized by its idempotent";
    if (s.mul(yv, seg.idempotent) != yv) return "y_" + std::to_string(i + 1) + " is not stabilized by its idempotent";
    pos += seg.x + seg.w + seg.y;
  }
  if (pos + f.tail != word.size()) return "factorization does not reproduce the word";
  if (f.m() > n) return "m exceeds |S|";
  if (f.kept_length() >= 2 * n * n + n) {
    err << "|x_1 y_1 ... x_m y_m s| = " << f.kept_length() << " is not below 2|S|^2+|S| = " << 2 * n * n + n;
    return err.str();
  }
  return {};
}

}  // namespace dotdepth
