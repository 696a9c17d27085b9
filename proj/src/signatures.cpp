#include "dotdepth/signatures.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <unordered_map>

#include "dotdepth/identities.hpp"

namespace dotdepth {

namespace {

bool left_may_pin(Anchor f) { return f == Anchor::Both || f == Anchor::Left; }
bool right_may_pin(Anchor f) { return f == Anchor::Both || f == Anchor::Right; }

struct Enumerator {
  std::string_view w;
  const FamilySpec& spec;
  std::size_t limit;
  std::set<Monomial> out;
  std::vector<Word> blocks;
  Gap left = Gap::Star;

  void emit(Gap right) {
    std::vector<Gap> gaps(blocks.size() + 1, spec.gapKind);
    gaps.front() = left;
    gaps.back() = right;
    out.insert(Monomial(blocks, std::move(gaps)));
    if (out.size() > limit)
      throw ResourceError("signature exceeds " + std::to_string(limit) + " monomials; lower the caps");
  }

  // Place the next block at some start >= from.
  void extend(std::size_t from, std::size_t degree) {
    if (blocks.size() == spec.blockCap) return;
    const auto n = w.size();
    std::size_t lo = from, hi = n;
    if (blocks.empty() && left == Gap::None) hi = 0;
    for (std::size_t s = lo; s <= hi && s < n; ++s)
      for (std::size_t len = 1; s + len <= n && degree + len <= spec.degreeCap; ++len) {
        blocks.emplace_back(w.substr(s, len));
        const auto end = s + len;
        if (end == n && right_may_pin(spec.flavor)) emit(Gap::None);
        if (spec.gapKind == Gap::Star || end < n) emit(spec.gapKind);
        extend(spec.gapKind == Gap::Star ? end : end + 1, degree + len);
        blocks.pop_back();
      }
  }
};

std::size_t relation_bound(Anchor flavor, std::size_t n) {
  switch (flavor) {
    case Anchor::Both: return 4 * n * n;
    case Anchor::Left:
    case Anchor::Right: return 8 * n * n;
    case Anchor::None: return 12 * n * n;
  }
  return 0;
}

bool related(const GreenStructure& g, Anchor flavor, Element x, Element y) {
  switch (flavor) {
    case Anchor::Both: return x == y;
    case Anchor::Left: return g.R(x, y);
    case Anchor::Right: return g.L(x, y);
    case Anchor::None: return g.J(x, y);
  }
  return false;
}

void require_knast(const SyntacticData& data) {
  if (!check_knast(data.semigroup).holds)
    throw PreconditionError("signature refinement is only claimed for semigroups satisfying Knast's identity");
}

Monomial everything(Gap kind) { return Monomial({}, {kind}); }

}  // namespace

std::vector<Monomial> signature(std::string_view w, const FamilySpec& spec, std::size_t sizeLimit) {
  if (w.empty()) throw InputError("signatures are defined for non-empty words");
  if (spec.gapKind == Gap::None) throw InputError("signature gap kind must be STAR or PLUS");
  Enumerator e{w, spec, sizeLimit, {}, {}, Gap::Star};
  e.out.insert(everything(spec.gapKind));
  std::vector<Gap> lefts{spec.gapKind};
  if (left_may_pin(spec.flavor)) lefts.insert(lefts.begin(), Gap::None);
  for (Gap l : lefts) {
    e.left = l;
    e.extend(l == Gap::Plus ? 1 : 0, 0);
  }
  return {e.out.begin(), e.out.end()};
}

bool in_family(const Monomial& m, const FamilySpec& spec) {
  if (m.block_count() == 0) return m.gaps().front() == spec.gapKind;
  if (m.degree() > spec.degreeCap || m.block_count() > spec.blockCap) return false;
  for (const auto& b : m.blocks())
    if (b.empty()) return false;
  const auto& g = m.gaps();
  for (std::size_t i = 1; i + 1 < g.size(); ++i)
    if (g[i] != spec.gapKind) return false;
  if (g.front() != spec.gapKind && !(g.front() == Gap::None && left_may_pin(spec.flavor))) return false;
  if (g.back() != spec.gapKind && !(g.back() == Gap::None && right_may_pin(spec.flavor))) return false;
  return true;
}

RefineResult refine_check(const SyntacticData& data, const FamilySpec& spec, std::size_t maxLen) {
  require_knast(data);
  const auto g = green(data.semigroup);
  RefineResult r;
  std::map<std::vector<Monomial>, std::pair<Word, Element>> buckets;
  for_each_word(data.sourceDfa.alphabet(), maxLen, [&](const Word& w) {
    ++r.words;
    const Element img = data.eval(w);
    auto [it, fresh] = buckets.try_emplace(signature(w, spec), w, img);
    if (!fresh && !related(g, spec.flavor, it->second.second, img)) {
      r.refines = false;
      r.witness = std::pair{it->second.first, w};
      return false;
    }
    return true;
  });
  r.buckets = buckets.size();
  return r;
}

RefiningDegree minimal_refining_degree(const SyntacticData& data, Anchor flavor, std::size_t maxLen) {
  require_knast(data);
  const auto n = data.semigroup.size();
  const auto g = green(data.semigroup);
  RefiningDegree out;
  out.bound = relation_bound(flavor, n);
  const std::size_t blockCap = flavor == Anchor::Both ? 2 * n : maxLen;

  // Signatures at the largest useful degree; smaller caps are filters.
  std::map<Monomial, std::size_t> ids;
  std::vector<std::size_t> degreeOf;
  std::vector<std::pair<std::vector<std::size_t>, Element>> words;
  for_each_word(data.sourceDfa.alphabet(), maxLen, [&](const Word& w) {
    std::vector<std::size_t> sig;
    for (auto& m : signature(w, {flavor, maxLen, blockCap, Gap::Star})) {
      auto [it, fresh] = ids.try_emplace(m, ids.size());
      if (fresh) degreeOf.push_back(m.degree());
      sig.push_back(it->second);
    }
    words.emplace_back(std::move(sig), data.eval(w));
    return true;
  });

  for (std::size_t d = 0; d <= maxLen; ++d) {
    std::map<std::vector<std::size_t>, Element> buckets;
    bool ok = true;
    for (const auto& [sig, img] : words) {
      std::vector<std::size_t> key;
      for (auto id : sig)
        if (degreeOf[id] <= d) key.push_back(id);
      auto [it, fresh] = buckets.try_emplace(std::move(key), img);
      if (!fresh && !related(g, flavor, it->second, img)) {
        ok = false;
        break;
      }
    }
    if (ok) {
      out.degree = d;
      out.blockCap = flavor == Anchor::Both ? blockCap : d;
      out.buckets = buckets.size();
      out.withinBound = d < out.bound;
      return out;
    }
  }
  throw InternalError("no degree up to the word length separates the images");
}

nlohmann::json Combination::to_json() const {
  using nlohmann::json;
  switch (kind) {
    case Kind::True: return "⊤";
    case Kind::False: return "⊥";
    case Kind::Member: return monomial.to_string();
    case Kind::Not: return json{{"not", children.front().to_json()}};
    case Kind::And:
    case Kind::Or: {
      json arr = json::array();
      for (const auto& c : children) arr.push_back(c.to_json());
      return json{{kind == Kind::And ? "and" : "or", arr}};
    }
  }
  return nullptr;
}

nlohmann::json BooleanDescription::to_json() const {
  return {{"combination", combination.to_json()},
          {"verified", verified},
          {"witness", witness ? nlohmann::json(*witness) : nlohmann::json(nullptr)},
          {"degreeCap", spec.degreeCap},
          {"blockCap", spec.blockCap}};
}

namespace {

Combination junction(Combination::Kind k, std::vector<Combination> cs) {
  if (cs.size() == 1) return std::move(cs.front());
  Combination c;
  if (cs.empty()) {
    c.kind = k == Combination::Kind::And ? Combination::Kind::True : Combination::Kind::False;
    return c;
  }
  c.kind = k;
  c.children = std::move(cs);
  return c;
}

struct VectorHash {
  template <typename T>
  std::size_t operator()(const std::vector<T>& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto x : v) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
    return h;
  }
};

using Bits = std::vector<std::uint64_t>;

struct Probe {
  Word word;
  bool inL;
  Bits bits;  // members among the family
};

/// Members of `w` among the (sorted) family as a bitset.
Bits family_bits(std::string_view w, const FamilySpec& spec, const std::vector<Monomial>& family) {
  Bits b((family.size() + 63) / 64, 0);
  for (const auto& m : signature(w, spec)) {
    auto it = std::lower_bound(family.begin(), family.end(), m);
    if (it != family.end() && *it == m) {
      const auto i = static_cast<std::size_t>(it - family.begin());
      b[i / 64] |= std::uint64_t{1} << (i % 64);
    }
  }
  return b;
}

bool test_bit(const Bits& b, std::size_t i) { return (b[i / 64] >> (i % 64)) & 1; }

/// True iff no two probes agree on every monomial of `mask` but differ on L.
/// On failure `clash` receives the two probe indices.
bool separates(const std::vector<Probe>& probes, const Bits& mask, std::pair<std::size_t, std::size_t>* clash = nullptr) {
  std::unordered_map<Bits, std::size_t, VectorHash> first;
  Bits key(mask.size());
  for (std::size_t i = 0; i < probes.size(); ++i) {
    for (std::size_t k = 0; k < mask.size(); ++k) key[k] = probes[i].bits[k] & mask[k];
    auto [it, fresh] = first.try_emplace(key, i);
    if (!fresh && probes[it->second].inL != probes[i].inL) {
      if (clash) *clash = {it->second, i};
      return false;
    }
  }
  return true;
}

Combination literal(const Monomial& m, bool positive) {
  Combination c;
  c.kind = Combination::Kind::Member;
  c.monomial = m;
  if (positive) return c;
  Combination neg;
  neg.kind = Combination::Kind::Not;
  neg.children.push_back(std::move(c));
  return neg;
}

}  // namespace

BooleanDescription boolean_combination(const SyntacticData& data, const FamilySpec& spec, std::size_t probeLength) {
  const Dfa& L = data.sourceDfa;
  const Alphabet& alphabet = L.alphabet();
  BooleanDescription out;
  out.spec = spec;
  out.probeLength = probeLength ? probeLength : std::max({std::size_t{8}, 2 * data.semigroup.size(), spec.degreeCap});

  // The family: every monomial met by a probe word. Since the probe length is
  // at least the degree cap, this is the whole family except the zero-block
  // monomial, which contains every word and carries no information.
  std::set<Monomial> familySet;
  std::vector<std::pair<Word, bool>> words;
  const Monomial top = everything(spec.gapKind);
  for_each_word(alphabet, out.probeLength, [&](const Word& w) {
    for (auto& m : signature(w, spec))
      if (m != top) familySet.insert(std::move(m));
    words.emplace_back(w, accepts(L, w));
    return true;
  });
  const std::vector<Monomial> family(familySet.begin(), familySet.end());
  std::vector<Probe> probes;
  for (auto& [w, in] : words) probes.push_back({w, in, family_bits(w, spec, family)});

  const std::size_t limbs = (family.size() + 63) / 64;
  Bits full(limbs, 0);
  for (std::size_t i = 0; i < family.size(); ++i) full[i / 64] |= std::uint64_t{1} << (i % 64);

  for (;;) {
    std::pair<std::size_t, std::size_t> clash;
    if (!separates(probes, full, &clash)) {
      // Two words with the same signature, one in L: no combination works.
      const auto& [i, j] = clash;
      out.verified = false;
      out.witness = probes[i].inL ? probes[j].word : probes[i].word;
      return out;
    }
    // Keep only the monomials needed to separate the probes, dropping the
    // largest first.
    Bits mask = full;
    for (std::size_t i = family.size(); i-- > 0;) {
      mask[i / 64] &= ~(std::uint64_t{1} << (i % 64));
      if (!separates(probes, mask)) mask[i / 64] |= std::uint64_t{1} << (i % 64);
    }
    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < family.size(); ++i)
      if (test_bit(mask, i)) kept.push_back(i);

    // Breadth-first search over L x (kept monomial DFAs). Every reachable
    // tuple is a bucket of the projected signature; a bucket met inside and
    // outside L yields two new probe words.
    std::vector<Dfa> dfas;
    for (auto i : kept) dfas.push_back(to_dfa(family[i], alphabet));
    if (L.state_count() > 65535) throw ResourceError("language DFA too large for verification");
    for (const auto& d : dfas)
      if (d.state_count() > 65535) throw ResourceError("family monomial DFA too large");
    using Key = std::vector<std::uint16_t>;
    std::unordered_map<Key, std::size_t, VectorHash> seen;
    std::vector<std::pair<std::size_t, char>> parent;  // predecessor id, letter
    std::deque<std::pair<Key, std::size_t>> queue;
    Key start(dfas.size() + 1);
    start[0] = static_cast<std::uint16_t>(L.initial());
    for (std::size_t i = 0; i < dfas.size(); ++i) start[i + 1] = static_cast<std::uint16_t>(dfas[i].initial());
    seen.emplace(start, 0);
    parent.emplace_back(0, 0);
    queue.emplace_back(start, 0);
    auto word_of = [&](std::size_t id) {
      Word w;
      for (; id != 0; id = parent[id].first) w += parent[id].second;
      std::reverse(w.begin(), w.end());
      return w;
    };
    std::map<std::vector<bool>, std::pair<bool, std::size_t>> buckets;  // -> (in L, word id)
    std::optional<std::pair<Word, Word>> conflict;
    bool startBucketed = false;
    while (!queue.empty() && !conflict) {
      auto [cur, curId] = std::move(queue.front());
      queue.pop_front();
      for (Letter a = 0; a < alphabet.size() && !conflict; ++a) {
        Key nxt(cur.size());
        nxt[0] = static_cast<std::uint16_t>(L.next(cur[0], a));
        for (std::size_t i = 0; i < dfas.size(); ++i)
          nxt[i + 1] = static_cast<std::uint16_t>(dfas[i].next(cur[i + 1], a));
        auto [it, fresh] = seen.try_emplace(nxt, parent.size());
        // The start tuple is only reached by ε at first; it still needs a
        // bucket when a non-empty word returns to it.
        const bool revisitStart = !fresh && it->second == 0 && !startBucketed;
        if (!fresh && !revisitStart) continue;
        if (revisitStart) startBucketed = true;
        const std::size_t id = parent.size();
        parent.emplace_back(curId, alphabet.at(a));
        std::vector<bool> bits(dfas.size());
        for (std::size_t i = 0; i < dfas.size(); ++i) bits[i] = dfas[i].accepting(nxt[i + 1]);
        const bool here = L.accepting(nxt[0]);
        auto [b, added] = buckets.try_emplace(std::move(bits), here, id);
        if (!added && b->second.first != here) conflict = std::pair{word_of(b->second.second), word_of(id)};
        if (fresh) queue.emplace_back(std::move(nxt), id);
      }
    }
    if (conflict) {
      for (const auto& w : {conflict->first, conflict->second})
        probes.push_back({w, accepts(L, w), family_bits(w, spec, family)});
      continue;
    }

    std::vector<Combination> disjuncts;
    for (const auto& [bits, entry] : buckets) {
      if (!entry.first) continue;
      std::vector<Combination> lits;
      for (std::size_t k = 0; k < kept.size(); ++k) lits.push_back(literal(family[kept[k]], bits[k]));
      disjuncts.push_back(junction(Combination::Kind::And, std::move(lits)));
    }
    out.combination = junction(Combination::Kind::Or, std::move(disjuncts));
    out.verified = true;
    return out;
  }
}

}  // namespace dotdepth
