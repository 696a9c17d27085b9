#include "dotdepth/monomials.hpp"

#include <algorithm>
#include <set>

#include "dotdepth/identities.hpp"
#include "nfa.hpp"

namespace dotdepth {

std::string anchor_name(Anchor a) {
  switch (a) {
    case Anchor::Both: return "BOTH";
    case Anchor::Left: return "LEFT";
    case Anchor::Right: return "RIGHT";
    case Anchor::None: return "NONE";
  }
  return "?";
}

namespace {

Gap merge_gaps(Gap a, Gap b) {
  if (a == Gap::None) return b;
  if (b == Gap::None) return a;
  if (a == Gap::Plus || b == Gap::Plus) return Gap::Plus;
  return Gap::Star;
}

const char* gap_token(Gap g) { return g == Gap::Star ? "<*>" : "<+>"; }

}  // namespace

Monomial::Monomial(std::vector<Word> blocks, std::vector<Gap> gaps) : blocks_(std::move(blocks)), gaps_(std::move(gaps)) {
  if (gaps_.size() != blocks_.size() + 1)
    throw InputError("monomial with " + std::to_string(blocks_.size()) + " blocks needs " +
                     std::to_string(blocks_.size() + 1) + " gaps");
  for (std::size_t i = 1; i + 1 < gaps_.size(); ++i)
    if (gaps_[i] == Gap::None) throw InputError("inner gap " + std::to_string(i) + " of a monomial is NONE");
  canonicalize();
}

void Monomial::canonicalize() {
  for (std::size_t i = 0; i < blocks_.size();) {
    Gap a = gaps_[i], b = gaps_[i + 1];
    bool keep = !blocks_[i].empty() || (a == Gap::Plus && b == Gap::Plus) || (a == Gap::None && b == Gap::None);
    if (keep) {
      ++i;
      continue;
    }
    blocks_.erase(blocks_.begin() + i);
    gaps_[i] = merge_gaps(a, b);
    gaps_.erase(gaps_.begin() + i + 1);
  }
}

Monomial Monomial::shaped(Anchor anchor, std::vector<Word> blocks, Gap kind) {
  if (kind == Gap::None) throw InputError("monomial gap kind must be STAR or PLUS");
  std::vector<Gap> gaps(blocks.size() + 1, kind);
  if (anchor == Anchor::Both || anchor == Anchor::Left) gaps.front() = Gap::None;
  if (anchor == Anchor::Both || anchor == Anchor::Right) gaps.back() = Gap::None;
  if (blocks.empty() && gaps.size() == 1 && anchor != Anchor::None) gaps.front() = kind;
  return Monomial(std::move(blocks), std::move(gaps));
}

std::size_t Monomial::degree() const {
  std::size_t d = 0;
  for (const auto& b : blocks_) d += b.size();
  return d;
}

Anchor Monomial::anchor() const {
  bool l = left() == Gap::None, r = right() == Gap::None;
  if (l && r) return Anchor::Both;
  if (l) return Anchor::Left;
  if (r) return Anchor::Right;
  return Anchor::None;
}

bool Monomial::uniform(Gap kind) const {
  for (std::size_t i = 0; i < gaps_.size(); ++i) {
    bool boundary = i == 0 || i + 1 == gaps_.size();
    if (gaps_[i] == kind || (boundary && gaps_[i] == Gap::None)) continue;
    return false;
  }
  return true;
}

std::string Monomial::to_string() const {
  std::string out;
  auto add = [&](std::string_view t) {
    if (!out.empty()) out += ' ';
    out += t;
  };
  if (gaps_.front() != Gap::None) add(gap_token(gaps_.front()));
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    add("\"" + blocks_[i] + "\"");
    if (gaps_[i + 1] != Gap::None) add(gap_token(gaps_[i + 1]));
  }
  return out;
}

std::strong_ordering Monomial::operator<=>(const Monomial& o) const {
  if (auto c = degree() <=> o.degree(); c != 0) return c;
  if (auto c = blocks_.size() <=> o.blocks_.size(); c != 0) return c;
  if (auto c = blocks_ <=> o.blocks_; c != 0) return c;
  return gaps_ <=> o.gaps_;
}

Monomial parse_monomial(std::string_view text) {
  std::vector<Word> blocks;
  std::vector<Gap> gaps;
  bool lastWasGap = false;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == ' ' || c == '\t' || c == '\n') {
      ++i;
      continue;
    }
    if (c == '<') {
      if (text.substr(i, 3) != "<*>" && text.substr(i, 3) != "<+>") throw SyntaxError("expected <*> or <+>", i);
      if (lastWasGap) throw SyntaxError("two gap tokens in a row", i);
      gaps.push_back(text[i + 1] == '*' ? Gap::Star : Gap::Plus);
      lastWasGap = true;
      i += 3;
    } else if (c == '"') {
      auto close = text.find('"', i + 1);
      if (close == std::string_view::npos) throw SyntaxError("unterminated block", i);
      if (!blocks.empty() && !lastWasGap) throw SyntaxError("blocks must be separated by a gap token", i);
      if (blocks.empty() && !lastWasGap) gaps.push_back(Gap::None);
      blocks.emplace_back(text.substr(i + 1, close - i - 1));
      lastWasGap = false;
      i = close + 1;
    } else {
      throw SyntaxError(std::string("unexpected character '") + c + "'", i);
    }
  }
  if (gaps.empty() && blocks.empty()) throw SyntaxError("empty monomial text (write <*>)", 0);
  if (!lastWasGap) gaps.push_back(Gap::None);
  return Monomial(std::move(blocks), std::move(gaps));
}

bool member(const Monomial& m, std::string_view w) {
  const auto& blocks = m.blocks();
  const auto& gaps = m.gaps();
  const auto n = w.size();
  // reach[p]: the prefix of length p can end right after the current gap.
  std::vector<char> reach(n + 1, 0), next(n + 1, 0);
  reach[0] = 1;
  auto apply_gap = [&](Gap g) {
    std::vector<char> out(n + 1, 0);
    bool seen = false;
    for (std::size_t p = 0; p <= n; ++p) {
      switch (g) {
        case Gap::None: out[p] = reach[p]; break;
        case Gap::Star:
          seen = seen || reach[p];
          out[p] = seen;
          break;
        case Gap::Plus:
          out[p] = seen;
          seen = seen || reach[p];
          break;
      }
    }
    reach.swap(out);
  };
  apply_gap(gaps[0]);
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const auto& b = blocks[i];
    std::fill(next.begin(), next.end(), 0);
    for (std::size_t p = 0; p + b.size() <= n; ++p)
      if (reach[p] && w.compare(p, b.size(), b) == 0) next[p + b.size()] = 1;
    reach.swap(next);
    apply_gap(gaps[i + 1]);
  }
  return reach[n];
}

Dfa to_dfa(const Monomial& m, const Alphabet& alphabet) {
  for (const auto& b : m.blocks()) alphabet.validate(b);
  detail::NfaBuilder nfa(alphabet);
  auto gap = [&](Gap g) {
    switch (g) {
      case Gap::None: return nfa.epsilon();
      case Gap::Star: return nfa.star(nfa.any_letter());
      case Gap::Plus: return nfa.plus(nfa.any_letter());
    }
    return nfa.epsilon();
  };
  auto frag = gap(m.gaps()[0]);
  for (std::size_t i = 0; i < m.blocks().size(); ++i) {
    for (char c : m.blocks()[i]) frag = nfa.concat(frag, nfa.letter(alphabet.index_of(c)));
    frag = nfa.concat(frag, gap(m.gaps()[i + 1]));
  }
  return minimize(without_epsilon(nfa.determinize(frag)));
}

Dfa union_dfa(const std::vector<Monomial>& ms, const Alphabet& alphabet) {
  Dfa acc(alphabet, 1, 0);
  for (Letter a = 0; a < alphabet.size(); ++a) acc.set_next(0, a, 0);
  for (const auto& m : ms) acc = product(acc, to_dfa(m, alphabet), BoolOp::Or);
  return minimize(acc);
}

Monomial open_boundaries(const Monomial& m, Anchor anchor) {
  auto gaps = m.gaps();
  if ((anchor == Anchor::Right || anchor == Anchor::None) && gaps.front() == Gap::None) gaps.front() = Gap::Star;
  if ((anchor == Anchor::Left || anchor == Anchor::None) && gaps.back() == Gap::None) gaps.back() = Gap::Star;
  return Monomial(m.blocks(), std::move(gaps));
}

std::vector<Monomial> expand_plus(const Monomial& m, const Alphabet& alphabet) {
  for (auto g : m.gaps())
    if (g == Gap::Star) throw PreconditionError("expand_plus expects PLUS gaps only, got " + m.to_string());
  for (const auto& b : m.blocks()) alphabet.validate(b);

  const auto& gaps = m.gaps();
  const auto n = m.blocks().size();
  std::vector<std::size_t> plusAt;
  for (std::size_t i = 0; i < gaps.size(); ++i)
    if (gaps[i] == Gap::Plus) plusAt.push_back(i);

  std::set<Monomial> out;
  std::vector<std::size_t> choice(plusAt.size(), 0);
  for (;;) {
    auto blocks = m.blocks();
    std::vector<Gap> g(gaps);
    Word lead;
    for (std::size_t k = 0; k < plusAt.size(); ++k) {
      const char c = alphabet.at(choice[k]);
      const auto i = plusAt[k];
      g[i] = Gap::Star;
      if (i == 0) {
        lead = std::string(1, c);
      } else {
        blocks[i - 1] += c;
      }
    }
    if (!lead.empty()) {
      if (n == 0) {
        // Zero blocks: Γ⁺ = ∪ c Γ*.
        blocks = {lead};
        g = {Gap::None, Gap::Star};
      } else {
        // Γ⁺ w = ∪ Γ* c w
        blocks.front() = lead + blocks.front();
      }
    }
    out.insert(Monomial(std::move(blocks), std::move(g)));

    std::size_t k = choice.size();
    while (k > 0 && choice[k - 1] + 1 == alphabet.size()) choice[--k] = 0;
    if (k == 0) break;
    ++choice[k - 1];
  }
  return {out.begin(), out.end()};
}

namespace {

/// g_j w_{j+1} ... w_n g_n: what may follow the first j blocks of p.
Monomial tail_from(const Monomial& p, std::size_t j) {
  std::vector<Word> blocks(p.blocks().begin() + j, p.blocks().end());
  std::vector<Gap> gaps{p.gaps()[j]};
  for (std::size_t i = j + 1; i <= p.blocks().size(); ++i) gaps.push_back(p.gaps()[i]);
  return Monomial(std::move(blocks), std::move(gaps));
}

/// g_0 w_1 Γ* ... w_k Γ* last   (last pinned to the end)
Monomial head_then(const Monomial& p, std::size_t k, Word last) {
  std::vector<Word> blocks(p.blocks().begin(), p.blocks().begin() + k);
  blocks.push_back(std::move(last));
  std::vector<Gap> gaps{p.gaps().front()};
  for (std::size_t i = 0; i < k; ++i) gaps.push_back(Gap::Star);
  gaps.push_back(Gap::None);
  return Monomial(std::move(blocks), std::move(gaps));
}

/// w_k ... as in p but pinned on the left: w_k Γ* w_{k+1} ... w_n g_n
Monomial pinned_from(const Monomial& p, std::size_t k) {
  std::vector<Word> blocks(p.blocks().begin() + k, p.blocks().end());
  std::vector<Gap> gaps{Gap::None};
  for (std::size_t i = k + 1; i <= p.blocks().size(); ++i) gaps.push_back(p.gaps()[i]);
  return Monomial(std::move(blocks), std::move(gaps));
}

}  // namespace

Monomial quotient_monomial(const Monomial& p, std::string_view u, std::string_view q) {
  if (u.empty() || q.empty()) throw PreconditionError("quotient_monomial needs non-empty u and q");
  if (!p.uniform(Gap::Star)) throw PreconditionError("quotient_monomial expects a STAR monomial, got " + p.to_string());
  const std::string uq = std::string(u) + std::string(q);
  if (!member(p, uq)) throw PreconditionError("uq = " + uq + " is not in " + p.to_string());

  const auto n = p.blocks().size();
  std::size_t j = 0;
  while (j < n && !member(tail_from(p, j), q)) ++j;

  // Longest y: proper non-empty prefix of w_{j-1} (0-based: blocks[j-1]) that
  // ends u and lets yq start a match of w_{j-1} ... w_n.
  if (j >= 1) {
    const auto& prev = p.blocks()[j - 1];
    const auto rest = pinned_from(p, j - 1);
    for (std::size_t len = prev.size() == 0 ? 0 : prev.size() - 1; len >= 1; --len) {
      std::string_view y(prev.data(), len);
      if (u.size() < len || u.substr(u.size() - len) != y) continue;
      const std::string yq = std::string(y) + std::string(q);
      if (!member(rest, yq)) continue;
      auto cand = head_then(p, j - 1, yq);
      if (member(cand, uq)) return cand;
    }
  }
  auto cand = head_then(p, j, std::string(q));
  if (member(cand, uq)) return cand;

  // The proof's choice does not embed uq (possible only at the left edge):
  // search the head length k and the longest y ending u with yq in the tail.
  for (std::size_t k = n + 1; k-- > 0;) {
    const auto tail = tail_from(p, k);
    std::size_t room = 0;
    for (std::size_t i = k; i < n; ++i) room += p.blocks()[i].size();
    for (std::size_t len = std::min(u.size(), room) + 1; len-- > 0;) {
      const std::string yq = std::string(u.substr(u.size() - len)) + std::string(q);
      if (!member(tail, yq)) continue;
      auto c = head_then(p, k, yq);
      if (member(c, uq)) return c;
    }
  }
  throw InternalError("no quotient monomial found for " + p.to_string() + ", u=" + std::string(u) +
                      ", q=" + std::string(q));
}

Monomial descent_monomial(const SyntacticData& data, const GreenStructure& g, std::string_view u) {
  const auto& S = data.semigroup;
  std::vector<Word> blocks{""};
  std::size_t end = u.size();
  // Collect the descent points from the right: u = v a w with h(va) the first
  // prefix image R-equivalent to h(v a w).
  std::vector<std::size_t> cuts;  // start index of each a w part, left to right after reversal
  while (end > 0) {
    const Element target = data.eval(u.substr(0, end));
    std::size_t j = 1;
    while (!g.R(data.eval(u.substr(0, j)), target)) ++j;
    cuts.push_back(j - 1);
    end = j - 1;
  }
  std::reverse(cuts.begin(), cuts.end());
  for (std::size_t k = 0; k < cuts.size(); ++k) {
    const std::size_t from = cuts[k];
    const std::size_t to = k + 1 < cuts.size() ? cuts[k + 1] : u.size();
    const auto w = u.substr(from, to - from);
    const auto images = data.images(w);
    const auto f = stabilized_factorization(S, images);
    std::size_t pos = 0;
    for (const auto& seg : f.segments) {
      blocks.back() += w.substr(pos, seg.x);
      pos += seg.x + seg.w;
      blocks.emplace_back(w.substr(pos, seg.y));
      pos += seg.y;
    }
    blocks.back() += w.substr(pos, f.tail);
  }
  std::vector<Gap> gaps(blocks.size() + 1, Gap::Star);
  gaps.front() = gaps.back() = Gap::None;
  return Monomial(std::move(blocks), std::move(gaps));
}

Monomial generalize_within(const Monomial& p, const Dfa& language) {
  Monomial cur = p;
  for (std::size_t i = 0; i < cur.block_count();) {
    auto blocks = cur.blocks();
    auto gaps = cur.gaps();
    blocks.erase(blocks.begin() + i);
    gaps[i] = merge_gaps(merge_gaps(gaps[i], gaps[i + 1]), Gap::Star);
    gaps.erase(gaps.begin() + i + 1);
    Monomial cand(std::move(blocks), std::move(gaps));
    if (!shortest_accepted(product(to_dfa(cand, language.alphabet()), language, BoolOp::Minus))) {
      cur = std::move(cand);
      i = 0;
    } else {
      ++i;
    }
  }
  return cur;
}

Cover cover(const SyntacticData& data, Anchor anchor, bool generalize) {
  const auto& S = data.semigroup;
  if (!S.has_order()) throw PreconditionError("cover needs the syntactic order");
  if (!check_b_half(S).holds) throw PreconditionError("cover requires x^w y x^w <= x^w");
  const auto g = green(S);
  if (anchor != Anchor::Both) {
    const Relation& pre = anchor == Anchor::Left ? g.leqR : anchor == Anchor::Right ? g.leqL : g.leqJ;
    const char* rel = anchor == Anchor::Left ? "<=_R" : anchor == Anchor::Right ? "<=_L" : "<=_J";
    if (auto v = order_ideal_check(data.inImage, pre))
      throw PreconditionError(std::string("h(L) is not a ") + rel + "-order ideal: " + S.name(v->below) + " " + rel +
                              " " + S.name(v->above));
  }

  const auto n = S.size();
  Cover c;
  c.boundDegree = 2 * n * n * n + n * n;
  c.boundCount = n * n;

  const Dfa& L = data.sourceDfa;
  const Alphabet& alphabet = L.alphabet();
  std::set<Monomial> found;
  Dfa acc = union_dfa({}, alphabet);
  for (;;) {
    auto eq = equivalent(L, acc);
    if (eq.equal) break;
    const Word& u = *eq.counterexample;
    if (!accepts(L, u))
      throw InternalError("cover monomial escapes L: " + u + " is accepted by the union but not by L");
    auto p = descent_monomial(data, g, u);
    if (generalize) p = generalize_within(p, L);
    if (!found.insert(p).second) throw InternalError("cover generator repeated " + p.to_string() + " for " + u);
    acc = minimize(product(acc, to_dfa(p, alphabet), BoolOp::Or));
  }

  std::set<Monomial> shaped;
  for (const auto& p : found) shaped.insert(open_boundaries(p, anchor));
  c.monomials.assign(shaped.begin(), shaped.end());
  if (anchor == Anchor::Both) {
    c.verifiedEquivalent = true;
  } else {
    auto eq = equivalent(L, union_dfa(c.monomials, alphabet));
    if (!eq.equal)
      throw InternalError("opened " + anchor_name(anchor) + " cover differs from L on " + *eq.counterexample);
    c.verifiedEquivalent = true;
  }
  return c;
}

}  // namespace dotdepth
