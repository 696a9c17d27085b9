#include "dotdepth/corpus.hpp"

namespace dotdepth {

const std::vector<CorpusLanguage>& golden_corpus() {
  constexpr bool Y = true, N = false;
  static const std::vector<CorpusLanguage> corpus{
      {"G+", "ab", ".+", {Y, Y, Y, Y, Y, Y, Y, Y}},
      {"empty", "ab", "[a&b]", {Y, Y, Y, Y, Y, Y, Y, Y}},
      {"G*abG*", "ab", ".*ab.*", {Y, Y, Y, Y, Y, Y, Y, Y}},
      {"aG*", "ab", "a.*", {Y, Y, N, N, Y, Y, N, N}},
      {"G*a", "ab", ".*a", {Y, N, Y, N, Y, N, Y, N}},
      {"aG*b", "ab", "a.*b", {Y, N, N, N, Y, N, N, N}},
      {"(ab)+", "ab", "(ab)+", {N, N, N, N, Y, N, N, N}},
      {"(aa)+", "ab", "(aa)+", {N, N, N, N, N, N, N, N}},
      {"G*aaG*", "ab", ".*aa.*", {Y, Y, Y, Y, Y, Y, Y, Y}},
      {"aG+", "ab", "a.+", {Y, Y, N, N, Y, Y, N, N}},
  };
  return corpus;
}

std::vector<NamedSemigroup> suite_semigroups() {
  std::vector<NamedSemigroup> out;
  for (const auto& lang : golden_corpus())
    out.push_back({lang.name, syntactic(compile(lang.regex, Alphabet(lang.alphabet)).dfa).semigroup});
  out.push_back({"Z2", cyclic_group(2)});
  out.push_back({"Z3", cyclic_group(3)});
  return out;
}

namespace {

std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

char letter(Rng& rng, const Alphabet& alphabet) { return alphabet.at(pick(rng, 0, alphabet.size() - 1)); }

}  // namespace

Monomial random_monomial(Rng& rng, const Alphabet& alphabet, std::size_t maxDegree, std::size_t maxBlocks,
                         Anchor anchor, Gap kind) {
  const std::size_t degree = pick(rng, 1, std::max<std::size_t>(maxDegree, 1));
  const std::size_t blocks = pick(rng, 1, std::min(maxBlocks, degree));
  // Split `degree` letters into `blocks` non-empty parts.
  std::vector<std::size_t> lengths(blocks, 1);
  for (std::size_t i = blocks; i < degree; ++i) ++lengths[pick(rng, 0, blocks - 1)];
  std::vector<Word> ws;
  for (auto len : lengths) {
    Word w;
    for (std::size_t i = 0; i < len; ++i) w += letter(rng, alphabet);
    ws.push_back(std::move(w));
  }
  return Monomial::shaped(anchor, std::move(ws), kind);
}

Sentence random_sentence(Rng& rng, const Alphabet& alphabet, std::size_t maxVars) {
  Sentence s;
  const std::size_t m = pick(rng, 1, std::max<std::size_t>(maxVars, 1));
  for (std::size_t i = 1; i <= m; ++i) s.vars.push_back("x" + std::to_string(i));
  auto var = [&] { return s.vars[pick(rng, 0, m - 1)]; };
  auto atom = [&]() -> Matrix {
    using K = Matrix::Kind;
    switch (pick(rng, 0, 7)) {
      case 0: return Matrix::atom(K::Less, var(), var());
      case 1: return Matrix::atom(K::Succ, var(), var());
      case 2: return Matrix::atom(K::Eq, var(), var());
      case 3: return Matrix::atom(K::Min, var());
      case 4: return Matrix::atom(K::Max, var());
      default: return Matrix::label(var(), letter(rng, alphabet));
    }
  };
  std::vector<Matrix> conj;
  const std::size_t parts = pick(rng, 1, 4);
  for (std::size_t i = 0; i < parts; ++i) {
    switch (pick(rng, 0, 5)) {
      case 0: conj.push_back(Matrix::negate(atom())); break;
      case 1: conj.push_back(Matrix::any({atom(), atom()})); break;
      default: conj.push_back(atom());
    }
  }
  s.matrix = Matrix::all(std::move(conj));
  return s;
}

Regex random_regex(Rng& rng, const Alphabet& alphabet, std::size_t size) {
  if (size <= 1) {
    switch (pick(rng, 0, 5)) {
      case 0: return regex::any();
      case 1: return regex::empty_word();
      default: return regex::letter(letter(rng, alphabet));
    }
  }
  const std::size_t left = pick(rng, 1, size - 1);
  switch (pick(rng, 0, 6)) {
    case 0: return regex::star(random_regex(rng, alphabet, size - 1));
    case 1: return regex::plus(random_regex(rng, alphabet, size - 1));
    case 2: return regex::complement(random_regex(rng, alphabet, size - 1));
    case 3: return regex::alt(random_regex(rng, alphabet, left), random_regex(rng, alphabet, size - left));
    case 4: return regex::intersect(random_regex(rng, alphabet, left), random_regex(rng, alphabet, size - left));
    default: return regex::concat(random_regex(rng, alphabet, left), random_regex(rng, alphabet, size - left));
  }
}

}  // namespace dotdepth
