#pragma once

// Epsilon-NFA scratch space used to build DFAs for concatenation, iteration and
// monomial shapes. Not part of the public API.

#include <cstddef>
#include <vector>

#include "dotdepth/automata.hpp"

namespace dotdepth::detail {

struct Fragment {
  std::size_t start;
  std::size_t accept;
};

class NfaBuilder {
 public:
  explicit NfaBuilder(const Alphabet& alphabet) : alphabet_(alphabet) {}

  std::size_t add_state();
  void add_edge(std::size_t from, Letter a, std::size_t to);
  void add_epsilon(std::size_t from, std::size_t to);

  Fragment epsilon();
  Fragment letter(Letter a);
  Fragment any_letter();
  /// Copy of a complete DFA; accept is a fresh state reached by epsilon from
  /// every accepting state.
  Fragment embed(const Dfa& d);
  Fragment concat(Fragment a, Fragment b);
  Fragment alt(Fragment a, Fragment b);
  Fragment star(Fragment a);
  Fragment plus(Fragment a);

  /// Subset construction; the empty subset becomes the reject sink.
  Dfa determinize(Fragment f) const;

 private:
  const Alphabet& alphabet_;
  std::vector<std::vector<std::vector<std::size_t>>> edges_;  // [state][letter]
  std::vector<std::vector<std::size_t>> eps_;

  void close(std::vector<std::size_t>& set) const;
};

}  // namespace dotdepth::detail
