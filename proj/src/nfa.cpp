#include "nfa.hpp"

#include <algorithm>
#include <map>

namespace dotdepth::detail {

std::size_t NfaBuilder::add_state() {
  edges_.emplace_back(alphabet_.size());
  eps_.emplace_back();
  return edges_.size() - 1;
}

void NfaBuilder::add_edge(std::size_t from, Letter a, std::size_t to) { edges_[from][a].push_back(to); }

void NfaBuilder::add_epsilon(std::size_t from, std::size_t to) { eps_[from].push_back(to); }

Fragment NfaBuilder::epsilon() {
  auto s = add_state();
  auto t = add_state();
  add_epsilon(s, t);
  return {s, t};
}

Fragment NfaBuilder::letter(Letter a) {
  auto s = add_state();
  auto t = add_state();
  add_edge(s, a, t);
  return {s, t};
}

Fragment NfaBuilder::any_letter() {
  auto s = add_state();
  auto t = add_state();
  for (Letter a = 0; a < alphabet_.size(); ++a) add_edge(s, a, t);
  return {s, t};
}

Fragment NfaBuilder::embed(const Dfa& d) {
  std::vector<std::size_t> id(d.state_count());
  for (auto& x : id) x = add_state();
  auto accept = add_state();
  for (State q = 0; q < d.state_count(); ++q) {
    for (Letter a = 0; a < alphabet_.size(); ++a) add_edge(id[q], a, id[d.next(q, a)]);
    if (d.accepting(q)) add_epsilon(id[q], accept);
  }
  return {id[d.initial()], accept};
}

Fragment NfaBuilder::concat(Fragment a, Fragment b) {
  add_epsilon(a.accept, b.start);
  return {a.start, b.accept};
}

Fragment NfaBuilder::alt(Fragment a, Fragment b) {
  auto s = add_state();
  auto t = add_state();
  add_epsilon(s, a.start);
  add_epsilon(s, b.start);
  add_epsilon(a.accept, t);
  add_epsilon(b.accept, t);
  return {s, t};
}

Fragment NfaBuilder::star(Fragment a) {
  auto s = add_state();
  auto t = add_state();
  add_epsilon(s, a.start);
  add_epsilon(s, t);
  add_epsilon(a.accept, a.start);
  add_epsilon(a.accept, t);
  return {s, t};
}

Fragment NfaBuilder::plus(Fragment a) {
  auto s = add_state();
  auto t = add_state();
  add_epsilon(s, a.start);
  add_epsilon(a.accept, a.start);
  add_epsilon(a.accept, t);
  return {s, t};
}

void NfaBuilder::close(std::vector<std::size_t>& set) const {
  std::vector<bool> seen(edges_.size(), false);
  std::vector<std::size_t> stack(set.begin(), set.end());
  for (auto q : set) seen[q] = true;
  while (!stack.empty()) {
    auto q = stack.back();
    stack.pop_back();
    for (auto r : eps_[q]) {
      if (!seen[r]) {
        seen[r] = true;
        set.push_back(r);
        stack.push_back(r);
      }
    }
  }
  std::sort(set.begin(), set.end());
}

Dfa NfaBuilder::determinize(Fragment f) const {
  std::map<std::vector<std::size_t>, State> ids;
  std::vector<std::vector<std::size_t>> sets;
  std::vector<std::size_t> init{f.start};
  close(init);
  ids.emplace(init, 0);
  sets.push_back(init);
  std::vector<std::vector<State>> trans;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    trans.emplace_back(alphabet_.size());
    for (Letter a = 0; a < alphabet_.size(); ++a) {
      std::vector<std::size_t> target;
      for (auto q : sets[i])
        for (auto r : edges_[q][a]) target.push_back(r);
      std::sort(target.begin(), target.end());
      target.erase(std::unique(target.begin(), target.end()), target.end());
      close(target);
      auto [it, fresh] = ids.emplace(target, sets.size());
      if (fresh) sets.push_back(target);
      trans[i][a] = it->second;
    }
  }
  Dfa d(alphabet_, sets.size(), 0);
  for (State q = 0; q < sets.size(); ++q) {
    for (Letter a = 0; a < alphabet_.size(); ++a) d.set_next(q, a, trans[q][a]);
    d.set_accepting(q, std::binary_search(sets[q].begin(), sets[q].end(), f.accept));
  }
  return d;
}

}  // namespace dotdepth::detail
