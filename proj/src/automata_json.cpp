#include <json.hpp>

#include "dotdepth/automata.hpp"

namespace dotdepth {

using nlohmann::json;

Dfa dfa_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed DFA JSON: ") + e.what());
  }
  try {
    std::string letters;
    for (const auto& l : j.at("alphabet")) {
      auto s = l.get<std::string>();
      if (s.size() != 1) throw InputError("alphabet entries must be single characters, got \"" + s + "\"");
      letters += s;
    }
    Alphabet alphabet(letters);
    auto states = j.at("states").get<std::size_t>();
    auto initial = j.at("initial").get<std::size_t>();
    Dfa d(alphabet, states, initial);
    for (const auto& q : j.at("accepting")) {
      auto s = q.get<std::size_t>();
      if (s >= states) throw InputError("accepting state " + std::to_string(s) + " out of range");
      d.set_accepting(s);
    }
    const auto& tr = j.at("transitions");
    for (State q = 0; q < states; ++q) {
      auto key = std::to_string(q);
      if (!tr.contains(key)) throw InputError("missing transitions for state " + key);
      const auto& row = tr.at(key);
      for (Letter a = 0; a < alphabet.size(); ++a) {
        std::string l(1, alphabet.at(a));
        if (!row.contains(l)) throw InputError("missing transition from state " + key + " on '" + l + "'");
        d.set_next(q, a, row.at(l).get<std::size_t>());
      }
      for (const auto& [l, _] : row.items())
        if (l.size() != 1 || !alphabet.contains(l[0])) throw InputError("transition on unknown letter \"" + l + "\"");
    }
    return d;
  } catch (const json::exception& e) {
    throw InputError(std::string("invalid DFA JSON: ") + e.what());
  }
}

std::string dfa_to_json(const Dfa& d) {
  json j;
  j["alphabet"] = json::array();
  for (char c : d.alphabet().letters()) j["alphabet"].push_back(std::string(1, c));
  j["states"] = d.state_count();
  j["initial"] = d.initial();
  j["accepting"] = json::array();
  for (State q = 0; q < d.state_count(); ++q)
    if (d.accepting(q)) j["accepting"].push_back(q);
  json tr = json::object();
  for (State q = 0; q < d.state_count(); ++q) {
    json row = json::object();
    for (Letter a = 0; a < d.alphabet().size(); ++a) row[std::string(1, d.alphabet().at(a))] = d.next(q, a);
    tr[std::to_string(q)] = row;
  }
  j["transitions"] = tr;
  return j.dump();
}

}  // namespace dotdepth
