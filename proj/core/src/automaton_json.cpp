#include <json.hpp>

#include <algorithm>

#include "wamex/automaton.hpp"
#include "wamex/errors.hpp"

namespace wamex {

std::string automaton_to_json(const WeightedAutomaton& a) {
  nlohmann::ordered_json j;
  j["semiring"] = a.semiring->name();
  j["monoid"] = a.monoid->name();
  j["states"] = a.states;
  nlohmann::ordered_json initial = nlohmann::ordered_json::array();
  for (int q : a.initial) initial.push_back(a.states[q]);
  j["initial"] = std::move(initial);
  nlohmann::ordered_json final_states = nlohmann::ordered_json::array();
  for (int q : a.final_states) final_states.push_back(a.states[q]);
  j["final"] = std::move(final_states);
  nlohmann::ordered_json transitions = nlohmann::ordered_json::array();
  for (const Transition& t : a.transitions) {
    nlohmann::ordered_json jt;
    jt["from"] = a.states[t.from];
    jt["label"] = a.monoid->render(t.label);
    jt["weight"] = a.semiring->render(t.weight);
    jt["to"] = a.states[t.to];
    transitions.push_back(std::move(jt));
  }
  j["transitions"] = std::move(transitions);
  return j.dump(2) + "\n";
}

WeightedAutomaton automaton_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad automaton JSON: ") + e.what());
  }
  try {
    WeightedAutomaton a;
    a.semiring = make_semiring(j.at("semiring").get<std::string>());
    a.monoid = make_monoid(j.at("monoid").get<std::string>());
    a.states = j.at("states").get<std::vector<std::string>>();
    auto state_of = [&](const std::string& name) {
      int q = a.state_index(name);
      if (q < 0) throw ParseError("unknown state '" + name + "'");
      return q;
    };
    for (const auto& name : j.at("initial")) a.initial.push_back(state_of(name.get<std::string>()));
    for (const auto& name : j.at("final")) {
      a.final_states.push_back(state_of(name.get<std::string>()));
    }
    auto dedupe = [](std::vector<int>& v) {
      std::sort(v.begin(), v.end());
      v.erase(std::unique(v.begin(), v.end()), v.end());
    };
    dedupe(a.initial);
    dedupe(a.final_states);
    for (const auto& jt : j.at("transitions")) {
      Transition t;
      t.from = state_of(jt.at("from").get<std::string>());
      t.label = a.monoid->parse(jt.at("label").get<std::string>());
      t.weight = a.semiring->parse(jt.at("weight").get<std::string>());
      t.to = state_of(jt.at("to").get<std::string>());
      a.transitions.push_back(std::move(t));
    }
    return a;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad automaton JSON: ") + e.what());
  }
}

}  // namespace wamex
