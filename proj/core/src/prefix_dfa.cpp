#include "wamex/prefix_dfa.hpp"

#include <map>
#include <string>
#include <utility>

#include "wamex/errors.hpp"

namespace wamex {

bool PrefixDfa::accepts(std::span<const int> label_word) const {
  int state = initial;
  for (int letter : label_word) state = delta[state][letter];
  return state == accepting;
}

PrefixDfa preimage_dfa(const Monoid& monoid, std::vector<Elem> labels, const Elem& target,
                       std::size_t state_budget) {
  PrefixDfa dfa;
  dfa.labels = std::move(labels);

  std::map<std::string, int> seen;
  std::vector<Elem> frontier;

  auto intern = [&](Elem e) -> int {
    std::string key = monoid.render(e);
    auto it = seen.find(key);
    if (it != seen.end()) return it->second;
    if (dfa.state_elem.size() >= state_budget) {
      throw NonTerminating(
          "prefix enumeration exceeded " + std::to_string(state_budget) +
              " states; the target may have infinitely many prefixes",
          state_budget);
    }
    int id = static_cast<int>(dfa.state_elem.size());
    seen.emplace(std::move(key), id);
    if (monoid.eq(e, target)) dfa.accepting = id;
    dfa.state_elem.push_back(std::move(e));
    frontier.push_back(dfa.state_elem.back());
    return id;
  };

  intern(monoid.identity());
  std::size_t next = 0;
  std::vector<std::vector<int>> delta;
  while (next < frontier.size()) {
    Elem state = frontier[next];
    int id = static_cast<int>(next);
    ++next;
    delta.resize(std::max(delta.size(), static_cast<std::size_t>(id) + 1));
    delta[id].assign(dfa.labels.size(), -1);
    for (std::size_t l = 0; l < dfa.labels.size(); ++l) {
      Elem stepped = monoid.product(state, dfa.labels[l]);
      delta[id][l] = monoid.is_prefix(stepped, target) ? intern(std::move(stepped)) : -2;
    }
  }

  dfa.sink = static_cast<int>(dfa.state_elem.size());
  dfa.delta = std::move(delta);
  for (auto& row : dfa.delta) {
    for (int& next_state : row) {
      if (next_state == -2) next_state = dfa.sink;
    }
  }
  dfa.delta.push_back(std::vector<int>(dfa.labels.size(), dfa.sink));
  return dfa;
}

}  // namespace wamex
