#pragma once

#include <span>
#include <string>
#include <vector>

#include "wamex/monoid.hpp"
#include "wamex/prefix_dfa.hpp"
#include "wamex/semiring.hpp"

namespace wamex {

struct Transition {
  int from = 0;
  Elem label;
  Value weight;
  int to = 0;
};

/// Weighted automaton over a monoid M and semiring K: finite states,
/// initial and final subsets, transitions labelled by a monoid element and
/// weighted by a semiring value. Immutable after construction; evaluation
/// is pure.
struct WeightedAutomaton {
  SemiringPtr semiring;
  MonoidPtr monoid;
  std::vector<std::string> states;  // names; indices are the state ids
  std::vector<int> initial;
  std::vector<int> final_states;
  std::vector<Transition> transitions;

  int state_index(std::string_view name) const;  // -1 if absent
  bool is_initial(int q) const;
  bool is_final(int q) const;
};

/// Deterministic automaton of accepting runs, over the alphabet of
/// transition indices: from state p, letter t moves to t.to when t.from == p
/// and to the sink otherwise.
struct RunDfa {
  int num_states = 0;  // |Q| + 1, the last one being the sink
  int sink = 0;
  std::vector<int> initial;
  std::vector<bool> accepting;             // sink entry is false
  std::vector<std::pair<int, int>> ends;   // (from, to) per letter

  int step(int state, int letter) const {
    if (state == sink || ends[letter].first != state) return sink;
    return ends[letter].second;
  }
  bool accepts(std::span<const int> run_word) const;
};

RunDfa run_dfa(const WeightedAutomaton& a);

/// Weight of the target element: the sum over all accepting runs labelled
/// by it. Computed by restricting the run automaton with the prefix
/// automaton of the target and summing path weights by state elimination
/// (star resolves loops). Throws NonTerminating if the prefix automaton
/// does not fit in the budget.
Value evaluate(const WeightedAutomaton& a, const Elem& target,
               std::size_t state_budget = kDefaultStateBudget);

/// Number of accepting runs labelled by the target, in the counting
/// semiring: the evaluation of the automaton with every weight replaced
/// by 1.
Value ambiguity(const WeightedAutomaton& a, const Elem& target,
                std::size_t state_budget = kDefaultStateBudget);

/// Same shape over K x N_inf with every weight k replaced by (k, 1); the
/// second evaluation component is the ambiguity.
WeightedAutomaton lift_product(const WeightedAutomaton& a);

/// Optional normalisation: drops transitions of weight zero (they only
/// ever contribute zero terms).
WeightedAutomaton drop_zero_transitions(const WeightedAutomaton& a);

std::string automaton_to_dot(const WeightedAutomaton& a);
std::string automaton_to_json(const WeightedAutomaton& a);
WeightedAutomaton automaton_from_json(const std::string& text);

}  // namespace wamex
