#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "wamex/monoid.hpp"

namespace wamex {

inline constexpr std::size_t kDefaultStateBudget = 100000;

/// Deterministic complete automaton over a finite list of monoid elements
/// (the label alphabet) recognising exactly the label words whose product
/// is a fixed target. Non-sink states store the prefixes of the target
/// reachable from the identity by label products; the accepting state, if
/// any, stores the target itself.
struct PrefixDfa {
  std::vector<Elem> labels;
  std::vector<Elem> state_elem;         // prefix stored by each non-sink state
  int initial = 0;
  int accepting = -1;                   // -1: target unreachable from labels
  int sink = 0;                         // == state_elem.size()
  std::vector<std::vector<int>> delta;  // [state][label] -> state, sink row included

  int num_states() const { return sink + 1; }
  int step(int state, int label) const { return delta[state][label]; }
  bool accepts(std::span<const int> label_word) const;
};

/// Builds the prefix automaton for the given target by breadth-first
/// exploration of label products, stopping at non-prefixes. Throws
/// NonTerminating once more than state_budget prefixes have been found,
/// which covers targets with infinitely many prefixes.
PrefixDfa preimage_dfa(const Monoid& monoid, std::vector<Elem> labels, const Elem& target,
                       std::size_t state_budget = kDefaultStateBudget);

}  // namespace wamex
