#pragma once

#include "wamex/automaton.hpp"
#include "wamex/expression.hpp"

namespace wamex {

/// Expression-to-automaton direction of the Kleene theorem. Pipeline:
/// mark stars with the unit marker, index the leaves, build the position
/// automaton of the resulting unambiguous expression over indexed atoms,
/// then weight it: an atom position carries its monoid label with weight
/// one, a weight position carries the identity label with its weight.
/// Preserves both semantics and ambiguity.
WeightedAutomaton to_automaton(const WeightedExpression& w);

/// Automaton-to-expression direction: state elimination on the (trimmed,
/// deterministic) run automaton yields an unambiguous expression over the
/// transition alphabet; each transition letter is then replaced by
/// label . weight. Only the sound local simplifications x+0 -> x,
/// x.1 -> x, x.0 -> 0, 0* -> 1 are applied. An automaton with no
/// accepting run yields the weight-zero expression.
WeightedExpression to_expression(const WeightedAutomaton& a);

}  // namespace wamex
