#pragma once

#include <functional>
#include <memory>

#include "wamex/automaton.hpp"
#include "wamex/expression.hpp"

namespace wamex {

/// A series: a mapping from monoid elements to semiring values, backed by
/// a weighted automaton or a weighted expression. Evaluation is
/// deterministic and total on supported targets (the infinite natural
/// target raises NonTerminating, like the backing evaluators).
class Series {
 public:
  static Series of(WeightedAutomaton a);
  static Series of(WeightedExpression e);

  Value at(const Elem& target, std::size_t state_budget = kDefaultStateBudget) const;

  const SemiringPtr& semiring() const { return semiring_; }
  const MonoidPtr& monoid() const { return monoid_; }

 private:
  Series(SemiringPtr sr, MonoidPtr mon, std::function<Value(const Elem&, std::size_t)> eval)
      : semiring_(std::move(sr)), monoid_(std::move(mon)), eval_(std::move(eval)) {}

  SemiringPtr semiring_;
  MonoidPtr monoid_;
  std::function<Value(const Elem&, std::size_t)> eval_;
};

}  // namespace wamex
