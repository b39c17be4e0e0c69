#include "wamex/series.hpp"

#include <utility>

namespace wamex {

Series Series::of(WeightedAutomaton a) {
  auto shared = std::make_shared<const WeightedAutomaton>(std::move(a));
  return Series(shared->semiring, shared->monoid,
                [shared](const Elem& m, std::size_t budget) { return evaluate(*shared, m, budget); });
}

Series Series::of(WeightedExpression e) {
  auto shared = std::make_shared<const WeightedExpression>(std::move(e));
  return Series(shared->semiring, shared->monoid,
                [shared](const Elem& m, std::size_t budget) { return evaluate(*shared, m, budget); });
}

Value Series::at(const Elem& target, std::size_t state_budget) const {
  return eval_(target, state_budget);
}

}  // namespace wamex
