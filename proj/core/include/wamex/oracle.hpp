#pragma once

#include "wamex/expression.hpp"

namespace wamex {

/// Result of the reference evaluator: either a value or an admission that
/// the truncated sum did not visibly converge.
struct OracleValue {
  bool diverged = false;
  Value value;
};

/// Direct inductive evaluation of the expression semantics, independent of
/// the compilation pipeline. Cauchy products enumerate the factorizations
/// of the target via prefixes and completions; stars sum the powers
/// W^0..W^N, returning early when the partial sums hold still for three
/// steps, or summing a detected geometric tail with star. Intended as a
/// cross-check, not as the production evaluator.
OracleValue evaluate_oracle(const WeightedExpression& w, const Elem& target,
                            int depth_bound = 24);

/// Characteristic value of a word in the classical language of the
/// expression with weights erased (weight leaves read as the empty word):
/// true iff the word matches. The expression must be over a free monoid.
bool characteristic_oracle(const WeightedExpression& w, const Elem& word);

}  // namespace wamex
