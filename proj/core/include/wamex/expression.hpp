#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "wamex/monoid.hpp"
#include "wamex/prefix_dfa.hpp"
#include "wamex/semiring.hpp"

namespace wamex {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Weighted-expression AST: leaves are semiring weights and monoid atoms,
/// inner nodes sum, product and star. Leaves may carry an index (assigned
/// by index_leaves, -1 otherwise). Nodes are immutable and shared.
struct Expr {
  enum class Kind { Weight, Atom, Sum, Product, Star };

  Kind kind;
  Value weight;      // Weight
  Elem atom;         // Atom
  ExprPtr lhs, rhs;  // Sum/Product; Star uses lhs only
  int index = -1;    // leaf index in an indexed expression
};

ExprPtr make_weight(Value k);
ExprPtr make_atom(Elem m);
ExprPtr make_sum(ExprPtr l, ExprPtr r);
ExprPtr make_product(ExprPtr l, ExprPtr r);
ExprPtr make_star(ExprPtr x);

struct WeightedExpression {
  SemiringPtr semiring;
  MonoidPtr monoid;
  ExprPtr root;
};

/// Grammar (star > product > sum, product explicit via '.'):
///   expr   := term {"+" term}
///   term   := factor {"." factor}
///   factor := atom {"*"}
///   atom   := "(" expr ")" | "[" semiring-literal "]" | monoid-literal
/// A monoid literal is a maximal run of generator tokens, so free-monoid
/// words can be written juxtaposed: `a b a`.
WeightedExpression parse_expression(std::string_view text, SemiringPtr semiring, MonoidPtr monoid);

/// Grammar-conformant rendering; parses back to an equal tree.
std::string render_expression(const WeightedExpression& w);

int node_count(const ExprPtr& e);
/// Leaves in left-to-right order.
std::vector<const Expr*> leaves_of(const ExprPtr& e);

/// Inserts the weight-one marker after every star: U* becomes (U)* . 1.
/// Semantics-preserving; makes the indexed expression unambiguous.
WeightedExpression mark_unambiguous(const WeightedExpression& w);

/// Attaches consecutive indices 0..n-1 to the leaves, left to right.
WeightedExpression index_leaves(const WeightedExpression& w);
/// Drops all leaf indices.
WeightedExpression erase_indices(const WeightedExpression& w);

/// Semantics at one point, computed by compiling to an automaton
/// (kleene.hpp) and evaluating there.
Value evaluate(const WeightedExpression& w, const Elem& target,
               std::size_t state_budget = kDefaultStateBudget);

/// Number of decompositions of the target in the semantics of the
/// expression: the evaluation over the counting semiring with every
/// weight leaf replaced by 1.
Value ambiguity(const WeightedExpression& w, const Elem& target,
                std::size_t state_budget = kDefaultStateBudget);

/// The counting-semiring expression used by ambiguity(): same shape,
/// every weight leaf replaced by 1.
WeightedExpression ambiguity_form(const WeightedExpression& w);

}  // namespace wamex
