#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "wamex/value.hpp"

namespace wamex {

class Semiring;
using SemiringPtr = std::shared_ptr<const Semiring>;

/// Computable kernel of a rationally additive semiring: the finite
/// operations together with the geometric sum star(x) = sum_n x^n.
/// star is total for every instance provided here and satisfies
/// star(x) == one + x * star(x).
///
/// Values are immutable and all operations are pure, so instances can be
/// shared freely across threads.
class Semiring {
 public:
  virtual ~Semiring() = default;

  /// Spec string understood by make_semiring (e.g. "counting",
  /// "prod:(boolean),(tropical)").
  virtual std::string name() const = 0;

  virtual Value zero() const = 0;
  virtual Value one() const = 0;
  virtual Value add(const Value& a, const Value& b) const = 0;
  virtual Value mul(const Value& a, const Value& b) const = 0;
  virtual Value star(const Value& a) const = 0;
  virtual bool eq(const Value& a, const Value& b) const = 0;

  virtual Value parse(std::string_view text) const = 0;
  virtual std::string render(const Value& a) const = 0;

  bool is_zero(const Value& v) const { return eq(v, zero()); }
  bool is_one(const Value& v) const { return eq(v, one()); }
};

SemiringPtr make_boolean_semiring();
/// (N u {inf}, +, x); star(0) = 1, star(n >= 1) = inf.
SemiringPtr make_counting_semiring();
/// (Q u {-inf, +inf}, sup, +), zero = -inf, one = 0; star(x) = 0 for
/// x <= 0, +inf otherwise.
SemiringPtr make_tropical_semiring();
/// (Q+ u {inf}, +, x); star(x) = 1/(1-x) for x < 1, inf otherwise.
SemiringPtr make_qplus_semiring();
/// Rational languages over the given alphabet (one letter per character),
/// as regular-expression values; equality is decided semantically.
SemiringPtr make_language_semiring(std::string alphabet);
/// Component-wise product of two instances.
SemiringPtr make_product_semiring(SemiringPtr first, SemiringPtr second);

/// Factory from a spec string:
///   boolean | counting | tropical | qplus | lang:<alphabet> | prod:<s1>,<s2>
/// A prod component containing a comma must be parenthesised, e.g.
/// "prod:(prod:boolean,counting),tropical" is written
/// "prod:(prod:(boolean),(counting)),(tropical)".
SemiringPtr make_semiring(std::string_view spec);

// Language value algebra. Constructors apply the obvious local
// simplifications (empty absorbs, eps is a concat unit, star collapses on
// empty/eps/star).
LangPtr lang_empty();
LangPtr lang_eps();
LangPtr lang_letter(char c);
LangPtr lang_union(LangPtr a, LangPtr b);
LangPtr lang_concat(LangPtr a, LangPtr b);
LangPtr lang_star(LangPtr a);
std::string lang_render(const LangPtr& a);
LangPtr lang_parse(std::string_view text, const std::string& alphabet);

/// Semantic equality of two language values over a common alphabet,
/// decided by bisimulation over partial-derivative automata.
bool language_eq(const LangPtr& a, const LangPtr& b, const std::string& alphabet);

}  // namespace wamex
