#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <memory>
#include <utility>
#include <variant>

namespace wamex {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// A rational number extended with the two infinities. Which infinities a
/// semiring instance actually admits is decided by that instance.
struct ExtRat {
  enum class Kind { Finite, PosInf, NegInf };

  Kind kind = Kind::Finite;
  BigRat q = 0;

  static ExtRat finite(BigRat v) { return ExtRat{Kind::Finite, std::move(v)}; }
  static ExtRat pos_inf() { return ExtRat{Kind::PosInf, 0}; }
  static ExtRat neg_inf() { return ExtRat{Kind::NegInf, 0}; }

  bool is_finite() const { return kind == Kind::Finite; }

  friend bool operator==(const ExtRat& a, const ExtRat& b) {
    return a.kind == b.kind && (a.kind != Kind::Finite || a.q == b.q);
  }
};

/// Regular-expression tree denoting a rational language over a declared
/// finite alphabet; the value representation of the language semiring.
/// Nodes are immutable and shared.
struct LangNode;
using LangPtr = std::shared_ptr<const LangNode>;

struct LangNode {
  enum class Op { Empty, Eps, Letter, Union, Concat, Star };

  Op op;
  char letter = 0;   // Letter
  LangPtr lhs, rhs;  // Union/Concat; Star uses lhs only
};

struct Value;
using PairPtr = std::shared_ptr<const std::pair<Value, Value>>;

/// A semiring element. The active alternative is fixed by the owning
/// semiring instance; all operations on values go through that instance.
struct Value {
  std::variant<std::monostate, bool, ExtRat, LangPtr, PairPtr> rep;

  Value() = default;
  explicit Value(bool b) : rep(b) {}
  explicit Value(ExtRat r) : rep(std::move(r)) {}
  explicit Value(LangPtr l) : rep(std::move(l)) {}
  explicit Value(PairPtr p) : rep(std::move(p)) {}
};

}  // namespace wamex
