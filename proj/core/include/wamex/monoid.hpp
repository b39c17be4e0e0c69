#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "wamex/value.hpp"

namespace wamex {

struct MunnTree;
using MunnPtr = std::shared_ptr<const MunnTree>;

/// Word over the generators of a free monoid, by generator index.
using FreeWord = std::vector<int>;

/// Element of (N u {inf}, +, 0).
struct NatElem {
  bool inf = false;
  BigInt n = 0;

  friend bool operator==(const NatElem& a, const NatElem& b) {
    return a.inf == b.inf && (a.inf || a.n == b.n);
  }
};

/// A monoid element. The active alternative is fixed by the owning monoid
/// instance.
struct Elem {
  std::variant<std::monostate, FreeWord, NatElem, MunnPtr> rep;

  Elem() = default;
  explicit Elem(FreeWord w) : rep(std::move(w)) {}
  explicit Elem(NatElem n) : rep(std::move(n)) {}
  explicit Elem(MunnPtr m) : rep(std::move(m)) {}
};

class Monoid;
using MonoidPtr = std::shared_ptr<const Monoid>;

/// A monoid with the extra structure needed for effective pre-rationality:
/// decidable equality and a prefix relation (p is a prefix of m iff
/// p * s == m for some s). prefixes() enumerates the full finite prefix
/// set and fails with NonTerminating when it is infinite; completions()
/// enumerates all s with p * s == m.
class Monoid {
 public:
  virtual ~Monoid() = default;

  /// Spec string understood by make_monoid (e.g. "free:a,b", "fim:l,r").
  virtual std::string name() const = 0;

  virtual Elem identity() const = 0;
  virtual Elem product(const Elem& a, const Elem& b) const = 0;
  virtual bool eq(const Elem& a, const Elem& b) const = 0;
  virtual bool is_prefix(const Elem& p, const Elem& m) const = 0;
  virtual std::vector<Elem> prefixes(const Elem& m) const = 0;
  virtual std::vector<Elem> completions(const Elem& p, const Elem& m) const = 0;

  virtual Elem parse(std::string_view text) const = 0;
  /// Canonical rendering; parse(render(x)) == x. Also used as a hash key.
  virtual std::string render(const Elem& a) const = 0;

  bool is_identity(const Elem& a) const { return eq(a, identity()); }
};

MonoidPtr make_free_monoid(std::vector<std::string> generators);
MonoidPtr make_nat_monoid();
MonoidPtr make_free_inverse_monoid(std::vector<std::string> generators);

/// Factory from a spec string: free:<g1>,<g2>,... | nat | fim:<g1>,...
/// Commas inside <...> generator names do not split.
MonoidPtr make_monoid(std::string_view spec);

}  // namespace wamex
