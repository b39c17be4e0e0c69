#include "wamex/oracle.hpp"

#include <map>
#include <set>
#include <string>
#include <tuple>
#include <utility>

#include "wamex/errors.hpp"

namespace wamex {

namespace {

// Inductive evaluation with memoisation on (node, target). Star nodes sum
// the truncated power series; the truncation is trusted only when either
// the partial sums hold still for three steps past the longest possible
// strictly-advancing factorization chain, or the final stretch of terms
// follows an exact geometric recurrence, whose tail is then summed with
// star. Everything else is reported as divergence.
struct OracleEval {
  const Semiring& sr;
  const Monoid& mon;
  int depth;
  std::map<std::pair<const Expr*, std::string>, OracleValue> memo;
  std::map<std::tuple<const Expr*, int, std::string>, OracleValue> powers;
  std::map<std::string, std::size_t> chain_bounds;

  static constexpr std::size_t kUnbounded = static_cast<std::size_t>(-1);

  // an upper bound on the length of a strictly increasing prefix chain
  std::size_t chain_bound(const Elem& m, const std::string& key) {
    auto it = chain_bounds.find(key);
    if (it != chain_bounds.end()) return it->second;
    std::size_t bound = kUnbounded;
    try {
      bound = mon.prefixes(m).size() + 1;
    } catch (const NonTerminating&) {
    }
    chain_bounds.emplace(key, bound);
    return bound;
  }

  OracleValue diverged() { return {true, Value{}}; }

  OracleValue cauchy(const ExprPtr& left, const ExprPtr& right, int right_power, const Elem& m) {
    Value total = sr.zero();
    for (const Elem& p : mon.prefixes(m)) {
      OracleValue lhs = eval(left, p);
      if (lhs.diverged) return diverged();
      for (const Elem& s : mon.completions(p, m)) {
        OracleValue rhs = right_power < 0 ? eval(right, s) : power(right, right_power, s);
        if (rhs.diverged) return diverged();
        total = sr.add(total, sr.mul(lhs.value, rhs.value));
      }
    }
    return {false, std::move(total)};
  }

  // [[body^n]](m), with body^0 = 1 and body^n = body . body^(n-1)
  OracleValue power(const ExprPtr& body, int n, const Elem& m) {
    if (n == 0) {
      return {false, mon.is_identity(m) ? sr.one() : sr.zero()};
    }
    auto key = std::make_tuple(body.get(), n, mon.render(m));
    if (auto it = powers.find(key); it != powers.end()) return it->second;
    OracleValue out = cauchy(body, body, n - 1, m);
    powers.emplace(std::move(key), out);
    return out;
  }

  OracleValue star(const ExprPtr& body, const Elem& m, const std::string& key) {
    std::vector<Value> terms;
    std::vector<Value> sums;
    Value running = sr.zero();
    std::size_t gate = chain_bound(m, key);
    for (int n = 0; n <= depth; ++n) {
      OracleValue t = power(body, n, m);
      if (t.diverged) return diverged();
      terms.push_back(t.value);
      running = sr.add(running, t.value);
      sums.push_back(running);
      std::size_t k = sums.size();
      if (gate != kUnbounded && k >= gate + 3 && sr.eq(sums[k - 1], sums[k - 2]) &&
          sr.eq(sums[k - 2], sums[k - 3])) {
        return {false, sums[k - 1]};
      }
    }

    // geometric tail: t(n+1) == t(n) * r over the closing window, with the
    // candidate ratios being the body's value at the identity and one
    constexpr int kWindow = 8;
    std::size_t start = terms.size() > kWindow ? terms.size() - 1 - kWindow : 0;
    if (gate == kUnbounded || start < gate) return diverged();
    OracleValue at_identity = eval(body, mon.identity());
    if (at_identity.diverged) return diverged();
    for (const Value& ratio : {at_identity.value, sr.one()}) {
      bool right_matches = true;
      bool left_matches = true;
      for (std::size_t n = start; n + 1 < terms.size(); ++n) {
        if (!sr.eq(terms[n + 1], sr.mul(terms[n], ratio))) right_matches = false;
        if (!sr.eq(terms[n + 1], sr.mul(ratio, terms[n]))) left_matches = false;
      }
      if (right_matches || left_matches) {
        Value head = start == 0 ? sr.zero() : sums[start - 1];
        Value tail = right_matches ? sr.mul(terms[start], sr.star(ratio))
                                   : sr.mul(sr.star(ratio), terms[start]);
        return {false, sr.add(head, tail)};
      }
    }
    return diverged();
  }

  OracleValue eval(const ExprPtr& e, const Elem& m) {
    auto key = std::make_pair(e.get(), mon.render(m));
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    OracleValue out;
    switch (e->kind) {
      case Expr::Kind::Weight:
        out = {false, mon.is_identity(m) ? e->weight : sr.zero()};
        break;
      case Expr::Kind::Atom:
        out = {false, mon.eq(m, e->atom) ? sr.one() : sr.zero()};
        break;
      case Expr::Kind::Sum: {
        OracleValue l = eval(e->lhs, m);
        OracleValue r = eval(e->rhs, m);
        out = (l.diverged || r.diverged) ? diverged()
                                         : OracleValue{false, sr.add(l.value, r.value)};
        break;
      }
      case Expr::Kind::Product:
        out = cauchy(e->lhs, e->rhs, -1, m);
        break;
      case Expr::Kind::Star:
        out = star(e->lhs, m, key.second);
        break;
    }
    memo.emplace(std::move(key), out);
    return out;
  }
};

}  // namespace

OracleValue evaluate_oracle(const WeightedExpression& w, const Elem& target, int depth_bound) {
  OracleEval eval{*w.semiring, *w.monoid, depth_bound, {}, {}, {}};
  try {
    return eval.eval(w.root, target);
  } catch (const NonTerminating&) {
    return {true, Value{}};
  }
}

namespace {

using SpanSet = std::set<std::pair<int, int>>;

SpanSet match_spans(const Expr* e, const FreeWord& w) {
  SpanSet out;
  int n = static_cast<int>(w.size());
  switch (e->kind) {
    case Expr::Kind::Weight:
      for (int i = 0; i <= n; ++i) out.emplace(i, i);
      return out;
    case Expr::Kind::Atom: {
      const FreeWord& u = std::get<FreeWord>(e->atom.rep);
      int len = static_cast<int>(u.size());
      for (int i = 0; i + len <= n; ++i) {
        if (std::equal(u.begin(), u.end(), w.begin() + i)) out.emplace(i, i + len);
      }
      return out;
    }
    case Expr::Kind::Sum: {
      out = match_spans(e->lhs.get(), w);
      SpanSet r = match_spans(e->rhs.get(), w);
      out.insert(r.begin(), r.end());
      return out;
    }
    case Expr::Kind::Product: {
      SpanSet l = match_spans(e->lhs.get(), w);
      SpanSet r = match_spans(e->rhs.get(), w);
      for (const auto& [i, j] : l) {
        for (const auto& [j2, k] : r) {
          if (j == j2) out.emplace(i, k);
        }
      }
      return out;
    }
    case Expr::Kind::Star: {
      SpanSet body = match_spans(e->lhs.get(), w);
      for (int i = 0; i <= n; ++i) out.emplace(i, i);
      bool changed = true;
      while (changed) {
        changed = false;
        SpanSet next = out;
        for (const auto& [i, j] : out) {
          for (const auto& [j2, k] : body) {
            if (j == j2 && !next.count({i, k})) {
              next.emplace(i, k);
              changed = true;
            }
          }
        }
        out = std::move(next);
      }
      return out;
    }
  }
  return out;
}

}  // namespace

bool characteristic_oracle(const WeightedExpression& w, const Elem& word) {
  const FreeWord* u = std::get_if<FreeWord>(&word.rep);
  if (u == nullptr) throw ParseError("the characteristic oracle needs a free-monoid word");
  SpanSet spans = match_spans(w.root.get(), *u);
  return spans.count({0, static_cast<int>(u->size())}) > 0;
}

}  // namespace wamex
