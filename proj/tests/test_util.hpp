#pragma once

#include <random>
#include <string>
#include <vector>

#include "wamex/automaton.hpp"
#include "wamex/expression.hpp"
#include "wamex/munn.hpp"

namespace wamex::testing {

// All free-monoid words over gens {0..k-1} of length <= max_len, shortest
// first, lexicographic within a length.
inline std::vector<FreeWord> all_words(int k, int max_len) {
  std::vector<FreeWord> out{{}};
  std::size_t level_start = 0;
  for (int len = 1; len <= max_len; ++len) {
    std::size_t level_end = out.size();
    for (std::size_t i = level_start; i < level_end; ++i) {
      for (int g = 0; g < k; ++g) {
        FreeWord w = out[i];
        w.push_back(g);
        out.push_back(std::move(w));
      }
    }
    level_start = level_end;
  }
  return out;
}

// Sum of the weights of accepting runs with the given label, over all runs
// of at most max_len transitions. Exact whenever no longer run can carry
// the label (e.g. all labels are nonempty free-monoid words).
inline Value enumerate_runs(const WeightedAutomaton& a, const Elem& target, int max_len) {
  const Semiring& sr = *a.semiring;
  const Monoid& mon = *a.monoid;
  Value total = sr.zero();
  struct Item {
    int state;
    Elem label;
    Value weight;
    int len;
  };
  std::vector<Item> stack;
  for (int q : a.initial) stack.push_back({q, mon.identity(), sr.one(), 0});
  while (!stack.empty()) {
    Item it = std::move(stack.back());
    stack.pop_back();
    if (a.is_final(it.state) && mon.eq(it.label, target)) total = sr.add(total, it.weight);
    if (it.len == max_len) continue;
    for (const Transition& t : a.transitions) {
      if (t.from != it.state) continue;
      stack.push_back(
          {t.to, mon.product(it.label, t.label), sr.mul(it.weight, t.weight), it.len + 1});
    }
  }
  return total;
}

// Number of accepting runs with the given label among runs of at most
// max_len transitions.
inline long count_runs(const WeightedAutomaton& a, const Elem& target, int max_len) {
  const Monoid& mon = *a.monoid;
  long total = 0;
  struct Item {
    int state;
    Elem label;
    int len;
  };
  std::vector<Item> stack;
  for (int q : a.initial) stack.push_back({q, mon.identity(), 0});
  while (!stack.empty()) {
    Item it = std::move(stack.back());
    stack.pop_back();
    if (a.is_final(it.state) && mon.eq(it.label, target)) ++total;
    if (it.len == max_len) continue;
    for (const Transition& t : a.transitions) {
      if (t.from != it.state) continue;
      stack.push_back({t.to, mon.product(it.label, t.label), it.len + 1});
    }
  }
  return total;
}

// Random weighted expressions with a bounded node count.
struct ExprGen {
  std::mt19937 rng;
  SemiringPtr semiring;
  MonoidPtr monoid;
  std::vector<Elem> atom_pool;
  std::vector<Value> weight_pool;

  ExprGen(unsigned seed, SemiringPtr sr, MonoidPtr mon, std::vector<std::string> atom_literals,
          std::vector<std::string> weight_literals)
      : rng(seed), semiring(std::move(sr)), monoid(std::move(mon)) {
    for (const auto& lit : atom_literals) atom_pool.push_back(monoid->parse(lit));
    for (const auto& lit : weight_literals) weight_pool.push_back(semiring->parse(lit));
  }

  int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); }

  ExprPtr leaf() {
    if (pick(3) == 0) return make_weight(weight_pool[pick(static_cast<int>(weight_pool.size()))]);
    return make_atom(atom_pool[pick(static_cast<int>(atom_pool.size()))]);
  }

  ExprPtr gen(int budget) {
    if (budget <= 1) return leaf();
    switch (pick(10)) {
      case 0:
      case 1:
        return leaf();
      case 2:
      case 3:
      case 4: {
        int left = 1 + pick(budget - 2 > 0 ? budget - 2 : 1);
        return make_sum(gen(left), gen(budget - 1 - left));
      }
      case 5:
      case 6:
      case 7: {
        int left = 1 + pick(budget - 2 > 0 ? budget - 2 : 1);
        return make_product(gen(left), gen(budget - 1 - left));
      }
      default:
        return make_star(gen(budget - 1));
    }
  }

  WeightedExpression expression(int budget) { return {semiring, monoid, gen(budget)}; }
};

// Random small automata.
struct AutomatonGen {
  std::mt19937 rng;
  SemiringPtr semiring;
  MonoidPtr monoid;
  std::vector<Elem> label_pool;
  std::vector<Value> weight_pool;

  AutomatonGen(unsigned seed, SemiringPtr sr, MonoidPtr mon, std::vector<std::string> labels,
               std::vector<std::string> weights)
      : rng(seed), semiring(std::move(sr)), monoid(std::move(mon)) {
    for (const auto& lit : labels) label_pool.push_back(monoid->parse(lit));
    for (const auto& lit : weights) weight_pool.push_back(semiring->parse(lit));
  }

  int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); }

  WeightedAutomaton automaton(int num_states, int num_transitions) {
    WeightedAutomaton a;
    a.semiring = semiring;
    a.monoid = monoid;
    for (int q = 0; q < num_states; ++q) a.states.push_back("s" + std::to_string(q));
    a.initial.push_back(0);
    for (int q = 0; q < num_states; ++q) {
      if (pick(2) == 0) a.final_states.push_back(q);
    }
    if (a.final_states.empty() && pick(4) != 0) a.final_states.push_back(num_states - 1);
    for (int i = 0; i < num_transitions; ++i) {
      a.transitions.push_back({pick(num_states),
                               label_pool[pick(static_cast<int>(label_pool.size()))],
                               weight_pool[pick(static_cast<int>(weight_pool.size()))],
                               pick(num_states)});
    }
    return a;
  }
};

}  // namespace wamex::testing
