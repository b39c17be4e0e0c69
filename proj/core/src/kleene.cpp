#include "wamex/kleene.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <queue>
#include <set>
#include <utility>
#include <vector>

namespace wamex {

namespace {

std::vector<int> merge_sorted(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// First/Last/Follow of the indexed expression, read as a Kleene expression
// whose letters are the indexed leaves (weights included: they are
// ordinary letters at this stage).
struct Positions {
  bool nullable = false;
  std::vector<int> first, last;
};

Positions glushkov(const ExprPtr& e, std::vector<std::vector<int>>& follow) {
  switch (e->kind) {
    case Expr::Kind::Weight:
    case Expr::Kind::Atom:
      return {false, {e->index}, {e->index}};
    case Expr::Kind::Sum: {
      Positions l = glushkov(e->lhs, follow);
      Positions r = glushkov(e->rhs, follow);
      return {l.nullable || r.nullable, merge_sorted(l.first, r.first),
              merge_sorted(l.last, r.last)};
    }
    case Expr::Kind::Product: {
      Positions l = glushkov(e->lhs, follow);
      Positions r = glushkov(e->rhs, follow);
      for (int p : l.last) follow[p] = merge_sorted(follow[p], r.first);
      return {l.nullable && r.nullable,
              l.nullable ? merge_sorted(l.first, r.first) : l.first,
              r.nullable ? merge_sorted(l.last, r.last) : r.last};
    }
    case Expr::Kind::Star: {
      Positions x = glushkov(e->lhs, follow);
      for (int p : x.last) follow[p] = merge_sorted(follow[p], x.first);
      x.nullable = true;
      return x;
    }
  }
  return {};
}

}  // namespace

WeightedAutomaton to_automaton(const WeightedExpression& w) {
  WeightedExpression indexed = index_leaves(mark_unambiguous(w));
  std::vector<const Expr*> leaves = leaves_of(indexed.root);
  int n = static_cast<int>(leaves.size());

  std::vector<std::vector<int>> follow(n);
  Positions root = glushkov(indexed.root, follow);

  WeightedAutomaton b;
  b.semiring = w.semiring;
  b.monoid = w.monoid;
  b.states.reserve(static_cast<std::size_t>(n) + 1);
  b.states.push_back("q0");  // the start state, before any position
  for (int i = 0; i < n; ++i) b.states.push_back("q" + std::to_string(i + 1));
  b.initial = {0};
  if (root.nullable) b.final_states.push_back(0);
  for (int i : root.last) b.final_states.push_back(i + 1);

  Elem identity = w.monoid->identity();
  auto edge_into = [&](int from, int position) {
    const Expr* leaf = leaves[position];
    if (leaf->kind == Expr::Kind::Atom) {
      b.transitions.push_back({from, leaf->atom, w.semiring->one(), position + 1});
    } else {
      b.transitions.push_back({from, identity, leaf->weight, position + 1});
    }
  };
  for (int i : root.first) edge_into(0, i);
  for (int p = 0; p < n; ++p) {
    for (int q : follow[p]) edge_into(p + 1, q);
  }
  return b;
}

namespace {

// Regular expressions over the transition alphabet, used as edge labels
// during state elimination. Constructors apply only simplifications that
// change neither the language nor the number of decompositions: the empty
// expression is dropped from sums, absorbed by concatenations, and starred
// to eps.
struct Rex;
using RexPtr = std::shared_ptr<const Rex>;

struct Rex {
  enum class Kind { Empty, Eps, Letter, Sum, Cat, Star };
  Kind kind;
  int letter = -1;
  RexPtr lhs, rhs;
};

RexPtr rex_node(Rex r) { return std::make_shared<Rex>(std::move(r)); }

RexPtr rex_empty() {
  static const RexPtr e = rex_node({Rex::Kind::Empty, -1, nullptr, nullptr});
  return e;
}

RexPtr rex_eps() {
  static const RexPtr e = rex_node({Rex::Kind::Eps, -1, nullptr, nullptr});
  return e;
}

RexPtr rex_letter(int t) { return rex_node({Rex::Kind::Letter, t, nullptr, nullptr}); }

RexPtr rex_sum(RexPtr a, RexPtr b) {
  if (a->kind == Rex::Kind::Empty) return b;
  if (b->kind == Rex::Kind::Empty) return a;
  return rex_node({Rex::Kind::Sum, -1, std::move(a), std::move(b)});
}

RexPtr rex_cat(RexPtr a, RexPtr b) {
  if (a->kind == Rex::Kind::Empty || b->kind == Rex::Kind::Empty) return rex_empty();
  if (a->kind == Rex::Kind::Eps) return b;
  if (b->kind == Rex::Kind::Eps) return a;
  return rex_node({Rex::Kind::Cat, -1, std::move(a), std::move(b)});
}

RexPtr rex_star(RexPtr a) {
  if (a->kind == Rex::Kind::Empty) return rex_eps();
  return rex_node({Rex::Kind::Star, -1, std::move(a), nullptr});
}

ExprPtr substitute(const RexPtr& r, const WeightedAutomaton& a) {
  switch (r->kind) {
    case Rex::Kind::Empty:
      return make_weight(a.semiring->zero());
    case Rex::Kind::Eps:
      return make_weight(a.semiring->one());
    case Rex::Kind::Letter: {
      const Transition& t = a.transitions[r->letter];
      ExprPtr atom = make_atom(t.label);
      if (a.semiring->is_one(t.weight)) return atom;
      return make_product(std::move(atom), make_weight(t.weight));
    }
    case Rex::Kind::Sum:
      return make_sum(substitute(r->lhs, a), substitute(r->rhs, a));
    case Rex::Kind::Cat:
      return make_product(substitute(r->lhs, a), substitute(r->rhs, a));
    case Rex::Kind::Star:
      return make_star(substitute(r->lhs, a));
  }
  return make_weight(a.semiring->zero());
}

}  // namespace

WeightedExpression to_expression(const WeightedAutomaton& a) {
  int n = static_cast<int>(a.states.size());

  // trim to states on some initial-to-final path; the run language and
  // run multiplicities are untouched
  std::vector<std::vector<int>> fwd(n), bwd(n);
  for (const Transition& t : a.transitions) {
    fwd[t.from].push_back(t.to);
    bwd[t.to].push_back(t.from);
  }
  auto closure = [n](const std::vector<std::vector<int>>& adj, const std::vector<int>& seeds) {
    std::vector<bool> seen(n, false);
    std::queue<int> bfs;
    for (int q : seeds) {
      if (!seen[q]) {
        seen[q] = true;
        bfs.push(q);
      }
    }
    while (!bfs.empty()) {
      int q = bfs.front();
      bfs.pop();
      for (int r : adj[q]) {
        if (!seen[r]) {
          seen[r] = true;
          bfs.push(r);
        }
      }
    }
    return seen;
  };
  std::vector<bool> reach = closure(fwd, a.initial);
  std::vector<bool> coreach = closure(bwd, a.final_states);
  std::vector<bool> kept(n);
  for (int q = 0; q < n; ++q) kept[q] = reach[q] && coreach[q];

  // generalised automaton over nodes {source, sink} + kept states, with
  // regex-labelled edges; parallel letters are summed in transition order
  int source = 0, sink = 1;
  auto node_of = [](int q) { return q + 2; };
  std::vector<std::map<int, RexPtr>> out(static_cast<std::size_t>(n) + 2);
  std::vector<std::map<int, RexPtr>> in(static_cast<std::size_t>(n) + 2);
  auto add_edge = [&](int u, int v, const RexPtr& r) {
    if (r->kind == Rex::Kind::Empty) return;
    auto [it, inserted] = out[u].emplace(v, r);
    if (!inserted) it->second = rex_sum(it->second, r);
    in[v][u] = it->second;
  };

  std::set<int> initial(a.initial.begin(), a.initial.end());
  std::set<int> final_set(a.final_states.begin(), a.final_states.end());
  for (int q : initial) {
    if (kept[q]) add_edge(source, node_of(q), rex_eps());
  }
  for (int q : final_set) {
    if (kept[q]) add_edge(node_of(q), sink, rex_eps());
  }
  for (std::size_t t = 0; t < a.transitions.size(); ++t) {
    const Transition& tr = a.transitions[t];
    if (kept[tr.from] && kept[tr.to]) {
      add_edge(node_of(tr.from), node_of(tr.to), rex_letter(static_cast<int>(t)));
    }
  }

  for (int q = 0; q < n; ++q) {
    if (!kept[q]) continue;
    int r = node_of(q);
    RexPtr through = rex_eps();
    if (auto self = out[r].find(r); self != out[r].end()) through = rex_star(self->second);
    std::vector<std::pair<int, RexPtr>> ins(in[r].begin(), in[r].end());
    std::vector<std::pair<int, RexPtr>> outs(out[r].begin(), out[r].end());
    for (auto& [u, w] : ins) {
      if (u != r) out[u].erase(r);
    }
    for (auto& [v, w] : outs) {
      if (v != r) in[v].erase(r);
    }
    out[r].clear();
    in[r].clear();
    for (const auto& [u, wu] : ins) {
      if (u == r) continue;
      RexPtr left = rex_cat(wu, through);
      for (const auto& [v, wv] : outs) {
        if (v == r) continue;
        add_edge(u, v, rex_cat(left, wv));
      }
    }
  }

  RexPtr result = rex_empty();
  if (auto it = out[source].find(sink); it != out[source].end()) result = it->second;
  return {a.semiring, a.monoid, substitute(result, a)};
}

}  // namespace wamex
