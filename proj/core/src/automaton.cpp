#include "wamex/automaton.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <utility>

#include "wamex/errors.hpp"

namespace wamex {

int WeightedAutomaton::state_index(std::string_view name) const {
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (states[i] == name) return static_cast<int>(i);
  }
  return -1;
}

bool WeightedAutomaton::is_initial(int q) const {
  return std::find(initial.begin(), initial.end(), q) != initial.end();
}

bool WeightedAutomaton::is_final(int q) const {
  return std::find(final_states.begin(), final_states.end(), q) != final_states.end();
}

bool RunDfa::accepts(std::span<const int> run_word) const {
  if (run_word.empty()) {
    for (int q : initial) {
      if (accepting[q]) return true;
    }
    return false;
  }
  int state = ends[run_word.front()].first;
  if (std::find(initial.begin(), initial.end(), state) == initial.end()) return false;
  for (int letter : run_word) {
    state = step(state, letter);
    if (state == sink) return false;
  }
  return accepting[state];
}

RunDfa run_dfa(const WeightedAutomaton& a) {
  RunDfa d;
  d.num_states = static_cast<int>(a.states.size()) + 1;
  d.sink = static_cast<int>(a.states.size());
  d.initial = a.initial;
  d.accepting.assign(d.num_states, false);
  for (int q : a.final_states) d.accepting[q] = true;
  d.ends.reserve(a.transitions.size());
  for (const Transition& t : a.transitions) d.ends.emplace_back(t.from, t.to);
  return d;
}

namespace {

// Weighted digraph with a single source (0) and sink (1); edges keyed by
// ordered maps so that sums are accumulated in a fixed order.
struct PathGraph {
  const Semiring& sr;
  std::vector<std::map<int, Value>> out, in;

  explicit PathGraph(const Semiring& semiring) : sr(semiring) { grow(2); }

  void grow(std::size_t n) {
    if (out.size() < n) {
      out.resize(n);
      in.resize(n);
    }
  }

  void add_edge(int u, int v, const Value& w) {
    if (sr.is_zero(w)) return;
    auto [it, inserted] = out[u].emplace(v, w);
    if (!inserted) it->second = sr.add(it->second, w);
    in[v][u] = it->second;
  }

  void drop_node(int r) {
    for (auto& [u, w] : in[r]) {
      if (u != r) out[u].erase(r);
    }
    for (auto& [v, w] : out[r]) {
      if (v != r) in[v].erase(r);
    }
    out[r].clear();
    in[r].clear();
  }

  // Sums all source-to-sink path weights by eliminating every inner node;
  // a self-loop contributes through star. Elimination follows increasing
  // (in-degree x out-degree), ties by node id.
  Value eliminate_all() {
    std::vector<int> alive;
    for (std::size_t v = 2; v < out.size(); ++v) alive.push_back(static_cast<int>(v));
    while (!alive.empty()) {
      std::size_t best = 0;
      std::size_t best_cost = static_cast<std::size_t>(-1);
      for (std::size_t i = 0; i < alive.size(); ++i) {
        int r = alive[i];
        std::size_t ins = in[r].size() - (in[r].count(r) ? 1 : 0);
        std::size_t outs = out[r].size() - (out[r].count(r) ? 1 : 0);
        std::size_t cost = ins * outs;
        if (cost < best_cost) {
          best_cost = cost;
          best = i;
        }
      }
      int r = alive[best];
      alive.erase(alive.begin() + static_cast<std::ptrdiff_t>(best));

      Value through = sr.one();
      if (auto it = out[r].find(r); it != out[r].end()) through = sr.star(it->second);
      std::vector<std::pair<int, Value>> ins(in[r].begin(), in[r].end());
      std::vector<std::pair<int, Value>> outs(out[r].begin(), out[r].end());
      drop_node(r);
      for (const auto& [u, wu] : ins) {
        if (u == r) continue;
        Value left = sr.mul(wu, through);
        for (const auto& [v, wv] : outs) {
          if (v == r) continue;
          add_edge(u, v, sr.mul(left, wv));
        }
      }
    }
    if (auto it = out[0].find(1); it != out[0].end()) return it->second;
    return sr.zero();
  }
};

}  // namespace

Value evaluate(const WeightedAutomaton& a, const Elem& target, std::size_t state_budget) {
  const Semiring& sr = *a.semiring;
  const Monoid& mon = *a.monoid;

  // label alphabet: distinct transition labels
  std::vector<Elem> labels;
  std::map<std::string, int> label_ids;
  std::vector<int> label_of(a.transitions.size());
  for (std::size_t i = 0; i < a.transitions.size(); ++i) {
    std::string key = mon.render(a.transitions[i].label);
    auto [it, inserted] = label_ids.emplace(std::move(key), static_cast<int>(labels.size()));
    if (inserted) labels.push_back(a.transitions[i].label);
    label_of[i] = it->second;
  }

  PrefixDfa dfa = preimage_dfa(mon, std::move(labels), target, state_budget);
  if (dfa.accepting < 0) return sr.zero();

  std::vector<std::vector<int>> by_source(a.states.size());
  for (std::size_t i = 0; i < a.transitions.size(); ++i) {
    by_source[a.transitions[i].from].push_back(static_cast<int>(i));
  }

  // product of the run automaton with the prefix automaton, grown forward
  // from the initial pairs; the prefix sink is never materialised
  PathGraph graph(sr);
  std::map<std::pair<int, int>, int> ids;
  std::vector<std::pair<int, int>> nodes;
  auto intern = [&](int q, int d) -> int {
    auto [it, inserted] = ids.emplace(std::make_pair(q, d), static_cast<int>(nodes.size()) + 2);
    if (inserted) nodes.emplace_back(q, d);
    return it->second;
  };

  for (int q : a.initial) intern(q, dfa.initial);
  for (std::size_t n = 0; n < nodes.size(); ++n) {
    auto [q, d] = nodes[n];
    int u = static_cast<int>(n) + 2;
    graph.grow(nodes.size() + 2);
    for (int ti : by_source[q]) {
      const Transition& t = a.transitions[ti];
      if (sr.is_zero(t.weight)) continue;
      int d2 = dfa.step(d, label_of[ti]);
      if (d2 == dfa.sink) continue;
      int v = intern(t.to, d2);
      graph.grow(nodes.size() + 2);
      graph.add_edge(u, v, t.weight);
    }
  }

  graph.grow(nodes.size() + 2);
  for (int q : a.initial) graph.add_edge(0, intern(q, dfa.initial), sr.one());
  for (std::size_t n = 0; n < nodes.size(); ++n) {
    auto [q, d] = nodes[n];
    if (d == dfa.accepting && a.is_final(q)) {
      graph.add_edge(static_cast<int>(n) + 2, 1, sr.one());
    }
  }

  // trim: drop nodes that cannot reach the sink
  std::vector<bool> live(nodes.size() + 2, false);
  std::queue<int> bfs;
  bfs.push(1);
  live[1] = true;
  while (!bfs.empty()) {
    int v = bfs.front();
    bfs.pop();
    for (const auto& [u, w] : graph.in[v]) {
      if (!live[u]) {
        live[u] = true;
        bfs.push(u);
      }
    }
  }
  if (!live[0]) return sr.zero();
  for (std::size_t v = 2; v < live.size(); ++v) {
    if (!live[v]) graph.drop_node(static_cast<int>(v));
  }

  return graph.eliminate_all();
}

Value ambiguity(const WeightedAutomaton& a, const Elem& target, std::size_t state_budget) {
  WeightedAutomaton counted;
  counted.semiring = make_counting_semiring();
  counted.monoid = a.monoid;
  counted.states = a.states;
  counted.initial = a.initial;
  counted.final_states = a.final_states;
  counted.transitions.reserve(a.transitions.size());
  for (const Transition& t : a.transitions) {
    counted.transitions.push_back({t.from, t.label, counted.semiring->one(), t.to});
  }
  return evaluate(counted, target, state_budget);
}

WeightedAutomaton lift_product(const WeightedAutomaton& a) {
  WeightedAutomaton lifted;
  auto counting = make_counting_semiring();
  lifted.semiring = make_product_semiring(a.semiring, counting);
  lifted.monoid = a.monoid;
  lifted.states = a.states;
  lifted.initial = a.initial;
  lifted.final_states = a.final_states;
  lifted.transitions.reserve(a.transitions.size());
  for (const Transition& t : a.transitions) {
    Value paired(std::make_shared<const std::pair<Value, Value>>(t.weight, counting->one()));
    lifted.transitions.push_back({t.from, t.label, std::move(paired), t.to});
  }
  return lifted;
}

WeightedAutomaton drop_zero_transitions(const WeightedAutomaton& a) {
  WeightedAutomaton out = a;
  out.transitions.clear();
  for (const Transition& t : a.transitions) {
    if (!a.semiring->is_zero(t.weight)) out.transitions.push_back(t);
  }
  return out;
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string automaton_to_dot(const WeightedAutomaton& a) {
  std::string out = "digraph wa {\n  rankdir=LR;\n  node [shape=circle];\n";
  for (std::size_t q = 0; q < a.states.size(); ++q) {
    out += "  q" + std::to_string(q) + " [label=\"" + dot_escape(a.states[q]) + "\"";
    if (a.is_final(static_cast<int>(q))) out += ", shape=doublecircle";
    out += "];\n";
  }
  for (std::size_t i = 0; i < a.initial.size(); ++i) {
    std::string flag = "__init" + std::to_string(i);
    out += "  " + flag + " [shape=point, width=0];\n";
    out += "  " + flag + " -> q" + std::to_string(a.initial[i]) + ";\n";
  }
  for (const Transition& t : a.transitions) {
    out += "  q" + std::to_string(t.from) + " -> q" + std::to_string(t.to) + " [label=\"" +
           dot_escape(a.monoid->render(t.label)) + " | " + dot_escape(a.semiring->render(t.weight)) +
           "\"];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace wamex
