#include "wamex/munn.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include "text_util.hpp"
#include "wamex/errors.hpp"

namespace wamex {

int MunnAlphabet::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == name) return static_cast<int>(i);
  }
  return -1;
}

SignedWord reduce(const SignedWord& w) {
  SignedWord out;
  out.reserve(w.size());
  for (const SignedGen& g : w) {
    if (!out.empty() && out.back().gen == g.gen && out.back().bar != g.bar) {
      out.pop_back();
    } else {
      out.push_back(g);
    }
  }
  return out;
}

SignedWord inverse_word(const SignedWord& w) {
  SignedWord out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->gen, !it->bar});
  return out;
}

namespace {

SignedWord concat_reduce(const SignedWord& a, const SignedWord& b) {
  SignedWord w = a;
  for (const SignedGen& g : b) {
    if (!w.empty() && w.back().gen == g.gen && w.back().bar != g.bar) {
      w.pop_back();
    } else {
      w.push_back(g);
    }
  }
  return w;
}

MunnPtr make_tree(MunnAlphabetPtr alphabet, std::vector<SignedWord> nodes, SignedWord final_node) {
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  auto t = std::make_shared<MunnTree>();
  t->alphabet = std::move(alphabet);
  t->nodes = std::move(nodes);
  t->final_node = std::move(final_node);
  return t;
}

bool same_alphabet(const MunnTree& x, const MunnTree& y) {
  return x.alphabet == y.alphabet || x.alphabet->names == y.alphabet->names;
}

void require_same_alphabet(const MunnTree& x, const MunnTree& y) {
  if (!same_alphabet(x, y)) throw ParseError("free-inverse-monoid alphabet mismatch");
}

// Tree adjacency over the node set: every non-empty node hangs under the
// node obtained by dropping its last letter (prefix closure guarantees
// the parent is present).
struct NodeIndex {
  std::map<SignedWord, int> id;
  std::vector<std::vector<int>> children;  // by node id, sorted
  std::vector<int> parent;                 // -1 for the empty word

  explicit NodeIndex(const std::vector<SignedWord>& nodes) {
    for (std::size_t i = 0; i < nodes.size(); ++i) id.emplace(nodes[i], static_cast<int>(i));
    children.resize(nodes.size());
    parent.assign(nodes.size(), -1);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      if (nodes[i].empty()) continue;
      SignedWord p(nodes[i].begin(), nodes[i].end() - 1);
      int pid = id.at(p);
      parent[i] = pid;
      children[pid].push_back(static_cast<int>(i));
    }
  }
};

// All connected subsets of the tree that contain `root` and cover every
// node marked required. Subsets are returned as sorted id vectors.
std::vector<std::vector<int>> connected_subsets(const NodeIndex& index, int root,
                                                const std::vector<bool>& required) {
  int n = static_cast<int>(index.parent.size());
  std::vector<std::vector<int>> adjacency(n);
  for (int v = 0; v < n; ++v) {
    if (index.parent[v] >= 0) {
      adjacency[v].push_back(index.parent[v]);
      adjacency[index.parent[v]].push_back(v);
    }
  }
  // does any required node live in the subtree of v when entered from p?
  auto has_required = [&](auto&& self, int v, int p) -> bool {
    if (required[v]) return true;
    for (int c : adjacency[v]) {
      if (c != p && self(self, c, v)) return true;
    }
    return false;
  };
  auto enumerate = [&](auto&& self, int v, int p) -> std::vector<std::vector<int>> {
    std::vector<std::vector<int>> combos{{v}};
    for (int c : adjacency[v]) {
      if (c == p) continue;
      bool may_skip = !has_required(has_required, c, v);
      auto sub = self(self, c, v);
      std::vector<std::vector<int>> next;
      for (const auto& combo : combos) {
        if (may_skip) next.push_back(combo);
        for (const auto& s : sub) {
          auto merged = combo;
          merged.insert(merged.end(), s.begin(), s.end());
          next.push_back(std::move(merged));
        }
      }
      combos = std::move(next);
    }
    return combos;
  };
  auto result = enumerate(enumerate, root, -1);
  for (auto& s : result) std::sort(s.begin(), s.end());
  return result;
}

}  // namespace

MunnPtr munn_identity(MunnAlphabetPtr alphabet) {
  return make_tree(std::move(alphabet), {SignedWord{}}, SignedWord{});
}

MunnPtr from_word(MunnAlphabetPtr alphabet, const SignedWord& w) {
  std::vector<SignedWord> nodes;
  SignedWord cur;
  nodes.push_back(cur);
  for (const SignedGen& g : w) {
    if (!cur.empty() && cur.back().gen == g.gen && cur.back().bar != g.bar) {
      cur.pop_back();
    } else {
      cur.push_back(g);
    }
    nodes.push_back(cur);
  }
  return make_tree(std::move(alphabet), std::move(nodes), std::move(cur));
}

MunnPtr munn_product(const MunnPtr& x, const MunnPtr& y) {
  require_same_alphabet(*x, *y);
  std::vector<SignedWord> nodes = x->nodes;
  for (const SignedWord& q : y->nodes) nodes.push_back(concat_reduce(x->final_node, q));
  return make_tree(x->alphabet, std::move(nodes), concat_reduce(x->final_node, y->final_node));
}

MunnPtr munn_inverse(const MunnPtr& x) {
  SignedWord t = inverse_word(x->final_node);
  std::vector<SignedWord> nodes;
  nodes.reserve(x->nodes.size());
  for (const SignedWord& q : x->nodes) nodes.push_back(concat_reduce(t, q));
  return make_tree(x->alphabet, std::move(nodes), std::move(t));
}

bool munn_eq(const MunnPtr& x, const MunnPtr& y) {
  return same_alphabet(*x, *y) && x->nodes == y->nodes && x->final_node == y->final_node;
}

bool munn_idempotent(const MunnPtr& x) { return x->final_node.empty(); }

bool munn_is_prefix(const MunnPtr& p, const MunnPtr& x) {
  if (!same_alphabet(*p, *x)) return false;
  return std::includes(x->nodes.begin(), x->nodes.end(), p->nodes.begin(), p->nodes.end());
}

std::vector<MunnPtr> munn_prefixes(const MunnPtr& x) {
  NodeIndex index(x->nodes);
  std::vector<bool> required(x->nodes.size(), false);
  auto subsets = connected_subsets(index, index.id.at(SignedWord{}), required);
  std::vector<MunnPtr> out;
  for (const auto& subset : subsets) {
    std::vector<SignedWord> nodes;
    nodes.reserve(subset.size());
    for (int id : subset) nodes.push_back(x->nodes[id]);
    for (int id : subset) {
      out.push_back(make_tree(x->alphabet, nodes, x->nodes[id]));
    }
  }
  std::sort(out.begin(), out.end(),
            [](const MunnPtr& a, const MunnPtr& b) { return munn_render(a) < munn_render(b); });
  return out;
}

std::vector<MunnPtr> munn_completions(const MunnPtr& p, const MunnPtr& x) {
  if (!munn_is_prefix(p, x)) return {};
  NodeIndex index(x->nodes);
  std::vector<bool> required(x->nodes.size(), false);
  // the completion must supply every node p misses and must contain the
  // final node (its translate is the completion's own final node)
  for (std::size_t i = 0; i < x->nodes.size(); ++i) {
    if (!std::binary_search(p->nodes.begin(), p->nodes.end(), x->nodes[i])) required[i] = true;
  }
  required[index.id.at(x->final_node)] = true;
  SignedWord back = inverse_word(p->final_node);
  auto subsets = connected_subsets(index, index.id.at(p->final_node), required);
  std::vector<MunnPtr> out;
  out.reserve(subsets.size());
  for (const auto& subset : subsets) {
    std::vector<SignedWord> nodes;
    nodes.reserve(subset.size());
    for (int id : subset) nodes.push_back(concat_reduce(back, x->nodes[id]));
    out.push_back(make_tree(x->alphabet, std::move(nodes), concat_reduce(back, x->final_node)));
  }
  std::sort(out.begin(), out.end(),
            [](const MunnPtr& a, const MunnPtr& b) { return munn_render(a) < munn_render(b); });
  return out;
}

namespace {

std::string token_of(const MunnAlphabet& alphabet, const SignedGen& g) {
  std::string t = g.bar ? "~" : "";
  t += alphabet.names[g.gen];
  return t;
}

void dfs_walk(const NodeIndex& index, const std::vector<SignedWord>& nodes, int v, SignedWord& out) {
  for (int c : index.children[v]) {
    out.push_back(nodes[c].back());
    dfs_walk(index, nodes, c, out);
    out.push_back({nodes[c].back().gen, !nodes[c].back().bar});
  }
}

}  // namespace

std::string munn_render(const MunnPtr& x) {
  if (x->nodes.size() == 1 && x->final_node.empty()) return "eps";
  NodeIndex index(x->nodes);
  SignedWord walk;
  dfs_walk(index, x->nodes, index.id.at(SignedWord{}), walk);
  walk.insert(walk.end(), x->final_node.begin(), x->final_node.end());
  std::string out;
  for (std::size_t i = 0; i < walk.size(); ++i) {
    if (i) out += ' ';
    out += token_of(*x->alphabet, walk[i]);
  }
  return out;
}

SignedWord parse_signed_word(const MunnAlphabet& alphabet, std::string_view text) {
  SignedWord w;
  for (const std::string& token : detail::split_gen_tokens(text)) {
    std::string_view t = token;
    bool bar = false;
    if (!t.empty() && t.front() == '~') {
      bar = true;
      t.remove_prefix(1);
    }
    if (t == "eps") {
      if (bar) throw ParseError("'eps' cannot be barred");
      continue;
    }
    int gen = alphabet.index_of(t);
    if (gen < 0) throw ParseError("unknown generator '" + std::string(t) + "'");
    w.push_back({gen, bar});
  }
  return w;
}

MunnPtr munn_parse(const MunnAlphabetPtr& alphabet, std::string_view text) {
  return from_word(alphabet, parse_signed_word(*alphabet, text));
}

std::vector<std::string> signed_word_tokens(std::string_view text) {
  return detail::split_gen_tokens(text);
}

std::string to_dot(const MunnPtr& x) {
  NodeIndex index(x->nodes);
  std::string out = "digraph munn {\n";
  out += "  rankdir=TB;\n";
  out += "  node [shape=circle, label=\"\", width=0.25];\n";
  out += "  __initial [shape=none, label=\"\", width=0];\n";
  int final_id = index.id.at(x->final_node);
  for (std::size_t i = 0; i < x->nodes.size(); ++i) {
    out += "  n" + std::to_string(i);
    if (static_cast<int>(i) == final_id) out += " [shape=doublecircle]";
    out += ";\n";
  }
  out += "  __initial -> n" + std::to_string(index.id.at(SignedWord{})) + " [arrowhead=none];\n";
  for (std::size_t i = 0; i < x->nodes.size(); ++i) {
    if (x->nodes[i].empty()) continue;
    const SignedGen& step = x->nodes[i].back();
    int pid = index.parent[i];
    // a barred step descends against the edge direction
    int src = step.bar ? static_cast<int>(i) : pid;
    int dst = step.bar ? pid : static_cast<int>(i);
    out += "  n" + std::to_string(src) + " -> n" + std::to_string(dst) + " [label=\"" +
           x->alphabet->names[step.gen] + "\"];\n";
  }
  out += "}\n";
  return out;
}

MunnPtr encode_word(const MunnAlphabetPtr& alphabet, const std::vector<std::string>& word) {
  int begin = alphabet->index_of("B");
  int end = alphabet->index_of("E");
  if (begin < 0 || end < 0) {
    throw ParseError("word encoding needs the end markers B and E in the alphabet");
  }
  SignedWord w;
  w.push_back({begin, false});
  for (const std::string& letter : word) {
    int gen = alphabet->index_of(letter);
    if (gen < 0) throw ParseError("unknown letter '" + letter + "'");
    w.push_back({gen, false});
  }
  w.push_back({end, false});
  return from_word(alphabet, w);
}

RankedTree parse_ranked_tree(std::string_view text) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };
  auto parse_node = [&](auto&& self) -> RankedTree {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && detail::is_word_char(text[pos])) ++pos;
    if (pos == start) throw ParseError("expected a tree label", pos);
    RankedTree node;
    node.label = std::string(text.substr(start, pos - start));
    skip_ws();
    if (pos < text.size() && text[pos] == '(') {
      ++pos;
      for (;;) {
        node.children.push_back(self(self));
        skip_ws();
        if (pos < text.size() && text[pos] == ',') {
          ++pos;
          continue;
        }
        break;
      }
      if (pos >= text.size() || text[pos] != ')') throw ParseError("expected ')'", pos);
      ++pos;
    }
    return node;
  };
  RankedTree t = parse_node(parse_node);
  skip_ws();
  if (pos != text.size()) throw ParseError("trailing input after tree literal", pos);
  return t;
}

MunnAlphabetPtr tree_walk_alphabet(const std::vector<std::string>& labels, int max_arity) {
  auto alphabet = std::make_shared<MunnAlphabet>();
  alphabet->names.push_back("_");
  for (const std::string& a : labels) alphabet->names.push_back("<T," + a + ">");
  for (int i = 0; i < max_arity; ++i) {
    for (const std::string& a : labels) {
      alphabet->names.push_back("<" + std::to_string(i) + "," + a + ">");
    }
  }
  return alphabet;
}

namespace {

void collect_labels(const RankedTree& t, std::set<std::string>& labels, int max_arity) {
  if (static_cast<int>(t.children.size()) > max_arity) {
    throw ParseError("tree arity exceeds the declared maximum");
  }
  labels.insert(t.label);
  for (const RankedTree& c : t.children) collect_labels(c, labels, max_arity);
}

void walk_tree(const RankedTree& t, const MunnAlphabet& alphabet, int enter_gen, SignedWord& out) {
  out.push_back({enter_gen, false});
  if (t.children.empty()) {
    int bottom = alphabet.index_of("_");
    out.push_back({bottom, false});
    out.push_back({bottom, true});
  } else {
    for (std::size_t i = 0; i < t.children.size(); ++i) {
      int gen = alphabet.index_of("<" + std::to_string(i) + "," + t.children[i].label + ">");
      walk_tree(t.children[i], alphabet, gen, out);
    }
  }
  out.push_back({enter_gen, true});
}

}  // namespace

MunnPtr encode_tree(const RankedTree& tree, int max_arity) {
  std::set<std::string> labels;
  collect_labels(tree, labels, max_arity);
  auto alphabet = tree_walk_alphabet(std::vector<std::string>(labels.begin(), labels.end()),
                                     max_arity);
  SignedWord walk;
  walk_tree(tree, *alphabet, alphabet->index_of("<T," + tree.label + ">"), walk);
  return from_word(alphabet, walk);
}

}  // namespace wamex
