#pragma once

#include <compare>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "wamex/monoid.hpp"

namespace wamex {

/// One letter of (A u Abar): a generator index plus a bar flag.
/// Ordering is (generator index, bar flag); words compare lexicographically,
/// which fixes the canonical node order of Munn trees.
struct SignedGen {
  int gen = 0;
  bool bar = false;

  auto operator<=>(const SignedGen&) const = default;
};

using SignedWord = std::vector<SignedGen>;

struct MunnAlphabet {
  std::vector<std::string> names;

  int index_of(std::string_view name) const;
};
using MunnAlphabetPtr = std::shared_ptr<const MunnAlphabet>;

/// Munn bi-rooted tree: the canonical form of a free-inverse-monoid
/// element. Nodes are the reduced words reachable from the initial node;
/// the set is prefix-closed, sorted, and always contains the empty word
/// (the initial node). final_node is the second root.
struct MunnTree {
  MunnAlphabetPtr alphabet;
  std::vector<SignedWord> nodes;
  SignedWord final_node;
};

/// Free-group reduction: cancels adjacent inverse pairs until none remain.
SignedWord reduce(const SignedWord& w);
/// w reversed with all bars flipped; the group inverse of a reduced word.
SignedWord inverse_word(const SignedWord& w);

MunnPtr munn_identity(MunnAlphabetPtr alphabet);
/// Reads w as a complete walk from the initial node; nodes are the reduced
/// prefixes of w and the final node is reduce(w).
MunnPtr from_word(MunnAlphabetPtr alphabet, const SignedWord& w);
MunnPtr munn_product(const MunnPtr& x, const MunnPtr& y);
MunnPtr munn_inverse(const MunnPtr& x);
bool munn_eq(const MunnPtr& x, const MunnPtr& y);
bool munn_idempotent(const MunnPtr& x);
/// p is a prefix of x iff p's nodes are a subtree of x's with the same
/// initial node, i.e. node-set inclusion on canonical forms.
bool munn_is_prefix(const MunnPtr& p, const MunnPtr& x);
std::vector<MunnPtr> munn_prefixes(const MunnPtr& x);
/// All s with p * s == x.
std::vector<MunnPtr> munn_completions(const MunnPtr& p, const MunnPtr& x);

/// Canonical walk literal: a depth-first traversal of the tree followed by
/// the path to the final node. munn_parse(alphabet, munn_render(x)) == x.
std::string munn_render(const MunnPtr& x);
/// Space-separated signed generators; `~g` is the bar of g, `eps` the
/// identity. Generator names may be bracketed pair letters like <0,a>.
MunnPtr munn_parse(const MunnAlphabetPtr& alphabet, std::string_view text);
SignedWord parse_signed_word(const MunnAlphabet& alphabet, std::string_view text);
/// Raw tokens of a signed-word literal, bars kept (for alphabet discovery).
std::vector<std::string> signed_word_tokens(std::string_view text);

/// DOT rendering: initial node flagged by an arrowless edge, final node a
/// double circle, edges labelled by generators.
std::string to_dot(const MunnPtr& x);

// Encodings for walking automata.

/// Linear tree of B w0 ... wn E. The alphabet must contain the letters of
/// the word plus the end markers "B" and "E".
MunnPtr encode_word(const MunnAlphabetPtr& alphabet, const std::vector<std::string>& word);

struct RankedTree {
  std::string label;
  std::vector<RankedTree> children;
};

/// Parses "a(b,c(d,d))" style tree literals.
RankedTree parse_ranked_tree(std::string_view text);

/// Alphabet of the tree-walking encoding: "_" (the below-leaf marker),
/// then "<T,a>" for each label a, then "<i,a>" for each child slot i.
MunnAlphabetPtr tree_walk_alphabet(const std::vector<std::string>& labels, int max_arity);

/// Depth-first-search walk element of a ranked tree: the root hangs under
/// a fresh top node via <T,label>, child i of an a-labelled node is
/// reached via <i,a>, and every leaf gets a "_" edge below it. The top
/// node is both initial and final, so the element is idempotent.
MunnPtr encode_tree(const RankedTree& tree, int max_arity);

}  // namespace wamex
