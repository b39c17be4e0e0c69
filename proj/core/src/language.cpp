#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "text_util.hpp"
#include "wamex/errors.hpp"
#include "wamex/semiring.hpp"

namespace wamex {

namespace {

using Op = LangNode::Op;

LangPtr make_node(Op op, char letter, LangPtr lhs, LangPtr rhs) {
  auto n = std::make_shared<LangNode>();
  n->op = op;
  n->letter = letter;
  n->lhs = std::move(lhs);
  n->rhs = std::move(rhs);
  return n;
}

bool nullable(const LangPtr& n) {
  switch (n->op) {
    case Op::Empty:
    case Op::Letter:
      return false;
    case Op::Eps:
    case Op::Star:
      return true;
    case Op::Union:
      return nullable(n->lhs) || nullable(n->rhs);
    case Op::Concat:
      return nullable(n->lhs) && nullable(n->rhs);
  }
  return false;
}

// Antimirov partial derivatives; the closure of these under letters is
// finite, which bounds the bisimulation below.
void partial_derivatives(const LangPtr& n, char a, std::vector<LangPtr>& out) {
  switch (n->op) {
    case Op::Empty:
    case Op::Eps:
      return;
    case Op::Letter:
      if (n->letter == a) out.push_back(lang_eps());
      return;
    case Op::Union:
      partial_derivatives(n->lhs, a, out);
      partial_derivatives(n->rhs, a, out);
      return;
    case Op::Concat: {
      std::vector<LangPtr> left;
      partial_derivatives(n->lhs, a, left);
      for (auto& d : left) out.push_back(lang_concat(std::move(d), n->rhs));
      if (nullable(n->lhs)) partial_derivatives(n->rhs, a, out);
      return;
    }
    case Op::Star: {
      std::vector<LangPtr> body;
      partial_derivatives(n->lhs, a, body);
      LangPtr self = lang_star(n->lhs);
      for (auto& d : body) out.push_back(lang_concat(std::move(d), self));
      return;
    }
  }
}

// A determinised state: a set of partial derivatives, keyed canonically.
struct LangState {
  std::vector<LangPtr> parts;
  std::string key;
  bool accepting = false;
};

LangState make_state(const std::vector<LangPtr>& parts) {
  std::map<std::string, LangPtr> dedup;
  for (const auto& p : parts) {
    if (p->op == Op::Empty) continue;
    dedup.emplace(lang_render(p), p);
  }
  LangState s;
  for (auto& [k, p] : dedup) {
    s.key += k;
    s.key += '\x1f';
    s.accepting = s.accepting || nullable(p);
    s.parts.push_back(p);
  }
  return s;
}

LangState step_state(const LangState& s, char a) {
  std::vector<LangPtr> next;
  for (const auto& p : s.parts) partial_derivatives(p, a, next);
  return make_state(next);
}

}  // namespace

LangPtr lang_empty() {
  static const LangPtr e = make_node(Op::Empty, 0, nullptr, nullptr);
  return e;
}

LangPtr lang_eps() {
  static const LangPtr e = make_node(Op::Eps, 0, nullptr, nullptr);
  return e;
}

LangPtr lang_letter(char c) { return make_node(Op::Letter, c, nullptr, nullptr); }

LangPtr lang_union(LangPtr a, LangPtr b) {
  if (a->op == Op::Empty) return b;
  if (b->op == Op::Empty) return a;
  return make_node(Op::Union, 0, std::move(a), std::move(b));
}

LangPtr lang_concat(LangPtr a, LangPtr b) {
  if (a->op == Op::Empty || b->op == Op::Empty) return lang_empty();
  if (a->op == Op::Eps) return b;
  if (b->op == Op::Eps) return a;
  return make_node(Op::Concat, 0, std::move(a), std::move(b));
}

LangPtr lang_star(LangPtr a) {
  if (a->op == Op::Empty || a->op == Op::Eps) return lang_eps();
  if (a->op == Op::Star) return a;
  return make_node(Op::Star, 0, std::move(a), nullptr);
}

namespace {

void render_into(const LangPtr& n, int ctx_prec, std::string& out) {
  // precedence: union 0, concat 1, star 2
  switch (n->op) {
    case Op::Empty:
      out += "empty";
      return;
    case Op::Eps:
      out += "eps";
      return;
    case Op::Letter:
      out += n->letter;
      return;
    case Op::Union: {
      bool paren = ctx_prec > 0;
      if (paren) out += '(';
      render_into(n->lhs, 0, out);
      out += '+';
      render_into(n->rhs, 0, out);
      if (paren) out += ')';
      return;
    }
    case Op::Concat: {
      bool paren = ctx_prec > 1;
      if (paren) out += '(';
      render_into(n->lhs, 1, out);
      render_into(n->rhs, 1, out);
      if (paren) out += ')';
      return;
    }
    case Op::Star: {
      render_into(n->lhs, 2, out);
      out += '*';
      return;
    }
  }
}

struct LangParser {
  std::string_view text;
  const std::string& alphabet;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  }

  bool at_atom_start() {
    skip_ws();
    if (pos >= text.size()) return false;
    char c = text[pos];
    return c == '(' || detail::is_word_char(c);
  }

  LangPtr parse_union() {
    LangPtr e = parse_concat();
    skip_ws();
    while (pos < text.size() && text[pos] == '+') {
      ++pos;
      e = lang_union(std::move(e), parse_concat());
      skip_ws();
    }
    return e;
  }

  LangPtr parse_concat() {
    LangPtr e = parse_repeat();
    for (;;) {
      skip_ws();
      if (pos < text.size() && text[pos] == '.') {
        ++pos;
        e = lang_concat(std::move(e), parse_repeat());
      } else if (at_atom_start()) {
        e = lang_concat(std::move(e), parse_repeat());
      } else {
        return e;
      }
    }
  }

  LangPtr parse_repeat() {
    LangPtr e = parse_atom();
    skip_ws();
    while (pos < text.size() && text[pos] == '*') {
      ++pos;
      e = lang_star(std::move(e));
      skip_ws();
    }
    return e;
  }

  LangPtr parse_atom() {
    skip_ws();
    if (pos >= text.size()) throw ParseError("unexpected end of language literal", pos);
    char c = text[pos];
    if (c == '(') {
      ++pos;
      LangPtr e = parse_union();
      skip_ws();
      if (pos >= text.size() || text[pos] != ')') throw ParseError("expected ')'", pos);
      ++pos;
      return e;
    }
    if (text.substr(pos).starts_with("eps") &&
        (pos + 3 >= text.size() || !detail::is_word_char(text[pos + 3]))) {
      pos += 3;
      return lang_eps();
    }
    if (text.substr(pos).starts_with("empty") &&
        (pos + 5 >= text.size() || !detail::is_word_char(text[pos + 5]))) {
      pos += 5;
      return lang_empty();
    }
    if (alphabet.find(c) == std::string::npos) {
      throw ParseError(std::string("letter '") + c + "' is not in the declared alphabet", pos);
    }
    ++pos;
    return lang_letter(c);
  }
};

}  // namespace

std::string lang_render(const LangPtr& a) {
  std::string out;
  render_into(a, 0, out);
  return out;
}

LangPtr lang_parse(std::string_view text, const std::string& alphabet) {
  LangParser p{text, alphabet};
  p.skip_ws();
  if (p.pos >= text.size()) throw ParseError("empty language literal");
  LangPtr e = p.parse_union();
  p.skip_ws();
  if (p.pos != text.size()) throw ParseError("trailing input in language literal", p.pos);
  return e;
}

bool language_eq(const LangPtr& a, const LangPtr& b, const std::string& alphabet) {
  if (a.get() == b.get()) return true;
  // constructor-built trees denote the empty language only at an Empty root
  if (a->op == Op::Empty || b->op == Op::Empty) return a->op == b->op;
  LangState sa = make_state({a});
  LangState sb = make_state({b});
  std::set<std::pair<std::string, std::string>> visited;
  std::vector<std::pair<LangState, LangState>> stack;
  stack.emplace_back(std::move(sa), std::move(sb));
  while (!stack.empty()) {
    auto [x, y] = std::move(stack.back());
    stack.pop_back();
    if (x.accepting != y.accepting) return false;
    if (!visited.emplace(x.key, y.key).second) continue;
    for (char c : alphabet) {
      stack.emplace_back(step_state(x, c), step_state(y, c));
    }
  }
  return true;
}

}  // namespace wamex
