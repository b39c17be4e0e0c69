#include "wamex/expression.hpp"

#include <utility>
#include <vector>

#include "text_util.hpp"
#include "wamex/errors.hpp"
#include "wamex/kleene.hpp"

namespace wamex {

namespace {

ExprPtr make_node(Expr e) { return std::make_shared<Expr>(std::move(e)); }

}  // namespace

ExprPtr make_weight(Value k) {
  Expr e;
  e.kind = Expr::Kind::Weight;
  e.weight = std::move(k);
  return make_node(std::move(e));
}

ExprPtr make_atom(Elem m) {
  Expr e;
  e.kind = Expr::Kind::Atom;
  e.atom = std::move(m);
  return make_node(std::move(e));
}

ExprPtr make_sum(ExprPtr l, ExprPtr r) {
  Expr e;
  e.kind = Expr::Kind::Sum;
  e.lhs = std::move(l);
  e.rhs = std::move(r);
  return make_node(std::move(e));
}

ExprPtr make_product(ExprPtr l, ExprPtr r) {
  Expr e;
  e.kind = Expr::Kind::Product;
  e.lhs = std::move(l);
  e.rhs = std::move(r);
  return make_node(std::move(e));
}

ExprPtr make_star(ExprPtr x) {
  Expr e;
  e.kind = Expr::Kind::Star;
  e.lhs = std::move(x);
  return make_node(std::move(e));
}

namespace {

struct Token {
  enum class Kind { LParen, RParen, Plus, Dot, Star, Weight, Gen, End };
  Kind kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == ' ' || c == '\t' || c == '\n') {
      ++i;
      continue;
    }
    std::size_t start = i;
    switch (c) {
      case '(':
        out.push_back({Token::Kind::LParen, "(", start});
        ++i;
        continue;
      case ')':
        out.push_back({Token::Kind::RParen, ")", start});
        ++i;
        continue;
      case '+':
        out.push_back({Token::Kind::Plus, "+", start});
        ++i;
        continue;
      case '.':
        out.push_back({Token::Kind::Dot, ".", start});
        ++i;
        continue;
      case '*':
        out.push_back({Token::Kind::Star, "*", start});
        ++i;
        continue;
      case '[': {
        std::size_t close = text.find(']', i + 1);
        if (close == std::string_view::npos) throw ParseError("unterminated '['", start);
        out.push_back({Token::Kind::Weight, std::string(text.substr(i + 1, close - i - 1)), start});
        i = close + 1;
        continue;
      }
      default:
        break;
    }
    // generator token: ~?(<...> | word)
    std::size_t j = i;
    if (text[j] == '~') ++j;
    if (j < text.size() && text[j] == '<') {
      while (j < text.size() && text[j] != '>') ++j;
      if (j == text.size()) throw ParseError("unterminated '<'", start);
      ++j;
    } else {
      std::size_t word_start = j;
      while (j < text.size() && detail::is_word_char(text[j])) ++j;
      if (j == word_start) {
        throw ParseError(std::string("unexpected character '") + c + "'", start);
      }
    }
    out.push_back({Token::Kind::Gen, std::string(text.substr(i, j - i)), start});
    i = j;
  }
  out.push_back({Token::Kind::End, "", text.size()});
  return out;
}

struct ExprParser {
  const std::vector<Token>& tokens;
  const Semiring& semiring;
  const Monoid& monoid;
  std::size_t at = 0;

  const Token& peek() const { return tokens[at]; }

  ExprPtr parse_sum() {
    ExprPtr e = parse_term();
    while (peek().kind == Token::Kind::Plus) {
      ++at;
      e = make_sum(std::move(e), parse_term());
    }
    return e;
  }

  ExprPtr parse_term() {
    ExprPtr e = parse_factor();
    while (peek().kind == Token::Kind::Dot) {
      ++at;
      e = make_product(std::move(e), parse_factor());
    }
    return e;
  }

  ExprPtr parse_factor() {
    ExprPtr e = parse_atom();
    while (peek().kind == Token::Kind::Star) {
      ++at;
      e = make_star(std::move(e));
    }
    return e;
  }

  ExprPtr parse_atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Token::Kind::LParen: {
        ++at;
        ExprPtr e = parse_sum();
        if (peek().kind != Token::Kind::RParen) {
          throw ParseError("expected ')'", peek().pos);
        }
        ++at;
        return e;
      }
      case Token::Kind::Weight: {
        ++at;
        try {
          return make_weight(semiring.parse(t.text));
        } catch (const ParseError& e) {
          throw ParseError(std::string("bad weight literal: ") + e.what(), t.pos);
        }
      }
      case Token::Kind::Gen: {
        // a monoid literal is a maximal run of generator tokens
        std::string literal;
        while (peek().kind == Token::Kind::Gen) {
          if (!literal.empty()) literal += ' ';
          literal += peek().text;
          ++at;
        }
        try {
          return make_atom(monoid.parse(literal));
        } catch (const ParseError& e) {
          throw ParseError(std::string("bad monoid literal: ") + e.what(), t.pos);
        }
      }
      default:
        throw ParseError("expected an atom, weight, or '('", t.pos);
    }
  }
};

}  // namespace

WeightedExpression parse_expression(std::string_view text, SemiringPtr semiring, MonoidPtr monoid) {
  auto tokens = tokenize(text);
  ExprParser p{tokens, *semiring, *monoid};
  ExprPtr root = p.parse_sum();
  if (p.peek().kind != Token::Kind::End) throw ParseError("trailing input", p.peek().pos);
  return {std::move(semiring), std::move(monoid), std::move(root)};
}

namespace {

// precedence: sum 0, product 1, star 2, leaves 3; children are rendered
// against the minimum precedence their slot requires, right operands one
// tighter so the output re-parses to the same tree
void render_into(const WeightedExpression& w, const ExprPtr& e, int min_prec, std::string& out) {
  int prec = 3;
  switch (e->kind) {
    case Expr::Kind::Sum:
      prec = 0;
      break;
    case Expr::Kind::Product:
      prec = 1;
      break;
    case Expr::Kind::Star:
      prec = 2;
      break;
    default:
      break;
  }
  bool paren = prec < min_prec;
  if (paren) out += '(';
  switch (e->kind) {
    case Expr::Kind::Weight:
      out += '[' + w.semiring->render(e->weight) + ']';
      break;
    case Expr::Kind::Atom:
      out += w.monoid->render(e->atom);
      break;
    case Expr::Kind::Sum:
      render_into(w, e->lhs, 0, out);
      out += '+';
      render_into(w, e->rhs, 1, out);
      break;
    case Expr::Kind::Product:
      render_into(w, e->lhs, 1, out);
      out += '.';
      render_into(w, e->rhs, 2, out);
      break;
    case Expr::Kind::Star:
      render_into(w, e->lhs, 2, out);
      out += '*';
      break;
  }
  if (paren) out += ')';
}

}  // namespace

std::string render_expression(const WeightedExpression& w) {
  std::string out;
  render_into(w, w.root, 0, out);
  return out;
}

int node_count(const ExprPtr& e) {
  if (!e) return 0;
  int n = 1;
  if (e->lhs) n += node_count(e->lhs);
  if (e->rhs) n += node_count(e->rhs);
  return n;
}

namespace {

void collect_leaves(const ExprPtr& e, std::vector<const Expr*>& out) {
  switch (e->kind) {
    case Expr::Kind::Weight:
    case Expr::Kind::Atom:
      out.push_back(e.get());
      return;
    case Expr::Kind::Star:
      collect_leaves(e->lhs, out);
      return;
    default:
      collect_leaves(e->lhs, out);
      collect_leaves(e->rhs, out);
      return;
  }
}

}  // namespace

std::vector<const Expr*> leaves_of(const ExprPtr& e) {
  std::vector<const Expr*> out;
  collect_leaves(e, out);
  return out;
}

namespace {

ExprPtr mark_rec(const ExprPtr& e, const Semiring& sr) {
  switch (e->kind) {
    case Expr::Kind::Weight:
    case Expr::Kind::Atom:
      return e;
    case Expr::Kind::Sum:
      return make_sum(mark_rec(e->lhs, sr), mark_rec(e->rhs, sr));
    case Expr::Kind::Product:
      return make_product(mark_rec(e->lhs, sr), mark_rec(e->rhs, sr));
    case Expr::Kind::Star:
      return make_product(make_star(mark_rec(e->lhs, sr)), make_weight(sr.one()));
  }
  return e;
}

ExprPtr index_rec(const ExprPtr& e, int& next) {
  Expr copy = *e;
  switch (e->kind) {
    case Expr::Kind::Weight:
    case Expr::Kind::Atom:
      copy.index = next++;
      break;
    case Expr::Kind::Star:
      copy.lhs = index_rec(e->lhs, next);
      break;
    default:
      copy.lhs = index_rec(e->lhs, next);
      copy.rhs = index_rec(e->rhs, next);
      break;
  }
  return make_node(std::move(copy));
}

ExprPtr erase_rec(const ExprPtr& e) {
  Expr copy = *e;
  copy.index = -1;
  if (e->lhs) copy.lhs = erase_rec(e->lhs);
  if (e->rhs) copy.rhs = erase_rec(e->rhs);
  return make_node(std::move(copy));
}

ExprPtr unit_weights_rec(const ExprPtr& e, const Semiring& counting) {
  switch (e->kind) {
    case Expr::Kind::Weight:
      return make_weight(counting.one());
    case Expr::Kind::Atom:
      return e;
    case Expr::Kind::Sum:
      return make_sum(unit_weights_rec(e->lhs, counting), unit_weights_rec(e->rhs, counting));
    case Expr::Kind::Product:
      return make_product(unit_weights_rec(e->lhs, counting), unit_weights_rec(e->rhs, counting));
    case Expr::Kind::Star:
      return make_star(unit_weights_rec(e->lhs, counting));
  }
  return e;
}

}  // namespace

WeightedExpression mark_unambiguous(const WeightedExpression& w) {
  return {w.semiring, w.monoid, mark_rec(w.root, *w.semiring)};
}

WeightedExpression index_leaves(const WeightedExpression& w) {
  int next = 0;
  return {w.semiring, w.monoid, index_rec(w.root, next)};
}

WeightedExpression erase_indices(const WeightedExpression& w) {
  return {w.semiring, w.monoid, erase_rec(w.root)};
}

WeightedExpression ambiguity_form(const WeightedExpression& w) {
  auto counting = make_counting_semiring();
  ExprPtr root = unit_weights_rec(w.root, *counting);
  return {std::move(counting), w.monoid, std::move(root)};
}

Value evaluate(const WeightedExpression& w, const Elem& target, std::size_t state_budget) {
  return evaluate(to_automaton(w), target, state_budget);
}

Value ambiguity(const WeightedExpression& w, const Elem& target, std::size_t state_budget) {
  return evaluate(ambiguity_form(w), target, state_budget);
}

}  // namespace wamex
