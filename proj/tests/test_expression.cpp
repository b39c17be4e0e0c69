#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "test_util.hpp"
#include "wamex/errors.hpp"
#include "wamex/expression.hpp"
#include "wamex/kleene.hpp"
#include "wamex/munn.hpp"
#include "wamex/oracle.hpp"

using namespace wamex;
using namespace wamex::testing;

namespace {

WeightedExpression parse_counting(std::string_view text, const char* monoid = "free:a,b") {
  return parse_expression(text, make_counting_semiring(), make_monoid(monoid));
}

bool tree_equal(const Semiring& sr, const Monoid& mon, const ExprPtr& a, const ExprPtr& b) {
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Expr::Kind::Weight:
      return sr.eq(a->weight, b->weight);
    case Expr::Kind::Atom:
      return mon.eq(a->atom, b->atom);
    case Expr::Kind::Star:
      return tree_equal(sr, mon, a->lhs, b->lhs);
    default:
      return tree_equal(sr, mon, a->lhs, b->lhs) && tree_equal(sr, mon, a->rhs, b->rhs);
  }
}

}  // namespace

TEST_CASE("parsing") {
  auto w = parse_counting("([2].a+[3].a.a)*", "free:a");
  REQUIRE(w.root->kind == Expr::Kind::Star);
  const ExprPtr& sum = w.root->lhs;
  REQUIRE(sum->kind == Expr::Kind::Sum);
  CHECK(sum->lhs->kind == Expr::Kind::Product);
  CHECK(sum->lhs->lhs->kind == Expr::Kind::Weight);
  CHECK(w.semiring->render(sum->lhs->lhs->weight) == "2");
  CHECK(sum->rhs->kind == Expr::Kind::Product);  // ([3].a).a, product left-associates
  CHECK(sum->rhs->rhs->kind == Expr::Kind::Atom);

  auto eps = parse_counting("eps");
  CHECK(eps.root->kind == Expr::Kind::Atom);
  CHECK(eps.monoid->is_identity(eps.root->atom));

  auto comb = parse_expression("(l.~l.r.[1])*.l", make_tropical_semiring(), make_monoid("fim:l,r"));
  REQUIRE(comb.root->kind == Expr::Kind::Product);
  CHECK(comb.root->lhs->kind == Expr::Kind::Star);
  CHECK(comb.root->rhs->kind == Expr::Kind::Atom);

  // a maximal run of generator tokens is one atom
  auto word_atom = parse_counting("a b a");
  CHECK(word_atom.root->kind == Expr::Kind::Atom);
  CHECK(word_atom.monoid->render(word_atom.root->atom) == "a b a");

  CHECK_THROWS_WITH_AS(parse_counting("a.."), doctest::Contains("offset 2"), ParseError);
  CHECK_THROWS_WITH_AS(parse_counting("a+c"), doctest::Contains("unknown generator"), ParseError);
  CHECK_THROWS_WITH_AS(parse_counting("[x].a"), doctest::Contains("bad weight"), ParseError);
  CHECK_THROWS_AS(parse_counting("(a"), ParseError);
  CHECK_THROWS_AS(parse_counting("a)b"), ParseError);
  CHECK_THROWS_AS(parse_counting(""), ParseError);
}

TEST_CASE("rendering round-trips the tree") {
  std::vector<const char*> sources{"([2].a+[3].a.a)*", "a.(b+eps)*.a b", "[0]+[inf].a",
                                   "((a+b).a)*.[7]", "a**"};
  for (const char* src : sources) {
    auto w = parse_counting(src);
    std::string text = render_expression(w);
    auto back = parse_expression(text, w.semiring, w.monoid);
    CAPTURE(src);
    CAPTURE(text);
    CHECK(tree_equal(*w.semiring, *w.monoid, w.root, back.root));
    CHECK(render_expression(back) == text);
  }
}

TEST_CASE("the star marker rewrite") {
  auto w = parse_counting("(a*)*", "free:a");
  auto marked = mark_unambiguous(w);
  // (a*)* becomes ((a)* . 1)* . 1
  REQUIRE(marked.root->kind == Expr::Kind::Product);
  CHECK(marked.root->rhs->kind == Expr::Kind::Weight);
  CHECK(marked.semiring->is_one(marked.root->rhs->weight));
  const ExprPtr& outer = marked.root->lhs;
  REQUIRE(outer->kind == Expr::Kind::Star);
  REQUIRE(outer->lhs->kind == Expr::Kind::Product);
  CHECK(outer->lhs->lhs->kind == Expr::Kind::Star);
  CHECK(outer->lhs->lhs->lhs->kind == Expr::Kind::Atom);
  CHECK(outer->lhs->rhs->kind == Expr::Kind::Weight);

  auto atom = parse_counting("a");
  CHECK(tree_equal(*atom.semiring, *atom.monoid, mark_unambiguous(atom).root, atom.root));

  auto sum = parse_counting("a*+b");
  auto marked_sum = mark_unambiguous(sum);
  REQUIRE(marked_sum.root->kind == Expr::Kind::Sum);
  CHECK(marked_sum.root->lhs->kind == Expr::Kind::Product);
  CHECK(marked_sum.root->rhs->kind == Expr::Kind::Atom);
}

TEST_CASE("leaf indexing") {
  auto w = parse_counting("([2].a+[3].b)*.(a+[5].b+[3])");
  auto indexed = index_leaves(w);
  auto leaves = leaves_of(indexed.root);
  REQUIRE(leaves.size() == 8);
  std::vector<std::string> rendered;
  for (const Expr* leaf : leaves) {
    CHECK(leaf->index == static_cast<int>(rendered.size()));
    rendered.push_back(leaf->kind == Expr::Kind::Weight ? w.semiring->render(leaf->weight)
                                                        : w.monoid->render(leaf->atom));
  }
  CHECK(rendered == std::vector<std::string>{"2", "a", "3", "b", "a", "5", "b", "3"});

  auto single = index_leaves(parse_counting("a"));
  CHECK(single.root->index == 0);

  // indices stay consecutive and distinct on random shapes
  ExprGen gen(3, make_counting_semiring(), make_free_monoid({"a", "b"}), {"a", "b"}, {"0", "1"});
  for (int trial = 0; trial < 20; ++trial) {
    auto any = index_leaves(gen.expression(8));
    auto any_leaves = leaves_of(any.root);
    for (std::size_t i = 0; i < any_leaves.size(); ++i) {
      CHECK(any_leaves[i]->index == static_cast<int>(i));
    }
  }

  // indices are erased by erase_indices and unique by construction
  auto erased = erase_indices(indexed);
  for (const Expr* leaf : leaves_of(erased.root)) CHECK(leaf->index == -1);
}

TEST_CASE("evaluation of weight atoms") {
  auto w = parse_counting("[7]", "free:a");
  CHECK(w.semiring->render(evaluate(w, w.monoid->identity())) == "7");
  CHECK(w.semiring->render(evaluate(w, w.monoid->parse("a"))) == "0");
}

TEST_CASE("signed length of the walk between the two roots") {
  auto w = parse_expression("(l.[1]+~l.[-1]+r.[1]+~r.[-1])*", make_tropical_semiring(),
                            make_monoid("fim:l,r"));
  std::vector<std::pair<const char*, const char*>> rows{
      {"l", "1"}, {"~r", "-1"}, {"~l r ~l r", "0"}, {"l ~l r l ~l r l", "3"}};
  for (const auto& [target, expected] : rows) {
    CAPTURE(target);
    CHECK(w.semiring->render(evaluate(w, w.monoid->parse(target))) == expected);
  }
}

TEST_CASE("binary fractions through the two-way encoding") {
  auto sr = make_qplus_semiring();
  auto mon = make_monoid("fim:0,1,B,E");
  std::string binary = "B.(0.[1/2]+1.[1/2])*.1.[1/2].(0+1)*.E";
  auto w = parse_expression(binary, sr, mon);
  CHECK(sr->render(evaluate(w, mon->parse("B 1 E"))) == "1/2");
  CHECK(sr->render(evaluate(w, mon->parse("B 1 1 E"))) == "3/4");
  CHECK(sr->render(evaluate(w, mon->parse("B 0 1 0 E"))) == "1/4");
  CHECK(sr->render(evaluate(w, mon->parse("B 0 E"))) == "0");

  // the encoded-word element is the same target as the parsed literal
  auto alpha = std::make_shared<MunnAlphabet>();
  alpha->names = {"0", "1", "B", "E"};
  Elem coded{encode_word(alpha, {"1"})};
  CHECK(sr->render(evaluate(w, coded)) == "1/2");

  // repeated passes sum the geometric series w2/(1-w2)
  auto repeated =
      parse_expression("(" + binary + ".~E.(~0+~1)*.~B)*." + binary, sr, mon);
  CHECK(sr->render(evaluate(repeated, mon->parse("B 1 E"))) == "1");
  CHECK(sr->render(evaluate(repeated, mon->parse("B 0 1 E"))) == "1/3");
}

TEST_CASE("rational-language weights collect the reversed copies") {
  auto sr = make_language_semiring("ab");
  auto mon = make_monoid("fim:a,b,B,E");
  auto w = parse_expression(
      "(B.(a+b)*.E.~E.(~a.[{a}]+~b.[{b}])*.~B)*.B.(a+b)*.E", sr, mon);
  Value got = evaluate(w, mon->parse("B a b E"));
  CHECK(sr->eq(got, sr->parse("{(ba)*}")));
  Value at_single = evaluate(w, mon->parse("B a E"));
  CHECK(sr->eq(at_single, sr->parse("{a*}")));
}

TEST_CASE("ambiguity of expressions") {
  auto unamb = parse_counting("[2].a+[3].a.a", "free:a");
  for (const FreeWord& w : all_words(1, 3)) {
    Value amb = ambiguity(unamb, Elem{w});
    auto counting = make_counting_semiring();
    bool at_most_one =
        counting->eq(amb, counting->zero()) || counting->eq(amb, counting->one());
    CHECK(at_most_one);
  }

  // the starred expression has one decomposition per composition of the
  // target into blocks a and aa; at aaa these are a|aa, aa|a, a|a|a
  auto starred = parse_counting("([2].a+[3].a.a)*", "free:a");
  Elem aaa = starred.monoid->parse("a a a");
  CHECK(make_counting_semiring()->render(ambiguity(starred, aaa)) == "3");
  CHECK(count_runs(to_automaton(starred), aaa, 8) == 3);
  OracleValue by_induction = evaluate_oracle(ambiguity_form(starred), aaa);
  REQUIRE_FALSE(by_induction.diverged);
  CHECK(make_counting_semiring()->render(by_induction.value) == "3");
  CHECK(make_counting_semiring()->render(ambiguity(starred, starred.monoid->identity())) == "1");

  // off-support targets have ambiguity zero
  CHECK(make_counting_semiring()->is_zero(ambiguity(unamb, unamb.monoid->parse("a a a a"))));

  // ambiguity adds over sums
  std::mt19937 rng(2);
  ExprGen gen(15, make_counting_semiring(), make_free_monoid({"a", "b"}), {"a", "b", "eps"},
              {"0", "1", "2"});
  auto counting = make_counting_semiring();
  for (int trial = 0; trial < 15; ++trial) {
    auto u = gen.expression(5);
    auto v = gen.expression(5);
    WeightedExpression sum{u.semiring, u.monoid, make_sum(u.root, v.root)};
    for (const FreeWord& w : all_words(2, 3)) {
      Elem m{w};
      CHECK(counting->eq(ambiguity(sum, m), counting->add(ambiguity(u, m), ambiguity(v, m))));
    }
  }
  (void)rng;
}

TEST_CASE("marking preserves the semantics") {
  ExprGen gen(99, make_counting_semiring(), make_free_monoid({"a", "b"}), {"a", "b", "eps"},
              {"0", "1", "2", "inf"});
  for (int trial = 0; trial < 40; ++trial) {
    auto w = gen.expression(8);
    auto marked = mark_unambiguous(w);
    for (const FreeWord& word : all_words(2, 3)) {
      Elem m{word};
      CHECK(w.semiring->eq(evaluate(w, m), evaluate(marked, m)));
    }
  }
}

TEST_CASE("boolean semantics is classical regex membership") {
  ExprGen gen(7, make_boolean_semiring(), make_free_monoid({"a", "b"}), {"a", "b", "eps", "a b"},
              {"true"});
  for (int trial = 0; trial < 40; ++trial) {
    auto w = gen.expression(8);
    for (const FreeWord& word : all_words(2, 4)) {
      Elem m{word};
      CHECK(std::get<bool>(evaluate(w, m).rep) == characteristic_oracle(w, m));
    }
  }
}

TEST_CASE("the inductive oracle agrees with compiled evaluation") {
  // targeted cases from the operation contract
  auto zero_star = parse_counting("([0])*", "free:a");
  OracleValue z = evaluate_oracle(zero_star, zero_star.monoid->identity());
  REQUIRE_FALSE(z.diverged);
  CHECK(zero_star.semiring->is_one(z.value));

  auto a_star = parse_counting("(a)*", "free:a");
  OracleValue one_dec = evaluate_oracle(a_star, a_star.monoid->parse("a"));
  REQUIRE_FALSE(one_dec.diverged);
  CHECK(a_star.semiring->is_one(one_dec.value));

  // a geometric tail summed through star
  auto half_star = parse_expression("([1/2])*", make_qplus_semiring(), make_monoid("free:a"));
  OracleValue geo = evaluate_oracle(half_star, half_star.monoid->identity());
  REQUIRE_FALSE(geo.diverged);
  CHECK(half_star.semiring->render(geo.value) == "2");

  for (const char* spec : {"counting", "tropical"}) {
    CAPTURE(spec);
    std::vector<std::string> weights = std::string(spec) == "counting"
                                           ? std::vector<std::string>{"0", "1", "2", "inf"}
                                           : std::vector<std::string>{"-inf", "0", "1", "-1"};
    ExprGen gen(41, make_semiring(spec), make_free_monoid({"a", "b"}), {"a", "b", "eps"}, weights);
    int converged = 0;
    for (int trial = 0; trial < 60; ++trial) {
      auto w = gen.expression(8);
      for (const FreeWord& word : all_words(2, 4)) {
        Elem m{word};
        OracleValue o = evaluate_oracle(w, m);
        if (o.diverged) continue;
        ++converged;
        CHECK(w.semiring->eq(o.value, evaluate(w, m)));
      }
    }
    CHECK(converged > 500);  // the oracle must not be vacuous
  }
}

TEST_CASE("divergence surfaces as NonTerminating") {
  auto w = parse_expression("(1)*", make_counting_semiring(), make_nat_monoid());
  CHECK(w.semiring->render(evaluate(w, w.monoid->parse("4"))) == "1");
  CHECK_THROWS_AS(evaluate(w, w.monoid->parse("inf"), 2000), NonTerminating);
  OracleValue o = evaluate_oracle(w, w.monoid->parse("inf"));
  CHECK(o.diverged);
}
