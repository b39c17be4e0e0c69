// Acceptance drivers: one check per shipped guarantee, each printed as a
// single PASS/FAIL line with its runtime. The process exit code is the
// number of failed checks.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "test_util.hpp"
#include "wamex/errors.hpp"
#include "wamex/kleene.hpp"
#include "wamex/munn.hpp"
#include "wamex/oracle.hpp"

using namespace wamex;
using namespace wamex::testing;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    pass = false;
    if (!detail.empty()) detail += "; ";
    detail += why;
  }
  void note(const std::string& what) {
    if (detail.empty()) detail = what;
  }
};

int failures = 0;

void run(int number, const std::string& title, double time_limit_s,
         const std::function<void(Outcome&)>& body) {
  Outcome outcome;
  auto t0 = Clock::now();
  try {
    body(outcome);
  } catch (const std::exception& e) {
    outcome.fail(std::string("unexpected exception: ") + e.what());
  }
  double elapsed = std::chrono::duration<double>(Clock::now() - t0).count();
  if (time_limit_s > 0 && elapsed >= time_limit_s) {
    outcome.fail("exceeded the " + std::to_string(time_limit_s) + " s budget");
  }
  std::ostringstream line;
  line << (outcome.pass ? "[PASS] " : "[FAIL] ") << number << ". " << title;
  if (!outcome.detail.empty()) line << " -- " << outcome.detail;
  line << " (" << static_cast<long>(elapsed * 1000) << " ms)";
  std::cout << line.str() << "\n";
  if (!outcome.pass) ++failures;
}

// shared grid: random expressions over {a,b} with at most 8 nodes
struct GridCase {
  WeightedExpression expr;
};

std::vector<GridCase> make_grid(const std::string& semiring_spec, int count, unsigned seed) {
  std::vector<std::string> weights = semiring_spec == "counting"
                                         ? std::vector<std::string>{"0", "1", "2", "3", "inf"}
                                         : std::vector<std::string>{"-inf", "-1", "0", "1", "2"};
  ExprGen gen(seed, make_semiring(semiring_spec), make_monoid("free:a,b"),
              {"a", "b", "eps", "a b"}, weights);
  std::vector<GridCase> grid;
  for (int i = 0; i < count; ++i) grid.push_back({gen.expression(8)});
  return grid;
}

}  // namespace

int main() {
  auto grid_words = all_words(2, 4);

  run(1, "signed lengths of the four bi-rooted example trees", 1.0, [](Outcome& o) {
    auto w = parse_expression("(l.[1]+~l.[-1]+r.[1]+~r.[-1])*", make_tropical_semiring(),
                              make_monoid("fim:l,r"));
    std::vector<std::pair<const char*, const char*>> rows{
        {"l", "1"}, {"~r", "-1"}, {"~l r ~l r", "0"}, {"l ~l r l ~l r l", "3"}};
    for (const auto& [target, expected] : rows) {
      std::string got = w.semiring->render(evaluate(w, w.monoid->parse(target)));
      if (got != expected) {
        o.fail(std::string(target) + " evaluated to " + got + ", expected " + expected);
      }
    }
  });

  run(2, "ambiguity of ([2].a+[3].a.a)* at aaa is exactly 2, and the body stays unambiguous",
      1.0, [](Outcome& o) {
        auto counting = make_counting_semiring();
        auto starred = parse_expression("([2].a+[3].a.a)*", counting, make_monoid("free:a"));
        Elem aaa = starred.monoid->parse("a a a");
        Value amb = ambiguity(starred, aaa);
        if (!counting->eq(amb, counting->parse("2"))) {
          long runs = count_runs(to_automaton(starred), aaa, 8);
          o.fail("computed " + counting->render(amb) + " (run enumeration finds " +
                 std::to_string(runs) + " decompositions: a|aa, aa|a, a|a|a)");
        }
        auto body = parse_expression("[2].a+[3].a.a", counting, starred.monoid);
        for (const FreeWord& word : all_words(1, 3)) {
          Value a = ambiguity(body, Elem{word});
          if (!counting->eq(a, counting->zero()) && !counting->eq(a, counting->one())) {
            o.fail("body has ambiguity " + counting->render(a) + " at a word of length " +
                   std::to_string(word.size()));
          }
        }
      });

  run(3, "two-way binary expression computes w|2, and its repetition w|2/(1-w|2)", 5.0,
      [](Outcome& o) {
        auto sr = make_qplus_semiring();
        auto mon = make_monoid("fim:0,1,B,E");
        std::string binary = "B.(0.[1/2]+1.[1/2])*.1.[1/2].(0+1)*.E";
        auto w = parse_expression(binary, sr, mon);
        int checked = 0;
        for (const FreeWord& bits : all_words(2, 6)) {
          BigRat expected = 0;
          BigRat scale(1, 2);
          std::string target = "B";
          for (int bit : bits) {
            if (bit == 1) expected += scale;
            scale /= 2;
            target += bit == 1 ? " 1" : " 0";
          }
          target += " E";
          Value got = evaluate(w, mon->parse(target));
          if (!sr->eq(got, Value(ExtRat::finite(expected)))) {
            o.fail("value at " + target + " is " + sr->render(got));
            return;
          }
          ++checked;
        }
        o.note(std::to_string(checked) + " words checked");
        auto repeated = parse_expression("(" + binary + ".~E.(~0+~1)*.~B)*." + binary, sr, mon);
        Value once = evaluate(repeated, mon->parse("B 1 E"));
        if (!sr->eq(once, sr->one())) {
          o.fail("repeated expression at B 1 E gave " + sr->render(once) + ", expected 1");
        }
      });

  // criteria 4 through 6 share one grid per semiring
  std::vector<std::string> specs{"counting", "tropical"};
  std::vector<std::vector<GridCase>> grids;
  grids.push_back(make_grid("counting", 200, 1001));
  grids.push_back(make_grid("tropical", 200, 2002));

  std::vector<std::vector<WeightedAutomaton>> autos(2);
  std::vector<std::vector<WeightedExpression>> back(2);

  run(4, "round trip expression -> automaton -> expression preserves every value", 60.0,
      [&](Outcome& o) {
        long comparisons = 0;
        for (std::size_t s = 0; s < specs.size(); ++s) {
          for (const GridCase& c : grids[s]) {
            WeightedAutomaton a = to_automaton(c.expr);
            WeightedExpression e = to_expression(a);
            for (const FreeWord& word : grid_words) {
              Elem m{word};
              Value lhs = evaluate(c.expr, m);
              Value rhs = evaluate(e, m);
              ++comparisons;
              if (!c.expr.semiring->eq(lhs, rhs)) {
                o.fail(specs[s] + ": " + render_expression(c.expr) + " at word #" +
                       std::to_string(&word - grid_words.data()) + ": " +
                       c.expr.semiring->render(lhs) + " vs " + c.expr.semiring->render(rhs));
                return;
              }
            }
            autos[s].push_back(std::move(a));
            back[s].push_back(std::move(e));
          }
        }
        o.note(std::to_string(comparisons) + " comparisons over 400 expressions");
      });

  run(5, "both translation directions preserve ambiguity", 120.0, [&](Outcome& o) {
    auto counting = make_counting_semiring();
    long comparisons = 0;
    for (std::size_t s = 0; s < specs.size(); ++s) {
      if (autos[s].size() != grids[s].size()) {
        o.fail("grid automata unavailable (criterion 4 failed earlier)");
        return;
      }
      for (std::size_t i = 0; i < grids[s].size(); ++i) {
        for (const FreeWord& word : grid_words) {
          Elem m{word};
          Value expr_amb = ambiguity(grids[s][i].expr, m);
          Value auto_amb = ambiguity(autos[s][i], m);
          Value back_amb = ambiguity(back[s][i], m);
          ++comparisons;
          if (!counting->eq(expr_amb, auto_amb) || !counting->eq(expr_amb, back_amb)) {
            o.fail(specs[s] + ": " + render_expression(grids[s][i].expr) + ": " +
                   counting->render(expr_amb) + " / " + counting->render(auto_amb) + " / " +
                   counting->render(back_amb));
            return;
          }
        }
      }
    }
    o.note(std::to_string(comparisons) + " ambiguity triples compared");
  });

  run(6, "compiled evaluation agrees with the inductive reference wherever it converges", 120.0,
      [&](Outcome& o) {
        long converged = 0, diverged = 0;
        for (std::size_t s = 0; s < specs.size(); ++s) {
          for (const GridCase& c : grids[s]) {
            for (const FreeWord& word : grid_words) {
              Elem m{word};
              OracleValue ref = evaluate_oracle(c.expr, m);
              if (ref.diverged) {
                ++diverged;
                continue;
              }
              ++converged;
              Value got = evaluate(c.expr, m);
              if (!c.expr.semiring->eq(ref.value, got)) {
                o.fail(specs[s] + ": " + render_expression(c.expr) + ": reference " +
                       c.expr.semiring->render(ref.value) + " vs compiled " +
                       c.expr.semiring->render(got));
                return;
              }
            }
          }
        }
        if (converged < 1000) {
          o.fail("reference evaluator converged only " + std::to_string(converged) + " times");
        }
        o.note(std::to_string(converged) + " converged, " + std::to_string(diverged) +
               " declined");
      });

  run(7, "algebra law suites: semirings, the free inverse monoid, prefix automata", 30.0,
      [](Outcome& o) {
        // semiring laws + star fixpoint on >= 100 random values per instance
        std::mt19937 rng(99);
        auto check_instance = [&](const SemiringPtr& sr, const std::vector<std::string>& pool) {
          std::vector<Value> values;
          std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
          for (int i = 0; i < 120; ++i) values.push_back(sr->parse(pool[pick(rng)]));
          const Value zero = sr->zero(), one = sr->one();
          for (std::size_t i = 0; i + 2 < values.size(); ++i) {
            const Value &x = values[i], &y = values[i + 1], &z = values[i + 2];
            bool ok = sr->eq(sr->add(x, y), sr->add(y, x)) &&
                      sr->eq(sr->add(sr->add(x, y), z), sr->add(x, sr->add(y, z))) &&
                      sr->eq(sr->add(x, zero), x) && sr->eq(sr->mul(x, one), x) &&
                      sr->eq(sr->mul(one, x), x) && sr->eq(sr->mul(x, zero), zero) &&
                      sr->eq(sr->mul(zero, x), zero) &&
                      sr->eq(sr->mul(sr->mul(x, y), z), sr->mul(x, sr->mul(y, z))) &&
                      sr->eq(sr->mul(x, sr->add(y, z)), sr->add(sr->mul(x, y), sr->mul(x, z))) &&
                      sr->eq(sr->mul(sr->add(x, y), z), sr->add(sr->mul(x, z), sr->mul(y, z)));
            if (!ok) {
              o.fail(sr->name() + " breaks a semiring law");
              return;
            }
          }
          for (const Value& x : values) {
            Value sx = sr->star(x);
            if (!sr->eq(sx, sr->add(one, sr->mul(x, sx))) ||
                !sr->eq(sx, sr->add(one, sr->mul(sx, x)))) {
              o.fail(sr->name() + " breaks the star fixpoint at " + sr->render(x));
              return;
            }
          }
        };
        check_instance(make_boolean_semiring(), {"true", "false"});
        check_instance(make_counting_semiring(), {"0", "1", "2", "3", "7", "inf"});
        check_instance(make_tropical_semiring(), {"-inf", "+inf", "0", "1", "-1", "5/2", "-7/3"});
        check_instance(make_qplus_semiring(), {"0", "1", "1/2", "2/3", "7/2", "inf"});
        check_instance(make_language_semiring("ab"),
                       {"{empty}", "{eps}", "{a}", "{b}", "{(a+b)*}", "{ab+ba}", "{a*b}"});
        check_instance(make_product_semiring(make_counting_semiring(), make_tropical_semiring()),
                       {"(0,-inf)", "(1,0)", "(2,1)", "(inf,-1)", "(3,+inf)"});

        // free-inverse-monoid laws on >= 100 random triples
        auto alpha = std::make_shared<MunnAlphabet>();
        alpha->names = {"l", "r"};
        auto random_tree = [&rng, &alpha] {
          SignedWord w;
          int len = std::uniform_int_distribution<int>(0, 5)(rng);
          for (int i = 0; i < len; ++i) {
            w.push_back({std::uniform_int_distribution<int>(0, 1)(rng),
                         std::uniform_int_distribution<int>(0, 1)(rng) == 1});
          }
          return from_word(alpha, w);
        };
        for (int i = 0; i < 110; ++i) {
          MunnPtr x = random_tree(), y = random_tree(), z = random_tree();
          MunnPtr xd = munn_inverse(x);
          bool ok =
              munn_eq(munn_product(munn_product(x, y), z), munn_product(x, munn_product(y, z))) &&
              munn_eq(munn_product(munn_product(x, xd), x), x) &&
              munn_eq(munn_product(munn_product(xd, x), xd), xd);
          MunnPtr ex = munn_product(x, xd);
          MunnPtr ey = munn_product(y, munn_inverse(y));
          ok = ok && munn_eq(munn_product(ex, ey), munn_product(ey, ex));
          if (!ok) {
            o.fail("free inverse monoid law failure at " + munn_render(x));
            return;
          }
        }

        // prefix automata, exhaustively against label-word enumeration
        auto free2 = make_free_monoid({"a", "b"});
        auto nat = make_nat_monoid();
        auto fim = make_free_inverse_monoid({"l", "r"});
        struct LabelSet {
          MonoidPtr mon;
          std::vector<std::string> labels;
          int targets;
        };
        std::vector<LabelSet> sets{{free2, {"a", "b", "a b"}, 20},
                                   {nat, {"1", "2", "3"}, 15},
                                   {fim, {"l", "~l", "r"}, 15}};
        int targets_checked = 0;
        for (const LabelSet& set : sets) {
          std::vector<Elem> labels;
          for (const auto& lit : set.labels) labels.push_back(set.mon->parse(lit));
          for (int t = 0; t < set.targets; ++t) {
            Elem target = set.mon->identity();
            int len = std::uniform_int_distribution<int>(0, 5)(rng);
            for (int i = 0; i < len; ++i) {
              target = set.mon->product(
                  target,
                  labels[std::uniform_int_distribution<std::size_t>(0, labels.size() - 1)(rng)]);
            }
            PrefixDfa dfa = preimage_dfa(*set.mon, labels, target);
            for (const FreeWord& w : all_words(static_cast<int>(labels.size()), 6)) {
              Elem prod = set.mon->identity();
              for (int l : w) prod = set.mon->product(prod, labels[l]);
              if (dfa.accepts(w) != set.mon->eq(prod, target)) {
                o.fail(set.mon->name() + ": prefix automaton disagrees with enumeration");
                return;
              }
            }
            ++targets_checked;
          }
        }
        o.note(std::to_string(targets_checked) + " prefix targets checked exhaustively");
      });

  run(8, "evaluation is total on the supported pairs; only the infinite natural target declines",
      60.0, [](Outcome& o) {
        std::vector<std::string> semirings{"boolean",  "counting", "tropical",
                                           "qplus",    "lang:ab",  "prod:(counting),(tropical)"};
        struct MonCase {
          std::string spec;
          std::vector<std::string> labels;
        };
        std::vector<MonCase> monoids{{"free:a,b", {"a", "b", "a b", "eps"}},
                                     {"nat", {"0", "1", "2"}},
                                     {"fim:l,r", {"l", "~l", "r", "l ~l"}}};
        long evaluations = 0;
        for (const std::string& sspec : semirings) {
          for (const MonCase& mcase : monoids) {
            auto sr = make_semiring(sspec);
            auto mon = make_monoid(mcase.spec);
            std::vector<std::string> weights;
            if (sspec == "boolean") weights = {"true", "false"};
            if (sspec == "counting") weights = {"0", "1", "2", "inf"};
            if (sspec == "tropical") weights = {"-inf", "0", "1", "-1"};
            if (sspec == "qplus") weights = {"0", "1", "1/2", "3"};
            if (sspec == "lang:ab") weights = {"{empty}", "{eps}", "{a}", "{a+b}"};
            if (sspec.rfind("prod:", 0) == 0) weights = {"(0,-inf)", "(1,0)", "(2,1)", "(inf,2)"};
            AutomatonGen gen(17, sr, mon, mcase.labels, weights);
            for (int trial = 0; trial < 6; ++trial) {
              WeightedAutomaton a = gen.automaton(3, 5);
              std::vector<Elem> targets;
              targets.push_back(mon->identity());
              for (const std::string& lit : mcase.labels) targets.push_back(mon->parse(lit));
              targets.push_back(mon->product(targets[1], targets[2 % targets.size()]));
              for (const Elem& m : targets) {
                try {
                  evaluate(a, m);
                  ambiguity(a, m);
                  ++evaluations;
                } catch (const std::exception& e) {
                  o.fail(sspec + " x " + mcase.spec + " raised: " + e.what());
                  return;
                }
              }
            }
          }
        }
        // the one documented refusal
        auto nat = make_nat_monoid();
        auto counting = make_counting_semiring();
        WeightedAutomaton a;
        a.semiring = counting;
        a.monoid = nat;
        a.states = {"q"};
        a.initial = {0};
        a.final_states = {0};
        a.transitions = {{0, nat->parse("1"), counting->one(), 0}};
        bool declined = false;
        try {
          evaluate(a, nat->parse("inf"), 2000);
        } catch (const NonTerminating&) {
          declined = true;
        }
        if (!declined) o.fail("the infinite natural target did not raise NonTerminating");
        o.note(std::to_string(evaluations) + " evaluations raised nothing");
      });

  std::cout << (failures == 0 ? "all criteria passed"
                              : std::to_string(failures) + " criterion(s) failed")
            << "\n";
  return failures;
}
