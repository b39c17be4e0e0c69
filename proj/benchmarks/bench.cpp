#include <benchmark/benchmark.h>

#include <random>
#include <string>

#include "wamex/kleene.hpp"
#include "wamex/munn.hpp"

namespace {

using namespace wamex;

// evaluation of the two-way binary-fraction expression at growing words
void BM_EvaluateBinaryWord(benchmark::State& state) {
  auto sr = make_qplus_semiring();
  auto mon = make_monoid("fim:0,1,B,E");
  auto w = parse_expression("B.(0.[1/2]+1.[1/2])*.1.[1/2].(0+1)*.E", sr, mon);
  std::string target = "B";
  std::mt19937 rng(7);
  for (long i = 0; i < state.range(0); ++i) {
    target += (rng() & 1) ? " 1" : " 1";
  }
  target += " E";
  Elem m = mon->parse(target);
  for (auto _ : state) {
    benchmark::DoNotOptimize(evaluate(w, m));
  }
}
BENCHMARK(BM_EvaluateBinaryWord)->Arg(2)->Arg(6)->Arg(10)->Arg(14);

// full round trip: compile, decompile, evaluate the result once
void BM_KleeneRoundTrip(benchmark::State& state) {
  auto sr = make_counting_semiring();
  auto mon = make_monoid("free:a,b");
  auto w = parse_expression("([2].a+[3].b)*.(a+[5].b+[3])", sr, mon);
  Elem m = mon->parse("a b a");
  for (auto _ : state) {
    WeightedAutomaton a = to_automaton(w);
    WeightedExpression back = to_expression(a);
    benchmark::DoNotOptimize(evaluate(back, m));
  }
}
BENCHMARK(BM_KleeneRoundTrip);

// product of random free-inverse-monoid elements
void BM_MunnProduct(benchmark::State& state) {
  auto alpha = std::make_shared<MunnAlphabet>();
  alpha->names = {"l", "r"};
  std::mt19937 rng(21);
  std::vector<MunnPtr> pool;
  for (int i = 0; i < 64; ++i) {
    SignedWord word;
    for (long j = 0; j < state.range(0); ++j) {
      word.push_back({static_cast<int>(rng() & 1), (rng() & 2) != 0});
    }
    pool.push_back(from_word(alpha, word));
  }
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(munn_product(pool[i & 63], pool[(i + 1) & 63]));
    ++i;
  }
}
BENCHMARK(BM_MunnProduct)->Arg(8)->Arg(32)->Arg(128);

// prefix automaton construction for the signed-length expression targets
void BM_PreimageDfa(benchmark::State& state) {
  auto mon = make_monoid("fim:l,r");
  std::vector<Elem> labels{mon->parse("l"), mon->parse("~l"), mon->parse("r"), mon->parse("~r")};
  std::string walk;
  for (long i = 0; i < state.range(0); ++i) walk += i % 3 == 2 ? " r" : " l ~l r";
  Elem target = mon->parse(walk.empty() ? "eps" : walk);
  for (auto _ : state) {
    benchmark::DoNotOptimize(preimage_dfa(*mon, labels, target));
  }
}
BENCHMARK(BM_PreimageDfa)->Arg(1)->Arg(2)->Arg(3);

}  // namespace

BENCHMARK_MAIN();
