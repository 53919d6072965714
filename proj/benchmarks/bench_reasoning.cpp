#include <benchmark/benchmark.h>

#include "cqe/censor.hpp"
#include "cqe/logic.hpp"
#include "cqe/modal.hpp"
#include "cqe/parser.hpp"
#include "cqe/scenarios.hpp"
#include "cqe/verifier.hpp"

namespace {

// Chain p0 -> p1 -> ... -> pn with p0 asserted; the goal is pn.
cqe::LTheory implication_chain(int n) {
  cqe::LTheory kb{cqe::atom("p0")};
  for (int i = 0; i < n; ++i) {
    kb.insert(cqe::implies(cqe::atom("p" + std::to_string(i)), cqe::atom("p" + std::to_string(i + 1))));
  }
  return kb;
}

void BM_DerivesTruthTable(benchmark::State& state) {
  auto n = static_cast<int>(state.range(0));
  auto kb = implication_chain(n);
  auto goal = cqe::atom("p" + std::to_string(n));
  for (auto _ : state) benchmark::DoNotOptimize(cqe::tt::derives(kb, goal));
}
BENCHMARK(BM_DerivesTruthTable)->Arg(4)->Arg(8)->Arg(12)->Arg(16);

void BM_DerivesSat(benchmark::State& state) {
  auto n = static_cast<int>(state.range(0));
  auto kb = implication_chain(n);
  auto goal = cqe::atom("p" + std::to_string(n));
  for (auto _ : state) benchmark::DoNotOptimize(cqe::sat::derives(kb, goal));
}
BENCHMARK(BM_DerivesSat)->Arg(4)->Arg(8)->Arg(12)->Arg(16)->Arg(32);

void BM_EntailsNogo2Chain(benchmark::State& state) {
  cqe::MTheory content{
      cqe::parse_m("box(c -> a) -> box(~c) | box(a)"),
      cqe::parse_m("box(~c -> b) -> box(c) | box(b)"),
      cqe::parse_m("box(c -> a)"),
      cqe::parse_m("box(~c -> b)"),
  };
  auto goal = cqe::parse_m("box(a) | box(b)");
  for (auto _ : state) benchmark::DoNotOptimize(cqe::entails(content, goal));
}
BENCHMARK(BM_EntailsNogo2Chain);

void BM_RepudiationCheck(benchmark::State& state) {
  auto inst = cqe::random_instance(7, static_cast<std::size_t>(state.range(0)), 4, 6);
  auto censor = cqe::truthful_min();
  for (auto _ : state) benchmark::DoNotOptimize(cqe::check_repudiating(inst.config, censor, inst.queries));
}
BENCHMARK(BM_RepudiationCheck)->Arg(0)->Arg(1)->Arg(2);

void BM_DemoNogo2(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(cqe::demo_nogo2().passed());
}
BENCHMARK(BM_DemoNogo2);

}  // namespace
BENCHMARK_MAIN();
