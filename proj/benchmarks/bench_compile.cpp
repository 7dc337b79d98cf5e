#include <benchmark/benchmark.h>

#include "settop/compile.hpp"

using namespace settop;

static void BM_CompileAndEvaluate(benchmark::State& state) {
  const FormulaPtr f = parse_formula("(some z x1 (all w x2 (in z w)))");
  const CompiledTemplate tmpl = compile_formula(f, 2);
  const auto pool = hierarchy(3);
  for (auto _ : state) {
    for (const auto& a : pool)
      for (const auto& b : pool)
        benchmark::DoNotOptimize(eval_term(tmpl.instantiate({a, b})));
  }
}
BENCHMARK(BM_CompileAndEvaluate);

static void BM_BruteForceGraph(benchmark::State& state) {
  const FormulaPtr f = parse_formula("(some z x1 (all w x2 (in z w)))");
  const auto pool = hierarchy(3);
  for (auto _ : state) {
    for (const auto& a : pool)
      for (const auto& b : pool)
        benchmark::DoNotOptimize(formula_graph_brute_force(f, 2, {a, b}, {}));
  }
}
BENCHMARK(BM_BruteForceGraph);
