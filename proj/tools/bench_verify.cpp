// Serial reference vs OpenMP executor on the k[x]/x^3 axiom suite and on
// the nak(2,3) classification.

#include <benchmark/benchmark.h>

#include "subfac/verify/verify.hpp"

using namespace subfac;

namespace {

void axioms(benchmark::State& state, Executor ex) {
  for (auto _ : state) {
    // Fresh workbench each iteration so caches do not carry over.
    Workbench wb(MonomialAlgebra::nakayama(1, 3, Field::prime(2)));
    Setting s{{wb.catalog(), "T"}, {{wb.catalog()[0]}, "add(M1)"}};
    VerifyConfig cfg;
    cfg.executor = ex;
    auto vs = verify_axioms(wb, s, cfg);
    benchmark::DoNotOptimize(vs);
  }
}

void classify(benchmark::State& state, Executor ex) {
  for (auto _ : state) {
    Workbench wb(MonomialAlgebra::nakayama(2, 3, Field::prime(2)));
    VerifyConfig cfg;
    cfg.executor = ex;
    auto t = classify_all(wb, cfg);
    benchmark::DoNotOptimize(t);
  }
}

}  // namespace

BENCHMARK_CAPTURE(axioms, serial, Executor::Serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(axioms, parallel, Executor::Parallel)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(classify, serial, Executor::Serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(classify, parallel, Executor::Parallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
