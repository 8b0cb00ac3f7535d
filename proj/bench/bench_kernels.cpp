#include <benchmark/benchmark.h>

#include "pathideal/betti.hpp"
#include "pathideal/path_ideal.hpp"

using namespace pathideal;

namespace {

BettiOptions options(ExecPolicy policy) {
  BettiOptions o;
  o.policy = policy;
  o.cap_n = 20;
  o.cap_k = 20;
  return o;
}

// J_2(L_n) keeps both kernels busy: n vertex subsets for Hochster, n-1 generators for Taylor.
void hochster(benchmark::State& state, ExecPolicy policy) {
  const MonomialIdeal ideal = make_full_path_ideal(2, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(betti_hochster(ideal, options(policy)));
}

void taylor(benchmark::State& state, ExecPolicy policy) {
  const MonomialIdeal ideal = make_full_path_ideal(2, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(betti_taylor_tor(ideal, options(policy)));
}

void hochster_rational(benchmark::State& state, ExecPolicy policy) {
  const MonomialIdeal ideal = make_path_ideal(PathParams::make(3, 2, static_cast<int>(state.range(0))));
  BettiOptions o = options(policy);
  o.field = Field::rationals();
  for (auto _ : state) benchmark::DoNotOptimize(betti_hochster(ideal, o));
}

}  // namespace

BENCHMARK_CAPTURE(hochster, serial, ExecPolicy::Serial)->DenseRange(10, 14, 2)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(hochster, parallel, ExecPolicy::Parallel)->DenseRange(10, 14, 2)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(taylor, serial, ExecPolicy::Serial)->DenseRange(10, 14, 2)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(taylor, parallel, ExecPolicy::Parallel)->DenseRange(10, 14, 2)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(hochster_rational, serial, ExecPolicy::Serial)->DenseRange(8, 12, 2)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(hochster_rational, parallel, ExecPolicy::Parallel)->DenseRange(8, 12, 2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
