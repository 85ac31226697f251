#include <benchmark/benchmark.h>

#include "qprimes/arith.hpp"
#include "qprimes/quad_congruence.hpp"
#include "qprimes/weighted_sums.hpp"

namespace {

using namespace qprimes;

void BM_FactorSieve(benchmark::State& state) {
  const auto limit = static_cast<u64>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(FactorSieve(limit).primes().size());
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_FactorSieve)->Arg(1 << 20)->Arg(1 << 23)->Unit(benchmark::kMillisecond);

void BM_IsPrime(benchmark::State& state) {
  u64 n = 0xFFFFFFFFFFFFFFC5ULL;
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_prime_u64(n));
    n -= 2;
  }
}
BENCHMARK(BM_IsPrime);

void BM_RootsMod(benchmark::State& state) {
  u64 q = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(roots_mod(q, 1).count());
    q = q % 1'000'000 + 1;
  }
}
BENCHMARK(BM_RootsMod);

void BM_RhsExpansion(benchmark::State& state) {
  const double x = static_cast<double>(state.range(0));
  const FactorSieve sieve(static_cast<u64>(x));
  for (auto _ : state) benchmark::DoNotOptimize(rhs_mobius_expansion(sieve, x, 1));
}
BENCHMARK(BM_RhsExpansion)->Arg(100'000)->Arg(1'000'000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
