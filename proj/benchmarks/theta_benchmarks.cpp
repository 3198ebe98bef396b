// Strategy cost comparison: exact big-integer evaluation vs. interval
// fixed-point, plus the supporting number theory.

#include <benchmark/benchmark.h>

#include "gandhi/identity.hpp"
#include "gandhi/numtheory.hpp"
#include "gandhi/theta.hpp"

using namespace gandhi;

namespace {

constexpr std::uint64_t kBudget = std::uint64_t{1} << 24;

void BM_theta_exact_divisor(benchmark::State& state) {
    PrimeTable table;
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(theta_exact_divisor(n, table, kBudget));
    }
}
BENCHMARK(BM_theta_exact_divisor)->DenseRange(1, 7);

void BM_theta_exact_coprime(benchmark::State& state) {
    PrimeTable table;
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(theta_exact_coprime(n, table, kBudget));
    }
}
BENCHMARK(BM_theta_exact_coprime)->DenseRange(1, 7);

void BM_theta_interval(benchmark::State& state) {
    PrimeTable table;
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto B = static_cast<std::uint32_t>(state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(theta_interval(n, table, B));
    }
}
BENCHMARK(BM_theta_interval)
    ->ArgsProduct({{1, 4, 8, 12, 16}, {64, 256, 1024}});

void BM_next_prime_interval(benchmark::State& state) {
    PrimeTable table;
    EvalConfig cfg;
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            next_prime_gandhi(n, table, Strategy::interval, cfg));
    }
}
BENCHMARK(BM_next_prime_interval)->DenseRange(1, 19, 3);

void BM_sieve_primes(benchmark::State& state) {
    const auto limit = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(sieve_primes(limit));
    }
}
BENCHMARK(BM_sieve_primes)->Arg(1000)->Arg(100000)->Arg(10000000);

void BM_mobius_sum_suite(benchmark::State& state) {
    const auto m = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_mobius_sum(m));
    }
}
BENCHMARK(BM_mobius_sum_suite)->Arg(1000)->Arg(10000);

}  // namespace

BENCHMARK_MAIN();
