#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "cyclelab/cycle.hpp"
#include "cyclelab/moebius.hpp"
#include "cyclelab/parity.hpp"
#include "cyclelab/rotation.hpp"
#include "cyclelab/sieve.hpp"

namespace {

void BM_Phi(benchmark::State& state) {
    const auto l = static_cast<std::size_t>(state.range(0));
    const cyclelab::ParityVector v = cyclelab::ceiling_parity(l, l * 2 / 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(cyclelab::phi(v));
    }
}
BENCHMARK(BM_Phi)->Arg(64)->Arg(512)->Arg(4096);

void BM_VerifyExtremality(benchmark::State& state) {
    const auto l = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(cyclelab::verify_extremality(l, l / 2 + 1));
    }
}
BENCHMARK(BM_VerifyExtremality)->Arg(12)->Arg(16);

void BM_MoebiusSieve(benchmark::State& state) {
    const auto limit = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(cyclelab::moebius_sieve(limit));
    }
}
BENCHMARK(BM_MoebiusSieve)->Arg(10000)->Arg(1000000);

void BM_DirichletConvolve(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const cyclelab::MoebiusSieve sieve = cyclelab::moebius_sieve(n);
    std::mt19937 rng(1);
    std::uniform_real_distribution<double> dist(0.0, 1.0);
    std::vector<double> a(n);
    for (double& v : a) v = dist(rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(cyclelab::dirichlet_convolve(a, sieve));
    }
}
BENCHMARK(BM_DirichletConvolve)->Arg(2000)->Arg(20000);

void BM_BasisTable(benchmark::State& state) {
    const auto l = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(cyclelab::basis_table(l));
    }
}
BENCHMARK(BM_BasisTable)->Arg(997)->Arg(9973);

void BM_PrimeSweep(benchmark::State& state) {
    const auto limit = static_cast<std::int64_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(cyclelab::prime_sweep(limit));
    }
}
BENCHMARK(BM_PrimeSweep)->Arg(1000)->Arg(10000);

}  // namespace

BENCHMARK_MAIN();
