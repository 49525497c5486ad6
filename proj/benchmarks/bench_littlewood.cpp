#include <benchmark/benchmark.h>

#include <random>

#include "littlewood/exhaustive.hpp"
#include "littlewood/norms.hpp"

namespace lw = littlewood;

namespace {

lw::TernarySequence random_sequence(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<int> d(-1, 1);
  std::vector<std::int8_t> a(n);
  for (auto& x : a) x = static_cast<std::int8_t>(d(gen));
  return lw::TernarySequence(std::move(a), lw::SequenceKind::other);
}

void BM_AutocorrelationDirect(benchmark::State& state) {
  const auto a = random_sequence(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(lw::autocorrelation_direct(a));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_AutocorrelationDirect)->RangeMultiplier(4)->Range(64, 16384)->Complexity();

void BM_AutocorrelationFft(benchmark::State& state) {
  const auto a = random_sequence(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(lw::autocorrelation_fft(a));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_AutocorrelationFft)->RangeMultiplier(4)->Range(64, 1 << 20)->Complexity();

void BM_L4Dft(benchmark::State& state) {
  const auto a = random_sequence(static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(lw::l4_fourth_power_dft(a));
}
BENCHMARK(BM_L4Dft)->RangeMultiplier(8)->Range(101, 1022117);

void BM_CharacterPolynomial(benchmark::State& state) {
  const auto m = lw::factor_odd_squarefree(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lw::character_polynomial(m));
}
BENCHMARK(BM_CharacterPolynomial)->Arg(10007)->Arg(95477)->Arg(1022117);

void BM_Jacobi(benchmark::State& state) {
  std::int64_t j = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(lw::jacobi(j, 1022117));
    j = (j * 7919 + 1) % 1022117;
  }
}
BENCHMARK(BM_Jacobi);

void BM_GrayScan(benchmark::State& state) {
  const auto m = lw::factor_odd_squarefree(state.range(0));
  for (auto _ : state) {
    lw::int128_t best = 0;
    lw::scan_completions(m, m.n() / 4, [&](const lw::CompletionSample& s) {
      if (best == 0 || s.l4p4_total < best) best = s.l4p4_total;
    });
    benchmark::DoNotOptimize(best);
  }
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << m.psi()));
}
BENCHMARK(BM_GrayScan)->Arg(15)->Arg(35)->Arg(55)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
