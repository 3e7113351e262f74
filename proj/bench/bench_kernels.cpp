// Serial reference kernels against their OpenMP versions.

#include <benchmark/benchmark.h>

#include "hypsec/flagcount/flagcount.hpp"

namespace hypsec {
namespace {

SectionMatrix<Gf> witness(std::uint64_t q) { return reduce_section(parse_section("X, 0, Z"), build_ext_field(q, 1)); }

void BM_FlagCountSerial(benchmark::State& state) {
  const auto q = static_cast<std::uint64_t>(state.range(0));
  const auto flags = enumerate_flags(build_ext_field(q, 1));
  const auto s = witness(q);
  for (auto _ : state) benchmark::DoNotOptimize(count_section_zeros_serial(s, flags));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(flags.size()));
}

void BM_FlagCountParallel(benchmark::State& state) {
  const auto q = static_cast<std::uint64_t>(state.range(0));
  const auto flags = enumerate_flags(build_ext_field(q, 1));
  const auto s = witness(q);
  for (auto _ : state) benchmark::DoNotOptimize(count_section_zeros_parallel(s, flags));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(flags.size()));
}

void sweep(benchmark::State& state, bool parallel) {
  SweepOptions opt;
  opt.q = 7;
  opt.sample = static_cast<std::uint64_t>(state.range(0));
  opt.parallel = parallel;
  for (auto _ : state) benchmark::DoNotOptimize(sweep_verify(opt).tallies);
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_SweepSerial(benchmark::State& state) { sweep(state, false); }
void BM_SweepParallel(benchmark::State& state) { sweep(state, true); }

BENCHMARK(BM_FlagCountSerial)->Arg(7)->Arg(31)->Arg(101);
BENCHMARK(BM_FlagCountParallel)->Arg(7)->Arg(31)->Arg(101);
BENCHMARK(BM_SweepSerial)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)->Arg(2000)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace hypsec

BENCHMARK_MAIN();
