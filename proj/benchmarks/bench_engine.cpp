#include <benchmark/benchmark.h>

#include "balancegate/analyzer.hpp"
#include "balancegate/lfsr.hpp"
#include "balancegate/minterm_engine.hpp"

using namespace balancegate;

namespace {

const RegisterLayout kTable({{'a', 7}, {'b', 8}, {'c', 9}});

void BM_AnalyzeCaseStudy(benchmark::State& state) {
  const auto f = parse_function("a0*b0 ^ b0*c0 ^ a0*c0 ^ a0 ^ b0 ^ c0", kTable);
  for (auto _ : state) benchmark::DoNotOptimize(analyze(f).ones);
}
BENCHMARK(BM_AnalyzeCaseStudy);

// n linear terms over one register: H grows to 2^n - 1 entries.
void BM_AccumulateLinear(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<MintermMask> masks;
  for (std::size_t i = 0; i < n; ++i) masks.push_back(MintermMask::unit(64, i));
  for (auto _ : state) benchmark::DoNotOptimize(accumulate(masks, 64).size());
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_AccumulateLinear)->DenseRange(4, 14, 2);

void BM_Analyze128(benchmark::State& state) {
  const auto f = parse_function("m0*m1*m2 ^ m5*m77 ^ m3*m64*m100 ^ m127", RegisterLayout::single(128));
  for (auto _ : state) benchmark::DoNotOptimize(analyze(f).ones);
}
BENCHMARK(BM_Analyze128);

void BM_GenerateOutput(benchmark::State& state) {
  const auto f = parse_function("a0*b0 ^ b0*c0 ^ c0", kTable);
  std::vector<LfsrConfig> lfsrs;
  for (const auto& r : kTable.registers())
    lfsrs.emplace_back(r.length, primitive_polynomial(static_cast<unsigned>(r.length)));
  const GeneratorInstance g(f, lfsrs);
  const auto steps = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(generate_output(g, steps).size());
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_GenerateOutput)->Arg(1 << 16)->Arg(1 << 20);

void BM_TruthTable(benchmark::State& state) {
  const RegisterLayout layout({{'a', 5}, {'b', 7}, {'c', 9}});
  const auto f = parse_function("a0*b0 ^ b0*c0 ^ a1*c3 ^ c0", layout);
  for (auto _ : state) benchmark::DoNotOptimize(count_ones_truthtable(f));
}
BENCHMARK(BM_TruthTable);

}  // namespace

BENCHMARK_MAIN();
