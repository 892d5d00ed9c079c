#include <benchmark/benchmark.h>

#include "ffsubsum/oracle.hpp"
#include "ffsubsum/rscodes.hpp"

using namespace ffsubsum;

namespace {

std::vector<Code> punctured_codes(const Field& f) {
  std::vector<Code> codes;
  for (Code c = 1; c < f.q(); ++c) codes.push_back(c);
  return codes;
}

void BM_DpParallel(benchmark::State& state) {
  const Field f = Field::make(2, static_cast<std::uint32_t>(state.range(0)));
  const auto codes = punctured_codes(f);
  for (auto _ : state) benchmark::DoNotOptimize(dp_subset_counts(f, codes));
}

void BM_DpSerial(benchmark::State& state) {
  const Field f = Field::make(2, static_cast<std::uint32_t>(state.range(0)));
  const auto codes = punctured_codes(f);
  for (auto _ : state) benchmark::DoNotOptimize(dp_subset_counts_serial(f, codes));
}

Word x_pow(const RSCode& code, std::size_t d) {
  std::vector<Element> c(d + 1, code.field().zero());
  c[d] = code.field().one();
  return code.evaluate(Poly(code.field(), c));
}

void BM_DistanceParallel(benchmark::State& state) {
  const Field f = Field::make(static_cast<std::uint32_t>(state.range(0)), 1);
  const RSCode code = RSCode::over(f, EvalMode::full, 3);
  const Word u = x_pow(code, 4);
  for (auto _ : state) benchmark::DoNotOptimize(code.distance_to_code(u));
}

void BM_DistanceSerial(benchmark::State& state) {
  const Field f = Field::make(static_cast<std::uint32_t>(state.range(0)), 1);
  const RSCode code = RSCode::over(f, EvalMode::full, 3);
  const Word u = x_pow(code, 4);
  for (auto _ : state) benchmark::DoNotOptimize(code.distance_to_code_serial(u));
}

}  // namespace

BENCHMARK(BM_DpParallel)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DpSerial)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DistanceParallel)->Arg(11)->Arg(17)->Arg(23)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DistanceSerial)->Arg(11)->Arg(17)->Arg(23)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
