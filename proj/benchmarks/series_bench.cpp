#include <benchmark/benchmark.h>

#include "logobf/common/rng.hpp"
#include "logobf/series/encoder.hpp"
#include "logobf/series/md5.hpp"

namespace {

using namespace logobf;

series::SeriesInstance random_series(std::uint64_t seed) {
  SeededRng rng(seed);
  series::SeriesInstance s;
  for (int i = 0; i < 8; ++i) s.terms.push_back(rng.between(0, 9999));
  s.terms[3] = std::nullopt;
  return s;
}

void BM_Md5Digit(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(series::md5_hex("4"));
}
BENCHMARK(BM_Md5Digit);

void BM_EncodeDecode(benchmark::State& state) {
  const auto type = series::encoder_from_number(static_cast<int>(state.range(0)));
  const auto s = random_series(5);
  for (auto _ : state) benchmark::DoNotOptimize(series::decode(series::encode(s, type)));
}
BENCHMARK(BM_EncodeDecode)->DenseRange(1, 3);

void BM_DigestTableBuild(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(series::DigestTable(state.range(0)));
  state.SetItemsProcessed(state.iterations() * (state.range(0) + 1));
}
BENCHMARK(BM_DigestTableBuild)->Arg(99)->Arg(9999)->Unit(benchmark::kMicrosecond);

}  // namespace
