#include <benchmark/benchmark.h>

#include "logobf/spatial/obfuscate.hpp"
#include "logobf/spatial/path.hpp"

namespace {

using namespace logobf::spatial;

void BM_InsertDetoursAndVerify(benchmark::State& state) {
  const auto base = parse_moves("N5 E3 S2 W7 N1");
  const int pairs = static_cast<int>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    const auto obf = insert_detours(base, pairs, seed++);
    benchmark::DoNotOptimize(verify_invariance(base, obf));
  }
}
BENCHMARK(BM_InsertDetoursAndVerify)->Arg(1)->Arg(4)->Arg(16);

void BM_Report(benchmark::State& state) {
  const Displacement d{Rational(3), Rational(5)};
  for (auto _ : state) benchmark::DoNotOptimize(report(d));
}
BENCHMARK(BM_Report);

void BM_SurfaceText(benchmark::State& state) {
  const auto p = insert_distractors(insert_detours(parse_moves("N5 E3"), 4, 1), 2, 2);
  for (auto _ : state) benchmark::DoNotOptimize(substitute_surface(p));
}
BENCHMARK(BM_SurfaceText);

}  // namespace
