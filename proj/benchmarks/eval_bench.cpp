#include <benchmark/benchmark.h>

#include <sstream>

#include "logobf/bench/normalize.hpp"
#include "logobf/bench/records.hpp"
#include "logobf/bench/scoring.hpp"

namespace {

using namespace logobf::bench;

void BM_Normalize(benchmark::State& state) {
  const std::string s = "  The answer is: Sister-in-law (maternal side)!  ";
  for (auto _ : state) benchmark::DoNotOptimize(normalize(s));
}
BENCHMARK(BM_Normalize);

std::vector<ObfuscationRecord> records(std::size_t n) {
  std::vector<ObfuscationRecord> out;
  for (std::size_t i = 0; i < n; ++i) {
    ObfuscationRecord r;
    r.id = "r" + std::to_string(i / 2);
    r.task = static_cast<Task>(i % 4);
    r.variant = i % 2 == 0 ? Variant::Base : (r.task == Task::BloodRelation ? Variant::ObfL1 : Variant::Obf);
    if (r.task == Task::NumberSeries && i % 2 == 1) r.variant = Variant::Type3;
    r.question_text = "question " + std::to_string(i);
    r.answer = "answer " + std::to_string(i / 2);
    r.payload = {{"n", i}};
    r.provenance = {{"seed", 1}};
    out.push_back(std::move(r));
  }
  return out;
}

void BM_JsonlRoundTrip(benchmark::State& state) {
  const auto rs = records(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    std::stringstream ss;
    write_records(ss, rs);
    benchmark::DoNotOptimize(read_records(ss));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_JsonlRoundTrip)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_ScoreEchoGold(benchmark::State& state) {
  const auto rs = records(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto client = MockClient::echo_gold(rs);
    benchmark::DoNotOptimize(score_predictions(rs, collect_predictions(rs, client)));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ScoreEchoGold)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace
