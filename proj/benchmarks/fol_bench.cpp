#include <benchmark/benchmark.h>

#include "logobf/common/rng.hpp"
#include "logobf/fol/parser.hpp"
#include "logobf/fol/random_formula.hpp"
#include "logobf/fol/render.hpp"
#include "logobf/obfuscator/equivalence.hpp"
#include "logobf/obfuscator/obfuscate.hpp"

namespace {

using namespace logobf;

std::vector<fol::Formula> corpus(std::size_t n) {
  SeededRng rng(1);
  std::vector<fol::Formula> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(fol::random_formula(rng));
  return out;
}

void BM_Parse(benchmark::State& state) {
  const auto fs = corpus(256);
  std::vector<std::string> texts;
  for (const auto& f : fs) texts.push_back(fol::render_formula(f, fol::Style::Ascii));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(fol::parse_formula(texts[i++ % texts.size()]));
  }
}
BENCHMARK(BM_Parse);

void BM_Obfuscate(benchmark::State& state) {
  const auto fs = corpus(256);
  obf::ObfuscationOptions opts;
  opts.min_rules = static_cast<std::size_t>(state.range(0));
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& f = fs[i % fs.size()];
    SeededRng rng(i++);
    benchmark::DoNotOptimize(obf::obfuscate_formula(f, rng, opts, fol::atoms(f)));
  }
}
BENCHMARK(BM_Obfuscate)->Arg(4)->Arg(8);

// Obfuscate plus the domain 1..N equivalence check, the per-formula cost of
// the soundness sweep.
void BM_ObfuscateAndCheck(benchmark::State& state) {
  const auto fs = corpus(256);
  const obf::ObfuscationOptions opts;
  const auto domain = static_cast<std::size_t>(state.range(0));
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& f = fs[i % fs.size()];
    SeededRng rng(i++);
    const auto [g, trace] = obf::obfuscate_formula(f, rng, opts, fol::atoms(f));
    benchmark::DoNotOptimize(obf::check_equivalence(f, g, {domain}));
  }
}
BENCHMARK(BM_ObfuscateAndCheck)->DenseRange(1, 3);

void BM_CheckBinaryPredicates(benchmark::State& state) {
  const auto f = fol::parse_formula("forall x. exists y. (R(x, y) -> ~S(y, x))");
  const auto g = fol::parse_formula("forall x. exists y. (~R(x, y) | ~S(y, x))");
  for (auto _ : state) benchmark::DoNotOptimize(obf::check_equivalence(f, g, {3}));
}
BENCHMARK(BM_CheckBinaryPredicates)->Unit(benchmark::kMillisecond);

}  // namespace
