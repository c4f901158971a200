// Micro benchmarks for the per-letter machines and the brute-force oracles.

#include <benchmark/benchmark.h>

#include <memory>
#include <random>

#include "gwp/bruteforce.hpp"
#include "gwp/eda_build.hpp"
#include "gwp/pda.hpp"
#include "gwp/stallings.hpp"
#include "gwp/virtually_free.hpp"

using namespace gwp;

namespace {

Word random_word(const Alphabet& a, std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, a.size() - 1);
  Word w(n);
  for (Symbol& s : w) s = symbol_at(pick(rng));
  return w;
}

const Alphabet& f2() {
  static const Alphabet a = Alphabet::letters(2);
  return a;
}

void BM_FreeReduce(benchmark::State& state) {
  const Word w = random_word(f2(), static_cast<std::size_t>(state.range(0)), 0);
  for (auto _ : state) benchmark::DoNotOptimize(free_reduce(f2(), w));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_FreeReduce)->Range(1 << 8, 1 << 16);

void BM_EdaStream(benchmark::State& state) {
  const auto oracle = make_oracle(FreeGroupData{f2()});
  const CoreMembership ha(SubgroupSpec::parse(f2(), "a"), f2());
  const Eda eda = quasiconvex_eda(ha, *oracle, 4, 6);
  const Word w = random_word(f2(), static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(eda.reduce_stream_word(w));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_EdaStream)->Range(1 << 8, 1 << 16);

void BM_EdaBatch(benchmark::State& state) {
  const auto oracle = make_oracle(FreeGroupData{f2()});
  const Eda eda = generate_dehn_rules(*oracle, 4);
  const Word w = random_word(f2(), static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(eda.reduce_batch(w));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_EdaBatch)->Range(1 << 6, 1 << 10);

void BM_PdaRun(benchmark::State& state) {
  const GwpPda pda(stallings_fold(SubgroupSpec::parse(f2(), "a b a^-1, b b"), f2()));
  const Word w = random_word(f2(), static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(pda_run(pda, w));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_PdaRun)->Range(1 << 8, 1 << 16);

void BM_VirtuallyFree(benchmark::State& state) {
  const auto spec = std::make_shared<const VirtuallyFreeSpec>(infinite_dihedral_spec("g g"));
  const VirtuallyFreeDecider d(spec);
  const Word w = random_word(spec->ambient, static_cast<std::size_t>(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(d.run(w));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_VirtuallyFree)->Range(1 << 8, 1 << 16);

void BM_StallingsFold(benchmark::State& state) {
  std::vector<Word> gens;
  for (std::int64_t i = 0; i < state.range(0); ++i)
    gens.push_back(random_word(f2(), 12, 100 + static_cast<std::uint64_t>(i)));
  std::vector<Word> kept;
  for (const Word& g : gens)
    if (!free_reduce(f2(), g).empty()) kept.push_back(g);
  const SubgroupSpec sub(f2(), kept);
  for (auto _ : state) benchmark::DoNotOptimize(stallings_fold(sub, f2()));
}
BENCHMARK(BM_StallingsFold)->Range(2, 64);

void BM_CosetBfs(benchmark::State& state) {
  const auto oracle = make_oracle(FreeGroupData{f2()});
  const CoreMembership ha(SubgroupSpec::parse(f2(), "a a, b"), f2());
  for (auto _ : state)
    benchmark::DoNotOptimize(coset_bfs(ha, *oracle, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_CosetBfs)->DenseRange(4, 10, 2);

}  // namespace

BENCHMARK_MAIN();
