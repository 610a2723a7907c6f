#include <benchmark/benchmark.h>

#include <random>

#include "trisect/dsl.hpp"
#include "trisect/finite_group.hpp"
#include "trisect/subgroup_graph.hpp"
#include "trisect/surface.hpp"
#include "trisect/todd_coxeter.hpp"
#include "trisect/trisection.hpp"

namespace {

using namespace trisect;

std::vector<Letter> random_letters(std::mt19937& rng, int rank, int length) {
  std::vector<Letter> ls;
  std::uniform_int_distribution<int> index(1, rank);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int i = 0; i < length; ++i)
    ls.push_back(make_letter(Family::X, index(rng), coin(rng) ? 1 : -1));
  return ls;
}

void BM_FreeReduction(benchmark::State& state) {
  std::mt19937 rng(7);
  auto letters = random_letters(rng, 4, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(reduce(letters));
}
BENCHMARK(BM_FreeReduction)->Arg(1000)->Arg(10000);

void BM_StallingsFold(benchmark::State& state) {
  std::mt19937 rng(11);
  std::vector<Word> gens;
  for (int i = 0; i < 8; ++i) gens.push_back(Word(random_letters(rng, 3, 12)));
  Alphabet f3{AlphabetKind::FreeX, 3};
  for (auto _ : state) benchmark::DoNotOptimize(SubgroupGraph::build(gens, f3));
}
BENCHMARK(BM_StallingsFold);

void BM_SmithNormalForm(benchmark::State& state) {
  std::mt19937 rng(13);
  std::uniform_int_distribution<int> entry(-5, 5);
  IntegerMatrix m(5, 5);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) m.at(i, j) = entry(rng);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm);

void BM_ToddCoxeterS4(benchmark::State& state) {
  // <a,b | a^2, b^3, (ab)^4> has order 24.
  Presentation p({make_letter(Family::A, 1), make_letter(Family::B, 1)},
                 {parse_word("a1 a1"), parse_word("b1 b1 b1"),
                  parse_word("a1 b1 a1 b1 a1 b1 a1 b1")});
  Budget budget;
  for (auto _ : state) benchmark::DoNotOptimize(todd_coxeter_index(p, {}, budget));
}
BENCHMARK(BM_ToddCoxeterS4);

void BM_DehnAlgorithm(benchmark::State& state) {
  Word r = surface_relator(2);
  Word w = concat(concat(parse_word("a1 b2"), r), parse_word("b2^-1 a1^-1"));
  for (int i = 0; i < 3; ++i) w = concat(w, w);
  for (auto _ : state) benchmark::DoNotOptimize(is_trivial_in_surface_group(2, w));
}
BENCHMARK(BM_DehnAlgorithm);

void BM_VerifyStandard31(benchmark::State& state) {
  GroupTrisection t = standard_trivial_31();
  Budget budget;
  for (auto _ : state) benchmark::DoNotOptimize(verify(t, budget));
}
BENCHMARK(BM_VerifyStandard31);

void BM_KernelSearchStandard31(benchmark::State& state) {
  GroupTrisection t = standard_trivial_31();
  for (auto _ : state) benchmark::DoNotOptimize(search_common_kernel(t, 4));
}
BENCHMARK(BM_KernelSearchStandard31);

}  // namespace

BENCHMARK_MAIN();
