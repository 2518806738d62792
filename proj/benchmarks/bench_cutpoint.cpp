#include <benchmark/benchmark.h>

#include "cutpoint/analysis/witness.hpp"
#include "cutpoint/constructions/one_state_gfa.hpp"
#include "cutpoint/constructions/px.hpp"
#include "cutpoint/constructions/rotation.hpp"

using namespace cutpoint;

static void BM_MatPowScaledRotation(benchmark::State& state) {
  const Matrix<Integer> r = scaled_rotation_matrix(PythTriple{2, 1});
  const auto k = static_cast<unsigned long>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mat_pow(r, k));
}
BENCHMARK(BM_MatPowScaledRotation)->RangeMultiplier(10)->Range(10, 10000);

static void BM_MatPowRationalRotation(benchmark::State& state) {
  const Matrix<Rational> r = rotation_matrix(PythTriple{2, 1});
  const auto k = static_cast<unsigned long>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mat_pow(r, k));
}
BENCHMARK(BM_MatPowRationalRotation)->RangeMultiplier(10)->Range(10, 10000);

static void BM_RotationValues(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(rotation_values(PythTriple{2, 1}, n));
}
BENCHMARK(BM_RotationValues)->RangeMultiplier(10)->Range(100, 10000);

static void BM_UnaryValuesPx(benchmark::State& state) {
  const Automaton p = px(make_rational(1, 3));
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(unary_values(p, n));
}
BENCHMARK(BM_UnaryValuesPx)->Arg(100)->Arg(300)->Arg(1000);

static void BM_DescMember(benchmark::State& state) {
  const OneStateGfaSpec s{Alphabet("abc"), {make_rational(1, 2), 2, make_rational(-3, 2)}, make_rational(3, 4),
                          Direction::Less, OneStateMode::Strict};
  const LanguageDescriptor d = decompose_1state(s);
  const std::string word = "abcabcbbacab";
  for (auto _ : state) benchmark::DoNotOptimize(desc_member(d, word));
}
BENCHMARK(BM_DescMember);

static void BM_DensityReport(benchmark::State& state) {
  const auto bins = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(density_report(PythTriple{2, 1}, bins, 50000));
}
BENCHMARK(BM_DensityReport)->Arg(10)->Arg(100)->Arg(400);

BENCHMARK_MAIN();
