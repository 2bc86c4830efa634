#include <benchmark/benchmark.h>

#include "nichols/analyzer.hpp"
#include "nichols/pm.hpp"
#include "nichols/shuffle.hpp"

using namespace nichols;

namespace {

BraidingMatrix zeta5_braiding() {
  return BraidingMatrix::from_exponents_cyclotomic(5, {{1, 1}, {0, 1}});
}

void BM_LyndonEnumeration(benchmark::State& state) {
  const DegreeVector m{static_cast<int>(state.range(0)), static_cast<int>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(lyndon_words(m));
}
BENCHMARK(BM_LyndonEnumeration)->Arg(3)->Arg(4)->Arg(5)->Arg(6);

void BM_AFormExpand(benchmark::State& state) {
  const DegreeVector m{static_cast<int>(state.range(0)), static_cast<int>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(a_form(m).expand());
}
BENCHMARK(BM_AFormExpand)->Arg(3)->Arg(4)->Arg(5);

void BM_RadicalIdentity44(benchmark::State& state) {
  const DegreeVector m{4, 4};
  for (auto _ : state) benchmark::DoNotOptimize(radical_identity_check(m));
}
BENCHMARK(BM_RadicalIdentity44);

void BM_ShuffleMatrixBuild(benchmark::State& state) {
  const BraidingMatrix q = zeta5_braiding();
  const HomogeneousComponent comp(DegreeVector{3, 4});
  for (auto _ : state) benchmark::DoNotOptimize(s1_matrix(6, comp, q));
}
BENCHMARK(BM_ShuffleMatrixBuild);

void BM_ShuffleKernel35(benchmark::State& state) {
  const BraidingMatrix q = zeta5_braiding();
  const HomogeneousComponent comp(DegreeVector{3, 4});
  const OperatorMatrix s = s1_matrix(6, comp, q);
  for (auto _ : state) benchmark::DoNotOptimize(s.kernel_dim());
}
BENCHMARK(BM_ShuffleKernel35);

void BM_SymmetrizerKernel35(benchmark::State& state) {
  const BraidingMatrix q = zeta5_braiding();
  const HomogeneousComponent comp(DegreeVector{3, 4});
  for (auto _ : state) benchmark::DoNotOptimize(symmetrizer_matrix(comp, q).kernel_dim());
}
BENCHMARK(BM_SymmetrizerKernel35);

void BM_CycleDetClosedForm(benchmark::State& state) {
  Rng rng;
  const BraidingMatrix q = BraidingMatrix::random_rational(2, rng);
  const DegreeVector m{3, 3};
  for (auto _ : state) benchmark::DoNotOptimize(cycle_det(m, q));
}
BENCHMARK(BM_CycleDetClosedForm);

void BM_CycleDetBruteForce(benchmark::State& state) {
  Rng rng;
  const BraidingMatrix q = BraidingMatrix::random_rational(2, rng);
  const HomogeneousComponent comp(DegreeVector{3, 3});
  for (auto _ : state) benchmark::DoNotOptimize(cycle_matrix(comp, q).det());
}
BENCHMARK(BM_CycleDetBruteForce);

void BM_FreenessSweep(benchmark::State& state) {
  const BraidingMatrix q = BraidingMatrix::from_exponents_transcendental({{2, -1}, {0, 2}});
  for (auto _ : state)
    benchmark::DoNotOptimize(freeness_check(q, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_FreenessSweep)->Arg(6)->Arg(10);

}  // namespace

BENCHMARK_MAIN();
