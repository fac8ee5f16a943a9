#include <vcsirreps/angular.hpp>
#include <vcsirreps/holomorphic.hpp>
#include <vcsirreps/kmatrix.hpp>
#include <vcsirreps/repcheck.hpp>
#include <vcsirreps/su3so3.hpp>
#include <vcsirreps/u3.hpp>

#include <benchmark/benchmark.h>

using namespace vcsirreps;

static void BM_ClebschGordanSweep(benchmark::State& state) {
  const int tj = static_cast<int>(state.range(0));
  for (auto _ : state) {
    for (int tm1 = -tj; tm1 <= tj; tm1 += 2)
      for (int tm2 = -tj; tm2 <= tj; tm2 += 2)
        for (int tJ = 0; tJ <= 2 * tj; tJ += 2) {
          if (std::abs(tm1 + tm2) > tJ) continue;
          benchmark::DoNotOptimize(clebsch_gordan(HalfInt::from_twice(tj), HalfInt::from_twice(tm1), HalfInt::from_twice(tj),
                                                  HalfInt::from_twice(tm2), HalfInt::from_twice(tJ),
                                                  HalfInt::from_twice(tm1 + tm2)));
        }
  }
}
BENCHMARK(BM_ClebschGordanSweep)->Arg(4)->Arg(8)->Arg(16);

static void BM_U3Assemble(benchmark::State& state) {
  const long l1 = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(u3::assemble_generators({l1, l1 / 2, 0}));
}
BENCHMARK(BM_U3Assemble)->Arg(4)->Arg(8)->Arg(12);

static void BM_U3ExactCommutators(benchmark::State& state) {
  const long l1 = state.range(0);
  auto ops = u3::assemble_generators({l1, l1 / 2, 0});
  auto spec = repcheck::u3_spec();
  for (auto _ : state) benchmark::DoNotOptimize(repcheck::exact_commutator_failures(spec, ops));
}
BENCHMARK(BM_U3ExactCommutators)->Arg(4)->Arg(8);

static void BM_Su3Assemble(benchmark::State& state) {
  const int lam = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(su3::assemble_so3_generators({lam, lam / 2}));
}
BENCHMARK(BM_Su3Assemble)->Arg(2)->Arg(4)->Arg(8);

static void BM_KMatrixU3(benchmark::State& state) {
  const long l1 = state.range(0);
  auto real = holomorphic::u3_gamma({l1, l1 / 2, 0});
  for (auto _ : state) {
    auto sol = kmatrix::solve_s_recursion(real.rep);
    auto orth = kmatrix::orthonormalize({sol.blocks.begin(), sol.blocks.end()});
    benchmark::DoNotOptimize(kmatrix::unitarize(real.rep, orth));
  }
}
BENCHMARK(BM_KMatrixU3)->Arg(2)->Arg(4)->Arg(6);
BENCHMARK_MAIN();
