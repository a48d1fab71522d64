#include <benchmark/benchmark.h>

#include "zcenter/centre.hpp"
#include "zcenter/cochain.hpp"
#include "zcenter/cohomology.hpp"
#include "zcenter/group.hpp"

namespace {

using namespace zc;

void BM_theta_cocycle_check(benchmark::State& state) {
  GroupTable d3 = dihedral_group(3);
  Cochain t = theta_d3(1);
  for (auto _ : state) benchmark::DoNotOptimize(is_cocycle(d3, t));
}
BENCHMARK(BM_theta_cocycle_check);

void BM_hs_check(benchmark::State& state) {
  GroupTable d3 = dihedral_group(3);
  Cochain t = theta_d3(1);
  for (auto _ : state) benchmark::DoNotOptimize(hs_check(d3, t));
}
BENCHMARK(BM_hs_check);

void BM_centre_context(benchmark::State& state) {
  GroupTable d3 = dihedral_group(3);
  Cochain t = theta_d3(state.range(0));
  for (auto _ : state) {
    CentreContext ctx(d3, t);
    benchmark::DoNotOptimize(ctx.simples().size());
  }
}
BENCHMARK(BM_centre_context)->Arg(0)->Arg(1);

void BM_cohomology_h3_d3(benchmark::State& state) {
  GroupTable d3 = dihedral_group(3);
  for (auto _ : state) benchmark::DoNotOptimize(cohomology(d3, 3).invariant_factors.size());
}
BENCHMARK(BM_cohomology_h3_d3);

void BM_coboundary_solve(benchmark::State& state) {
  GroupTable d3 = dihedral_group(3);
  Cochain t6 = theta_d3(6);
  for (auto _ : state) benchmark::DoNotOptimize(solve_coboundary(d3, t6).is_coboundary);
}
BENCHMARK(BM_coboundary_solve);

}  // namespace

BENCHMARK_MAIN();
