#include <random>

#include <benchmark/benchmark.h>

#include "dcfw/dca.hpp"
#include "dcfw/frank_wolfe.hpp"
#include "dcfw/hungarian.hpp"
#include "dcfw/line_search.hpp"
#include "dcfw/lmo.hpp"
#include "dcfw/problems.hpp"

namespace {

using namespace dcfw;

Vector random_cost(Index n, uint64_t seed) {
  NormalSampler normal(seed);
  return normal.vector(n);
}

void BM_SimplexLmo(benchmark::State& state) {
  const Vector c = random_cost(state.range(0), 1);
  for (auto _ : state) benchmark::DoNotOptimize(simplex_lmo(c));
}
BENCHMARK(BM_SimplexLmo)->Arg(100)->Arg(10000);

void BM_KSparseLmo(benchmark::State& state) {
  const Vector c = random_cost(state.range(0), 2);
  for (auto _ : state) benchmark::DoNotOptimize(ksparse_lmo(c, 10.0, 10));
}
BENCHMARK(BM_KSparseLmo)->Arg(100)->Arg(10000);

void BM_Hungarian(benchmark::State& state) {
  const Index n = state.range(0);
  NormalSampler normal(3);
  const Matrix cost = normal.matrix(n, n);
  for (auto _ : state) benchmark::DoNotOptimize(solve_assignment(cost));
  state.SetComplexityN(n);
}
BENCHMARK(BM_Hungarian)->RangeMultiplier(2)->Range(8, 256)->Complexity(benchmark::oNCubed);

void BM_SecantOnQuadratic(benchmark::State& state) {
  const QuadraticDcInstance inst = gen_quadratic_dc(state.range(0), 4);
  const SmoothObjective h{
      [&](const Vector& x) { return 0.5 * x.dot(inst.A * x) + inst.a.dot(x); },
      [&](const Vector& x) -> Vector { return inst.A * x + inst.a; }};
  const Vector x = Vector::Constant(inst.n, 1.0 / inst.n);
  const Vector d = Vector::Unit(inst.n, 0) - x;
  for (auto _ : state) benchmark::DoNotOptimize(secant_line_search(h, x, d, 1.0));
}
BENCHMARK(BM_SecantOnQuadratic)->Arg(100);

void BM_BpcgSubproblem(benchmark::State& state) {
  const DcProblem p = make_problem(gen_quadratic_dc(state.range(0), 5));
  const Vector x0 = initial_point(p.lmo->region());
  const Subproblem sub = linearize(p, x0);
  for (auto _ : state) {
    LinearMinimizationOracle lmo(p.lmo->region());
    benchmark::DoNotOptimize(bpcg(sub.objective(), lmo, ActiveSet(lmo(sub.gradient(x0))),
                                  StopRule::fixed(5e-7), FwOptions{}));
  }
}
BENCHMARK(BM_BpcgSubproblem)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_DcaWarmStartedBpcg(benchmark::State& state) {
  const QuadraticDcInstance inst = gen_quadratic_dc(state.range(0), 6);
  DcaConfig config;
  for (auto _ : state) {
    const DcProblem p = make_problem(inst);
    benchmark::DoNotOptimize(dca_solve(p, initial_point(p.lmo->region()), config));
  }
}
BENCHMARK(BM_DcaWarmStartedBpcg)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
