#include <benchmark/benchmark.h>

#include "fgr/basisreduce.hpp"
#include "fgr/parse.hpp"
#include "fgr/pipeline.hpp"
#include "fgr/quadrature.hpp"

namespace {

void BM_eval_T(benchmark::State& state) {
  fgr::QuadConfig cfg;
  cfg.T_strategy = fgr::TStrategy::Convolution;
  const fgr::Quadrature q(cfg);
  double x = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(q.T_at(x));
    x += 0.37;
    if (x > 20.0) x -= 40.0;
  }
}
BENCHMARK(BM_eval_T);

void BM_eval_monomial(benchmark::State& state) {
  const fgr::Quadrature q;
  fgr::Monomial m;
  m.sech_pow = static_cast<int>(state.range(0));
  m.trig = fgr::Trig::Cos;
  for (auto _ : state) benchmark::DoNotOptimize(q.eval_monomial(m));
}
BENCHMARK(BM_eval_monomial)->Arg(1)->Arg(5)->Arg(9);

void BM_eval_basis_with_T(benchmark::State& state) {
  for (auto _ : state) {
    const fgr::Quadrature q;  // fresh cache each iteration
    benchmark::DoNotOptimize(q.eval_basis({fgr::Family::R, 3}));
  }
}
BENCHMARK(BM_eval_basis_with_T)->Unit(benchmark::kMillisecond);

void BM_reduce_full(benchmark::State& state) {
  const fgr::BasisCombo c = fgr::parse_basis_expr("r9 + s9 + q9 + a9 + c7 + e7 - f7 + d9");
  for (auto _ : state) benchmark::DoNotOptimize(fgr::reduce_full(c));
}
BENCHMARK(BM_reduce_full);

void BM_gamma_symbolic(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(fgr::gamma_symbolic());
}
BENCHMARK(BM_gamma_symbolic)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
