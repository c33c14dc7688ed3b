#include <benchmark/benchmark.h>

#include "specham/closure.hpp"
#include "specham/families.hpp"
#include "specham/oracle.hpp"
#include "specham/quotient.hpp"
#include "specham/rng.hpp"
#include "specham/spectral.hpp"

using namespace specham;

namespace {

void BM_spectral_radius_family(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Graph g = build_extremal({Family::M, 2, n}).graph;
  for (auto _ : state) {
    auto est = spectral_radius(g);
    benchmark::DoNotOptimize(est.lambda_lo);
  }
}
BENCHMARK(BM_spectral_radius_family)->Arg(12)->Arg(20)->Arg(28);

void BM_shift_certificate(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Graph g = build_extremal({Family::M, 2, n}).graph;
  Rational c = make_rational(n);  // always above the radius
  for (auto _ : state) benchmark::DoNotOptimize(shift_exceeds_spectral_radius(g, c));
}
BENCHMARK(BM_shift_certificate)->Arg(12)->Arg(20)->Arg(28);

void BM_quotient_lambda(benchmark::State& state) {
  for (auto _ : state) {
    auto qs = quotient_lambda({Family::M, 2, static_cast<int>(state.range(0))}, EdgeClass::ZZ);
    benchmark::DoNotOptimize(qs.lambda_lo);
  }
}
BENCHMARK(BM_quotient_lambda)->Arg(12)->Arg(24);

void BM_ham_cycle_oracle(benchmark::State& state) {
  Rng rng(1234);
  int n = static_cast<int>(state.range(0));
  Graph g = random_graph(rng, n, 500000);
  for (auto _ : state) {
    auto res = ham_cycle(g);
    benchmark::DoNotOptimize(res.status);
  }
}
BENCHMARK(BM_ham_cycle_oracle)->Arg(12)->Arg(16)->Arg(18);

void BM_k_closure_dense(benchmark::State& state) {
  Rng rng(99);
  int n = static_cast<int>(state.range(0));
  Graph g = random_graph(rng, n, 600000);
  for (auto _ : state) {
    auto [cl, trace] = k_closure(g, n);
    benchmark::DoNotOptimize(cl.m());
  }
}
BENCHMARK(BM_k_closure_dense)->Arg(64)->Arg(128);

}  // namespace

BENCHMARK_MAIN();
