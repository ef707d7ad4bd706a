#include <benchmark/benchmark.h>

#include "csnorm/reps.hpp"
#include "csnorm/respq.hpp"
#include "csnorm/roots.hpp"

using namespace csnorm;

static void BM_ResClosedForm(benchmark::State& st) {
  const std::int64_t p = st.range(0), q = st.range(1);
  for (auto _ : st) benchmark::DoNotOptimize(res_poly(p, q));
}
BENCHMARK(BM_ResClosedForm)->Args({5, 1})->Args({25, 8})->Args({65, 16});

static void BM_SylvesterResultant(benchmark::State& st) {
  const std::int64_t p = st.range(0), q = st.range(1);
  for (auto _ : st) benchmark::DoNotOptimize(res_oracle(p, q));
}
BENCHMARK(BM_SylvesterResultant)->Args({5, 1})->Args({25, 8})->Args({-25, 7})->Unit(benchmark::kMillisecond);

static void BM_FindRoots(benchmark::State& st) {
  const auto f = res_poly(st.range(0), st.range(1));
  for (auto _ : st) benchmark::DoNotOptimize(find_roots(f));
  st.counters["degree"] = f.span();
}
BENCHMARK(BM_FindRoots)->Args({5, 1})->Args({65, 3})->Args({65, 16})->Unit(benchmark::kMillisecond);

static void BM_BuildPRep(benchmark::State& st) {
  const std::int64_t p = st.range(0), q = st.range(1);
  const auto nt = nontrivial_roots(find_roots(res_poly(p, q)), expected_trivial_root_orders(p, q));
  const Complex s = nt.roots.back().value;
  for (auto _ : st) benchmark::DoNotOptimize(build_prep(s, 1, p, q, PRepKind::Irreducible));
}
BENCHMARK(BM_BuildPRep)->Args({5, 1})->Args({65, 16})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
