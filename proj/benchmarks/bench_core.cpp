#include <benchmark/benchmark.h>

#include "c3m/farey.hpp"
#include "c3m/gl2.hpp"

namespace {

void bm_pq_complexity(benchmark::State& state) {
  c3m::Int acc = 0;
  for (auto _ : state) {
    for (c3m::Int p = 2; p < 200; ++p) {
      for (c3m::Int q = 1; q < p; ++q) {
        if (c3m::gcd_int(p, q) == 1) acc += c3m::pq_complexity(p, q);
      }
    }
  }
  benchmark::DoNotOptimize(acc);
}
BENCHMARK(bm_pq_complexity);

void bm_dist_theta(benchmark::State& state) {
  auto a = c3m::theta_std(-40);
  auto b = c3m::theta_std(40);
  for (auto _ : state) {
    benchmark::DoNotOptimize(c3m::dist_theta_theta(a, b));
  }
}
BENCHMARK(bm_dist_theta);

void bm_conj_norm(benchmark::State& state) {
  c3m::GL2Mat m = c3m::word_to_matrix("RRLRLLRRRLLL");
  for (auto _ : state) {
    benchmark::DoNotOptimize(c3m::conj_norm(m));
  }
}
BENCHMARK(bm_conj_norm);

}  // namespace

BENCHMARK_MAIN();
