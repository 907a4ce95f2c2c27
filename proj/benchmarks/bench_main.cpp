#include <benchmark/benchmark.h>

#include "hstrata/experiments.hpp"
#include "hstrata/invariants.hpp"
#include "hstrata/rng.hpp"
#include "hstrata/sampling.hpp"
#include "hstrata/strata.hpp"

using namespace hstrata;

namespace {

Matrix<GF> random_matrix(const GF& k, int n, Rng& rng) {
  Matrix<GF> m(k, n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) m.at(r, c) = rng.element(k);
  return m;
}

void BM_rref_gf(benchmark::State& state) {
  GF k;
  Rng rng(1);
  auto m = random_matrix(k, static_cast<int>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(rref(m).rank);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_rref_gf)->RangeMultiplier(2)->Range(8, 128)->Complexity();

void BM_hilbert_tail_8_3(benchmark::State& state) {
  GF k;
  auto v = sample_hilbert_burch(k, 8, 3, Partition({4, 4}), 0, 1).V;
  for (auto _ : state) benchmark::DoNotOptimize(hilbert_tail(v));
}
BENCHMARK(BM_hilbert_tail_8_3);

void BM_mu_basis_9_4(benchmark::State& state) {
  GF k;
  auto v = sample_hilbert_burch(k, 9, 4, Partition({3, 3, 3}), 0, 1).V;
  for (auto _ : state) benchmark::DoNotOptimize(mu_basis(v).col_degrees);
}
BENCHMARK(BM_mu_basis_9_4);

void BM_ancestor_ideal_9_4(benchmark::State& state) {
  GF k;
  auto v = sample_hilbert_burch(k, 9, 4, Partition({4, 3, 2}), 0, 1).V;
  for (auto _ : state) benchmark::DoNotOptimize(ancestor_ideal(v).components.size());
}
BENCHMARK(BM_ancestor_ideal_9_4);

void BM_build_poset_12_6(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_poset(12, 6).strata.size());
}
BENCHMARK(BM_build_poset_12_6);

void BM_jacobian_rank_6_3(benchmark::State& state) {
  GF k;
  std::uint64_t seed = 0;
  for (auto _ : state)
    benchmark::DoNotOptimize(jacobian_rank_dim(k, 6, 3, Partition({4, 2}), ++seed));
}
BENCHMARK(BM_jacobian_rank_6_3);

void BM_certify_closure_8_3(benchmark::State& state) {
  GF k;
  auto v = sample_hilbert_burch(k, 8, 3, Partition({6, 1}), 1, 7).V;  // tail (6,5,4,3,2,1)
  HilbertTail target(8, {6, 4, 2, 1});
  std::uint64_t seed = 0;
  for (auto _ : state)
    benchmark::DoNotOptimize(certify_closure_membership(v, target, ++seed).outcome);
}
BENCHMARK(BM_certify_closure_8_3);

}  // namespace

BENCHMARK_MAIN();
