// Serial reference kernels against their OpenMP versions.

#include "adet/kernels.hpp"
#include "adet/seminormal.hpp"
#include "adet/symmetric.hpp"

#include <benchmark/benchmark.h>

#include <map>

namespace {

using namespace adet;

struct BucketCase {
  SeminormalRep rep;
  RatMatrix basis;
  kernels::Buckets buckets;
};

BucketCase make_bucket_case(int n, int l, const Partition& lam) {
  BucketCase c{build_rep(lam), {}, {}};
  c.basis = invariant_basis(c.rep, n, l).columns;
  std::map<HClassKey, int> index;
  c.buckets.elements = enumerate_H(n, l);
  for (const Permutation& h : c.buckets.elements) {
    auto [it, inserted] = index.try_emplace(h_class(h, n, l), static_cast<int>(index.size()));
    c.buckets.bucket.push_back(it->second);
    c.buckets.words.push_back(adjacent_word(h));
  }
  c.buckets.count = static_cast<int>(index.size());
  return c;
}

const BucketCase& bucket_case() {
  static const BucketCase c = make_bucket_case(4, 2, Partition({4, 2, 2}));
  return c;
}

void BM_bucket_sums_serial(benchmark::State& state) {
  const BucketCase& c = bucket_case();
  for (auto _ : state) benchmark::DoNotOptimize(kernels::bucket_sums_serial(c.rep, c.basis, c.buckets));
}

void BM_bucket_sums_omp(benchmark::State& state) {
  const BucketCase& c = bucket_case();
  for (auto _ : state) benchmark::DoNotOptimize(kernels::bucket_sums_omp(c.rep, c.basis, c.buckets));
}

const std::vector<Permutation>& big_K() {
  static const std::vector<Permutation> K = enumerate_K(2, 5);
  return K;
}

void BM_coset_cycle_types_serial(benchmark::State& state) {
  const Permutation g = g_s(5, 3);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::coset_cycle_types_serial(big_K(), g));
}

void BM_coset_cycle_types_omp(benchmark::State& state) {
  const Permutation g = g_s(5, 3);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::coset_cycle_types_omp(big_K(), g));
}

void BM_nu_graded_serial(benchmark::State& state) {
  const auto H = enumerate_H(3, 2);
  const auto K = enumerate_K(3, 2);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::nu_graded_zonal_sums_serial(Partition({3, 2, 1}), H, K));
}

void BM_nu_graded_omp(benchmark::State& state) {
  const auto H = enumerate_H(3, 2);
  const auto K = enumerate_K(3, 2);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::nu_graded_zonal_sums_omp(Partition({3, 2, 1}), H, K));
}

} // namespace

BENCHMARK(BM_bucket_sums_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_bucket_sums_omp)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_coset_cycle_types_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_coset_cycle_types_omp)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_nu_graded_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_nu_graded_omp)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
