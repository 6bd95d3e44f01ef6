#pragma once

// Data-parallel kernels. Every kernel has a serial reference version and an
// OpenMP version with identical results; the dispatching entry point picks
// the OpenMP one when the library is built with it.

#include "adet/combinatorics.hpp"
#include "adet/matrix.hpp"
#include "adet/seminormal.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace adet::kernels {

/// Element list with a bucket index per element.
struct Buckets {
  std::vector<Permutation> elements;
  std::vector<std::vector<int>> words;  // adjacent_word of each element
  std::vector<int> bucket;              // bucket index of each element
  int count = 0;                        // number of buckets
};

/// out[b] = sum over elements e in bucket b of rho(e) * basis.
std::vector<RatMatrix> bucket_sums_serial(const SeminormalRep& rep, const RatMatrix& basis,
                                          const Buckets& buckets);
std::vector<RatMatrix> bucket_sums_omp(const SeminormalRep& rep, const RatMatrix& basis,
                                       const Buckets& buckets);
std::vector<RatMatrix> bucket_sums(const SeminormalRep& rep, const RatMatrix& basis,
                                   const Buckets& buckets);

using CycleTypeHistogram = std::map<Partition, std::uint64_t>;

/// Histogram of cycle types of k * g over k in K.
CycleTypeHistogram coset_cycle_types_serial(std::span<const Permutation> K, const Permutation& g);
CycleTypeHistogram coset_cycle_types_omp(std::span<const Permutation> K, const Permutation& g);
CycleTypeHistogram coset_cycle_types(std::span<const Permutation> K, const Permutation& g);

/// (1/|group|) sum over the histogram of count * chi^lambda(mu).
Rational zonal_from_histogram(const Partition& lambda, const CycleTypeHistogram& hist,
                              std::size_t group_order);

/// Coefficients c_v = sum over h with nu(h) = v of omega^lambda(h).
std::vector<Rational> nu_graded_zonal_sums_serial(const Partition& lambda,
                                                  std::span<const Permutation> H,
                                                  std::span<const Permutation> K);
std::vector<Rational> nu_graded_zonal_sums_omp(const Partition& lambda,
                                               std::span<const Permutation> H,
                                               std::span<const Permutation> K);
std::vector<Rational> nu_graded_zonal_sums(const Partition& lambda,
                                           std::span<const Permutation> H,
                                           std::span<const Permutation> K);

/// True when the OpenMP versions were compiled in.
bool openmp_enabled();
int max_threads();

} // namespace adet::kernels
