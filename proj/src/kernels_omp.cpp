#include "adet/kernels.hpp"
#include "adet/symmetric.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace adet::kernels {

bool openmp_enabled() {
#ifdef _OPENMP
  return true;
#else
  return false;
#endif
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

#ifdef _OPENMP

std::vector<RatMatrix> bucket_sums_omp(const SeminormalRep& rep, const RatMatrix& basis,
                                       const Buckets& buckets) {
  const std::size_t dim = basis.rows(), d = basis.cols();
  const auto nb = static_cast<std::size_t>(buckets.count);
  const auto ne = static_cast<long>(buckets.elements.size());
  std::vector<std::vector<RatMatrix>> partial(static_cast<std::size_t>(omp_get_max_threads()));
#pragma omp parallel
  {
    auto& acc = partial[static_cast<std::size_t>(omp_get_thread_num())];
    acc.assign(nb, RatMatrix(dim, d));
    std::vector<Rational> col(dim);
#pragma omp for schedule(dynamic, 4)
    for (long e = 0; e < ne; ++e) {
      const auto ue = static_cast<std::size_t>(e);
      auto& target = acc[static_cast<std::size_t>(buckets.bucket[ue])];
      for (std::size_t c = 0; c < d; ++c) {
        for (std::size_t r = 0; r < dim; ++r) col[r] = basis(r, c);
        apply_word(rep, buckets.words[ue], col);
        for (std::size_t r = 0; r < dim; ++r) target(r, c) += col[r];
      }
    }
  }
  std::vector<RatMatrix> out(nb, RatMatrix(dim, d));
  for (const auto& acc : partial)
    for (std::size_t b = 0; b < acc.size(); ++b) out[b] += acc[b];
  return out;
}

CycleTypeHistogram coset_cycle_types_omp(std::span<const Permutation> K, const Permutation& g) {
  std::vector<CycleTypeHistogram> partial(static_cast<std::size_t>(omp_get_max_threads()));
  const auto nk = static_cast<long>(K.size());
#pragma omp parallel
  {
    auto& hist = partial[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(static)
    for (long i = 0; i < nk; ++i) ++hist[cycle_type(K[static_cast<std::size_t>(i)] * g)];
  }
  CycleTypeHistogram out;
  for (const auto& hist : partial)
    for (const auto& [mu, count] : hist) out[mu] += count;
  return out;
}

std::vector<Rational> nu_graded_zonal_sums_omp(const Partition& lambda,
                                               std::span<const Permutation> H,
                                               std::span<const Permutation> K) {
  const auto size = static_cast<std::size_t>(lambda.size()) + 1;
  std::vector<std::vector<Rational>> partial(static_cast<std::size_t>(omp_get_max_threads()),
                                             std::vector<Rational>(size));
  const auto nh = static_cast<long>(H.size());
#pragma omp parallel
  {
    auto& coeffs = partial[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(dynamic)
    for (long i = 0; i < nh; ++i) {
      const auto& h = H[static_cast<std::size_t>(i)];
      coeffs[static_cast<std::size_t>(nu(h))] +=
          zonal_from_histogram(lambda, coset_cycle_types_serial(K, h), K.size());
    }
  }
  std::vector<Rational> out(size);
  for (const auto& coeffs : partial)
    for (std::size_t v = 0; v < size; ++v) out[v] += coeffs[v];
  return out;
}

#else

std::vector<RatMatrix> bucket_sums_omp(const SeminormalRep& rep, const RatMatrix& basis,
                                       const Buckets& buckets) {
  return bucket_sums_serial(rep, basis, buckets);
}

CycleTypeHistogram coset_cycle_types_omp(std::span<const Permutation> K, const Permutation& g) {
  return coset_cycle_types_serial(K, g);
}

std::vector<Rational> nu_graded_zonal_sums_omp(const Partition& lambda,
                                               std::span<const Permutation> H,
                                               std::span<const Permutation> K) {
  return nu_graded_zonal_sums_serial(lambda, H, K);
}

#endif

std::vector<RatMatrix> bucket_sums(const SeminormalRep& rep, const RatMatrix& basis,
                                   const Buckets& buckets) {
  return bucket_sums_omp(rep, basis, buckets);
}

CycleTypeHistogram coset_cycle_types(std::span<const Permutation> K, const Permutation& g) {
  return coset_cycle_types_omp(K, g);
}

std::vector<Rational> nu_graded_zonal_sums(const Partition& lambda,
                                           std::span<const Permutation> H,
                                           std::span<const Permutation> K) {
  return nu_graded_zonal_sums_omp(lambda, H, K);
}

} // namespace adet::kernels
