#include "adet/kernels.hpp"
#include "adet/symmetric.hpp"

namespace adet::kernels {

std::vector<RatMatrix> bucket_sums_serial(const SeminormalRep& rep, const RatMatrix& basis,
                                          const Buckets& buckets) {
  const std::size_t dim = basis.rows(), d = basis.cols();
  std::vector<RatMatrix> out(static_cast<std::size_t>(buckets.count), RatMatrix(dim, d));
  std::vector<Rational> col(dim);
  for (std::size_t e = 0; e < buckets.elements.size(); ++e) {
    auto& acc = out[static_cast<std::size_t>(buckets.bucket[e])];
    for (std::size_t c = 0; c < d; ++c) {
      for (std::size_t r = 0; r < dim; ++r) col[r] = basis(r, c);
      apply_word(rep, buckets.words[e], col);
      for (std::size_t r = 0; r < dim; ++r) acc(r, c) += col[r];
    }
  }
  return out;
}

CycleTypeHistogram coset_cycle_types_serial(std::span<const Permutation> K, const Permutation& g) {
  CycleTypeHistogram hist;
  for (const auto& k : K) ++hist[cycle_type(k * g)];
  return hist;
}

Rational zonal_from_histogram(const Partition& lambda, const CycleTypeHistogram& hist,
                              std::size_t group_order) {
  Integer sum = 0;
  for (const auto& [mu, count] : hist) sum += character(lambda, mu) * Integer(static_cast<unsigned long>(count));
  Rational out(sum, Integer(static_cast<unsigned long>(group_order)));
  out.canonicalize();
  return out;
}

std::vector<Rational> nu_graded_zonal_sums_serial(const Partition& lambda,
                                                  std::span<const Permutation> H,
                                                  std::span<const Permutation> K) {
  std::vector<Rational> coeffs(static_cast<std::size_t>(lambda.size()) + 1);
  for (const auto& h : H)
    coeffs[static_cast<std::size_t>(nu(h))] +=
        zonal_from_histogram(lambda, coset_cycle_types_serial(K, h), K.size());
  return coeffs;
}

} // namespace adet::kernels
