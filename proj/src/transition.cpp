#include "adet/transition.hpp"

#include "adet/errors.hpp"
#include "adet/kernels.hpp"

#include <map>

namespace adet {

namespace {

void check_shape(int n, int l, const Partition& lambda) {
  if (n < 1 || l < 1) throw SizeMismatch("need n, l >= 1");
  if (lambda.size() != n * l)
    throw SizeMismatch("|lambda| = " + std::to_string(lambda.size()) + " but n*l = " +
                       std::to_string(n * l));
  if (lambda.length() > n)
    throw SizeMismatch("lambda = (" + to_string(lambda) + ") has more than n = " +
                       std::to_string(n) + " parts");
}

struct ClassBuckets {
  kernels::Buckets buckets;
  std::vector<HClassKey> keys;
};

ClassBuckets bucket_H_by_class(int n, int l, int cap) {
  ClassBuckets out;
  std::map<HClassKey, int> index;
  auto H = enumerate_H(n, l, cap);
  out.buckets.words.reserve(H.size());
  out.buckets.bucket.reserve(H.size());
  for (const auto& h : H) {
    auto key = h_class(h, n, l);
    auto [it, inserted] = index.try_emplace(std::move(key), static_cast<int>(index.size()));
    out.buckets.bucket.push_back(it->second);
    out.buckets.words.push_back(adjacent_word(h));
  }
  out.buckets.count = static_cast<int>(index.size());
  out.keys.resize(index.size());
  for (const auto& [key, i] : index) out.keys[static_cast<std::size_t>(i)] = key;
  out.buckets.elements = std::move(H);
  return out;
}

} // namespace

TransitionMatrix transition_matrix(int n, int l, const Partition& lambda, const ClassFunctionH& phi,
                                   int cap) {
  check_shape(n, l, lambda);
  const auto rep = build_rep(lambda, cap);
  const auto basis = invariant_basis(rep, n, l);
  if (basis.d() == 0)
    throw EmptyInvariantSpace("no K-invariant vectors in S^(" + to_string(lambda) + ")");
  return transition_matrix(n, l, rep, basis.columns, phi, cap);
}

TransitionMatrix transition_matrix(int n, int l, const SeminormalRep& rep, const RatMatrix& basis,
                                   const ClassFunctionH& phi, int cap) {
  check_shape(n, l, rep.shape);
  if (basis.cols() == 0) throw EmptyInvariantSpace("empty invariant basis");
  if (basis.rows() != rep.dim()) throw SizeMismatch("invariant basis has the wrong row count");

  const auto classes = bucket_H_by_class(n, l, cap);
  const auto sums = kernels::bucket_sums(rep, basis, classes.buckets);

  // Coordinates of the D-orthogonal projection onto span(B): (B^T D B)^{-1} B^T D.
  TransitionMatrix t;
  t.shape = rep.shape;
  t.d = basis.cols();
  t.gram = restricted_gram(rep, basis);
  RatMatrix db_t = basis.transpose();
  for (std::size_t r = 0; r < db_t.rows(); ++r)
    for (std::size_t c = 0; c < db_t.cols(); ++c) db_t(r, c) *= rep.gram[c];
  const RatMatrix projector = solve_exact(t.gram, std::move(db_t));

  t.entries = PolyMatrix(t.d, t.d);
  for (std::size_t b = 0; b < sums.size(); ++b) {
    const PolyQ weight = phi(classes.keys[b]);
    if (weight.is_zero()) continue;
    const RatMatrix block = projector * sums[b];
    for (std::size_t i = 0; i < t.d; ++i)
      for (std::size_t j = 0; j < t.d; ++j)
        if (block(i, j) != 0) t.entries(i, j) += weight * block(i, j);
  }
  t.trace = trace(t.entries);
  return t;
}

PolyQ trace_poly(int n, int l, const Partition& lambda, int cap) {
  check_shape(n, l, lambda);
  const auto H = enumerate_H(n, l, cap);
  const auto K = enumerate_K(n, l, cap);
  return PolyQ(kernels::nu_graded_zonal_sums(lambda, H, K));
}

bool is_gram_self_adjoint(const TransitionMatrix& t) {
  const PolyMatrix g = to_poly(t.gram);
  return g * t.entries == t.entries.transpose() * g;
}

bool is_identity_at_zero(const TransitionMatrix& t) {
  return evaluate(t.entries, 0) == RatMatrix::identity(t.d);
}

} // namespace adet
