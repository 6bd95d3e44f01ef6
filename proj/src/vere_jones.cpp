#include "adet/vere_jones.hpp"

#include "adet/errors.hpp"
#include "adet/oracle.hpp"

#include <Eigen/Dense>

#include <cmath>

namespace adet {

namespace {

// Sum over index tuples (i_1..i_k) of adet(A[I, I]). Tuples are grouped by
// multiset since adet is invariant under simultaneous row/column permutation.
Rational index_tuple_sum(const RatMatrix& A, const Rational& a, int k) {
  const int m = static_cast<int>(A.rows());
  Rational total = 0;
  std::vector<std::size_t> idx;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (static_cast<int>(idx.size()) == k) {
      const auto uk = static_cast<std::size_t>(k);
      RatMatrix sub(uk, uk);
      for (std::size_t r = 0; r < uk; ++r)
        for (std::size_t c = 0; c < uk; ++c) sub(r, c) = A(idx[r], idx[c]);
      Integer count = factorial(uk);
      for (std::size_t i = 0, j = 0; i < idx.size(); i = j) {
        for (j = i; j < idx.size() && idx[j] == idx[i]; ++j) {}
        count /= factorial(j - i);
      }
      total += Rational(count) * adet_eval(sub, a, k);
      return;
    }
    for (std::size_t i = start; i < static_cast<std::size_t>(m); ++i) {
      idx.push_back(i);
      self(self, i);
      idx.pop_back();
    }
  };
  rec(rec, 0);
  return total;
}

} // namespace

VereJonesResult vere_jones_check(const RatMatrix& A, const Rational& a, int k_max, double tol) {
  if (a == 0) throw ZeroAlpha("vere_jones_check: alpha must be nonzero");
  if (A.rows() != A.cols()) throw SizeMismatch("vere_jones_check: matrix is not square");
  const auto m = static_cast<Eigen::Index>(A.rows());

  Eigen::MatrixXd dense(m, m);
  for (Eigen::Index r = 0; r < m; ++r)
    for (Eigen::Index c = 0; c < m; ++c)
      dense(r, c) = A(static_cast<std::size_t>(r), static_cast<std::size_t>(c)).get_d();
  const double ad = a.get_d();

  VereJonesResult out;
  out.spectral_radius = m == 0 ? 0.0 : dense.eigenvalues().cwiseAbs().maxCoeff();
  const double x = std::abs(ad) * out.spectral_radius;
  if (x >= 1.0)
    throw SpectralRadiusViolation("vere_jones_check: |alpha| * spectral radius = " +
                                  std::to_string(x) + " >= 1");

  const Eigen::MatrixXd shifted = Eigen::MatrixXd::Identity(m, m) - ad * dense;
  out.lhs = std::pow(shifted.determinant(), -1.0 / ad);

  Rational partial = 0;
  for (int k = 0; k <= k_max; ++k)
    partial += index_tuple_sum(A, a, k) / Rational(factorial(static_cast<unsigned long>(k)));
  out.partial_sum = partial.get_d();

  // Omitted coefficients of (1 - x t)^{-beta} at t = 1, beta = m / |alpha|.
  const double beta = static_cast<double>(m) / std::abs(ad);
  double coeff = 1.0, head = 0.0;
  for (int k = 0; k <= k_max; ++k) {
    head += coeff;
    coeff *= (beta + k) * x / (k + 1);
  }
  out.tail_bound = std::max(0.0, std::pow(1.0 - x, -beta) - head);
  out.agrees = std::abs(out.lhs - out.partial_sum) <= tol + out.tail_bound;
  return out;
}

} // namespace adet
