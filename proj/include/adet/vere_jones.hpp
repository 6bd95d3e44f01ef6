#pragma once

#include "adet/matrix.hpp"
#include "adet/rational.hpp"

namespace adet {

struct VereJonesResult {
  double lhs = 0;          // det(I - a A)^{-1/a}
  double partial_sum = 0;  // sum_{k <= k_max} (1/k!) sum_I adet(A_I)
  double tail_bound = 0;   // bound on the omitted terms k > k_max
  double spectral_radius = 0;
  bool agrees = false;     // |lhs - partial_sum| <= tol + tail_bound
};

/// Compares both sides of the Vere-Jones expansion of det(I - aA)^{-1/a}.
///
/// The k-th term is exact: index tuples are grouped by multiset, so each
/// alpha-determinant is evaluated once per multiset and weighted by its
/// multinomial count. The tail is bounded by majorizing every eigenvalue
/// factor (1 - a t mu)^{-1/a} with (1 - |a| rho t)^{-1/|a|}, rho the spectral
/// radius of A, and summing the omitted coefficients of
/// (1 - |a| rho t)^{-n/|a|} at t = 1.
///
/// Throws ZeroAlpha for a = 0 and SpectralRadiusViolation when |a| rho >= 1.
VereJonesResult vere_jones_check(const RatMatrix& A, const Rational& a, int k_max, double tol);

} // namespace adet
