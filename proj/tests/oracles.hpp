#pragma once

// Small brute-force references used only by the tests. They share no code with
// the library beyond the basic types.

#include "adet/combinatorics.hpp"
#include "adet/matrix.hpp"
#include "adet/rational.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <vector>

namespace testref {

using adet::Rational;
using adet::RatMatrix;

/// Permanent by Ryser's inclusion-exclusion formula.
inline Rational ryser_permanent(const RatMatrix& a) {
  const std::size_t n = a.rows();
  Rational total = 0;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    Rational prod = 1;
    for (std::size_t i = 0; i < n; ++i) {
      Rational row = 0;
      for (std::size_t j = 0; j < n; ++j)
        if (mask & (1u << j)) row += a(i, j);
      prod *= row;
    }
    const int bits = __builtin_popcount(mask);
    if ((static_cast<int>(n) - bits) % 2) total -= prod;
    else total += prod;
  }
  return total;
}

/// Determinant by Gaussian elimination with row swaps.
inline Rational gauss_det(RatMatrix a) {
  const std::size_t n = a.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      a.swap_rows(p, c);
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      const Rational f = a(r, c) / a(c, c);
      for (std::size_t k = c; k < n; ++k) a(r, k) -= f * a(c, k);
    }
  }
  return det;
}

/// sum over sigma of alpha^{nu(sigma)} prod_i a(sigma(i), i), over all n! terms.
inline Rational leibniz_adet(const RatMatrix& a, const Rational& alpha) {
  const int n = static_cast<int>(a.rows());
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  Rational total = 0;
  do {
    const adet::Permutation s(perm);
    Rational term = 1;
    for (int k = 0; k < adet::nu(s); ++k) term *= alpha;
    for (int i = 0; i < n; ++i) term *= a(static_cast<std::size_t>(s(i)), static_cast<std::size_t>(i));
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// Number of standard tableaux, by removing the cell holding the largest entry.
inline long count_syt(std::vector<int> shape) {
  while (!shape.empty() && shape.back() == 0) shape.pop_back();
  if (shape.empty()) return 1;
  long total = 0;
  for (std::size_t i = 0; i < shape.size(); ++i) {
    const bool corner = i + 1 == shape.size() || shape[i + 1] < shape[i];
    if (!corner) continue;
    --shape[i];
    total += count_syt(shape);
    ++shape[i];
  }
  return total;
}

/// Semistandard tableaux of the given shape with content (l, l, ..., l) (n
/// entries), by filling cells row by row.
inline long count_ssyt(const std::vector<int>& shape, int n, int l) {
  std::vector<std::vector<int>> fill;
  for (int len : shape) fill.emplace_back(static_cast<std::size_t>(len), 0);
  std::vector<int> used(static_cast<std::size_t>(n) + 1, 0);
  long count = 0;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t r, std::size_t c) {
    if (r == fill.size()) {
      ++count;
      return;
    }
    if (c == fill[r].size()) {
      rec(r + 1, 0);
      return;
    }
    const int lo = std::max(c > 0 ? fill[r][c - 1] : 1, r > 0 ? fill[r - 1][c] + 1 : 1);
    for (int v = lo; v <= n; ++v) {
      if (used[static_cast<std::size_t>(v)] == l) continue;
      fill[r][c] = v;
      ++used[static_cast<std::size_t>(v)];
      rec(r, c + 1);
      --used[static_cast<std::size_t>(v)];
    }
  };
  rec(0, 0);
  return count;
}

/// Uniform random permutation of {0..m-1}.
inline adet::Permutation random_permutation(int m, std::mt19937& gen) {
  std::vector<int> v(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) v[static_cast<std::size_t>(i)] = i;
  std::shuffle(v.begin(), v.end(), gen);
  return adet::Permutation(v);
}

inline RatMatrix random_matrix(std::size_t n, std::mt19937& gen, int range = 5) {
  std::uniform_int_distribution<int> num(-range, range);
  std::uniform_int_distribution<int> den(1, 4);
  RatMatrix a(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      a(r, c) = Rational(num(gen), den(gen));
      a(r, c).canonicalize();
    }
  return a;
}

} // namespace testref
