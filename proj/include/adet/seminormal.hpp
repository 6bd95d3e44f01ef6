#pragma once

#include "adet/combinatorics.hpp"
#include "adet/matrix.hpp"
#include "adet/symmetric.hpp"

#include <span>
#include <vector>

namespace adet {

/// Action of one adjacent transposition s_i on the seminormal basis.
///
/// Basis vectors are either fixed up to sign (i and i+1 share a row or a
/// column) or come in pairs {T, T'} with T' = s_i T. On a pair, with axial
/// distance r > 0 measured from T,
///   s_i e_T  = (1/r) e_T + e_T'
///   s_i e_T' = (1 - 1/r^2) e_T - (1/r) e_T'.
struct GeneratorAction {
  struct Pair {
    std::size_t first;   // T, the tableau with positive axial distance
    std::size_t second;  // T'
    Rational inv_r;      // 1/r
  };
  std::vector<std::size_t> negated;  // tableaux with s_i e_T = -e_T
  std::vector<Pair> pairs;
};

/// Irreducible S_m representation in Young's seminormal form. Column vectors,
/// left action: rep_of(a * b) = rep_of(a) rep_of(b).
struct SeminormalRep {
  Partition shape;
  std::vector<std::vector<int>> syt;     // row index of each entry
  std::vector<GeneratorAction> gens;     // one per s_0 .. s_{m-2}
  std::vector<Rational> gram;            // invariant inner product, diagonal

  std::size_t dim() const { return syt.size(); }
  int degree() const { return shape.size(); }
  /// Dense matrix of s_i.
  RatMatrix generator_matrix(int i) const;
};

SeminormalRep build_rep(const Partition& lambda, int cap = kDefaultCap);

/// In-place v <- rho(s_i) v.
void apply_generator(const SeminormalRep& rep, int i, std::span<Rational> v);
/// In-place v <- rho(g) v for a word produced by adjacent_word(g).
void apply_word(const SeminormalRep& rep, std::span<const int> word, std::span<Rational> v);

RatMatrix rep_of(const SeminormalRep& rep, const Permutation& g);

/// Columns form a basis of the K-invariant subspace (S^lambda)^K.
struct InvariantBasis {
  Partition shape;
  RatMatrix columns;  // dim x d
  std::size_t d() const { return columns.cols(); }
};

/// K-invariants as the common +1 eigenspace of the row-adjacent generators of
/// K. Each constraint ties at most two coordinates, so the space is solved by
/// propagating ratios over connected components.
InvariantBasis invariant_basis(const SeminormalRep& rep, int n, int l);

/// Reference construction: dense null space of the stacked (rho(s_j) - I).
InvariantBasis invariant_basis_dense(const SeminormalRep& rep, int n, int l);

/// Restricted Gram matrix B^T D B.
RatMatrix restricted_gram(const SeminormalRep& rep, const RatMatrix& basis);

} // namespace adet
