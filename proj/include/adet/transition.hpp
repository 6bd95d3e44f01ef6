#pragma once

#include "adet/matrix.hpp"
#include "adet/seminormal.hpp"
#include "adet/symmetric.hpp"

namespace adet {

/// Matrix of the operator e Phi e on the K-invariants of S^lambda, written in
/// a seminormal invariant basis. Its rank at alpha is the multiplicity of the
/// gl_n irreducible with highest weight lambda in U(gl_n) det^(alpha)(X)^l.
struct TransitionMatrix {
  Partition shape;
  std::size_t d = 0;
  PolyMatrix entries;  // d x d
  PolyQ trace;
  RatMatrix gram;      // B^T D B, for the self-adjointness check
};

/// Throws SizeMismatch when |lambda| != nl or l(lambda) > n,
/// EmptyInvariantSpace when the Kostka number vanishes.
TransitionMatrix transition_matrix(int n, int l, const Partition& lambda,
                                   const ClassFunctionH& phi = ClassFunctionH::alpha_power(),
                                   int cap = kDefaultCap);

/// Same operator expressed in a caller-supplied invariant basis.
TransitionMatrix transition_matrix(int n, int l, const SeminormalRep& rep, const RatMatrix& basis,
                                   const ClassFunctionH& phi = ClassFunctionH::alpha_power(),
                                   int cap = kDefaultCap);

/// sum_h alpha^{nu(h)} omega^lambda(h), computed from zonal spherical values
/// without building any representation.
PolyQ trace_poly(int n, int l, const Partition& lambda, int cap = kDefaultCap);

/// G F == F^T G as polynomial matrices.
bool is_gram_self_adjoint(const TransitionMatrix& t);
/// F(0) == I.
bool is_identity_at_zero(const TransitionMatrix& t);

} // namespace adet
