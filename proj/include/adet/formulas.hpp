#pragma once

#include "adet/combinatorics.hpp"
#include "adet/poly.hpp"
#include "adet/rational.hpp"
#include "adet/symmetric.hpp"

#include <map>
#include <vector>

namespace adet {

/// prod over cells (i, j) of (1 + (j - i) alpha).
PolyQ content_poly(const Partition& lambda);

/// Terminating hypergeometric sum
///   sum_{j=0}^{N} prod (a_i)_j / (prod (b_i)_j (-N)_j) x^j / j!.
/// Throws DivisionByZeroPochhammer if a lower Pochhammer symbol vanishes.
PolyQ hyp_poly(const std::vector<long>& upper, const std::vector<long>& lower, long N,
               const PolyQ& x);
Rational hyp_poly(const std::vector<long>& upper, const std::vector<long>& lower, long N,
                  const Rational& x);

struct HahnParams {
  long p = 0;  // degree
  long a = 0;
  long b = 0;
  long N = 0;
};

/// Hahn polynomial Q_p(x; a, b, N) as the explicit binomial sum
///   sum_j (-1)^j C(p,j) C(-p-a-b-1,j) / (C(-a-1,j) C(N,j)) C(x,j).
Rational hahn_Q(const HahnParams& params, long x);
/// Same value through hyp_poly (the 3F2 form).
Rational hahn_Q_hypergeometric(const HahnParams& params, long x);
/// Parameters (-l-1, -l-1, l) used for the zonal values of (S_2l, S_l x S_l).
HahnParams zonal_hahn_params(long l, long p);

/// G_p^l(alpha) = sum_j (-1)^j C(p,j) C(l-p+j,j) / C(l,j) alpha^j.
PolyQ G_poly(long l, long p);

/// (1 + alpha)^{l-p} G_p^l(alpha).
PolyQ n2_transition(long l, long p);
/// sum_s C(l,s) Q_p(s; -l-1, -l-1, l) alpha^s.
PolyQ n2_transition_hahn_sum(long l, long p);

/// sum_i C(l-i, l-r) C(l-p+i, l-p) == C(2l-p+1, r).
bool gkp_identity_check(long l, long p, long r);

/// lambda -> (f^lambda / n!) f_lambda(alpha), over all lambda |- n.
std::map<Partition, PolyQ> frobenius_specialization(int n, int cap = kDefaultCap);

/// Trace of the (nl-1, 1) transition matrix in closed form:
///   (n-1)(1-alpha)(1+(n-1)alpha)^{l-1} prod_{i=1}^{n-2} (1+i alpha)^l.
PolyQ hook_trace_closed_form(long n, long l);
/// The same product with (1-(n-1)alpha)^{l-1} in the middle, kept only to
/// print the two side by side.
PolyQ hook_trace_minus_variant(long n, long l);

/// Jacobi polynomial P_deg^{(a,b)}(x) from the finite sum
///   sum_k C(deg+a, deg-k) C(deg+b, k) ((x-1)/2)^k ((x+1)/2)^{deg-k}.
PolyQ jacobi_poly(long deg, long a, long b, const PolyQ& x);

/// G_s^l(alpha) == C(s-l-1, s)^{-1} P_s^{(-l-1, 2l-2s+1)}(1 + 2 alpha).
bool jacobi_relation_check(long l, long s);

} // namespace adet
