#include "adet/formulas.hpp"

#include "adet/errors.hpp"

namespace adet {

PolyQ content_poly(const Partition& lambda) {
  PolyQ out(1);
  for (int i = 0; i < lambda.length(); ++i)
    for (int j = 0; j < lambda.part(i); ++j) out *= PolyQ{1, j - i};
  return out;
}

namespace {

template <typename X>
X hyp_sum(const std::vector<long>& upper, const std::vector<long>& lower, long N, const X& x) {
  X total = X(0);
  X power = X(1);
  for (long j = 0; j <= N; ++j) {
    Rational num = 1;
    for (long a : upper) num *= pochhammer(a, j);
    if (num == 0) break;
    Rational den = pochhammer(-N, j) * Rational(factorial(static_cast<unsigned long>(j)));
    for (long b : lower) den *= pochhammer(b, j);
    if (den == 0)
      throw DivisionByZeroPochhammer("hypergeometric denominator vanishes at j = " + std::to_string(j));
    X term = power;
    term *= Rational(num / den);
    total += term;
    power *= x;
  }
  return total;
}

} // namespace

PolyQ hyp_poly(const std::vector<long>& upper, const std::vector<long>& lower, long N,
               const PolyQ& x) {
  return hyp_sum<PolyQ>(upper, lower, N, x);
}

Rational hyp_poly(const std::vector<long>& upper, const std::vector<long>& lower, long N,
                  const Rational& x) {
  return hyp_sum<Rational>(upper, lower, N, x);
}

Rational hahn_Q(const HahnParams& q, long x) {
  if (x < 0 || x > q.N) throw SizeMismatch("hahn_Q: need 0 <= x <= N");
  Rational total = 0;
  for (long j = 0; j <= std::min(q.p, q.N); ++j) {
    const Rational den = binomial(-q.a - 1, j) * binomial(q.N, j);
    if (den == 0) throw DivisionByZeroPochhammer("hahn_Q: vanishing denominator");
    Rational term = binomial(q.p, j) * binomial(-q.p - q.a - q.b - 1, j) * binomial(x, j) / den;
    if (j % 2) total -= term;
    else total += term;
  }
  return total;
}

Rational hahn_Q_hypergeometric(const HahnParams& q, long x) {
  return hyp_poly({-q.p, q.p + q.a + q.b + 1, -x}, {q.a + 1}, q.N, Rational(1));
}

HahnParams zonal_hahn_params(long l, long p) { return {p, -l - 1, -l - 1, l}; }

PolyQ G_poly(long l, long p) {
  std::vector<Rational> c(static_cast<std::size_t>(p) + 1);
  for (long j = 0; j <= p; ++j) {
    Rational v = binomial(p, j) * binomial(l - p + j, j) / binomial(l, j);
    c[static_cast<std::size_t>(j)] = j % 2 ? Rational(-v) : v;
  }
  return PolyQ(std::move(c));
}

PolyQ n2_transition(long l, long p) {
  if (p < 0 || p > l) throw SizeMismatch("n2_transition: need 0 <= p <= l");
  return PolyQ{1, 1}.pow(static_cast<unsigned>(l - p)) * G_poly(l, p);
}

PolyQ n2_transition_hahn_sum(long l, long p) {
  if (p < 0 || p > l) throw SizeMismatch("n2_transition_hahn_sum: need 0 <= p <= l");
  const auto params = zonal_hahn_params(l, p);
  std::vector<Rational> c(static_cast<std::size_t>(l) + 1);
  for (long s = 0; s <= l; ++s) c[static_cast<std::size_t>(s)] = binomial(l, s) * hahn_Q(params, s);
  return PolyQ(std::move(c));
}

bool gkp_identity_check(long l, long p, long r) {
  Rational lhs = 0;
  for (long i = 0; i <= r; ++i) lhs += binomial(l - i, l - r) * binomial(l - p + i, l - p);
  return lhs == binomial(2 * l - p + 1, r);
}

std::map<Partition, PolyQ> frobenius_specialization(int n, int cap) {
  check_cap(n, cap, "frobenius_specialization");
  std::map<Partition, PolyQ> out;
  const Integer nfact = factorial(static_cast<unsigned long>(n));
  for (const auto& lambda : partitions_of(n)) {
    Rational w(dim_f(lambda), nfact);
    w.canonicalize();
    out.emplace(lambda, content_poly(lambda) * w);
  }
  return out;
}

namespace {

PolyQ hook_trace_with_middle(long n, long l, long middle_sign) {
  PolyQ out = PolyQ(n - 1) * PolyQ{1, -1};
  out *= PolyQ{1, middle_sign * (n - 1)}.pow(static_cast<unsigned>(l - 1));
  for (long i = 1; i <= n - 2; ++i) out *= PolyQ{1, i}.pow(static_cast<unsigned>(l));
  return out;
}

} // namespace

PolyQ hook_trace_closed_form(long n, long l) { return hook_trace_with_middle(n, l, +1); }

PolyQ hook_trace_minus_variant(long n, long l) { return hook_trace_with_middle(n, l, -1); }

PolyQ jacobi_poly(long deg, long a, long b, const PolyQ& x) {
  const PolyQ down = (x - PolyQ(1)) * Rational(1, 2);
  const PolyQ up = (x + PolyQ(1)) * Rational(1, 2);
  PolyQ out;
  for (long k = 0; k <= deg; ++k) {
    const Rational c = binomial(deg + a, deg - k) * binomial(deg + b, k);
    if (c == 0) continue;
    out += down.pow(static_cast<unsigned>(k)) * up.pow(static_cast<unsigned>(deg - k)) * c;
  }
  return out;
}

bool jacobi_relation_check(long l, long s) {
  if (s < 0 || s > l) throw SizeMismatch("jacobi_relation_check: need 0 <= s <= l");
  const PolyQ x = PolyQ{1, 2};
  const Rational norm = binomial(s - l - 1, s);
  const PolyQ rhs = jacobi_poly(s, -l - 1, 2 * l - 2 * s + 1, x) * Rational(1 / norm);
  return G_poly(l, s) == rhs;
}

} // namespace adet
