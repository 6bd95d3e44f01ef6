#pragma once

#include "adet/rational.hpp"

#include <compare>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace adet {

/// Dense univariate polynomial in the formal variable alpha over Q.
///
/// Coefficients are stored in ascending degree. The last stored coefficient
/// is always nonzero; the zero polynomial has no coefficients and degree
/// kZeroDegree.
class PolyQ {
public:
  static constexpr int kZeroDegree = -1;

  PolyQ() = default;
  PolyQ(const Rational& c);  // NOLINT: constants convert implicitly
  PolyQ(long c) : PolyQ(Rational(c)) {}  // NOLINT
  PolyQ(int c) : PolyQ(Rational(c)) {}   // NOLINT
  PolyQ(std::initializer_list<Rational> coeffs);
  explicit PolyQ(std::vector<Rational> coeffs);

  /// alpha^k
  static PolyQ monomial(int k, const Rational& c = 1);
  /// The polynomial alpha.
  static PolyQ alpha() { return monomial(1); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  /// Coefficient of alpha^k (zero beyond the degree).
  Rational coeff(int k) const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const Rational& leading() const { return coeffs_.back(); }

  Rational eval(const Rational& a) const;
  /// Composition p(q(alpha)).
  PolyQ compose(const PolyQ& q) const;
  PolyQ derivative() const;
  PolyQ pow(unsigned k) const;
  /// Scales so the leading coefficient is 1 (zero stays zero).
  PolyQ monic() const;

  PolyQ& operator+=(const PolyQ& o);
  PolyQ& operator-=(const PolyQ& o);
  PolyQ& operator*=(const PolyQ& o);
  PolyQ& operator*=(const Rational& c);
  PolyQ operator-() const;

  friend PolyQ operator+(PolyQ a, const PolyQ& b) { return a += b; }
  friend PolyQ operator-(PolyQ a, const PolyQ& b) { return a -= b; }
  friend PolyQ operator*(const PolyQ& a, const PolyQ& b);
  friend PolyQ operator*(PolyQ a, const Rational& c) { return a *= c; }
  friend PolyQ operator*(const Rational& c, PolyQ a) { return a *= c; }
  friend PolyQ operator*(PolyQ a, long c) { return a *= Rational(c); }
  friend PolyQ operator*(long c, PolyQ a) { return a *= Rational(c); }
  friend bool operator==(const PolyQ& a, const PolyQ& b) { return a.coeffs_ == b.coeffs_; }

private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Quotient and remainder of Euclidean division; throws on a zero divisor.
std::pair<PolyQ, PolyQ> divmod(const PolyQ& a, const PolyQ& b);
/// a / b where b is known to divide a; throws if the remainder is nonzero.
PolyQ div_exact(const PolyQ& a, const PolyQ& b);
/// Monic gcd; gcd(0, 0) = 0.
PolyQ gcd(const PolyQ& a, const PolyQ& b);

inline PolyQ poly_add(const PolyQ& a, const PolyQ& b) { return a + b; }
inline PolyQ poly_mul(const PolyQ& a, const PolyQ& b) { return a * b; }
inline Rational poly_eval(const PolyQ& p, const Rational& a) { return p.eval(a); }

/// "c0 + c1*a + c2*a^2" with zero terms omitted; "0" for the zero polynomial.
std::string to_string(const PolyQ& p);
/// Inverse of to_string. Throws ParseError.
PolyQ parse_poly(std::string_view text);

/// Ascending coefficient strings, the JSON encoding of a polynomial.
std::vector<std::string> to_coeff_strings(const PolyQ& p);
PolyQ from_coeff_strings(const std::vector<std::string>& coeffs);

} // namespace adet
