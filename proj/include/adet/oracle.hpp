#pragma once

#include "adet/combinatorics.hpp"
#include "adet/matrix.hpp"
#include "adet/poly.hpp"
#include "adet/symmetric.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace adet {

/// Exponent vector over the n^2 variables x_{ij}, stored row-major
/// (x_11, x_12, ..., x_nn). Lexicographic comparison fixes the monomial order.
using Exponent = std::vector<std::uint8_t>;

/// Sparse polynomial in the x_{ij} with coefficients in Q[alpha].
class MultiPoly {
public:
  using Terms = std::map<Exponent, PolyQ>;

  MultiPoly() = default;
  explicit MultiPoly(int n) : n_(n) {}

  /// The single variable x_{ij} (0-based).
  static MultiPoly variable(int n, int i, int j);
  static MultiPoly constant(int n, const PolyQ& c);

  int n() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  PolyQ coeff(const Exponent& e) const;
  void add_term(const Exponent& e, const PolyQ& c);

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const PolyQ& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const PolyQ& c) { return a *= c; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) = default;

  MultiPoly pow(unsigned k) const;
  /// alpha -> a in every coefficient.
  MultiPoly specialize(const Rational& a) const;
  /// Degree in the variables of row i, the same for every term of a weight vector.
  std::vector<int> weight_of(const Exponent& e) const;

private:
  int n_ = 0;
  Terms terms_;
};

/// det^(alpha)(A) at alpha = a. Throws CapExceeded when the size exceeds cap.
Rational adet_eval(const RatMatrix& A, const Rational& a, int cap = kDefaultCap);

/// det^(alpha)(X) as a polynomial in the x_{ij}.
MultiPoly adet_symbolic(int n, int cap = kDefaultCap);

/// D(X; phi) = sum_h phi(h) prod_q prod_p x_{theta(h)_p(q), q}.
MultiPoly D_of(int n, int l, const ClassFunctionH& phi, int cap = kDefaultCap);

/// Polarization operator E_ij f = sum_s x_is d f / d x_js (0-based i, j).
MultiPoly apply_E(int i, int j, const MultiPoly& f);

/// Oracle size limits (on n*l) for the brute-force module construction.
inline constexpr int kOracleGenericCap = 6;
inline constexpr int kOracleSpecializedCap = 8;

/// Row-reduced basis of U(gl_n) det^(alpha)(X)^l, stored per weight space.
struct ModuleBasis {
  int n = 0;
  int l = 0;
  std::optional<Rational> alpha;  // set for a closure at a fixed alpha
  std::map<std::vector<int>, std::vector<MultiPoly>> by_weight;

  std::size_t dimension() const;
  /// Basis polynomials in weight order.
  std::vector<MultiPoly> generators() const;
  /// Ambient monomials: column degree l in every column, lexicographic.
  std::vector<Exponent> ambient_monomials() const;
  /// Rows = generators(), columns = ambient_monomials().
  PolyMatrix coefficient_matrix() const;
};

/// Closure of det^(alpha)(X)^l under every E_ij, reduced over Q(alpha), or over
/// Q at a fixed alpha when given. Throws CapExceeded past the oracle caps.
ModuleBasis cyclic_closure(int n, int l, std::optional<Rational> alpha = std::nullopt,
                           int cap = -1);

/// Number of highest weight vectors of weight lambda in the module: the
/// multiplicity of the irreducible with highest weight lambda.
std::size_t hwv_multiplicity(const ModuleBasis& basis, const Partition& lambda);

/// Weyl dimension formula for the gl_n irreducible with highest weight lambda
/// (zero when lambda has more than n parts).
Integer weyl_dimension(const Partition& lambda, int n);

} // namespace adet
