#pragma once

#include "adet/combinatorics.hpp"
#include "adet/poly.hpp"
#include "adet/rational.hpp"

#include <functional>
#include <string>
#include <vector>

namespace adet {

/// Default cap on n*l (the degree of the symmetric group being enumerated).
inline constexpr int kDefaultCap = 10;

/// Throws CapExceeded when m > cap.
void check_cap(int m, int cap, const std::string& what);

/// The rectangular standard tableau of shape (l^n) whose (i, j) entry is
/// (i-1)l + j. Points are 0-based internally: point x sits in row x / l and
/// column x % l.
struct BlockTableau {
  int n = 1;
  int l = 1;

  BlockTableau(int n_, int l_);
  int size() const { return n * l; }
  int row_of(int x) const { return x / l; }
  int col_of(int x) const { return x % l; }
};

/// Row group K: permutations preserving every row of the block tableau.
std::vector<Permutation> enumerate_K(int n, int l, int cap = kDefaultCap);
/// Column group H: permutations with g(x) = x mod l.
std::vector<Permutation> enumerate_H(int n, int l, int cap = kDefaultCap);

/// Group isomorphism H -> (S_n)^l; component p acts on the rows of column p.
/// Throws NotInH.
std::vector<Permutation> theta(const Permutation& h, int n, int l);
Permutation theta_inverse(const std::vector<Permutation>& components, int n, int l);

/// Conjugacy class of H, as the l-tuple of cycle types of the theta components.
using HClassKey = std::vector<Partition>;
HClassKey h_class(const Permutation& h, int n, int l);

/// Class function on H with polynomial values. Values are attached to
/// conjugacy classes, so constancy on classes holds by construction.
class ClassFunctionH {
public:
  using Fn = std::function<PolyQ(const HClassKey&)>;
  ClassFunctionH(std::string name, Fn fn) : name_(std::move(name)), fn_(std::move(fn)) {}

  /// h -> alpha^{nu(h)}
  static ClassFunctionH alpha_power();
  /// Indicator of the identity.
  static ClassFunctionH delta();

  PolyQ operator()(const HClassKey& c) const { return fn_(c); }
  PolyQ operator()(const Permutation& h, int n, int l) const { return fn_(h_class(h, n, l)); }
  const std::string& name() const { return name_; }

private:
  std::string name_;
  Fn fn_;
};

/// Irreducible character chi^lambda on the class mu (Murnaghan-Nakayama).
/// Thread-safe memoization.
Integer character(const Partition& lambda, const Partition& mu);

/// Number of standard Young tableaux (hook length formula).
Integer dim_f(const Partition& lambda);

/// Kostka number K_{lambda, (l^n)}.
Integer kostka(const Partition& lambda, int n, int l);

/// Standard Young tableaux of shape lambda. Each tableau is stored as the row
/// index of every entry 0..m-1; the list is sorted lexicographically.
std::vector<std::vector<int>> standard_tableaux(const Partition& lambda);

/// Zonal spherical function (1/|K|) sum_k chi^lambda(k g).
Rational zonal(const Partition& lambda, const Permutation& g, int n, int l, int cap = kDefaultCap);
/// Same, reusing an already enumerated K.
Rational zonal(const Partition& lambda, const Permutation& g, const std::vector<Permutation>& K);

/// g_s = (1, l+1)(2, l+2)...(s, l+s) in S_{2l}.
Permutation g_s(int l, int s);

} // namespace adet
