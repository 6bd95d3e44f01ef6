#include "oracles.hpp"

#include "adet/errors.hpp"
#include "adet/oracle.hpp"
#include "adet/transition.hpp"

#include <doctest.h>

#include <random>

using namespace adet;

namespace {

Rational eval_at(const MultiPoly& f, const RatMatrix& A, const Rational& alpha) {
  const std::size_t n = A.rows();
  Rational total = 0;
  for (const auto& [e, c] : f.terms()) {
    Rational term = c.eval(alpha);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (int k = 0; k < e[i * n + j]; ++k) term *= A(i, j);
    total += term;
  }
  return total;
}

} // namespace

TEST_SUITE("adet-oracle") {

TEST_CASE("alpha-determinant of a 2x2 matrix") {
  const RatMatrix A(2, 2, {1, 2, 3, 4});
  CHECK(adet_eval(A, -1) == -2);
  CHECK(adet_eval(A, 1) == 10);
  CHECK(adet_eval(A, Rational(1, 2)) == 7);
  CHECK(adet_eval(A, 0) == 4);
  CHECK(adet_eval(RatMatrix(0, 0), 3) == 1);
  CHECK_THROWS_AS(adet_eval(RatMatrix::identity(11), 1), CapExceeded);
  CHECK_THROWS_AS(adet_eval(RatMatrix(2, 3), 1), SizeMismatch);
}

TEST_CASE("alpha-determinant interpolates determinant and permanent") {
  std::mt19937 gen(17);
  for (std::size_t n = 1; n <= 6; ++n)
    for (int trial = 0; trial < 3; ++trial) {
      const RatMatrix A = testref::random_matrix(n, gen);
      CHECK(adet_eval(A, -1) == testref::gauss_det(A));
      CHECK(adet_eval(A, 1) == testref::ryser_permanent(A));
      if (n <= 5) CHECK(adet_eval(A, Rational(-2, 3)) == testref::leibniz_adet(A, Rational(-2, 3)));
      CHECK(adet_eval(RatMatrix::identity(n), Rational(5, 7)) == 1);
    }
}

TEST_CASE("symbolic alpha-determinant matches numeric evaluation") {
  std::mt19937 gen(19);
  for (int n = 1; n <= 4; ++n) {
    const MultiPoly f = adet_symbolic(n);
    const RatMatrix A = testref::random_matrix(static_cast<std::size_t>(n), gen);
    for (const Rational& alpha : {Rational(1), Rational(-1), Rational(2, 5)})
      CHECK(eval_at(f, A, alpha) == adet_eval(A, alpha));
  }
  // D(X; alpha^nu) for l = 1 is the alpha-determinant itself.
  CHECK(D_of(3, 1, ClassFunctionH::alpha_power()) == adet_symbolic(3));
}

TEST_CASE("polarization operators") {
  const int n = 2;
  const MultiPoly x00 = MultiPoly::variable(n, 0, 0);
  const MultiPoly x10 = MultiPoly::variable(n, 1, 0);
  const MultiPoly x11 = MultiPoly::variable(n, 1, 1);
  // E_01 replaces row-1 variables by row-0 variables.
  CHECK(apply_E(0, 1, x10) == x00);
  CHECK(apply_E(0, 1, x00).is_zero());
  CHECK(apply_E(0, 0, x00 * x00) == x00 * x00 * PolyQ(2));
  // Leibniz rule.
  const MultiPoly f = x10 * x11;
  const MultiPoly g = x00 + x11;
  CHECK(apply_E(0, 1, f * g) == apply_E(0, 1, f) * g + f * apply_E(0, 1, g));
  // [E_01, E_10] = E_00 - E_11 on a test polynomial.
  const MultiPoly h = adet_symbolic(2).pow(2);
  const MultiPoly lhs = apply_E(0, 1, apply_E(1, 0, h)) - apply_E(1, 0, apply_E(0, 1, h));
  const MultiPoly rhs = apply_E(0, 0, h) - apply_E(1, 1, h);
  CHECK(lhs == rhs);
  CHECK(f.weight_of(f.terms().begin()->first) == std::vector<int>{0, 2});
}

TEST_CASE("Weyl dimension formula") {
  CHECK(weyl_dimension(Partition({1}), 3) == 3);
  CHECK(weyl_dimension(Partition({2, 1}), 3) == 8);
  CHECK(weyl_dimension(Partition({2}), 2) == 3);
  CHECK(weyl_dimension(Partition({1, 1, 1}), 3) == 1);
  CHECK(weyl_dimension(Partition({1, 1, 1}), 2) == 0);
}

TEST_CASE("cyclic module: dimension equals the weighted sum of multiplicities") {
  for (auto [n, l] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {2, 3}, {3, 1}}) {
    const ModuleBasis basis = cyclic_closure(n, l);
    Integer total = 0;
    for (const Partition& lam : partitions_of(n * l, n))
      total += weyl_dimension(lam, n) * Integer(static_cast<unsigned long>(hwv_multiplicity(basis, lam)));
    CHECK(Integer(static_cast<unsigned long>(basis.dimension())) == total);
    const PolyMatrix coeffs = basis.coefficient_matrix();
    CHECK(coeffs.rows() == basis.dimension());
    CHECK(coeffs.cols() == basis.ambient_monomials().size());
    CHECK(generic_rank(coeffs) == basis.dimension());
  }
  CHECK(cyclic_closure(2, 1).dimension() == 4);
  CHECK(cyclic_closure(3, 1).dimension() == 27);
  CHECK_THROWS_AS(cyclic_closure(4, 2), CapExceeded);
}

TEST_CASE("oracle multiplicities equal transition matrix ranks") {
  for (auto [n, l] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {3, 1}}) {
    const ModuleBasis generic = cyclic_closure(n, l);
    for (const Partition& lam : partitions_of(n * l, n)) {
      const TransitionMatrix t = transition_matrix(n, l, lam);
      CHECK(hwv_multiplicity(generic, lam) == generic_rank(t.entries));
    }
    for (const Rational& a : {Rational(1), Rational(-1), Rational(-1, 2)}) {
      const ModuleBasis at = cyclic_closure(n, l, a);
      for (const Partition& lam : partitions_of(n * l, n))
        CHECK(hwv_multiplicity(at, lam) == rank_at(transition_matrix(n, l, lam).entries, a));
    }
  }
}

TEST_CASE("at alpha = -1 the module is one-dimensional") {
  // det^l spans a single copy of the representation (l^n).
  for (auto [n, l] : std::vector<std::pair<int, int>>{{2, 2}, {3, 1}, {2, 3}}) {
    const ModuleBasis b = cyclic_closure(n, l, Rational(-1));
    CHECK(b.dimension() == 1);
    CHECK(hwv_multiplicity(b, Partition(std::vector<int>(static_cast<std::size_t>(n), l))) == 1);
  }
}

} // TEST_SUITE
