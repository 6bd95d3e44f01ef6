#include "oracles.hpp"

#include "adet/errors.hpp"
#include "adet/matrix.hpp"
#include "adet/poly.hpp"
#include "adet/rational.hpp"

#include <doctest.h>

#include <random>

using namespace adet;

namespace {
const PolyQ a = PolyQ::alpha();
Rational q(long p, long r) { return Rational(p) / r; }
}

TEST_SUITE("exact-core") {

TEST_CASE("rationals parse to canonical form") {
  CHECK(parse_rational("3/6") == q(1, 2));
  CHECK(to_string(parse_rational("3/6")) == "1/2");
  CHECK(parse_rational("-4/2") == -2);
  CHECK(to_string(parse_rational("-4/2")) == "-2");
  CHECK(parse_rational("+5") == 5);
  CHECK(parse_rational(" -7/14 ") == q(-1, 2));
  CHECK(to_string(parse_rational("0/9")) == "0");
  for (const char* bad : {"", "1/0", "abc", "1/", "/2", "1.5", "2/3/4", "--1"})
    CHECK_THROWS_AS(parse_rational(bad), ParseError);
}

TEST_CASE("binomial and pochhammer accept rational arguments") {
  CHECK(binomial(Rational(5), 2) == 10);
  CHECK(binomial(Rational(5), 7) == 0);
  CHECK(binomial(Rational(-3), 2) == 6);
  CHECK(binomial(q(1, 2), 2) == q(-1, 8));
  CHECK(binomial(Rational(4), -1) == 0);
  CHECK(pochhammer(Rational(3), 0) == 1);
  CHECK(pochhammer(Rational(3), 3) == 60);
  CHECK(pochhammer(Rational(-2), 3) == 0);
  CHECK(factorial(10) == 3628800);
}

TEST_CASE("polynomial arithmetic") {
  const PolyQ one_plus = 1 + a;
  CHECK(one_plus.pow(2) == PolyQ({1, 2, 1}));
  CHECK((one_plus * (1 - a)) == PolyQ({1, 0, -1}));
  CHECK((one_plus - one_plus).is_zero());
  CHECK(PolyQ().degree() == PolyQ::kZeroDegree);
  CHECK(PolyQ(3).degree() == 0);
  CHECK(PolyQ({1, 2, 0}).degree() == 1);
  CHECK(PolyQ({1, 2, 1}).eval(q(-1, 1)) == 0);
  CHECK(PolyQ({0, 0, 1}).compose(1 + a) == PolyQ({1, 2, 1}));
  CHECK(PolyQ({5, 3, 2}).derivative() == PolyQ({3, 4}));
  CHECK(PolyQ({2, 4}).monic() == PolyQ({q(1, 2), 1}));
}

TEST_CASE("division, exact division and gcd") {
  const PolyQ f = (1 + a) * (2 - a) * (3 + 2 * a);
  auto [quot, rem] = divmod(f, 1 + a);
  CHECK(rem.is_zero());
  CHECK(quot == (2 - a) * (3 + 2 * a));
  CHECK(div_exact(f, 2 - a) == (1 + a) * (3 + 2 * a));
  CHECK_THROWS(div_exact(f, 5 + a));
  CHECK_THROWS(divmod(f, PolyQ()));
  CHECK(gcd(f, (1 + a) * (7 + a)) == 1 + a);
  CHECK(gcd(f, PolyQ(3)) == PolyQ(1));
  CHECK(gcd(PolyQ(), 2 * f) == f.monic());
}

TEST_CASE("polynomial text round trip") {
  const PolyQ p({1, 0, q(-3, 4), 2});
  CHECK(to_string(p) == "1 + -3/4*a^2 + 2*a^3");
  CHECK(parse_poly(to_string(p)) == p);
  CHECK(to_string(PolyQ()) == "0");
  CHECK(parse_poly("0").is_zero());
  CHECK(to_string(PolyQ({1, 0, -1})) == "1 + -1*a^2");
  CHECK(to_coeff_strings(p) == std::vector<std::string>{"1", "0", "-3/4", "2"});
  CHECK(from_coeff_strings(to_coeff_strings(p)) == p);
  CHECK_THROWS_AS(parse_poly("1 + x"), ParseError);
}

TEST_CASE("rational matrices") {
  RatMatrix m(3, 3, {1, 2, 3, 4, 5, 6, 7, 8, 9});
  CHECK(rank(m) == 2);
  const RatMatrix ns = nullspace(m);
  CHECK(ns.cols() == 1);
  CHECK(m * ns == RatMatrix(3, 1));

  RatMatrix inv(2, 2, {2, 1, 1, 1});
  const RatMatrix x = solve_exact(inv, RatMatrix::identity(2));
  CHECK(inv * x == RatMatrix::identity(2));
  CHECK_THROWS_AS(solve_exact(m, RatMatrix::identity(3)), SingularMatrix);
  CHECK_THROWS_AS(solve_exact(inv, RatMatrix::identity(3)), SizeMismatch);

  RatMatrix r = m;
  const auto pivots = rref(r);
  CHECK(pivots == std::vector<std::size_t>{0, 1});
  CHECK(r(0, 0) == 1);
  CHECK(r(1, 1) == 1);
  CHECK(r(0, 2) == -1);
}

TEST_CASE("generic rank over Q(alpha)") {
  PolyMatrix rank_one(2, 2, {1, a, a, a * a});
  CHECK(generic_rank(rank_one) == 1);
  PolyMatrix full(2, 2, {a, 1, 1, a});
  CHECK(generic_rank(full) == 2);
  CHECK(rank_at(full, 1) == 1);
  CHECK(rank_at(full, -1) == 1);
  CHECK(rank_at(full, 2) == 2);
  // A zero first column exercises the column skip.
  PolyMatrix skip(3, 3, {0, 1, a, 0, a, a * a, 0, 1 - a, 3});
  CHECK(generic_rank(skip) == 2);
  CHECK(generic_rank(PolyMatrix(2, 3)) == 0);
  CHECK(trace(full) == 2 * a);
  CHECK(evaluate(full, 3) == RatMatrix(2, 2, {3, 1, 1, 3}));
}

TEST_CASE("generic rank matches the maximum of ranks at sample points") {
  std::mt19937 gen(7);
  std::uniform_int_distribution<int> coef(-2, 2);
  std::uniform_int_distribution<int> dim(1, 4);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t rows = static_cast<std::size_t>(dim(gen));
    const std::size_t cols = static_cast<std::size_t>(dim(gen));
    // Low-rank products make rank deficiency common.
    const std::size_t inner = static_cast<std::size_t>(dim(gen));
    PolyMatrix u(rows, inner), v(inner, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t k = 0; k < inner; ++k) u(i, k) = PolyQ({coef(gen), coef(gen)});
    for (std::size_t k = 0; k < inner; ++k)
      for (std::size_t j = 0; j < cols; ++j) v(k, j) = PolyQ({coef(gen), coef(gen)});
    const PolyMatrix m = u * v;
    std::size_t best = 0;
    for (int p = -12; p <= 12; ++p) best = std::max(best, rank_at(m, q(p, 5)));
    CHECK(generic_rank(m) == best);
  }
}

TEST_CASE("rank of constant matrices agrees with an elimination determinant") {
  std::mt19937 gen(11);
  for (int trial = 0; trial < 10; ++trial) {
    const RatMatrix m = testref::random_matrix(4, gen);
    CHECK((testref::gauss_det(m) != 0) == (rank(m) == 4));
    CHECK(generic_rank(to_poly(m)) == rank(m));
    RatMatrix dep = m;
    for (std::size_t c = 0; c < 4; ++c) dep(3, c) = m(0, c) - 2 * m(1, c);
    CHECK(testref::gauss_det(dep) == 0);
    CHECK(generic_rank(to_poly(dep)) == rank(dep));
    CHECK(rank(dep) < 4);
  }
}

} // TEST_SUITE
