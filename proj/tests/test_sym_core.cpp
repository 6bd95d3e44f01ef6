#include "oracles.hpp"

#include "adet/combinatorics.hpp"
#include "adet/errors.hpp"
#include "adet/symmetric.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace adet;

TEST_SUITE("sym-core") {

TEST_CASE("partitions come out in reverse lexicographic order") {
  const auto p4 = partitions_of(4);
  REQUIRE(p4.size() == 5);
  CHECK(p4[0] == Partition({4}));
  CHECK(p4[1] == Partition({3, 1}));
  CHECK(p4[2] == Partition({2, 2}));
  CHECK(p4[3] == Partition({2, 1, 1}));
  CHECK(p4[4] == Partition({1, 1, 1, 1}));
  const std::vector<std::size_t> counts = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int m = 0; m <= 10; ++m) CHECK(partitions_of(m).size() == counts[static_cast<std::size_t>(m)]);
  const auto two_rows = partitions_of(6, 2);
  CHECK(two_rows.size() == 4);
  CHECK(two_rows.back() == Partition({3, 3}));
  for (std::size_t i = 1; i < p4.size(); ++i) CHECK(p4[i - 1] > p4[i]);
}

TEST_CASE("partition validation and helpers") {
  CHECK_THROWS_AS(Partition({1, 2}), SizeMismatch);
  CHECK_THROWS_AS(Partition({2, -1}), SizeMismatch);
  CHECK(Partition({3, 1, 0, 0}) == Partition({3, 1}));
  CHECK(Partition({4, 2, 1}).conjugate() == Partition({3, 2, 1, 1}));
  CHECK(Partition({3, 1}).padded(4) == std::vector<int>{3, 1, 0, 0});
  CHECK(parse_partition("3,1") == Partition({3, 1}));
  CHECK(to_string(Partition({2, 2, 1})) == "2,2,1");
  CHECK_THROWS_AS(parse_partition("1,3"), ParseError);
  CHECK_THROWS_AS(parse_partition("x"), ParseError);
  // Class sizes n!/z_mu add up to n!.
  for (int n = 1; n <= 7; ++n) {
    Integer total = 0;
    for (const Partition& mu : partitions_of(n)) total += factorial(static_cast<unsigned long>(n)) / mu.centralizer_order();
    CHECK(total == factorial(static_cast<unsigned long>(n)));
  }
}

TEST_CASE("permutations") {
  const Permutation p = parse_permutation("2,3,1");
  CHECK(p(0) == 1);
  CHECK(p(2) == 0);
  CHECK(to_string(p) == "2,3,1");
  CHECK(cycle_type(p) == Partition({3}));
  CHECK(nu(p) == 2);
  CHECK(sign(p) == 1);
  CHECK((p * p.inverse()).is_identity());
  const Permutation t = Permutation::transposition(3, 0, 1);
  // Function composition: (p * t)(0) = p(t(0)) = p(1).
  CHECK((p * t)(0) == 2);
  CHECK(nu(t) == 1);
  CHECK(sign(t) == -1);
  CHECK(Permutation::identity(4).num_cycles() == 4);
  CHECK(Permutation::identity(4).fixed_points() == 4);
  CHECK_THROWS_AS(parse_permutation("1,1,2"), ParseError);
  CHECK_THROWS_AS(Permutation({0, 0}), SizeMismatch);
  CHECK(all_permutations(4).size() == 24);
}

TEST_CASE("adjacent words rebuild the permutation") {
  std::mt19937 gen(3);
  for (int trial = 0; trial < 50; ++trial) {
    const Permutation g = testref::random_permutation(6, gen);
    Permutation prod = Permutation::identity(6);
    // The first letter acts first.
    for (int i : adjacent_word(g)) prod = Permutation::transposition(6, i, i + 1) * prod;
    CHECK(prod == g);
    CHECK(static_cast<int>(adjacent_word(g).size()) <= 15);
  }
}

TEST_CASE("row and column groups of the block tableau") {
  for (auto [n, l] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}}) {
    const auto K = enumerate_K(n, l);
    const auto H = enumerate_H(n, l);
    std::size_t expected_k = 1;
    for (int i = 0; i < n; ++i) expected_k *= factorial(static_cast<unsigned long>(l)).get_ui();
    CHECK(K.size() == expected_k);
    const BlockTableau t(n, l);
    for (const Permutation& k : K)
      for (int x = 0; x < n * l; ++x) CHECK(t.row_of(k(x)) == t.row_of(x));
    for (const Permutation& h : H)
      for (int x = 0; x < n * l; ++x) CHECK(t.col_of(h(x)) == t.col_of(x));
    std::size_t n_fact = factorial(static_cast<unsigned long>(n)).get_ui();
    std::size_t expected_h = 1;
    for (int p = 0; p < l; ++p) expected_h *= n_fact;
    CHECK(H.size() == expected_h);
  }
  CHECK_THROWS_AS(enumerate_K(4, 3), CapExceeded);
  CHECK_THROWS_AS(enumerate_H(3, 4, 11), CapExceeded);
}

TEST_CASE("theta is a group isomorphism onto (S_n)^l") {
  const int n = 3, l = 2;
  const auto H = enumerate_H(n, l);
  std::mt19937 gen(5);
  std::uniform_int_distribution<std::size_t> pick(0, H.size() - 1);
  for (int trial = 0; trial < 100; ++trial) {
    const Permutation& a = H[pick(gen)];
    const Permutation& b = H[pick(gen)];
    const auto ta = theta(a, n, l), tb = theta(b, n, l), tab = theta(a * b, n, l);
    for (int p = 0; p < l; ++p) CHECK(tab[static_cast<std::size_t>(p)] == ta[static_cast<std::size_t>(p)] * tb[static_cast<std::size_t>(p)]);
    CHECK(theta_inverse(ta, n, l) == a);
    int total_nu = 0;
    for (const auto& c : ta) total_nu += nu(c);
    CHECK(total_nu == nu(a));
  }
  CHECK_THROWS_AS(theta(Permutation::transposition(6, 0, 1), n, l), NotInH);
}

TEST_CASE("class functions on H") {
  const int n = 2, l = 3;
  const auto alpha_pow = ClassFunctionH::alpha_power();
  const auto delta = ClassFunctionH::delta();
  for (const Permutation& h : enumerate_H(n, l)) {
    CHECK(alpha_pow(h, n, l) == PolyQ::monomial(nu(h)));
    CHECK(delta(h, n, l) == PolyQ(h.is_identity() ? 1 : 0));
  }
  const HClassKey key = h_class(theta_inverse({parse_permutation("2,1"), Permutation::identity(2), parse_permutation("2,1")}, n, l), n, l);
  CHECK(key == HClassKey{Partition({2}), Partition({1, 1}), Partition({2})});
}

TEST_CASE("characters satisfy both orthogonality relations") {
  for (int n = 1; n <= 6; ++n) {
    const auto parts = partitions_of(n);
    for (const Partition& a : parts)
      for (const Partition& b : parts) {
        Rational row = 0;
        for (const Partition& mu : parts) row += Rational(character(a, mu) * character(b, mu)) / Rational(mu.centralizer_order());
        CHECK(row == (a == b ? 1 : 0));
        Rational col = 0;
        for (const Partition& lam : parts) col += Rational(character(lam, a) * character(lam, b));
        CHECK(col == (a == b ? Rational(a.centralizer_order()) : Rational(0)));
      }
  }
  CHECK(character(Partition({2, 1}), Partition({3})) == -1);
  CHECK(character(Partition({3, 1, 1}), Partition({1, 1, 1, 1, 1})) == 6);
  CHECK(character(Partition({2, 2}), Partition({2, 2})) == 2);
}

TEST_CASE("hook formula and tableau enumeration agree with a brute count") {
  for (int m = 1; m <= 8; ++m)
    for (const Partition& lam : partitions_of(m)) {
      const long brute = testref::count_syt(lam.parts());
      CHECK(dim_f(lam) == brute);
      CHECK(standard_tableaux(lam).size() == static_cast<std::size_t>(brute));
      CHECK(character(lam, Partition(std::vector<int>(static_cast<std::size_t>(m), 1))) == brute);
    }
  const auto syt = standard_tableaux(Partition({2, 1}));
  REQUIRE(syt.size() == 2);
  CHECK(syt[0] == std::vector<int>{0, 0, 1});
  CHECK(syt[1] == std::vector<int>{0, 1, 0});
}

TEST_CASE("Kostka numbers") {
  for (auto [n, l] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}, {2, 4}, {4, 2}, {3, 3}})
    for (const Partition& lam : partitions_of(n * l))
      CHECK(kostka(lam, n, l) == testref::count_ssyt(lam.parts(), n, l));
  CHECK(kostka(Partition({3, 1}), 2, 2) == 1);
  CHECK(kostka(Partition({4, 2}), 3, 2) == 3);
  CHECK(kostka(Partition({1, 1, 1, 1}), 2, 2) == 0);
  CHECK_THROWS_AS(kostka(Partition({3}), 2, 2), SizeMismatch);
}

TEST_CASE("zonal spherical functions") {
  const int n = 2, l = 3;
  const auto K = enumerate_K(n, l);
  for (const Partition& lam : partitions_of(n * l, n)) {
    CHECK(zonal(lam, Permutation::identity(n * l), K) == 1);
    // K-averaging by hand.
    std::mt19937 gen(9);
    const Permutation g = testref::random_permutation(n * l, gen);
    Rational direct = 0;
    for (const Permutation& k : K) direct += Rational(character(lam, cycle_type(k * g)));
    direct /= Rational(static_cast<long>(K.size()));
    CHECK(zonal(lam, g, K) == direct);
    CHECK(zonal(lam, g, n, l) == direct);
    // Bi-invariance.
    for (int t = 0; t < 5; ++t) {
      const Permutation& k1 = K[static_cast<std::size_t>(t * 7 % static_cast<int>(K.size()))];
      const Permutation& k2 = K[static_cast<std::size_t>(t * 13 % static_cast<int>(K.size()))];
      CHECK(zonal(lam, k1 * g * k2, K) == direct);
    }
  }
  CHECK(g_s(3, 0).is_identity());
  CHECK(g_s(3, 2) == Permutation::transposition(6, 0, 3) * Permutation::transposition(6, 1, 4));
}

} // TEST_SUITE
