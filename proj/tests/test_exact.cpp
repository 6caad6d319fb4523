#include "kount/exact.hpp"
#include "kount/constructions.hpp"
#include "kount/matrices.hpp"

#include "support.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace kount;

TEST_CASE("exact determinants", "[exact]") {
  SECTION("empty matrix has determinant 1") {
    REQUIRE(det_exact(IntMatrix(0)) == 1);
  }
  SECTION("[[2,1],[1,1]] -> 1") {
    REQUIRE(det_exact(IntMatrix(2, {Int(2), Int(1), Int(1), Int(1)})) == 1);
  }
  SECTION("star-3 counting matrix is unimodular") {
    REQUIRE(det_exact(counting_matrix(star_complex(3))) == 1);
  }
  SECTION("70-set complex: det K = 1, det L = -1") {
    const auto g = SimplicialComplex::closure(
        {Simplex{1, 2, 3, 4, 5}, Simplex{5, 6, 7, 8, 9}, Simplex{1, 2, 8, 9}});
    REQUIRE(det_exact(counting_matrix(g)) == 1);
    REQUIRE(det_exact(connection_matrix(g)) == -1);
  }
  SECTION("singular and permuted matrices need row swaps") {
    REQUIRE(det_exact(IntMatrix(2, {Int(0), Int(1), Int(1), Int(0)})) == -1);
    REQUIRE(det_exact(IntMatrix(2, {Int(1), Int(2), Int(2), Int(4)})) == 0);
    REQUIRE(det_exact(IntMatrix(3, {Int(0), Int(0), Int(1),  //
                                    Int(0), Int(1), Int(0),  //
                                    Int(1), Int(0), Int(0)})) == -1);
  }
  SECTION("agrees with cofactor expansion on random small matrices") {
    Rng rng(99);
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t n = 1 + rng.uniform(5);
      IntMatrix m(n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = Int(rng.uniform_int(-9, 9));
      REQUIRE(det_exact(m) == test::naive_det(m));
    }
  }
}

TEST_CASE("exact inverse", "[exact]") {
  SECTION("identity cases") {
    REQUIRE(inverse_exact(IntMatrix(1, {Int(1)})) == RatMatrix(1, {Rat(1)}));
  }
  SECTION("star-3: exact inverse equals the Green-Star formula matrix") {
    const auto k = counting_matrix(star_complex(3));
    const auto formula = green_star_inverse(star_complex(3));
    const auto inv = inverse_exact(k);
    for (std::size_t i = 0; i < k.order(); ++i)
      for (std::size_t j = 0; j < k.order(); ++j) REQUIRE(inv(i, j) == Rat(formula(i, j)));
  }
  SECTION("singular input throws") {
    REQUIRE_THROWS_AS(inverse_exact(IntMatrix(2, {Int(1), Int(2), Int(2), Int(4)})),
                      std::domain_error);
  }
}

TEST_CASE("Green-Star formula equals exact inversion on seeded complexes (the oracle)",
          "[exact][property]") {
  test::RandomComplexStream stream(909, 5, 8);
  int checked = 0;
  while (checked < 100) {
    const auto g = stream.next();
    if (g.size() > 40) continue;
    ++checked;
    const auto k = counting_matrix(g);
    const auto formula = green_star_inverse(g);
    const auto inv = inverse_exact(k);
    for (std::size_t i = 0; i < k.order(); ++i)
      for (std::size_t j = 0; j < k.order(); ++j) {
        REQUIRE(denominator(inv(i, j)) == 1);  // unimodularity corollary
        REQUIRE(Rat(formula(i, j)) == inv(i, j));
      }
  }
}

TEST_CASE("characteristic polynomial", "[exact]") {
  SECTION("[[1]] -> (1, -1)") {
    const auto p = char_poly(IntMatrix(1, {Int(1)}));
    REQUIRE(p.coeffs == std::vector<Int>{Int(1), Int(-1)});
  }
  SECTION("empty matrix -> constant 1") {
    REQUIRE(char_poly(IntMatrix(0)).coeffs == std::vector<Int>{Int(1)});
  }
  SECTION("constant term is the determinant, on both golden and random matrices") {
    REQUIRE(char_poly(counting_matrix(cycle_complex(4))).coeffs.front() == 1);
    Rng rng(123);
    for (int trial = 0; trial < 100; ++trial) {
      const std::size_t n = 1 + rng.uniform(6);
      IntMatrix m(n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = Int(rng.uniform_int(-6, 6));
      REQUIRE(char_poly(m).coeffs.front() == det_exact(m));
    }
  }
  SECTION("roots of the star-3 polynomial match the closed-form eigenvalues") {
    const auto p = char_poly(counting_matrix(star_complex(3)));
    for (double lambda : {3.0 + 2.0 * std::sqrt(2.0), (3.0 + std::sqrt(5.0)) / 2.0, 1.0,
                          (3.0 - std::sqrt(5.0)) / 2.0, 3.0 - 2.0 * std::sqrt(2.0)})
      REQUIRE(p.root_residual(lambda) < 1e-9);
  }
}

TEST_CASE("palindrome check", "[exact]") {
  SECTION("(1, -1) with n = 1") {
    REQUIRE(palindrome_check(Polynomial{{Int(1), Int(-1)}}));
  }
  SECTION("star-3 characteristic polynomial is anti-palindromic") {
    REQUIRE(palindrome_check(char_poly(counting_matrix(star_complex(3)))));
  }
  SECTION("diag(2,3) has no reciprocal spectrum") {
    REQUIRE_FALSE(palindrome_check(char_poly(IntMatrix(2, {Int(2), Int(0), Int(0), Int(3)}))));
  }
  SECTION("holds for K of every seeded complex") {
    test::RandomComplexStream stream(919, 6, 9);
    for (int i = 0; i < 15; ++i)
      REQUIRE(palindrome_check(char_poly(counting_matrix(stream.next()))));
  }
}

TEST_CASE("leading minors", "[exact]") {
  SECTION("[[1]] -> (1)") {
    REQUIRE(leading_minors(IntMatrix(1, {Int(1)})) == std::vector<Int>{Int(1)});
  }
  SECTION("star-3: seven positive minors ending in det = 1") {
    const auto minors = leading_minors(counting_matrix(star_complex(3)));
    REQUIRE(minors.size() == 7);
    for (const Int& m : minors) REQUIRE(m > 0);
    REQUIRE(minors.back() == 1);
    // independent oracle: cofactor-expansion determinant of each block
    const auto k = counting_matrix(star_complex(3));
    for (std::size_t order = 1; order <= 7; ++order) {
      IntMatrix block(order);
      for (std::size_t i = 0; i < order; ++i)
        for (std::size_t j = 0; j < order; ++j) block(i, j) = k(i, j);
      REQUIRE(minors[order - 1] == test::naive_det(block));
    }
  }
  SECTION("octahedron with cell: 27 positive minors") {
    const auto minors = leading_minors(counting_matrix(test::octahedron_with_cell()));
    REQUIRE(minors.size() == 27);
    for (const Int& m : minors) REQUIRE(m > 0);
  }
  SECTION("zero leading minors fall back to per-block determinants") {
    // leading 1x1 minor is 0, the full determinant is -1
    const auto minors = leading_minors(IntMatrix(2, {Int(0), Int(1), Int(1), Int(0)}));
    REQUIRE(minors == std::vector<Int>{Int(0), Int(-1)});
  }
}

TEST_CASE("per-complex determinant laws on seeded complexes", "[exact][property]") {
  test::RandomComplexStream stream(929, 6, 9);
  for (int i = 0; i < 20; ++i) {
    const auto g = stream.next();
    REQUIRE(det_exact(counting_matrix(g)) == 1);
    // det L = prod omega(x) = (-1)^{number of odd-dimensional simplices}
    int odd_dim = 0;
    for (const Simplex& s : g.simplices())
      if (s.dim() % 2 == 1) ++odd_dim;
    REQUIRE(det_exact(connection_matrix(g)) == Int(odd_dim % 2 == 0 ? 1 : -1));
    for (const Int& minor : leading_minors(counting_matrix(g))) REQUIRE(minor > 0);
  }
}

TEST_CASE("size guards give clear errors", "[exact]") {
  REQUIRE_THROWS_AS(char_poly(IntMatrix(kMaxCharPolyOrder + 1)), std::invalid_argument);
  REQUIRE_THROWS_AS(det_exact(IntMatrix(kMaxExactOrder + 1)), std::invalid_argument);
}
