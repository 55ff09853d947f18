#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>

#include "../support/oracles.hpp"
#include "toric/error.hpp"
#include "toric/hilbert.hpp"
#include "toric/toric.hpp"

using namespace toric;

namespace {

std::vector<Rational> rationals(std::initializer_list<long> xs) {
  std::vector<Rational> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("lattice presentation rejects empty and zero matrices") {
  CHECK_THROWS_AS(LatticePresentation(IntMat(1, 0)), Error);
  CHECK_THROWS_AS(LatticePresentation(IntMat{{0, 0, 0}}), Error);
  CHECK(LatticePresentation(IntMat{{1, 1, -2}}).n() == 3);
}

TEST_CASE("binomials") {
  SUBCASE("xy = z^2") {
    const auto b = binomials(LatticePresentation(IntMat{{1, 1, -2}}));
    REQUIRE(b.size() == 1);
    CHECK(b[0].plus == make_vec({1, 1, 0}));
    CHECK(b[0].minus == make_vec({0, 0, 2}));
  }
  SUBCASE("z^2 = w^3") {
    const auto b = binomials(LatticePresentation(IntMat{{2, -3}}));
    REQUIRE(b.size() == 1);
    CHECK(b[0].plus == make_vec({2, 0}));
    CHECK(b[0].minus == make_vec({0, 3}));
  }
  SUBCASE("disjoint supports and difference") {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 50; ++trial) {
      const IntMat a = oracle::to_mat(oracle::random_matrix(rng, 2, 4, -3, 3));
      if (a.is_zero()) continue;
      const auto bs = binomials(LatticePresentation(a));
      REQUIRE(bs.size() == 2);
      for (std::size_t r = 0; r < 2; ++r) {
        CHECK(sub(bs[r].plus, bs[r].minus) == a.row(r));
        for (std::size_t i = 0; i < 4; ++i) CHECK((sgn(bs[r].plus[i]) == 0 || sgn(bs[r].minus[i]) == 0));
      }
    }
  }
}

TEST_CASE("classify examples") {
  SUBCASE("cone") {
    const auto p = classify(LatticePresentation(IntMat{{1, 1, -2}}));
    CHECK(p.is_prime);
    CHECK(p.contains_origin);
    CHECK(p.positive_vector == make_vec({1, 1, 1}));
    CHECK(p.dimension == 2);
    CHECK(p.m() == 3);
    CHECK(p.ell() == 1);
    CHECK(p.kernel.col(0) == make_vec({1, 1, -2}));
    CHECK_FALSE(p.normalization_is_affine_space);
    CHECK(p.local_irreducibility.status == LocalIrreducibility::kNotComputed);
  }
  SUBCASE("umbrella") {
    const auto p = classify(LatticePresentation(IntMat{{2, 1, -2}}));
    CHECK(p.is_prime);
    CHECK(p.contains_origin);
    CHECK(p.dimension == 2);
    CHECK(p.m() == 2);
    CHECK(p.ell() == 0);
    CHECK(p.normalization_is_affine_space);
    CHECK(p.local_irreducibility.status == LocalIrreducibility::kNotIrreducible);
    CHECK(p.local_irreducibility.offending_columns() == std::vector<std::size_t>{2});
  }
  SUBCASE("cusp") {
    const auto p = classify(LatticePresentation(IntMat{{2, -3}}));
    CHECK(p.is_prime);
    CHECK(p.contains_origin);
    CHECK(p.dimension == 1);
    CHECK(p.m() == 1);
    CHECK(p.ell() == 0);
    CHECK(p.normalization_is_affine_space);
    CHECK(p.local_irreducibility.status == LocalIrreducibility::kIrreducible);
  }
  SUBCASE("not prime") {
    const auto p = classify(LatticePresentation(IntMat{{2, -2}}));
    CHECK_FALSE(p.is_prime);
    CHECK(p.local_irreducibility.status == LocalIrreducibility::kNotComputed);
  }
  SUBCASE("no origin") {
    const auto p = classify(LatticePresentation(IntMat{{1, 1}}));
    CHECK(p.is_prime);
    CHECK_FALSE(p.contains_origin);
    CHECK_FALSE(p.positive_vector.has_value());
    CHECK(p.local_irreducibility.status == LocalIrreducibility::kNotComputed);
  }
}

TEST_CASE("local irreducibility") {
  using hilbert::from_matrix;
  SUBCASE("umbrella") {
    const auto r = is_locally_irreducible(from_matrix(IntMat{{1, 0}, {0, 2}, {1, 1}}));
    CHECK(r.status == LocalIrreducibility::kNotIrreducible);
    CHECK(r.column_gcds == std::vector<Int>{1, 2});
  }
  SUBCASE("(s, t^2, t^3, st)") {
    const auto r = is_locally_irreducible(from_matrix(IntMat{{1, 0}, {0, 2}, {0, 3}, {1, 1}}));
    CHECK(r.status == LocalIrreducibility::kIrreducible);
    CHECK(r.column_gcds == std::vector<Int>{1, 1});
  }
  SUBCASE("cusp") {
    CHECK(is_locally_irreducible(from_matrix(IntMat{{3}, {2}})).status == LocalIrreducibility::kIrreducible);
  }
  SUBCASE("missing diagonal row") {
    try {
      is_locally_irreducible(from_matrix(IntMat{{1, 1}, {1, 2}}));
      FAIL("expected MissingDiagonalRow");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::kMissingDiagonalRow);
    }
  }
}

TEST_CASE("monomial map evaluation") {
  const auto umbrella = hilbert::from_matrix(IntMat{{1, 0}, {0, 2}, {1, 1}});
  CHECK(evaluate_monomial_map(umbrella, rationals({2, 3})) == rationals({2, 9, 6}));
  CHECK(evaluate_monomial_map(umbrella, rationals({1, 1})) == rationals({1, 1, 1}));
  CHECK(evaluate_monomial_map(umbrella, rationals({0, 1})) == rationals({0, 1, 0}));
  CHECK(evaluate_monomial_map(umbrella, rationals({0, -1})) == rationals({0, 1, 0}));
  const std::vector<Rational> half{Rational(1, 2), Rational(-2)};
  CHECK(evaluate_monomial_map(umbrella, half) == std::vector<Rational>{Rational(1, 2), 4, -1});
  CHECK(evaluate_monomial_map(umbrella, rationals({0, 0})) == rationals({0, 0, 0}));
}

TEST_CASE("profile invariants on random presentations") {
  std::mt19937_64 rng(9001);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t n = 2 + rng() % 3, k = 1 + rng() % 2;
    const IntMat a = oracle::to_mat(oracle::random_matrix(rng, k, n, -3, 3));
    if (a.is_zero()) continue;
    const auto p = classify(LatticePresentation(a));
    CHECK((a * p.basis.basis).is_zero());
    CHECK((p.basis.basis * p.kernel).is_zero());
    CHECK(p.dimension == n - oracle::rational_rank(a));
    if (p.contains_origin) CHECK(p.dimension == p.m() - p.ell());
    CHECK(p.normalization_is_affine_space == (p.ell() == 0));
    if (p.ell() > 0) CHECK(p.local_irreducibility.status == LocalIrreducibility::kNotComputed);
    CHECK(p.is_prime == (oracle::invariant_factors(a) ==
                         std::vector<Int>(oracle::invariant_factors(a).size(), Int(1))));
    if (p.contains_origin) {
      REQUIRE(p.positive_vector.has_value());
      CHECK(is_strictly_positive(*p.positive_vector));
      CHECK(is_zero(a * *p.positive_vector));
    }
  }
}

TEST_CASE("local irreducibility agrees with the axis-map oracle") {
  std::mt19937_64 rng(60);
  int checked = 0;
  while (checked < 40) {
    const std::size_t n = 2 + rng() % 3;
    const IntMat a = oracle::to_mat(oracle::random_matrix(rng, 1, n, -3, 3));
    if (a.is_zero()) continue;
    const auto p = classify(LatticePresentation(a));
    if (p.local_irreducibility.status == LocalIrreducibility::kNotComputed) continue;
    ++checked;
    for (std::size_t i = 0; i < p.m(); ++i) {
      // Axis map s -> phi(0, .., s, .., 0) on s in {-6..6}.
      std::map<std::vector<Rational>, long> seen;
      bool collision = false;
      for (long s = -6; s <= 6; ++s) {
        std::vector<Rational> t(p.m(), Rational(0));
        t[i] = s;
        auto [it, inserted] = seen.emplace(evaluate_monomial_map(p.basis, t), s);
        if (!inserted) collision = true;
      }
      const bool bad = p.local_irreducibility.column_gcds[i] > 1;
      if (bad) {
        // With gcd k >= 2, s and a k-th root of unity multiple collide; for
        // even k this is s versus -s on the integers.
        const Int k = p.local_irreducibility.column_gcds[i];
        if (k % 2 == 0) CHECK(collision);
      } else {
        CHECK_FALSE(collision);
      }
    }
  }
}
