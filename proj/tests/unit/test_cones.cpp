#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <random>
#include <set>

#include "../support/oracles.hpp"
#include "toric/cones.hpp"
#include "toric/error.hpp"
#include "toric/hilbert.hpp"
#include "toric/intlin.hpp"

using namespace toric;
using namespace toric::cones;

namespace {

std::vector<IntVec> vecs(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<IntVec> out;
  for (const auto& r : rows) out.push_back(make_vec(r));
  return out;
}

SemigroupPresentation semigroup(std::size_t dim, std::initializer_list<std::initializer_list<long>> rows) {
  return SemigroupPresentation{dim, vecs(rows)};
}

std::set<IntVec> as_set(const std::vector<IntVec>& v) { return {v.begin(), v.end()}; }

// Same cone as sets: each generator set lies in the cone of the other.
bool same_cone(const std::vector<IntVec>& a, const std::vector<IntVec>& b, std::size_t dim) {
  for (const auto& x : a)
    if (!oracle::cone_member(b, x, dim)) return false;
  for (const auto& x : b)
    if (!oracle::cone_member(a, x, dim)) return false;
  return true;
}

// Independent N-membership: bounded DFS over coefficients using a norm bound.
bool brute_semigroup_member(const std::vector<IntVec>& gens, const IntVec& x, long max_coeff) {
  std::function<bool(std::size_t, const IntVec&)> rec = [&](std::size_t i, const IntVec& rest) {
    if (is_zero(rest)) return true;
    if (i == gens.size()) return false;
    IntVec cur = rest;
    for (long c = 0; c <= max_coeff; ++c) {
      if (rec(i + 1, cur)) return true;
      cur = sub(cur, gens[i]);
    }
    return false;
  };
  return rec(0, x);
}

std::vector<IntVec> random_gens(std::mt19937_64& rng, std::size_t dim, std::size_t count, long lo, long hi) {
  std::vector<IntVec> out;
  for (const auto& r : oracle::random_matrix(rng, count, dim, lo, hi)) out.emplace_back(r.begin(), r.end());
  return out;
}

}  // namespace

TEST_CASE("cone from generators") {
  const auto c = RationalCone::from_generators(2, vecs({{1, 0}, {1, 2}, {2, 1}}));
  CHECK(as_set(c.generators) == as_set(vecs({{1, 0}, {1, 2}})));
  CHECK(as_set(c.inequalities) == as_set(vecs({{0, 1}, {2, -1}})));
  CHECK(c.is_pointed());
  CHECK(c.contains(make_vec({3, 1})));
  CHECK_FALSE(c.contains(make_vec({0, 1})));

  SUBCASE("half plane has a lineality pair") {
    const auto h = RationalCone::from_generators(2, vecs({{1, 0}, {-1, 0}, {0, 1}}));
    CHECK_FALSE(h.is_pointed());
    CHECK(h.contains(make_vec({-5, 2})));
    CHECK_FALSE(h.contains(make_vec({0, -1})));
  }
}

TEST_CASE("dual cone examples") {
  SUBCASE("umbrella rows give the orthant") {
    const auto d = dual_cone(RationalCone::from_generators(2, vecs({{1, 0}, {0, 2}, {1, 1}})));
    CHECK(d.generators == vecs({{1, 0}, {0, 1}}));
  }
  SUBCASE("orthant is self-dual") {
    const auto d = dual_cone(RationalCone::from_generators(2, vecs({{1, 0}, {0, 1}})));
    CHECK(d.generators == vecs({{1, 0}, {0, 1}}));
  }
  SUBCASE("(1,0), (1,2)") {
    const auto d = dual_cone(RationalCone::from_generators(2, vecs({{1, 0}, {1, 2}})));
    CHECK(d.generators == vecs({{0, 1}, {2, -1}}));
    for (const auto& g : vecs({{1, 0}, {1, 2}}))
      for (const auto& h : d.generators) CHECK(sgn(dot(g, h)) >= 0);
  }
  SUBCASE("rank-deficient cone in Q^3") {
    const auto d = dual_cone(RationalCone::from_generators(3, vecs({{2, 0, 1}, {0, 2, 1}, {1, 1, 1}})));
    CHECK_FALSE(d.is_pointed());
    CHECK(d.contains(make_vec({1, 1, -2})));
    CHECK(d.contains(make_vec({-1, -1, 2})));
    for (const auto& h : d.generators)
      for (const auto& g : vecs({{2, 0, 1}, {0, 2, 1}, {1, 1, 1}})) CHECK(sgn(dot(g, h)) >= 0);
  }
}

TEST_CASE("dual cone property: involution and pairing") {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t dim = 2 + rng() % 2, count = 1 + rng() % 4;
    auto gens = random_gens(rng, dim, count, -3, 3);
    const auto c = RationalCone::from_generators(dim, gens);
    const auto d = dual_cone(c);
    const auto dd = dual_cone(d);
    for (const auto& g : gens)
      for (const auto& h : d.generators) CHECK(sgn(dot(g, h)) >= 0);
    CHECK(same_cone(dd.generators, gens, dim));
    CHECK(same_cone(c.generators, gens, dim));
    // Inequalities describe the same set as the oracle on random probes.
    std::uniform_int_distribution<long> u(-4, 4);
    for (int probe = 0; probe < 20; ++probe) {
      IntVec x(dim);
      for (auto& v : x) v = u(rng);
      CHECK(c.contains(x) == oracle::cone_member(gens, x, dim));
    }
  }
}

TEST_CASE("cone from inequalities") {
  CHECK(as_set(cone_from_inequalities(2, vecs({{1, 0}, {0, 1}}))) == as_set(vecs({{1, 0}, {0, 1}})));
  CHECK(as_set(cone_from_inequalities(2, {})) == as_set(vecs({{1, 0}, {-1, 0}, {0, 1}, {0, -1}})));
  CHECK(cone_from_inequalities(1, vecs({{1}, {-1}})).empty());
}

TEST_CASE("saturation examples") {
  CHECK(saturate_semigroup(semigroup(2, {{1, 0}, {0, 2}, {1, 1}})).generators == vecs({{1, 0}, {0, 1}}));
  CHECK(saturate_semigroup(semigroup(1, {{3}, {2}})).generators == vecs({{1}}));
  CHECK(saturate_semigroup(semigroup(2, {{1, 0}, {0, 1}})).generators == vecs({{1, 0}, {0, 1}}));
  CHECK(saturate_semigroup(semigroup(2, {{0, 0}})).generators.empty());

  SUBCASE("saturation stays in the generated lattice") {
    CHECK(saturate_semigroup(semigroup(1, {{4}, {6}})).generators == vecs({{2}}));
  }
  SUBCASE("rank-deficient cone rows are already saturated") {
    const auto s = semigroup(3, {{2, 0, 1}, {0, 2, 1}, {1, 1, 1}});
    CHECK(as_set(saturate_semigroup(s).generators) == as_set(s.generators));
  }
  SUBCASE("classic non-normal semigroup") {
    const auto s = semigroup(2, {{2, 0}, {1, 1}, {0, 2}, {0, 1}});
    CHECK(as_set(saturate_semigroup(s).generators) == as_set(vecs({{1, 0}, {0, 1}})));
    CHECK_FALSE(is_normal(s));
  }
  SUBCASE("errors") {
    try {
      saturate_semigroup(semigroup(2, {{1, 0}, {-1, 0}, {0, 1}}));
      FAIL("expected NotPointed");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::kNotPointed);
    }
    try {
      saturate_semigroup(SemigroupPresentation{2, {}});
      FAIL("expected InvalidInput");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::kInvalidInput);
    }
  }
}

TEST_CASE("normality") {
  CHECK(is_normal(semigroup(3, {{2, 0, 1}, {0, 2, 1}, {1, 1, 1}})));
  CHECK_FALSE(is_normal(semigroup(2, {{1, 0}, {0, 2}, {1, 1}})));
  CHECK_FALSE(is_normal(semigroup(1, {{3}, {2}})));
  CHECK(is_normal(semigroup(2, {{1, 0}, {0, 1}})));
}

TEST_CASE("semigroup membership") {
  const auto s = semigroup(2, {{1, 0}, {0, 2}, {1, 1}});
  CHECK(semigroup_contains(s, make_vec({3, 4})));
  CHECK_FALSE(semigroup_contains(s, make_vec({0, 1})));
  CHECK(semigroup_contains(s, make_vec({0, 0})));
  CHECK_FALSE(semigroup_contains(s, make_vec({-1, 0})));
}

TEST_CASE("saturation property: idempotent, inside the cone, positive multiples in the semigroup") {
  std::mt19937_64 rng(2718);
  int checked = 0;
  while (checked < 60) {
    const std::size_t dim = 1 + rng() % 3, count = 1 + rng() % 4;
    const auto gens = random_gens(rng, dim, count, 0, 4);
    const SemigroupPresentation s{dim, gens};
    if (std::all_of(gens.begin(), gens.end(), [](const IntVec& g) { return is_zero(g); })) continue;
    ++checked;
    const auto sat = saturate_semigroup(s);
    const auto sat2 = saturate_semigroup(sat);
    CHECK(as_set(sat2.generators) == as_set(sat.generators));
    for (const auto& g : sat.generators) {
      CHECK(oracle::cone_member(gens, g, dim));
      bool multiple = false;
      for (long k = 1; k <= 24 && !multiple; ++k) multiple = brute_semigroup_member(gens, scale(g, k), 24);
      CHECK(multiple);
    }
    // Every original generator is in the saturation semigroup.
    for (const auto& g : gens) CHECK(brute_semigroup_member(sat.generators, g, 8));
    CHECK(is_normal(sat));
    // semigroup_contains agrees with the brute force on small probes.
    oracle::for_each_in_box(dim, 4, [&](const std::vector<long>& x) {
      const IntVec xi(x.begin(), x.end());
      CHECK(semigroup_contains(s, xi) == brute_semigroup_member(gens, xi, 4));
    });
  }
}

TEST_CASE("rows of an injective Hilbert basis saturate to the orthant") {
  std::mt19937_64 rng(555);
  int checked = 0;
  while (checked < 40) {
    const std::size_t n = 2 + rng() % 3;
    const IntMat a = oracle::to_mat(oracle::random_matrix(rng, 1, n, -3, 3));
    if (a.is_zero() || !intlin::is_torsion_free_quotient(a)) continue;
    const auto hb = hilbert::hilbert_basis(a);
    if (hb.m() == 0 || !hilbert::positive_kernel_vector(hb)) continue;
    if (intlin::kernel_basis(hb.basis).cols() != 0) continue;
    ++checked;
    const auto sat = saturate_semigroup(SemigroupPresentation{hb.m(), hb.basis.row_list()});
    std::vector<IntVec> orthant;
    for (std::size_t i = 0; i < hb.m(); ++i) orthant.push_back(unit_vector(hb.m(), i));
    CHECK(as_set(sat.generators) == as_set(orthant));
  }
}
