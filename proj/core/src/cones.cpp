#include "toric/cones.hpp"

#include <algorithm>
#include <optional>

#include "toric/error.hpp"
#include "toric/intlin.hpp"

namespace toric::cones {
namespace {

std::vector<IntVec> normalized(std::vector<IntVec> vs) {
  std::vector<IntVec> out;
  out.reserve(vs.size());
  for (auto& v : vs) {
    if (is_zero(v)) continue;
    out.push_back(primitive(v));
  }
  std::sort(out.begin(), out.end(), generator_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::size_t rank_of(const std::vector<IntVec>& rows, std::size_t dim) {
  if (rows.empty() || dim == 0) return 0;
  return intlin::rank(IntMat::from_rows(rows, dim));
}

std::vector<IntVec> tight_rows(const std::vector<IntVec>& constraints, const IntVec& x) {
  std::vector<IntVec> out;
  for (const auto& h : constraints)
    if (sgn(dot(h, x)) == 0) out.push_back(h);
  return out;
}

// Solves G * lambda = x over Q for square nonsingular G.
std::vector<Rational> rational_solve(const IntMat& g, const IntVec& x) {
  const std::size_t n = g.rows();
  std::vector<std::vector<Rational>> aug(n, std::vector<Rational>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = g(i, j);
    aug[i][n] = x[i];
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(aug[p][c]) == 0) ++p;
    if (p == n) throw Error(ErrorKind::kInvalidInput, "singular simplicial cone");
    std::swap(aug[c], aug[p]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || sgn(aug[i][c]) == 0) continue;
      const Rational f = aug[i][c] / aug[c][c];
      for (std::size_t j = c; j <= n; ++j) aug[i][j] -= f * aug[c][j];
    }
  }
  std::vector<Rational> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = aug[i][n] / aug[i][i];
    out[i].canonicalize();
  }
  return out;
}

Rational fractional_part(const Rational& q) {
  Int fl;
  mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  Rational r = q - Rational(fl);
  r.canonicalize();
  return r;
}

// Coordinates of the semigroup inside the lattice G its generators span.
struct LatticeChart {
  std::size_t dim = 0;
  std::size_t rank = 0;
  IntMat basis;                  // rank x dim, rows are a Z-basis of G
  std::vector<IntVec> coords;    // generators in basis coordinates
  std::vector<IntVec> facets;    // inequalities of the cone in Q^rank

  IntVec to_ambient(const IntVec& c) const {
    IntVec x = zeros(dim);
    for (std::size_t i = 0; i < rank; ++i)
      for (std::size_t j = 0; j < dim; ++j) x[j] += c[i] * basis(i, j);
    return x;
  }

  std::optional<IntVec> to_chart(const IntVec& x) const {
    IntMat rhs(dim, 1);
    rhs.set_col(0, x);
    auto sol = intlin::solve_integer(basis.transpose(), rhs);
    if (!sol) return std::nullopt;
    return sol->col(0);
  }

  bool in_cone(const IntVec& c) const {
    return std::all_of(facets.begin(), facets.end(),
                       [&](const IntVec& h) { return sgn(dot(h, c)) >= 0; });
  }
};

LatticeChart make_chart(const SemigroupPresentation& s) {
  LatticeChart chart;
  chart.dim = s.ambient_dim;
  std::vector<IntVec> gens;
  for (const auto& g : s.generators) {
    if (g.size() != s.ambient_dim) {
      throw Error(ErrorKind::kInvalidInput, "generator length does not match ambient dimension");
    }
    if (!is_zero(g)) gens.push_back(g);
  }
  if (gens.empty()) return chart;

  const IntMat m = IntMat::from_rows(gens, s.ambient_dim);
  const auto snf = intlin::smith_normal_form(m);
  chart.rank = snf.rank();
  const IntMat v_inv = intlin::unimodular_inverse(snf.V);
  const IntMat u_inv = intlin::unimodular_inverse(snf.U);

  chart.basis = IntMat(chart.rank, chart.dim);
  for (std::size_t i = 0; i < chart.rank; ++i)
    for (std::size_t j = 0; j < chart.dim; ++j)
      chart.basis(i, j) = snf.invariant_factors[i] * v_inv(i, j);
  for (std::size_t k = 0; k < gens.size(); ++k) {
    IntVec c(chart.rank);
    for (std::size_t i = 0; i < chart.rank; ++i) c[i] = u_inv(k, i);
    chart.coords.push_back(std::move(c));
  }

  chart.facets = normalized(cone_from_inequalities(chart.rank, chart.coords));
  if (rank_of(chart.facets, chart.rank) != chart.rank) {
    throw Error(ErrorKind::kNotPointed, "the cone spanned by the generators contains a line");
  }
  return chart;
}

// Lattice points sum(lambda_i g_i) with 0 <= lambda_i < 1, g_i the columns.
std::vector<IntVec> parallelepiped_points(const IntMat& g) {
  const std::size_t r = g.rows();
  const auto snf = intlin::smith_normal_form(g);
  const IntMat u_inv = intlin::unimodular_inverse(snf.U);
  std::vector<IntVec> out;
  IntVec y = zeros(r);
  for (;;) {
    const IntVec x = u_inv * y;
    const auto lambda = rational_solve(g, x);
    std::vector<Rational> frac(r);
    for (std::size_t i = 0; i < r; ++i) frac[i] = fractional_part(lambda[i]);
    IntVec point = zeros(r);
    for (std::size_t row = 0; row < r; ++row) {
      Rational acc = 0;
      for (std::size_t i = 0; i < r; ++i) acc += frac[i] * Rational(g(row, i));
      acc.canonicalize();
      point[row] = acc.get_num();
    }
    if (!is_zero(point)) out.push_back(std::move(point));

    std::size_t k = 0;
    while (k < r) {
      y[k] += 1;
      if (y[k] < snf.invariant_factors[k]) break;
      y[k] = 0;
      ++k;
    }
    if (k == r) break;
  }
  return out;
}

}  // namespace

std::vector<IntVec> cone_from_inequalities(std::size_t dim,
                                           const std::vector<IntVec>& halfspaces) {
  std::vector<IntVec> lineality;
  for (std::size_t i = 0; i < dim; ++i) lineality.push_back(unit_vector(dim, i));
  std::vector<IntVec> rays;
  std::vector<IntVec> processed;

  for (const auto& h : halfspaces) {
    if (h.size() != dim) {
      throw Error(ErrorKind::kInvalidInput, "halfspace length does not match dimension");
    }
    if (is_zero(h)) continue;

    auto pivot = std::find_if(lineality.begin(), lineality.end(),
                              [&](const IntVec& l) { return sgn(dot(h, l)) != 0; });
    if (pivot != lineality.end()) {
      IntVec l = *pivot;
      lineality.erase(pivot);
      Int hl = dot(h, l);
      if (sgn(hl) < 0) {
        l = scale(l, Int(-1));
        hl = -hl;
      }
      for (auto& other : lineality) other = primitive(sub(scale(other, hl), scale(l, dot(h, other))));
      for (auto& r : rays) r = primitive(sub(scale(r, hl), scale(l, dot(h, r))));
      rays.push_back(l);
      processed.push_back(h);
      continue;
    }

    std::vector<IntVec> pos, zero, neg;
    for (auto& r : rays) {
      const int s = sgn(dot(h, r));
      (s > 0 ? pos : s < 0 ? neg : zero).push_back(r);
    }
    // Adjacent pairs: tight constraints have rank (pointed dim) - 2.
    const std::size_t pointed_dim = dim - lineality.size();
    std::vector<IntVec> next = pos;
    next.insert(next.end(), zero.begin(), zero.end());
    for (const auto& p : pos)
      for (const auto& q : neg) {
        std::vector<IntVec> common;
        for (const auto& c : processed)
          if (sgn(dot(c, p)) == 0 && sgn(dot(c, q)) == 0) common.push_back(c);
        for (const auto& l : lineality) common.push_back(l);  // stay off the lineality
        if (pointed_dim >= 2 &&
            rank_of(common, dim) + 2 != pointed_dim + lineality.size()) {
          continue;
        }
        next.push_back(primitive(sub(scale(q, dot(h, p)), scale(p, dot(h, q)))));
      }
    rays = normalized(std::move(next));
    processed.push_back(h);
  }

  // Final irredundancy filter: extreme rays have tight rank (pointed dim - 1).
  const std::size_t pointed_dim = dim - lineality.size();
  std::vector<IntVec> out;
  for (const auto& r : normalized(rays)) {
    auto tight = tight_rows(processed, r);
    for (const auto& l : lineality) tight.push_back(l);
    if (rank_of(tight, dim) + 1 == pointed_dim + lineality.size()) out.push_back(r);
  }
  for (const auto& l : lineality) {
    out.push_back(l);
    out.push_back(scale(l, Int(-1)));
  }
  return normalized(std::move(out));
}

RationalCone RationalCone::from_generators(std::size_t dim, std::vector<IntVec> gens) {
  for (const auto& g : gens)
    if (g.size() != dim) {
      throw Error(ErrorKind::kInvalidInput, "generator length does not match ambient dimension");
    }
  RationalCone c;
  c.ambient_dim = dim;
  c.inequalities = normalized(cone_from_inequalities(dim, normalized(std::move(gens))));
  c.generators = normalized(cone_from_inequalities(dim, c.inequalities));
  return c;
}

bool RationalCone::contains(const IntVec& x) const {
  return std::all_of(inequalities.begin(), inequalities.end(),
                     [&](const IntVec& h) { return sgn(dot(h, x)) >= 0; });
}

bool RationalCone::is_pointed() const {
  return rank_of(inequalities, ambient_dim) == ambient_dim;
}

RationalCone dual_cone(const RationalCone& cone) {
  return RationalCone::from_generators(cone.ambient_dim,
                                       cone_from_inequalities(cone.ambient_dim, cone.generators));
}

SemigroupPresentation saturate_semigroup(const SemigroupPresentation& s) {
  if (s.generators.empty()) {
    throw Error(ErrorKind::kInvalidInput, "semigroup presentation has no generators");
  }
  const LatticeChart chart = make_chart(s);
  SemigroupPresentation out{s.ambient_dim, {}};
  if (chart.rank == 0) return out;

  const std::size_t r = chart.rank;
  const auto rays = normalized(cone_from_inequalities(r, chart.facets));

  std::vector<IntVec> candidates = rays;
  // Every r-subset of linearly independent extreme rays spans a simplicial
  // cone; together they cover tau.
  std::vector<std::size_t> pick(r);
  for (std::size_t i = 0; i < r; ++i) pick[i] = i;
  while (rays.size() >= r) {
    std::vector<IntVec> cols;
    for (auto idx : pick) cols.push_back(rays[idx]);
    const IntMat g = IntMat::from_columns(cols, r);
    if (intlin::rank(g) == r) {
      auto pts = parallelepiped_points(g);
      candidates.insert(candidates.end(), pts.begin(), pts.end());
    }
    std::size_t k = r;
    while (k > 0 && pick[k - 1] == rays.size() - r + (k - 1)) --k;
    if (k == 0) break;
    ++pick[k - 1];
    for (std::size_t j = k; j < r; ++j) pick[j] = pick[j - 1] + 1;
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  for (const auto& x : candidates) {
    const bool reducible = std::any_of(candidates.begin(), candidates.end(), [&](const IntVec& y) {
      return y != x && chart.in_cone(sub(x, y));
    });
    if (!reducible) out.generators.push_back(chart.to_ambient(x));
  }
  std::sort(out.generators.begin(), out.generators.end(), generator_less);
  return out;
}

bool semigroup_contains(const SemigroupPresentation& s, const IntVec& x) {
  if (x.size() != s.ambient_dim) {
    throw Error(ErrorKind::kInvalidInput, "vector length does not match ambient dimension");
  }
  if (is_zero(x)) return true;
  const LatticeChart chart = make_chart(s);
  if (chart.rank == 0) return false;
  const auto target = chart.to_chart(x);
  if (!target || !chart.in_cone(*target)) return false;

  // Positive on tau \ {0} because tau is pointed.
  IntVec functional = zeros(chart.rank);
  for (const auto& f : chart.facets) functional = add(functional, f);

  const auto& gens = chart.coords;
  IntVec remaining = *target;
  auto rec = [&](auto&& self, std::size_t i) -> bool {
    if (is_zero(remaining)) return true;
    if (i == gens.size()) return false;
    const Int weight = dot(functional, gens[i]);
    Int bound;
    mpz_fdiv_q(bound.get_mpz_t(), dot(functional, remaining).get_mpz_t(), weight.get_mpz_t());
    bool found = false;
    Int used = 0;
    for (Int c = 0; c <= bound && !found; ++c) {
      if (chart.in_cone(remaining)) found = self(self, i + 1);
      if (found) break;
      remaining = sub(remaining, gens[i]);
      used += 1;
    }
    remaining = add(remaining, scale(gens[i], used));
    return found;
  };
  return rec(rec, 0);
}

bool is_normal(const SemigroupPresentation& s) {
  const auto sat = saturate_semigroup(s);
  return std::all_of(sat.generators.begin(), sat.generators.end(),
                     [&](const IntVec& h) { return semigroup_contains(s, h); });
}

}  // namespace toric::cones
