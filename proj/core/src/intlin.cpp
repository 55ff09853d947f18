#include "toric/intlin.hpp"

#include <algorithm>

#include "toric/error.hpp"

namespace toric::intlin {
namespace {

// Working state: D = U * M * V with every row operation mirrored on U and
// every column operation mirrored on V.
struct Reducer {
  IntMat d, u, v;

  void swap_rows(std::size_t a, std::size_t b) {
    d.swap_rows(a, b);
    u.swap_rows(a, b);
  }
  void swap_cols(std::size_t a, std::size_t b) {
    d.swap_cols(a, b);
    v.swap_cols(a, b);
  }
  void add_row(std::size_t dst, std::size_t src, const Int& f) {
    d.add_row_multiple(dst, src, f);
    u.add_row_multiple(dst, src, f);
  }
  void add_col(std::size_t dst, std::size_t src, const Int& f) {
    d.add_col_multiple(dst, src, f);
    v.add_col_multiple(dst, src, f);
  }

  // Moves the least nonzero |entry| of the trailing block at t to (t, t).
  bool pivot_block(std::size_t t) {
    std::size_t bi = 0, bj = 0;
    bool found = false;
    for (std::size_t i = t; i < d.rows(); ++i)
      for (std::size_t j = t; j < d.cols(); ++j) {
        if (sgn(d(i, j)) == 0) continue;
        if (!found || abs(d(i, j)) < abs(d(bi, bj))) {
          bi = i;
          bj = j;
          found = true;
        }
      }
    if (!found) return false;
    swap_rows(t, bi);
    swap_cols(t, bj);
    return true;
  }

  // Same, restricted to row t and column t.
  void pivot_cross(std::size_t t) {
    std::size_t bi = t, bj = t;
    for (std::size_t i = t + 1; i < d.rows(); ++i)
      if (sgn(d(i, t)) != 0 && abs(d(i, t)) < abs(d(bi, bj))) {
        bi = i;
        bj = t;
      }
    for (std::size_t j = t + 1; j < d.cols(); ++j)
      if (sgn(d(t, j)) != 0 && abs(d(t, j)) < abs(d(bi, bj))) {
        bi = t;
        bj = j;
      }
    swap_rows(t, bi);
    swap_cols(t, bj);
  }

  // One pass of division against the pivot; true if row and column t clear.
  bool eliminate(std::size_t t) {
    bool clear = true;
    const Int p = d(t, t);
    for (std::size_t i = t + 1; i < d.rows(); ++i) {
      if (sgn(d(i, t)) == 0) continue;
      Int q;
      mpz_tdiv_q(q.get_mpz_t(), d(i, t).get_mpz_t(), p.get_mpz_t());
      add_row(i, t, -q);
      if (sgn(d(i, t)) != 0) clear = false;
    }
    for (std::size_t j = t + 1; j < d.cols(); ++j) {
      if (sgn(d(t, j)) == 0) continue;
      Int q;
      mpz_tdiv_q(q.get_mpz_t(), d(t, j).get_mpz_t(), p.get_mpz_t());
      add_col(j, t, -q);
      if (sgn(d(t, j)) != 0) clear = false;
    }
    return clear;
  }

  // Row index in the trailing block holding an entry not divisible by the
  // pivot, or d.rows() when the block is divisible.
  std::size_t find_nondivisible(std::size_t t) const {
    const Int& p = d(t, t);
    for (std::size_t i = t + 1; i < d.rows(); ++i)
      for (std::size_t j = t + 1; j < d.cols(); ++j)
        if (!mpz_divisible_p(d(i, j).get_mpz_t(), p.get_mpz_t())) return i;
    return d.rows();
  }
};

}  // namespace

SNFDecomp smith_normal_form(const IntMat& m) {
  Reducer r{m, IntMat::identity(m.rows()), IntMat::identity(m.cols())};
  const std::size_t limit = std::min(m.rows(), m.cols());
  std::vector<Int> factors;
  for (std::size_t t = 0; t < limit; ++t) {
    if (!r.pivot_block(t)) break;
    for (;;) {
      if (!r.eliminate(t)) {
        r.pivot_cross(t);
        continue;
      }
      const std::size_t bad = r.find_nondivisible(t);
      if (bad == r.d.rows()) break;
      r.add_row(t, bad, Int(1));
    }
    if (sgn(r.d(t, t)) < 0) {
      r.d.negate_row(t);
      r.u.negate_row(t);
    }
    factors.push_back(r.d(t, t));
  }
  return SNFDecomp{std::move(r.u), std::move(r.v), std::move(r.d),
                   std::move(factors)};
}

std::size_t rank(const IntMat& m) { return smith_normal_form(m).rank(); }

IntMat kernel_basis(const IntMat& m) {
  const std::size_t n = m.cols();
  const SNFDecomp snf = smith_normal_form(m);
  std::vector<IntVec> basis;
  for (std::size_t j = snf.rank(); j < n; ++j) basis.push_back(snf.V.col(j));

  // Greedy pairwise reduction: replace b_i by b_i +- b_j while the 1-norm
  // strictly drops. Unimodular, so the result is still a basis.
  bool changed = !basis.empty();
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = 0; j < basis.size(); ++j) {
        if (i == j) continue;
        for (int s : {1, -1}) {
          IntVec cand = s > 0 ? add(basis[i], basis[j]) : sub(basis[i], basis[j]);
          if (norm1(cand) < norm1(basis[i])) {
            basis[i] = std::move(cand);
            changed = true;
          }
        }
      }
  }
  for (auto& b : basis) {
    auto lead = std::find_if(b.begin(), b.end(), [](const Int& x) { return sgn(x) != 0; });
    if (lead != b.end() && sgn(*lead) < 0) b = scale(b, Int(-1));
  }
  std::sort(basis.begin(), basis.end(), norm_lex_less);
  return IntMat::from_columns(basis, n);
}

bool is_torsion_free_quotient(const IntMat& a) {
  const SNFDecomp snf = smith_normal_form(a);
  return std::all_of(snf.invariant_factors.begin(), snf.invariant_factors.end(),
                     [](const Int& f) { return f == 1; });
}

std::optional<IntMat> right_inverse(const IntMat& c) {
  const SNFDecomp snf = smith_normal_form(c);
  if (snf.rank() != c.rows()) return std::nullopt;
  for (const auto& f : snf.invariant_factors)
    if (f != 1) return std::nullopt;
  // C = U^-1 [I | 0] V^-1, so Q = V [I | 0]^T U.
  return snf.V * snf.D.transpose() * snf.U;
}

std::optional<IntMat> solve_integer(const IntMat& m, const IntMat& t) {
  if (m.rows() != t.rows()) {
    throw Error(ErrorKind::kInvalidInput, "solve_integer: row count mismatch");
  }
  const SNFDecomp snf = smith_normal_form(m);
  const IntMat rhs = snf.U * t;  // D * Y = U * T with X = V * Y
  const std::size_t r = snf.rank();
  IntMat y(m.cols(), t.cols());
  for (std::size_t j = 0; j < t.cols(); ++j) {
    for (std::size_t i = 0; i < rhs.rows(); ++i) {
      if (i < r) {
        const Int& d = snf.invariant_factors[i];
        if (!mpz_divisible_p(rhs(i, j).get_mpz_t(), d.get_mpz_t())) return std::nullopt;
        y(i, j) = rhs(i, j) / d;
      } else if (sgn(rhs(i, j)) != 0) {
        return std::nullopt;
      }
    }
  }
  return snf.V * y;
}

IntMat unimodular_inverse(const IntMat& u) {
  if (u.rows() != u.cols()) {
    throw Error(ErrorKind::kInvalidInput, "unimodular_inverse: matrix not square");
  }
  auto inv = solve_integer(u, IntMat::identity(u.rows()));
  if (!inv) throw Error(ErrorKind::kInvalidInput, "matrix is not unimodular");
  return *inv;
}

}  // namespace toric::intlin
