#pragma once

// Independent brute-force oracles for the test suites. Nothing here calls
// into Smith normal form, Contejean–Devie, or double description.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "toric/intmat.hpp"

namespace toric::oracle {

using Small = std::vector<std::vector<long>>;

inline IntMat to_mat(const Small& rows) {
  IntMat m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

inline Int laplace_det(const std::vector<std::vector<Int>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Int total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (sgn(m[0][c]) == 0) continue;
    std::vector<std::vector<Int>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Int> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(row);
    }
    const Int term = m[0][c] * laplace_det(minor);
    total += (c % 2 == 0) ? term : Int(-term);
  }
  return total;
}

inline void for_each_subset(std::size_t n, std::size_t k,
                            const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> idx(k);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t start) {
    if (pos == k) {
      f(idx);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      idx[pos] = i;
      rec(pos + 1, i + 1);
    }
  };
  rec(0, 0);
}

/// gcd of all k x k minors, for k = 1..; stops at the first zero.
inline std::vector<Int> determinantal_divisors(const IntMat& m) {
  std::vector<Int> out;
  for (std::size_t k = 1; k <= std::min(m.rows(), m.cols()); ++k) {
    Int g = 0;
    for_each_subset(m.rows(), k, [&](const std::vector<std::size_t>& rs) {
      for_each_subset(m.cols(), k, [&](const std::vector<std::size_t>& cs) {
        std::vector<std::vector<Int>> sub(k, std::vector<Int>(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) sub[i][j] = m(rs[i], cs[j]);
        g = gcd(g, laplace_det(sub));
      });
    });
    if (sgn(g) == 0) break;
    out.push_back(g);
  }
  return out;
}

/// Invariant factors d_k = D_k / D_{k-1} from determinantal divisors.
inline std::vector<Int> invariant_factors(const IntMat& m) {
  const auto dd = determinantal_divisors(m);
  std::vector<Int> out;
  Int prev = 1;
  for (const auto& d : dd) {
    out.push_back(d / prev);
    prev = d;
  }
  return out;
}

inline Int det(const IntMat& m) {
  std::vector<std::vector<Int>> a(m.rows(), std::vector<Int>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m(i, j);
  return laplace_det(a);
}

/// Fraction-free Bareiss elimination; exact for any size.
inline Int bareiss_det(const IntMat& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
  Int sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(a[k][k]) == 0) {
      std::size_t p = k + 1;
      while (p < n && sgn(a[p][k]) == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

/// Row reduction over Q on [A | b]; returns one solution of A x = b or
/// nullopt if inconsistent. Free variables are set to zero.
inline std::optional<std::vector<Rational>> rational_solve(const IntMat& a, const IntVec& b) {
  const std::size_t r = a.rows(), c = a.cols();
  std::vector<std::vector<Rational>> m(r, std::vector<Rational>(c + 1));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) m[i][j] = a(i, j);
    m[i][c] = b[i];
  }
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < c && row < r; ++col) {
    std::size_t p = row;
    while (p < r && sgn(m[p][col]) == 0) ++p;
    if (p == r) continue;
    std::swap(m[row], m[p]);
    for (std::size_t i = 0; i < r; ++i) {
      if (i == row || sgn(m[i][col]) == 0) continue;
      const Rational f = m[i][col] / m[row][col];
      for (std::size_t j = col; j <= c; ++j) m[i][j] -= f * m[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  for (std::size_t i = row; i < r; ++i)
    if (sgn(m[i][c]) != 0) return std::nullopt;
  std::vector<Rational> x(c, Rational(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    x[pivots[i]] = m[i][c] / m[i][pivots[i]];
    x[pivots[i]].canonicalize();
  }
  return x;
}

inline std::size_t rational_rank(const IntMat& a) {
  const std::size_t r = a.rows(), c = a.cols();
  std::vector<std::vector<Rational>> m(r, std::vector<Rational>(c));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m[i][j] = a(i, j);
  std::size_t row = 0;
  for (std::size_t col = 0; col < c && row < r; ++col) {
    std::size_t p = row;
    while (p < r && sgn(m[p][col]) == 0) ++p;
    if (p == r) continue;
    std::swap(m[row], m[p]);
    for (std::size_t i = row + 1; i < r; ++i) {
      const Rational f = m[i][col] / m[row][col];
      for (std::size_t j = col; j < c; ++j) m[i][j] -= f * m[row][j];
    }
    ++row;
  }
  return row;
}

/// Visits every x in [0, bound]^n.
inline void for_each_in_box(std::size_t n, long bound,
                            const std::function<void(const std::vector<long>&)>& f) {
  std::vector<long> x(n, 0);
  for (;;) {
    f(x);
    std::size_t i = 0;
    while (i < n) {
      if (++x[i] <= bound) break;
      x[i] = 0;
      ++i;
    }
    if (i == n) return;
  }
}

inline bool small_leq(const std::vector<long>& a, const std::vector<long>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

/// <=-minimal nonzero elements of ker A ∩ [0, bound]^n.
inline std::vector<std::vector<long>> brute_hilbert_basis(const Small& a, std::size_t n, long bound) {
  std::vector<std::vector<long>> kernel;
  std::vector<long> partial(a.size());
  // Recursive box walk with running A x.
  std::vector<long> x(n, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == n) {
      bool zero = std::all_of(partial.begin(), partial.end(), [](long v) { return v == 0; });
      bool nonzero_x = std::any_of(x.begin(), x.end(), [](long v) { return v != 0; });
      if (zero && nonzero_x) kernel.push_back(x);
      return;
    }
    for (long c = 0; c <= bound; ++c) {
      x[i] = c;
      rec(i + 1);
      for (std::size_t r = 0; r < a.size(); ++r) partial[r] += a[r][i];
    }
    for (std::size_t r = 0; r < a.size(); ++r) partial[r] -= (bound + 1) * a[r][i];
    x[i] = 0;
  };
  rec(0);
  // A point is reducible iff some smaller minimal point lies below it, so a
  // scan by coordinate sum only compares against minimal points found so far.
  auto sum = [](const std::vector<long>& v) { return std::accumulate(v.begin(), v.end(), 0L); };
  std::stable_sort(kernel.begin(), kernel.end(),
                   [&](const auto& a, const auto& b) { return sum(a) < sum(b); });
  std::vector<std::vector<long>> minimal;
  for (const auto& v : kernel) {
    bool reducible = std::any_of(minimal.begin(), minimal.end(),
                                 [&](const std::vector<long>& o) { return small_leq(o, v); });
    if (!reducible) minimal.push_back(v);
  }
  std::sort(minimal.begin(), minimal.end());
  return minimal;
}

/// All w in N^m with B w = v, by scanning a box bounded by max(v).
inline std::vector<IntVec> brute_fiber(const IntMat& b, const IntVec& v) {
  long bound = 0;
  for (const auto& x : v) bound = std::max(bound, x.get_si());
  std::vector<IntVec> out;
  for_each_in_box(b.cols(), bound, [&](const std::vector<long>& w) {
    IntVec wi(w.begin(), w.end());
    if (b * wi == v) out.push_back(wi);
  });
  return out;
}

/// x ∈ cone(G) via Carathéodory: some linearly independent subset of G
/// writes x with nonnegative rational coefficients.
inline bool cone_member(const std::vector<IntVec>& gens, const IntVec& x, std::size_t dim) {
  if (is_zero(x)) return true;
  for (std::size_t k = 1; k <= std::min(dim, gens.size()); ++k) {
    bool found = false;
    for_each_subset(gens.size(), k, [&](const std::vector<std::size_t>& s) {
      if (found) return;
      std::vector<IntVec> cols;
      for (auto i : s) cols.push_back(gens[i]);
      const IntMat g = IntMat::from_columns(cols, dim);
      if (rational_rank(g) != k) return;
      auto sol = rational_solve(g, x);
      if (!sol) return;
      if (std::all_of(sol->begin(), sol->end(), [](const Rational& q) { return sgn(q) >= 0; }))
        found = true;
    });
    if (found) return true;
  }
  return false;
}

inline Small random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long lo, long hi) {
  std::uniform_int_distribution<long> d(lo, hi);
  Small m(rows, std::vector<long>(cols));
  for (auto& r : m)
    for (auto& x : r) x = d(rng);
  return m;
}

}  // namespace toric::oracle
