#include "toric/hilbert.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "toric/error.hpp"
#include "toric/intlin.hpp"

namespace toric::hilbert {
namespace {

bool dominates_any(const IntVec& x, const std::vector<IntVec>& minimal) {
  return std::any_of(minimal.begin(), minimal.end(),
                     [&](const IntVec& s) { return leq(s, x); });
}

// Largest c with c * column <= remaining, for a nonzero nonnegative column.
Int coordinate_bound(const IntMat& b, std::size_t col, const IntVec& remaining) {
  std::optional<Int> bound;
  for (std::size_t j = 0; j < b.rows(); ++j) {
    if (sgn(b(j, col)) <= 0) continue;
    Int q;
    if (sgn(remaining[j]) < 0) return Int(-1);
    mpz_fdiv_q(q.get_mpz_t(), remaining[j].get_mpz_t(), b(j, col).get_mpz_t());
    if (!bound || q < *bound) bound = q;
  }
  if (!bound) {
    throw Error(ErrorKind::kUnboundedFiber,
                "column " + std::to_string(col + 1) +
                    " of B is zero, so the fiber is unbounded");
  }
  return *bound;
}

// Visits every w in N^m with B w <= cap (componentwise). `exact` restricts
// to B w == cap.
template <typename Visit>
void enumerate_below(const IntMat& b, const IntVec& cap, bool exact, Visit&& visit) {
  const std::size_t m = b.cols();
  // covered[i][j]: some column k >= i has a positive entry in row j.
  std::vector<std::vector<bool>> covered(m + 1, std::vector<bool>(b.rows(), false));
  for (std::size_t i = m; i-- > 0;)
    for (std::size_t j = 0; j < b.rows(); ++j) covered[i][j] = covered[i + 1][j] || sgn(b(j, i)) > 0;
  IntVec w(m);
  IntVec remaining = cap;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (exact) {
      for (std::size_t j = 0; j < b.rows(); ++j)
        if (sgn(remaining[j]) != 0 && !covered[i][j]) return;
    }
    if (i == m) {
      if (!exact || is_zero(remaining)) visit(w);
      return;
    }
    const Int bound = coordinate_bound(b, i, remaining);
    for (Int c = 0; c <= bound; ++c) {
      w[i] = c;
      self(self, i + 1);
      for (std::size_t j = 0; j < b.rows(); ++j) remaining[j] -= b(j, i);
    }
    for (std::size_t j = 0; j < b.rows(); ++j) remaining[j] += (bound + 1) * b(j, i);
    w[i] = 0;
  };
  if (!is_nonnegative(cap)) return;
  rec(rec, 0);
}

}  // namespace

HilbertBasisMat from_matrix(IntMat basis, IntMat presentation) {
  if (!basis.is_nonnegative()) {
    throw Error(ErrorKind::kInvalidInput, "Hilbert basis matrix must be nonnegative");
  }
  if (!presentation.empty() && presentation.cols() != basis.rows()) {
    throw Error(ErrorKind::kInvalidInput, "presentation and basis shapes disagree");
  }
  return HilbertBasisMat{std::move(basis), std::move(presentation)};
}

HilbertBasisMat hilbert_basis(const IntMat& a) {
  const std::size_t n = a.cols();
  std::vector<IntVec> images;  // A e_i
  images.reserve(n);
  for (std::size_t i = 0; i < n; ++i) images.push_back(a.col(i));

  std::vector<IntVec> solutions;
  // Frontier maps x to A x.
  std::map<IntVec, IntVec> frontier;
  for (std::size_t i = 0; i < n; ++i) frontier.emplace(unit_vector(n, i), images[i]);

  while (!frontier.empty()) {
    std::map<IntVec, IntVec> next;
    std::vector<const std::pair<const IntVec, IntVec>*> open;
    for (const auto& entry : frontier) {
      if (is_zero(entry.second)) {
        solutions.push_back(entry.first);
      } else {
        open.push_back(&entry);
      }
    }
    for (const auto* entry : open) {
      const auto& [x, ax] = *entry;
      for (std::size_t i = 0; i < n; ++i) {
        if (sgn(dot(ax, images[i])) >= 0) continue;
        IntVec y = x;
        y[i] += 1;
        if (next.count(y) || dominates_any(y, solutions)) continue;
        next.emplace(std::move(y), add(ax, images[i]));
      }
    }
    frontier = std::move(next);
  }

  std::sort(solutions.begin(), solutions.end(), generator_less);
  return HilbertBasisMat{IntMat::from_columns(solutions, n), a};
}

std::optional<IntVec> positive_kernel_vector(const IntMat& a) {
  return positive_kernel_vector(hilbert_basis(a));
}

std::optional<IntVec> positive_kernel_vector(const HilbertBasisMat& hb) {
  const std::size_t n = hb.n();
  const auto columns = hb.basis.column_list();

  IntVec total = zeros(n);
  for (const auto& c : columns) total = add(total, c);
  if (!is_strictly_positive(total)) return std::nullopt;

  for (const auto& c : columns)
    if (is_strictly_positive(c)) return c;

  // Greedy: repeatedly take the column covering the most uncovered
  // coordinates; ties go to the earlier column.
  IntVec sum = zeros(n);
  std::vector<bool> covered(n, false);
  std::size_t uncovered = n;
  while (uncovered > 0) {
    std::size_t best = 0, best_gain = 0;
    for (std::size_t j = 0; j < columns.size(); ++j) {
      std::size_t gain = 0;
      for (std::size_t i = 0; i < n; ++i)
        if (!covered[i] && sgn(columns[j][i]) > 0) ++gain;
      if (gain > best_gain) {
        best_gain = gain;
        best = j;
      }
    }
    sum = add(sum, columns[best]);
    for (std::size_t i = 0; i < n; ++i)
      if (!covered[i] && sgn(columns[best][i]) > 0) {
        covered[i] = true;
        --uncovered;
      }
  }
  return sum;
}

std::vector<IntVec> fiber(const HilbertBasisMat& b, const IntVec& v) {
  if (v.size() != b.n()) {
    throw Error(ErrorKind::kInvalidInput, "fiber: vector length does not match B");
  }
  std::vector<IntVec> out;
  enumerate_below(b.basis, v, /*exact=*/true, [&](const IntVec& w) { out.push_back(w); });
  std::sort(out.begin(), out.end(), graded_lex_less);
  return out;
}

std::optional<ObstructionWitness> minimal_obstruction(const HilbertBasisMat& b) {
  const IntMat kernel = intlin::kernel_basis(b.basis);
  if (kernel.cols() == 0) return std::nullopt;

  const IntVec u = kernel.col(0);
  const IntVec cap = b.basis * positive_part(u);

  std::map<IntVec, std::size_t> preimages;
  enumerate_below(b.basis, cap, /*exact=*/false,
                  [&](const IntVec& w) { ++preimages[b.basis * w]; });

  std::vector<IntVec> repeated;
  for (const auto& [v, count] : preimages)
    if (count >= 2 && !is_zero(v)) repeated.push_back(v);

  std::vector<IntVec> minimal;
  for (const auto& v : repeated) {
    const bool has_smaller = std::any_of(repeated.begin(), repeated.end(), [&](const IntVec& o) {
      return o != v && leq(o, v);
    });
    if (!has_smaller) minimal.push_back(v);
  }
  if (minimal.empty()) {
    throw Error(ErrorKind::kInvalidInput, "B has nontrivial kernel but no repeated fiber");
  }
  const IntVec v = *std::min_element(minimal.begin(), minimal.end(), graded_lex_less);

  const auto elements = fiber(b, v);
  ObstructionWitness wit;
  wit.v = v;
  wit.z = elements[0];
  wit.w = elements[1];

  auto split = [&](const IntVec& x, IntVec& first, IntVec& rest) {
    const auto lead = std::find_if(x.begin(), x.end(), [](const Int& c) { return sgn(c) != 0; });
    first = unit_vector(x.size(), static_cast<std::size_t>(lead - x.begin()));
    rest = sub(x, first);
    if (is_zero(rest)) {
      throw Error(ErrorKind::kInvalidInput,
                  "a basis column is a sum of other columns; B is not a Hilbert basis");
    }
  };
  split(wit.w, wit.w1, wit.w2);
  split(wit.z, wit.z1, wit.z2);
  return wit;
}

}  // namespace toric::hilbert
