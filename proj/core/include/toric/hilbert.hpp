#pragma once

#include <optional>
#include <vector>

#include "toric/intmat.hpp"

/// Monoid computations on K = ker A ∩ N^n.
namespace toric::hilbert {

/// Columns are the Hilbert basis of K = ker A ∩ N^n for the presentation A,
/// in generator order (see generator_less).
struct HilbertBasisMat {
  IntMat basis;         // n x m, nonnegative
  IntMat presentation;  // A, k x n

  std::size_t n() const noexcept { return basis.rows(); }
  std::size_t m() const noexcept { return basis.cols(); }
};

/// Wraps a caller-supplied nonnegative matrix, e.g. a B read from a file or
/// one of the textbook examples. Columns are taken in the given order.
HilbertBasisMat from_matrix(IntMat basis, IntMat presentation = {});

/// A <=-minimal v in K \ {0} with two distinct preimages w and z under B.
struct ObstructionWitness {
  IntVec v;
  IntVec w, z;
  IntVec w1, w2, z1, z2;
};

/// Strictly positive v with A v = 0, if any. Built from the Hilbert basis:
/// the least positive basis column when one exists, otherwise a greedy
/// cover of the coordinates by basis columns.
std::optional<IntVec> positive_kernel_vector(const IntMat& a);
/// Same, reusing an already computed Hilbert basis of K.
std::optional<IntVec> positive_kernel_vector(const HilbertBasisMat& hb);

/// Contejean–Devie completion. Returns an n x 0 basis when K = {0}.
HilbertBasisMat hilbert_basis(const IntMat& a);

/// All w in N^m with B w = v, in graded lexicographic order.
/// Throws kUnboundedFiber if B has a zero column.
std::vector<IntVec> fiber(const HilbertBasisMat& b, const IntVec& v);

/// std::nullopt iff ker B is trivial.
std::optional<ObstructionWitness> minimal_obstruction(const HilbertBasisMat& b);

}  // namespace toric::hilbert
