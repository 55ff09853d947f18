#pragma once

#include <optional>
#include <vector>

#include "toric/intmat.hpp"

/// Exact integer linear algebra over Z.
namespace toric::intlin {

/// U * M * V = D with U, V unimodular and D diagonal with d1 | d2 | ... | dr.
struct SNFDecomp {
  IntMat U;
  IntMat V;
  IntMat D;
  std::vector<Int> invariant_factors;

  std::size_t rank() const noexcept { return invariant_factors.size(); }
};

/// Pivots on the nonzero entry of least absolute value; deterministic.
SNFDecomp smith_normal_form(const IntMat& m);

std::size_t rank(const IntMat& m);

/// Z-basis of {x : M x = 0} as columns, reduced and sorted by 1-norm then
/// lexicographically, each column with positive leading entry.
IntMat kernel_basis(const IntMat& m);

/// True iff Z^n / (row lattice of A) is free.
bool is_torsion_free_quotient(const IntMat& a);

/// Q with C * Q = I, when C is surjective over Z.
std::optional<IntMat> right_inverse(const IntMat& c);

/// X with M * X = T over Z; std::nullopt when no integer solution exists.
std::optional<IntMat> solve_integer(const IntMat& m, const IntMat& t);

/// Inverse of a unimodular matrix. Throws if |det| != 1.
IntMat unimodular_inverse(const IntMat& u);

}  // namespace toric::intlin
