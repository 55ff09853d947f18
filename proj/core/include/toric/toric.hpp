#pragma once

#include <optional>
#include <vector>

#include "toric/hilbert.hpp"
#include "toric/intmat.hpp"

namespace toric {

/// The rows of A generate the lattice defining Y ⊂ C^n as the zero set of
/// the lattice ideal. A must be nonzero.
class LatticePresentation {
 public:
  explicit LatticePresentation(IntMat a);

  const IntMat& matrix() const noexcept { return a_; }
  std::size_t n() const noexcept { return a_.cols(); }
  std::size_t k() const noexcept { return a_.rows(); }

 private:
  IntMat a_;
};

/// x^plus - x^minus for one lattice vector, plus - minus = source row.
struct BinomialPair {
  IntVec plus;
  IntVec minus;
};

enum class LocalIrreducibility { kIrreducible, kNotIrreducible, kNotComputed };

struct LocalIrreducibilityResult {
  LocalIrreducibility status = LocalIrreducibility::kNotComputed;
  // g_i per column of B: gcd of the entries of rows supported only at i.
  std::vector<Int> column_gcds;

  /// 1-based columns whose gcd exceeds 1.
  std::vector<std::size_t> offending_columns() const;
};

struct ToricProfile {
  IntMat presentation;
  bool is_prime = false;
  bool contains_origin = false;
  std::optional<IntVec> positive_vector;
  std::size_t dimension = 0;
  hilbert::HilbertBasisMat basis;
  IntMat kernel;  // E, m x ell
  bool normalization_is_affine_space = false;
  LocalIrreducibilityResult local_irreducibility;

  std::size_t n() const noexcept { return basis.n(); }
  std::size_t m() const noexcept { return basis.m(); }
  std::size_t ell() const noexcept { return kernel.cols(); }
};

std::vector<BinomialPair> binomials(const LatticePresentation& p);

ToricProfile classify(const LatticePresentation& p);

/// Local irreducibility of Y when its normalisation is C^m via t -> t^B.
///
/// The axis map s -> phi(0,..,s,..,0) has components s^{b_ji} for the rows
/// j supported only at i and 0 elsewhere, so it is injective iff the gcd of
/// those exponents is 1, and phi is injective iff every axis map is.
/// Throws kMissingDiagonalRow if some column has no such row.
LocalIrreducibilityResult is_locally_irreducible(const hilbert::HilbertBasisMat& b);

/// Component j is prod_i t_i^{b_ji}, with 0^0 = 1.
std::vector<Rational> evaluate_monomial_map(const hilbert::HilbertBasisMat& b,
                                            const std::vector<Rational>& t);

}  // namespace toric
