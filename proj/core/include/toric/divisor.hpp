#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "toric/intmat.hpp"
#include "toric/toric.hpp"

/// Divisor-level extension problems for maps into a toric variety.
///
/// Cohomology groups are finitely generated abelian groups
/// Z^r ⊕ Z/t_1 ⊕ ... ⊕ Z/t_s in coordinates; an element of G^k is a k x dim(G)
/// IntMat, one row per component.
namespace toric::divisor {

class AbGroup {
 public:
  AbGroup() = default;
  AbGroup(std::size_t free_rank, std::vector<Int> torsion_orders);

  std::size_t free_rank() const noexcept { return free_rank_; }
  const std::vector<Int>& torsion_orders() const noexcept { return torsion_; }
  /// Number of coordinates.
  std::size_t dim() const noexcept { return free_rank_ + torsion_.size(); }
  /// Order of coordinate i, 0 for a free coordinate.
  Int order(std::size_t i) const;

  /// Torsion coordinates reduced into [0, t).
  IntVec reduce(const IntVec& x) const;
  IntMat reduce_rows(const IntMat& xs) const;
  bool equal(const IntVec& a, const IntVec& b) const { return reduce(a) == reduce(b); }
  bool is_zero(const IntVec& x) const;

  friend bool operator==(const AbGroup&, const AbGroup&) = default;

 private:
  std::size_t free_rank_ = 0;
  std::vector<Int> torsion_;
};

/// Coordinate matrix (target.dim x source.dim). Must send the relations of
/// the source into the relations of the target.
struct GroupHom {
  AbGroup source;
  AbGroup target;
  IntMat matrix;

  static GroupHom make(AbGroup source, AbGroup target, IntMat matrix);
  IntVec apply(const IntVec& x) const;
  /// Rowwise; the rows of xs are elements of the source.
  IntMat apply_rows(const IntMat& xs) const;
  bool is_surjective() const;

  friend bool operator==(const GroupHom&, const GroupHom&) = default;
};

struct DivisorEnvironment {
  std::vector<std::string> primes;  // names of the prime divisors Z_gamma
  IntMat classes;                   // |primes| x dim(h_s): c1(Z_gamma) per row
  AbGroup h_s;                      // H^2(S, Z)
  AbGroup h_x;                      // H^2(X, Z)
  GroupHom rho;                     // restriction H^2(X) -> H^2(S)
  ToricProfile profile;

  /// Throws kInvalidInput on shape or consistency violations.
  void validate() const;
};

/// (f) = sum_gamma v_gamma Z_gamma; column gamma of divisor is v_gamma.
struct ExtensionProblem {
  DivisorEnvironment env;
  IntMat divisor;  // n x |primes|, nonnegative
};

enum class Verdict { kExtendable, kNotExtendable };

struct Certificate {
  IntMat selection;  // U, m x |primes|, with B U = V
  IntMat eta;        // ell x dim(h_x)
};

struct ExtensionDecision {
  Verdict verdict = Verdict::kNotExtendable;
  std::optional<Certificate> certificate;
  std::uint64_t selections_examined = 0;
  std::uint64_t selections_total = 0;  // product of fiber sizes
};

inline constexpr std::uint64_t kDefaultBudget = 1'000'000;

/// Checks shapes, A v_gamma = 0, nonempty fibers under B, and that the
/// divisor of f is principal: sum_gamma v_gamma ⊗ c1(Z_gamma) = 0 in H_S^n.
/// Errors: kColumnNotInKernel, kEmptyFiber, kNonPrincipalDivisor,
/// kInvalidInput.
ExtensionProblem build_extension_problem(DivisorEnvironment env, IntMat divisor);

/// eta in H_X^ell with rho(E eta) = c in H_S^m, if one exists.
/// `c` is m x dim(h_s).
std::optional<IntMat> class_membership(const DivisorEnvironment& env, const IntMat& c);

/// sum_gamma u_gamma ⊗ c1(Z_gamma) in H_S^m for a selection U (m x |primes|).
IntMat divisor_class(const DivisorEnvironment& env, const IntMat& selection);

/// Searches fiber selections in lexicographic order (first prime slowest)
/// for one whose class lies in the image of rho ∘ E. When ker B is trivial
/// the unique selection is returned as Extendable without a class test.
/// Errors: kNotPrime, kNoOrigin, kEmptyFiber, kSearchBudgetExceeded.
ExtensionDecision decide_extension(const ExtensionProblem& problem,
                                   std::uint64_t budget = kDefaultBudget);

/// True iff B U = V and the class equation hold exactly.
bool verify_certificate(const ExtensionProblem& problem, const Certificate& cert);

enum class Labeling {
  kExampleCone,  // w-parts on Z1, Z2 and z-parts on W1, W2
  kSymmetric,    // the other way round
};

/// Problem over four primes Z1, Z2, W1, W2 with H_S = Z, classes
/// (-1, -1, +1, +1), H_X = 0, built from the minimal obstruction witness.
/// Errors: kNotPrime, kNoOrigin, kKerBTrivial.
ExtensionProblem generate_counterexample(const ToricProfile& profile,
                                         Labeling labeling = Labeling::kExampleCone);

}  // namespace toric::divisor
