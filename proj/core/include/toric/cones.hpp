#pragma once

#include <vector>

#include "toric/intmat.hpp"

/// Rational polyhedral cones and saturation of affine semigroups.
namespace toric::cones {

/// A cone in Q^d held in both representations: cone(generators) equals
/// {x : <h, x> >= 0 for every h in inequalities}. A lineality space shows up
/// as opposite pairs of generators (or of inequalities, for equations).
/// Vectors are primitive, deduplicated and sorted with generator_less.
struct RationalCone {
  std::size_t ambient_dim = 0;
  std::vector<IntVec> generators;
  std::vector<IntVec> inequalities;

  /// Derives the inequalities of cone(gens) by double description.
  static RationalCone from_generators(std::size_t dim, std::vector<IntVec> gens);

  bool contains(const IntVec& x) const;
  bool is_pointed() const;
};

struct SemigroupPresentation {
  std::size_t ambient_dim = 0;
  std::vector<IntVec> generators;
};

/// Generators of {x : <h, x> >= 0 for all h in halfspaces}: extreme rays plus
/// a +-basis of the lineality space.
std::vector<IntVec> cone_from_inequalities(std::size_t dim,
                                           const std::vector<IntVec>& halfspaces);

/// The dual cone {v : <g, v> >= 0 for every generator g}.
RationalCone dual_cone(const RationalCone& cone);

/// Hilbert basis of tau ∩ G, where tau is the cone spanned by the generators
/// and G the lattice they generate. Throws kNotPointed if tau contains a
/// line. Zero generators are ignored; an all-zero input yields no generators.
SemigroupPresentation saturate_semigroup(const SemigroupPresentation& s);

/// True iff x is an N-combination of the generators.
bool semigroup_contains(const SemigroupPresentation& s, const IntVec& x);

/// The semigroup equals its saturation.
bool is_normal(const SemigroupPresentation& s);

}  // namespace toric::cones
