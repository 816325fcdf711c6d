#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hocolim/diagram.hpp"

namespace hocolim {

/// H^n of Hom_{R[G]}(bar ⊗ C, R) for n in [lo, hi], using the normalized
/// inhomogeneous bar complex (tuples without identity entries).
HomologySummary ext_over_group_ring(const GModuleComplex& m, int lo, int hi);

/// Semi-simplicial set with a right G-action by cell permutations that
/// commute with faces: action[g][dim][cell] is cell·g.
struct GSemiSimplicialSet {
  GroupPtr group;
  std::vector<std::vector<std::string>> cells;                     // per dimension
  std::vector<std::vector<std::vector<std::size_t>>> faces;        // faces[dim][cell][i] = d_i, dim >= 1
  std::vector<std::vector<std::vector<std::size_t>>> action;       // action[g][dim][cell]

  std::optional<std::string> check() const;
  /// Cellular chains ∂σ = Σ (-1)^i d_i σ with the permutation action.
  GModuleComplex chains(RingSpec ring) const;
};

/// Cohomology of the totalization of the semi-simplicial space G^p × M
/// (every tuple, identities included), degrees [lo, hi].
HomologySummary borel_cohomology(const GModuleComplex& m, int lo, int hi);
HomologySummary borel_cohomology(const GSemiSimplicialSet& x, RingSpec ring, int lo, int hi);

}  // namespace hocolim
