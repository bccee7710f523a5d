#pragma once

#include <span>
#include <vector>

#include "degenkit/lattice_vector.hpp"

namespace degenkit::toriclat {

/// Generators of a polyhedral cone {x : <a, x> >= 0 for all constraints a}.
struct ConeGenerators {
  /// Basis of the lineality space (the largest linear subspace in the cone).
  std::vector<LatticeVector> lineality;
  /// Primitive extreme rays modulo the lineality space, sorted.
  std::vector<LatticeVector> rays;
};

/**
 * Double description method over exact integers. Constraints are added one at
 * a time to the initial description (lineality = whole space, no rays). A
 * constraint that is not identically zero on the lineality space consumes one
 * lineality direction; otherwise rays split into +/0/- and adjacent pairs are
 * combined. Adjacency is decided algebraically: two rays are adjacent iff the
 * constraints active at both have rank (ambient - dim lineality - 2).
 */
ConeGenerators extreme_rays(std::size_t ambient_rank, std::span<const LatticeVector> constraints);

}  // namespace degenkit::toriclat
