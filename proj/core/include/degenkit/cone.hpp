#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "degenkit/lattice_vector.hpp"

namespace degenkit::toriclat {

/**
 * A strongly convex rational polyhedral cone in N_R = R^m.
 *
 * Both descriptions are computed at construction and never change:
 *  - rays(): primitive, irredundant, sorted lexicographically;
 *  - inequalities(): primitive facet normals a with <a, x> >= 0, sorted;
 *  - equations(): a basis of the annihilator of the span (empty when the
 *    cone is full-dimensional). Facet normals are only defined modulo it.
 *
 * Construction throws std::invalid_argument for zero rays, mismatched ranks,
 * or a cone that contains a line.
 */
class Cone {
public:
  /// The zero cone {0} in the given rank.
  explicit Cone(std::size_t rank);
  Cone(std::size_t rank, std::vector<LatticeVector> generators);

  /**
   * Builds the cone from its rays and cross-validates a caller-supplied
   * inequality description (which may be redundant). Every supplied
   * inequality must hold on the rays and every facet must appear among the
   * supplied ones; otherwise std::invalid_argument. Full-dimensional only.
   */
  static Cone with_inequalities(std::size_t rank, std::vector<LatticeVector> generators,
                                std::vector<LatticeVector> inequalities);

  std::size_t rank() const noexcept { return rank_; }
  std::size_t dim() const noexcept { return rank_ - equations_.size(); }
  bool is_full_dimensional() const noexcept { return equations_.empty(); }

  const std::vector<LatticeVector>& rays() const noexcept { return rays_; }
  const std::vector<LatticeVector>& inequalities() const noexcept { return inequalities_; }
  const std::vector<LatticeVector>& equations() const noexcept { return equations_; }

  /// Membership test against the cached H-description.
  bool contains(const LatticeVector& v) const;

  /// Equality of canonical ray lists (rank included).
  bool operator==(const Cone& other) const { return rank_ == other.rank_ && rays_ == other.rays_; }

private:
  Cone() = default;
  void build(std::vector<LatticeVector> generators);

  std::size_t rank_ = 0;
  std::vector<LatticeVector> rays_;
  std::vector<LatticeVector> inequalities_;
  std::vector<LatticeVector> equations_;
};

bool contains(const Cone& c, const LatticeVector& v);

/**
 * Dual cone {m : <m, x> >= 0 for all x in c}, whose rays are the facet
 * normals of c. Throws DimensionError unless c is full-dimensional.
 */
Cone dual_cone(const Cone& c);

/// c1 ∩ c2, recomputed from the combined inequalities.
Cone intersect(const Cone& c1, const Cone& c2);

/// True iff `face` is a face of `c` (the empty face {0} included).
bool is_face(const Cone& face, const Cone& c);

/**
 * True iff the rays of c are part of a Z-basis of the lattice: linearly
 * independent with all Smith invariant factors equal to 1.
 */
bool is_smooth(const Cone& c);

/**
 * All faces of c as sorted ray lists, obtained by setting subsets of the
 * facet inequalities to equality. Includes the zero face and c itself.
 */
std::vector<std::vector<LatticeVector>> face_ray_sets(const Cone& c);

}  // namespace degenkit::toriclat
