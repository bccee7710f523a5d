#pragma once

#include <cstddef>
#include <vector>

#include "degenkit/cone.hpp"

namespace degenkit::toriclat {

/**
 * A fan given by its maximal cones. The constructor checks that all cones
 * share the ambient rank and that every pairwise intersection is a face of
 * both cones; violations throw std::invalid_argument.
 */
class Fan {
public:
  Fan(std::size_t rank, std::vector<Cone> max_cones);

  std::size_t rank() const noexcept { return rank_; }
  const std::vector<Cone>& max_cones() const noexcept { return max_cones_; }

  /// Distinct rays of all maximal cones, sorted.
  const std::vector<LatticeVector>& rays() const noexcept { return rays_; }
  /// For each maximal cone, the sorted indices of its rays in rays().
  std::vector<std::vector<std::size_t>> cone_ray_indices() const;

  /// Every cone of the fan (faces of maximal cones, deduplicated, zero cone included).
  std::vector<std::vector<LatticeVector>> all_face_ray_sets() const;

  bool operator==(const Fan& other) const { return rank_ == other.rank_ && max_cones_ == other.max_cones_; }

private:
  std::size_t rank_;
  std::vector<Cone> max_cones_;
  std::vector<LatticeVector> rays_;
};

/// True iff c1 ∩ c2 is a face of both.
bool meet_in_common_face(const Cone& c1, const Cone& c2);

}  // namespace degenkit::toriclat
