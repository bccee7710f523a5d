#include "degenkit/fan.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace degenkit::toriclat {

bool meet_in_common_face(const Cone& c1, const Cone& c2) {
  const Cone meet = intersect(c1, c2);
  return is_face(meet, c1) && is_face(meet, c2);
}

Fan::Fan(std::size_t rank, std::vector<Cone> max_cones) : rank_(rank), max_cones_(std::move(max_cones)) {
  for (const auto& c : max_cones_) {
    if (c.rank() != rank_) throw std::invalid_argument("Fan: cone rank does not match fan rank");
  }
  for (std::size_t i = 0; i < max_cones_.size(); ++i) {
    for (std::size_t j = i + 1; j < max_cones_.size(); ++j) {
      if (!meet_in_common_face(max_cones_[i], max_cones_[j])) {
        throw std::invalid_argument("Fan: cones " + std::to_string(i) + " and " + std::to_string(j) +
                                    " do not meet in a common face");
      }
    }
  }
  std::set<LatticeVector> rays;
  for (const auto& c : max_cones_) rays.insert(c.rays().begin(), c.rays().end());
  rays_.assign(rays.begin(), rays.end());
}

std::vector<std::vector<std::size_t>> Fan::cone_ray_indices() const {
  std::vector<std::vector<std::size_t>> out;
  out.reserve(max_cones_.size());
  for (const auto& c : max_cones_) {
    std::vector<std::size_t> idx;
    for (const auto& r : c.rays()) {
      idx.push_back(static_cast<std::size_t>(std::lower_bound(rays_.begin(), rays_.end(), r) - rays_.begin()));
    }
    std::sort(idx.begin(), idx.end());
    out.push_back(std::move(idx));
  }
  return out;
}

std::vector<std::vector<LatticeVector>> Fan::all_face_ray_sets() const {
  std::set<std::vector<LatticeVector>> faces;
  for (const auto& c : max_cones_) {
    for (auto& f : face_ray_sets(c)) faces.insert(std::move(f));
  }
  if (max_cones_.empty()) faces.insert({});
  return {faces.begin(), faces.end()};
}

}  // namespace degenkit::toriclat
