#include "degenkit/cone.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "degenkit/double_description.hpp"
#include "degenkit/errors.hpp"
#include "degenkit/integer_matrix.hpp"

namespace degenkit::toriclat {
namespace {

constexpr std::size_t kMaxFacetsForFaceEnumeration = 24;

void sort_unique(std::vector<LatticeVector>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

Cone::Cone(std::size_t rank) : rank_(rank) { build({}); }

Cone::Cone(std::size_t rank, std::vector<LatticeVector> generators) : rank_(rank) { build(std::move(generators)); }

void Cone::build(std::vector<LatticeVector> generators) {
  if (rank_ == 0) throw std::invalid_argument("Cone: rank must be positive");
  for (auto& g : generators) {
    if (g.rank() != rank_) {
      throw std::invalid_argument("Cone: generator " + g.to_string() + " does not have rank " +
                                  std::to_string(rank_));
    }
    if (g.is_zero()) throw std::invalid_argument("Cone: zero generator");
    g = g.primitive();
  }
  sort_unique(generators);

  // H-description: the dual system {a : <a, g> >= 0} has lineality equal to
  // the annihilator of the span and extreme rays equal to facet normals.
  ConeGenerators h = extreme_rays(rank_, generators);
  equations_ = std::move(h.lineality);
  for (auto& e : equations_) e = e.primitive();
  inequalities_ = std::move(h.rays);

  std::vector<LatticeVector> all_rows = equations_;
  all_rows.insert(all_rows.end(), inequalities_.begin(), inequalities_.end());
  if (matrix_rank(all_rows) != rank_) throw std::invalid_argument("Cone: generators span a cone containing a line");

  // A generator is extreme iff its active constraints have rank (rank - 1).
  for (const auto& g : generators) {
    std::vector<LatticeVector> active = equations_;
    for (const auto& a : inequalities_) {
      if (dot(a, g) == 0) active.push_back(a);
    }
    if (matrix_rank(active) == rank_ - 1) rays_.push_back(g);
  }
}

Cone Cone::with_inequalities(std::size_t rank, std::vector<LatticeVector> generators,
                             std::vector<LatticeVector> inequalities) {
  Cone c(rank, std::move(generators));
  if (!c.is_full_dimensional()) {
    throw DimensionError("Cone::with_inequalities: cone is not full-dimensional");
  }
  for (auto& a : inequalities) {
    if (a.rank() != rank || a.is_zero()) throw std::invalid_argument("Cone::with_inequalities: bad inequality");
    a = a.primitive();
    for (const auto& r : c.rays_) {
      if (dot(a, r) < 0) {
        throw std::invalid_argument("Cone::with_inequalities: inequality " + a.to_string() + " fails on ray " +
                                    r.to_string());
      }
    }
  }
  sort_unique(inequalities);
  for (const auto& facet : c.inequalities_) {
    if (!std::binary_search(inequalities.begin(), inequalities.end(), facet)) {
      throw std::invalid_argument("Cone::with_inequalities: facet " + facet.to_string() +
                                  " missing from the supplied description");
    }
  }
  return c;
}

bool Cone::contains(const LatticeVector& v) const {
  if (v.rank() != rank_) {
    throw std::invalid_argument("Cone::contains: rank mismatch (" + std::to_string(v.rank()) + " vs " +
                                std::to_string(rank_) + ")");
  }
  for (const auto& e : equations_) {
    if (dot(e, v) != 0) return false;
  }
  for (const auto& a : inequalities_) {
    if (dot(a, v) < 0) return false;
  }
  return true;
}

bool contains(const Cone& c, const LatticeVector& v) { return c.contains(v); }

Cone dual_cone(const Cone& c) {
  if (!c.is_full_dimensional()) {
    throw DimensionError("dual_cone: input cone has dimension " + std::to_string(c.dim()) + " in rank " +
                         std::to_string(c.rank()) + "; only full-dimensional cones are supported");
  }
  return Cone(c.rank(), c.inequalities());
}

Cone intersect(const Cone& c1, const Cone& c2) {
  if (c1.rank() != c2.rank()) throw std::invalid_argument("intersect: rank mismatch");
  std::vector<LatticeVector> constraints;
  for (const Cone* c : {&c1, &c2}) {
    for (const auto& e : c->equations()) {
      constraints.push_back(e);
      constraints.push_back(-e);
    }
    constraints.insert(constraints.end(), c->inequalities().begin(), c->inequalities().end());
  }
  ConeGenerators g = extreme_rays(c1.rank(), constraints);
  if (!g.lineality.empty()) throw std::logic_error("intersect: intersection of pointed cones has lineality");
  return Cone(c1.rank(), std::move(g.rays));
}

bool is_face(const Cone& face, const Cone& c) {
  if (face.rank() != c.rank()) return false;
  for (const auto& r : face.rays()) {
    if (!c.contains(r)) return false;
  }
  // Smallest face of c containing `face`: cut by the facets vanishing on it.
  std::vector<LatticeVector> tight;
  for (const auto& a : c.inequalities()) {
    bool vanishes = std::all_of(face.rays().begin(), face.rays().end(),
                                [&](const LatticeVector& r) { return dot(a, r) == 0; });
    if (vanishes) tight.push_back(a);
  }
  for (const auto& r : c.rays()) {
    bool on_face = std::all_of(tight.begin(), tight.end(), [&](const LatticeVector& a) { return dot(a, r) == 0; });
    if (on_face && !face.contains(r)) return false;
  }
  return true;
}

bool is_smooth(const Cone& c) {
  const auto& rays = c.rays();
  const auto factors = smith_invariants(rays);
  if (factors.size() != rays.size()) return false;
  return std::all_of(factors.begin(), factors.end(), [](const BigInt& d) { return d == 1; });
}

std::vector<std::vector<LatticeVector>> face_ray_sets(const Cone& c) {
  const auto& facets = c.inequalities();
  if (facets.size() > kMaxFacetsForFaceEnumeration) {
    throw ResourceLimitError("face_ray_sets: " + std::to_string(facets.size()) + " facets exceed the limit of " +
                             std::to_string(kMaxFacetsForFaceEnumeration));
  }
  std::set<std::vector<LatticeVector>> faces;
  const std::uint64_t subsets = std::uint64_t{1} << facets.size();
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    std::vector<LatticeVector> face;
    for (const auto& r : c.rays()) {
      bool keep = true;
      for (std::size_t i = 0; i < facets.size() && keep; ++i) {
        if ((mask >> i) & 1U) keep = dot(facets[i], r) == 0;
      }
      if (keep) face.push_back(r);
    }
    faces.insert(std::move(face));
  }
  return {faces.begin(), faces.end()};
}

}  // namespace degenkit::toriclat
