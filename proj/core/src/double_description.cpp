#include "degenkit/double_description.hpp"

#include <algorithm>
#include <stdexcept>

#include "degenkit/integer_matrix.hpp"

namespace degenkit::toriclat {
namespace {

LatticeVector combine(std::int64_t alpha, const LatticeVector& u, std::int64_t beta, const LatticeVector& v) {
  return ((alpha * u) + (beta * v)).primitive();
}

}  // namespace

ConeGenerators extreme_rays(std::size_t ambient_rank, std::span<const LatticeVector> constraints) {
  std::vector<LatticeVector> lineality;
  for (std::size_t i = 0; i < ambient_rank; ++i) lineality.push_back(LatticeVector::basis(ambient_rank, i));
  std::vector<LatticeVector> rays;
  std::vector<LatticeVector> processed;

  for (const auto& a : constraints) {
    if (a.rank() != ambient_rank) throw std::invalid_argument("extreme_rays: constraint rank mismatch");
    if (a.is_zero()) continue;

    auto pivot = std::find_if(lineality.begin(), lineality.end(),
                              [&](const LatticeVector& l) { return dot(a, l) != 0; });
    if (pivot != lineality.end()) {
      LatticeVector l = *pivot;
      lineality.erase(pivot);
      std::int64_t al = dot(a, l);
      if (al < 0) {
        l = -l;
        al = -al;
      }
      // Move everything else into the hyperplane <a, .> = 0 along l.
      for (auto& other : lineality) other = combine(al, other, -dot(a, other), l);
      for (auto& r : rays) r = combine(al, r, -dot(a, r), l);
      rays.push_back(l);
      processed.push_back(a);
      continue;
    }

    std::vector<LatticeVector> positive, negative, next;
    std::vector<std::int64_t> pos_val, neg_val;
    for (const auto& r : rays) {
      const auto v = dot(a, r);
      if (v > 0) {
        positive.push_back(r);
        pos_val.push_back(v);
      } else if (v < 0) {
        negative.push_back(r);
        neg_val.push_back(v);
      } else {
        next.push_back(r);
      }
    }
    const std::size_t pointed_dim = ambient_rank - lineality.size();
    if (pointed_dim >= 2) {
      const std::size_t needed = pointed_dim - 2;
      for (std::size_t i = 0; i < positive.size(); ++i) {
        for (std::size_t j = 0; j < negative.size(); ++j) {
          std::vector<LatticeVector> common;
          for (const auto& c : processed) {
            if (dot(c, positive[i]) == 0 && dot(c, negative[j]) == 0) common.push_back(c);
          }
          if (common.size() < needed) continue;
          if (matrix_rank(common) != needed) continue;
          next.push_back(combine(pos_val[i], negative[j], -neg_val[j], positive[i]));
        }
      }
    }
    next.insert(next.end(), positive.begin(), positive.end());
    rays = std::move(next);
    processed.push_back(a);
  }

  std::sort(rays.begin(), rays.end());
  rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
  return {std::move(lineality), std::move(rays)};
}

}  // namespace degenkit::toriclat
