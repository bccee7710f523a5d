#include "degenkit/chart.hpp"

#include <stdexcept>

namespace degenkit::toriclat {
namespace {

LatticeVector sum_of(const std::vector<ChartCoordinate>& coords, const std::vector<std::size_t>& idx,
                     std::size_t rank) {
  LatticeVector acc = LatticeVector::zero(rank);
  for (auto i : idx) acc = acc + coords[i].monomial;
  return acc;
}

}  // namespace

ChartPresentation::ChartPresentation(std::vector<ChartCoordinate> coordinates, std::optional<BinomialRelation> relation)
    : coordinates_(std::move(coordinates)), relation_(std::move(relation)) {
  if (coordinates_.empty()) throw std::invalid_argument("ChartPresentation: no coordinates");
  for (const auto& c : coordinates_) {
    if (c.monomial.rank() != coordinates_.front().monomial.rank()) {
      throw std::invalid_argument("ChartPresentation: coordinate monomials of different ranks");
    }
  }
  if (relation_) {
    for (const auto* side : {&relation_->left, &relation_->right}) {
      for (auto i : *side) {
        if (i >= coordinates_.size()) throw std::invalid_argument("ChartPresentation: relation index out of range");
      }
    }
    if (!relation_holds()) {
      throw std::invalid_argument("ChartPresentation: relation does not hold as a lattice identity");
    }
  }
}

std::size_t ChartPresentation::rank() const { return coordinates_.front().monomial.rank(); }

std::vector<LatticeVector> ChartPresentation::monomials() const {
  std::vector<LatticeVector> out;
  out.reserve(coordinates_.size());
  for (const auto& c : coordinates_) out.push_back(c.monomial);
  return out;
}

bool ChartPresentation::relation_holds() const {
  if (!relation_) return true;
  return sum_of(coordinates_, relation_->left, rank()) == sum_of(coordinates_, relation_->right, rank());
}

}  // namespace degenkit::toriclat
