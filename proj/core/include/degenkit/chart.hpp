#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "degenkit/lattice_vector.hpp"

namespace degenkit::toriclat {

struct ChartCoordinate {
  std::string name;
  LatticeVector monomial;  // exponent vector in M

  bool operator==(const ChartCoordinate&) const = default;
};

/// Binomial relation prod(left) = prod(right), as multisets of coordinate indices.
struct BinomialRelation {
  std::vector<std::size_t> left;
  std::vector<std::size_t> right;

  bool operator==(const BinomialRelation&) const = default;
};

/**
 * Symbolic affine chart: named coordinate monomials plus at most one
 * binomial relation. The constructor rejects relations that do not hold as
 * an identity of exponent vectors, out-of-range indices, and mixed ranks.
 */
class ChartPresentation {
public:
  ChartPresentation(std::vector<ChartCoordinate> coordinates, std::optional<BinomialRelation> relation = {});

  const std::vector<ChartCoordinate>& coordinates() const noexcept { return coordinates_; }
  const std::optional<BinomialRelation>& relation() const noexcept { return relation_; }
  std::size_t rank() const;

  std::vector<LatticeVector> monomials() const;
  /// Whether sum(left monomials) == sum(right monomials); true when there is no relation.
  bool relation_holds() const;

  bool operator==(const ChartPresentation&) const = default;

private:
  std::vector<ChartCoordinate> coordinates_;
  std::optional<BinomialRelation> relation_;
};

}  // namespace degenkit::toriclat
