#pragma once

#include <span>
#include <vector>

#include "degenkit/groth_class.hpp"
#include "degenkit/lattice_vector.hpp"

namespace degenkit::toriclat {

/// Rank over Q of the matrix whose rows are `rows` (fraction-free elimination).
std::size_t matrix_rank(std::span<const LatticeVector> rows);

/// Determinant of a square matrix given by rows.
BigInt determinant(std::span<const LatticeVector> rows);

/**
 * Nonzero invariant factors d_1 | d_2 | ... of the Smith normal form of the
 * matrix with the given rows. The length of the result is the rank.
 */
std::vector<BigInt> smith_invariants(std::span<const LatticeVector> rows);

}  // namespace degenkit::toriclat
