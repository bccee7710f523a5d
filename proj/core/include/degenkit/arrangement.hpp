#pragma once

#include "degenkit/groth_class.hpp"

namespace degenkit::grothring {

/// Largest arrangement size accepted by the subset-enumeration oracle.
inline constexpr int kMaxEnumeratedHyperplanes = 30;

/// Exact binomial coefficient C(n, k); zero outside 0 <= k <= n.
BigInt binomial(int n, int k);

/**
 * Class of a simple-normal-crossing union of r hyperplanes in P^{n+1},
 * from the closed alternating sum
 *
 *   sum_{j=0}^{n} (-1)^j C(r, j+1) [P^{n-j}].
 *
 * Requires r >= 1 and n >= 0.
 */
GrothClass arrangement_class_closed(int r, int n);

/**
 * Same class, built from the restriction recursion
 *   P(r, n) = P(r-1, n) + [P^n] - P(r-1, n-1)
 * with P(r, 0) = r and P(1, n) = [P^n]. Tabulated bottom-up.
 */
GrothClass arrangement_class_recursive(int r, int n);

/**
 * Same class by literal inclusion-exclusion over the nonempty subsets S of
 * the hyperplanes. Under the normal-crossing hypothesis the intersection over
 * S is P^{n+1-|S|}, and empty once |S| > n+1, so branches of the subset walk
 * with |S| > n+1 are pruned. Every surviving subset is visited once.
 *
 * Throws ResourceLimitError for r > kMaxEnumeratedHyperplanes.
 */
GrothClass arrangement_class_inclusion_exclusion(int r, int n);

/// sum_{j=0}^{n} (-1)^j C(r, j+1), which equals 1 whenever 1 <= r <= n+1.
BigInt binomial_congruence_check(int r, int n);

}  // namespace degenkit::grothring
