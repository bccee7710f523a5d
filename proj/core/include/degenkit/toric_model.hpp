#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "degenkit/chart.hpp"
#include "degenkit/cone.hpp"
#include "degenkit/fan.hpp"
#include "degenkit/groth_class.hpp"

namespace degenkit::toriclat {

// Toric description of the hypersurface t*y = z_1*...*z_n in A^{n+2}.
// N = Z^{n+1} with basis e_1..e_{n+1} (0-based indices 0..n), f_i = e_i + e_{n+1}.

/// Cone spanned by e_1..e_n, f_1..f_n, with inequality cache
/// x_i >= 0 and x_{n+1} <= x_1 + ... + x_n. Requires n >= 1.
Cone model_cone(int n);

/**
 * The n+2 monomials z_1..z_n, t, y of the model, i.e.
 * e_1*, ..., e_n*, e_{n+1}*, e_1* + ... + e_n* - e_{n+1}*, in this order.
 */
std::vector<LatticeVector> model_dual_generators(int n);

/**
 * Cone k (1 <= k <= n) of the subdivision: rays f_1..f_k, e_k..e_n, with the
 * slab cache x_i >= 0, x_1 + ... + x_{k-1} <= x_{n+1} <= x_1 + ... + x_k.
 */
Cone model_subdivision_cone(int n, int k);

/// Fan with maximal cones model_subdivision_cone(n, k), k = 1..n.
Fan model_subdivision(int n);

/**
 * Writes v in the monoid generated by model_dual_generators(n) using the
 * sign of the last coordinate: if it is negative, -v_{n+1} copies of the last
 * generator are split off first. The expansion is checked before returning.
 * Returns nullopt when v is not in the dual of model_cone(n).
 *
 * `generators` must be exactly model_dual_generators(v.rank() - 1).
 */
std::optional<std::vector<std::int64_t>> greedy_decompose(const LatticeVector& v,
                                                          std::span<const LatticeVector> generators);

struct PartitionReport {
  bool contained = false;    // every maximal cone lies in the parent
  bool compatible = false;   // pairwise intersections are common faces
  bool covered = false;      // every swept lattice point lies in some cone
  std::uint64_t points_checked = 0;
  std::optional<LatticeVector> uncovered_point;

  bool ok() const { return contained && compatible && covered; }
};

/**
 * Checks that `fan` subdivides `parent`: containment, face-compatibility and a
 * sweep over all lattice points of `parent` with |x_i| <= bound.
 */
PartitionReport check_partition(const Fan& fan, const Cone& parent, int bound);
bool verify_partition(const Fan& fan, const Cone& parent, int bound);

struct SemistableReport {
  bool reduced = false;
  bool smooth = false;
  bool snc = false;

  bool operator==(const SemistableReport&) const = default;
};

/**
 * Fiber over 0 of the monomial with exponent `direction`: reduced iff every
 * ray pairing positively with it pairs to exactly 1; smooth iff every maximal
 * cone is unimodular; snc iff both.
 */
SemistableReport semistable_fiber_check(const Fan& fan, const LatticeVector& direction);

/**
 * Class of the toric variety of a smooth fan: sum over cones tau of
 * (L - 1)^(rank - dim tau). Throws std::invalid_argument for non-smooth fans.
 */
grothring::GrothClass toric_class(const Fan& fan);

/// Same sum restricted to cones having a ray v with <direction, v> >= 1.
grothring::GrothClass fiber_class(const Fan& fan, const LatticeVector& direction);

/**
 * Replays the blow-ups of V(t, z_1), ..., V(t, z_{n-1}). Entry k-1 is the
 * smooth chart U_k (coordinates z_1..z_{k-1}, z_k', z_{k+1}..z_n and the
 * current t), for k < n; the last entry is the residual chart after n-1 steps
 * with relation t^{(n-1)} * y = z_n. Requires n >= 2.
 */
std::vector<ChartPresentation> blowup_chart_sequence(int n);

/// True iff the chart monomials span exactly `cone` and its rays form a lattice basis.
bool chart_generates(const ChartPresentation& chart, const Cone& cone);

}  // namespace degenkit::toriclat
