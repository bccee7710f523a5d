#pragma once

#include <string>
#include <variant>
#include <vector>

#include "degenkit/groth_class.hpp"

namespace degenkit::degeneration {

using grothring::GrothClass;

/// Local normal form t * x_{n+1} = x_1 * ... * x_k with n - k free coordinates.
struct LocalModelSpec {
  int n = 0;
  int k = 0;

  void validate() const;
  bool operator==(const LocalModelSpec&) const = default;
};

/// Degree-d hypersurfaces of dimension n degenerating to d hyperplanes, d <= n + 1.
struct DegenerationSpec {
  int n = 0;
  int d = 0;

  void validate() const;
  bool operator==(const DegenerationSpec&) const = default;
};

using ModelSpec = std::variant<LocalModelSpec, DegenerationSpec>;

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;

  bool operator==(const Check&) const = default;
};

/**
 * Outcome of a model verification. For a local model the two classes are the
 * central fibers before and after resolution. For a full degeneration,
 * `fiber_class_before` is the class of the hyperplane arrangement and
 * `fiber_class_after` is the constant representative of the resolved central
 * fiber in Z[L]/(L), obtained by carrying the residue through every stratum.
 */
struct VerificationReport {
  ModelSpec model;
  std::vector<Check> checks;
  GrothClass fiber_class_before;
  GrothClass fiber_class_after;
  bool mod_L_invariant = false;
  std::vector<VerificationReport> sub_reports;

  /// All checks pass, the residue is preserved, and every sub-report passes.
  bool passed() const;
  bool operator==(const VerificationReport&) const = default;
};

/// Default lattice-point bound used for the partition sweep.
inline constexpr int kDefaultPartitionBound = 4;

/**
 * Class of {x_1 * ... * x_k = 0} in A^k by inclusion-exclusion over the
 * coordinate hyperplanes: sum over nonempty S of (-1)^{|S|+1} L^{k-|S|}.
 */
GrothClass coordinate_cross_class(int k);

/// Singular central fiber {t = 0} of the local model: L^{n-k} * L * [x_1...x_k = 0].
GrothClass singular_fiber_class(const LocalModelSpec& spec);

VerificationReport resolve_local_model(const LocalModelSpec& spec, int partition_bound = kDefaultPartitionBound);

/// Class of the central fiber V(F_0): the arrangement class P(d, n).
GrothClass central_fiber_arrangement_class(const DegenerationSpec& spec);

/// Stratum depths 1..min(d, n) of the arrangement that carry a local model.
std::vector<int> stratum_depths(const DegenerationSpec& spec);

/// Requires n >= 2 on top of DegenerationSpec::validate().
VerificationReport full_degeneration_report(const DegenerationSpec& spec,
                                            int partition_bound = kDefaultPartitionBound);

/// Aligned text table of checks (sub-reports indented).
std::string render_text(const VerificationReport& report);

}  // namespace degenkit::degeneration
