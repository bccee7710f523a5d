#include "degenkit/degeneration.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <type_traits>

#include "degenkit/arrangement.hpp"
#include "degenkit/errors.hpp"
#include "degenkit/toric_model.hpp"

namespace degenkit::degeneration {
namespace {

constexpr int kMaxCrossEnumeration = 24;

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string model_label(const ModelSpec& model) {
  return std::visit(
      [](const auto& s) -> std::string {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, LocalModelSpec>) {
          return "local model n=" + std::to_string(s.n) + " k=" + std::to_string(s.k);
        } else {
          return "degeneration n=" + std::to_string(s.n) + " d=" + std::to_string(s.d);
        }
      },
      model);
}

void render(const VerificationReport& report, int indent, std::ostringstream& out) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  std::size_t width = 0;
  for (const auto& c : report.checks) width = std::max(width, c.name.size());
  out << pad << model_label(report.model) << "\n";
  for (const auto& c : report.checks) {
    out << pad << "  [" << (c.pass ? "PASS" : "FAIL") << "] " << c.name << std::string(width - c.name.size() + 2, ' ')
        << c.detail << "\n";
  }
  out << pad << "  fiber class before: " << report.fiber_class_before.to_string() << "\n";
  out << pad << "  fiber class after:  " << report.fiber_class_after.to_string() << "\n";
  out << pad << "  mod-L invariant:    " << yes_no(report.mod_L_invariant) << "\n";
  for (const auto& sub : report.sub_reports) render(sub, indent + 4, out);
}

}  // namespace

void LocalModelSpec::validate() const {
  if (n < 1 || k < 1 || k > n) {
    throw std::invalid_argument("LocalModelSpec: requires 1 <= k <= n (got n=" + std::to_string(n) +
                                ", k=" + std::to_string(k) + ")");
  }
}

void DegenerationSpec::validate() const {
  if (n < 1 || d < 1 || d > n + 1) {
    throw std::invalid_argument("DegenerationSpec: requires n >= 1 and 1 <= d <= n+1 (got n=" + std::to_string(n) +
                                ", d=" + std::to_string(d) + ")");
  }
}

bool VerificationReport::passed() const {
  return mod_L_invariant && std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; }) &&
         std::all_of(sub_reports.begin(), sub_reports.end(), [](const VerificationReport& r) { return r.passed(); });
}

GrothClass coordinate_cross_class(int k) {
  if (k < 0) throw std::invalid_argument("coordinate_cross_class: k must be nonnegative");
  if (k > kMaxCrossEnumeration) {
    throw ResourceLimitError("coordinate_cross_class: k = " + std::to_string(k) + " exceeds the enumeration limit");
  }
  // The intersection of the hyperplanes {x_i = 0}, i in S, is A^{k-|S|}.
  GrothClass total;
  const std::uint32_t subsets = std::uint32_t{1} << k;
  for (std::uint32_t mask = 1; mask < subsets; ++mask) {
    const int size = std::popcount(mask);
    const GrothClass stratum = GrothClass::lefschetz_power(static_cast<std::size_t>(k - size));
    if (size % 2 == 1) {
      total += stratum;
    } else {
      total -= stratum;
    }
  }
  return total;
}

GrothClass singular_fiber_class(const LocalModelSpec& spec) {
  spec.validate();
  // {t = 0}: the y-line times the free factor A^{n-k} times {x_1...x_k = 0}.
  return GrothClass::lefschetz_power(static_cast<std::size_t>(spec.n - spec.k + 1)) * coordinate_cross_class(spec.k);
}

VerificationReport resolve_local_model(const LocalModelSpec& spec, int partition_bound) {
  spec.validate();
  using namespace toriclat;
  const int k = spec.k;
  const std::size_t free_dims = static_cast<std::size_t>(spec.n - k);

  VerificationReport report;
  report.model = spec;

  const Cone cone = model_cone(k);
  const Fan fan = model_subdivision(k);
  const LatticeVector direction = LatticeVector::basis(static_cast<std::size_t>(k) + 1, static_cast<std::size_t>(k));

  const bool all_smooth =
      std::all_of(fan.max_cones().begin(), fan.max_cones().end(), [](const Cone& c) { return is_smooth(c); });
  report.checks.push_back({"cones unimodular", all_smooth,
                           std::to_string(fan.max_cones().size()) + " maximal cones in rank " + std::to_string(k + 1)});

  const PartitionReport partition = check_partition(fan, cone, partition_bound);
  std::string partition_detail = std::to_string(partition.points_checked) + " lattice points, bound " +
                                 std::to_string(partition_bound);
  if (partition.uncovered_point) partition_detail += ", uncovered " + partition.uncovered_point->to_string();
  report.checks.push_back({"subdivision is a partition", partition.ok(), partition_detail});

  const SemistableReport semistable = semistable_fiber_check(fan, direction);
  report.checks.push_back({"central fiber reduced snc", semistable.snc,
                           "reduced=" + yes_no(semistable.reduced) + " smooth=" + yes_no(semistable.smooth)});

  if (k >= 2) {
    const auto charts = blowup_chart_sequence(k);
    bool charts_ok = charts.size() == static_cast<std::size_t>(k);
    for (std::size_t j = 0; charts_ok && j < charts.size(); ++j) {
      charts_ok = charts[j].relation_holds() && chart_generates(charts[j], dual_cone(fan.max_cones()[j]));
    }
    report.checks.push_back({"blow-up charts match cones", charts_ok, std::to_string(charts.size()) + " charts"});
  }

  report.fiber_class_before = singular_fiber_class(spec);
  const GrothClass closed_form =
      GrothClass::lefschetz_power(free_dims + 1) *
      (GrothClass::lefschetz_power(static_cast<std::size_t>(k)) -
       (GrothClass::lefschetz() - GrothClass::one()).pow(static_cast<unsigned>(k)));
  report.checks.push_back({"singular fiber scissor oracle", report.fiber_class_before == closed_form,
                           report.fiber_class_before.to_string()});

  report.fiber_class_after = GrothClass::lefschetz_power(free_dims) * fiber_class(fan, direction);
  const bool same_shape = report.fiber_class_after.degree() == spec.n &&
                          report.fiber_class_before.degree() == spec.n &&
                          report.fiber_class_after.leading_coeff() == k &&
                          report.fiber_class_before.leading_coeff() == k;
  report.checks.push_back({"resolved fiber has k components of dimension n", same_shape,
                           report.fiber_class_after.to_string()});

  const BigInt before_residue = grothring::reduce_mod_L(report.fiber_class_before);
  const BigInt after_residue = grothring::reduce_mod_L(report.fiber_class_after);
  report.mod_L_invariant = before_residue == after_residue;
  report.checks.push_back({"class mod L unchanged", report.mod_L_invariant,
                           before_residue.str() + " -> " + after_residue.str()});
  return report;
}

GrothClass central_fiber_arrangement_class(const DegenerationSpec& spec) {
  spec.validate();
  return grothring::arrangement_class_closed(spec.d, spec.n);
}

std::vector<int> stratum_depths(const DegenerationSpec& spec) {
  spec.validate();
  std::vector<int> depths;
  for (int k = 1; k <= std::min(spec.d, spec.n); ++k) depths.push_back(k);
  return depths;
}

VerificationReport full_degeneration_report(const DegenerationSpec& spec, int partition_bound) {
  spec.validate();
  if (spec.n < 2) throw std::invalid_argument("full_degeneration_report: requires n >= 2");

  VerificationReport report;
  report.model = spec;
  report.fiber_class_before = central_fiber_arrangement_class(spec);

  const BigInt residue = grothring::reduce_mod_L(report.fiber_class_before);
  report.checks.push_back({"arrangement class = 1 mod L", residue == 1,
                           report.fiber_class_before.to_string() + " = " + residue.str() + " mod L"});

  const auto oracle = grothring::arrangement_class_inclusion_exclusion(spec.d, spec.n);
  const auto recursive = grothring::arrangement_class_recursive(spec.d, spec.n);
  report.checks.push_back({"arrangement oracles agree",
                           oracle == report.fiber_class_before && recursive == report.fiber_class_before,
                           "closed, recursive and inclusion-exclusion"});

  const BigInt identity = grothring::binomial_congruence_check(spec.d, spec.n);
  report.checks.push_back({"alternating binomial sum = 1", identity == 1, identity.str()});

  BigInt carried = residue;
  for (int k : stratum_depths(spec)) {
    VerificationReport sub = resolve_local_model({spec.n, k}, partition_bound);
    carried += grothring::reduce_mod_L(sub.fiber_class_after) - grothring::reduce_mod_L(sub.fiber_class_before);
    report.checks.push_back({"stratum depth " + std::to_string(k) + " resolved", sub.passed(),
                             "t*x_" + std::to_string(spec.n + 1) + " = x_1...x_" + std::to_string(k)});
    report.sub_reports.push_back(std::move(sub));
  }

  report.fiber_class_after = GrothClass::constant(carried);
  report.mod_L_invariant = carried == residue;
  return report;
}

std::string render_text(const VerificationReport& report) {
  std::ostringstream out;
  render(report, 0, out);
  out << (report.passed() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

}  // namespace degenkit::degeneration
