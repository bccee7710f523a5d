// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "degenkit/arrangement.hpp"
#include "degenkit/degeneration.hpp"
#include "degenkit/integer_matrix.hpp"
#include "degenkit/toric_model.hpp"
#include "support/oracles.hpp"
#include "verify_suites.hpp"

namespace {

using degenkit::grothring::GrothClass;
using degenkit::toriclat::Cone;
using degenkit::toriclat::LatticeVector;
namespace gr = degenkit::grothring;
namespace tl = degenkit::toriclat;
namespace dg = degenkit::degeneration;

struct Outcome {
  bool pass = true;
  std::string detail;
};

void fail(Outcome& o, const std::string& what) {
  if (o.pass) o.detail = what;
  o.pass = false;
}

// 169 cases: r = 1..13 by n = 0..12.
Outcome triple_agreement() {
  Outcome o;
  int cases = 0;
  for (int r = 1; r <= 13; ++r) {
    for (int n = 0; n <= 12; ++n) {
      ++cases;
      const auto closed = gr::arrangement_class_closed(r, n);
      if (closed != gr::arrangement_class_recursive(r, n) || closed != gr::arrangement_class_inclusion_exclusion(r, n)) {
        fail(o, "disagreement at r=" + std::to_string(r) + " n=" + std::to_string(n));
      }
      if (oracle::coeffs_of(closed) != oracle::arrangement_by_subset_size(r, n)) {
        fail(o, "oracle mismatch at r=" + std::to_string(r) + " n=" + std::to_string(n));
      }
    }
  }
  if (o.pass) o.detail = std::to_string(cases) + " cases";
  return o;
}

Outcome mod_L_congruence() {
  Outcome o;
  for (int n = 0; n <= 12; ++n) {
    for (int r = 1; r <= n + 1; ++r) {
      if (gr::reduce_mod_L(gr::arrangement_class_closed(r, n)) != 1) fail(o, "r=" + std::to_string(r) + " n=" + std::to_string(n));
    }
    if (gr::reduce_mod_L(gr::arrangement_class_closed(n + 2, n)) != 1 + (n % 2 == 0 ? 1 : -1)) {
      fail(o, "r=n+2, n=" + std::to_string(n));
    }
  }
  if (o.pass) o.detail = "r <= n+1 gives 1, r = n+2 gives 1 + (-1)^n";
  return o;
}

Outcome dual_generators() {
  Outcome o;
  for (int n = 2; n <= 8; ++n) {
    const auto m = static_cast<std::size_t>(n) + 1;
    std::set<oracle::IntVec> expected;
    for (std::size_t i = 0; i < m; ++i) {
      oracle::IntVec e(m, 0);
      e[i] = 1;
      expected.insert(e);
    }
    oracle::IntVec last(m, 1);
    last[m - 1] = -1;
    expected.insert(last);
    const Cone dual = tl::dual_cone(tl::model_cone(n));
    std::set<oracle::IntVec> got;
    for (const auto& r : dual.rays()) got.insert(oracle::to_ints(r));
    if (got != expected || dual.rays().size() != static_cast<std::size_t>(n) + 2) fail(o, "n=" + std::to_string(n));
  }
  if (o.pass) o.detail = "n = 2..8";
  return o;
}

Outcome resolution_certification() {
  Outcome o;
  std::uint64_t points = 0;
  for (int n = 1; n <= 8; ++n) {
    const auto fan = tl::model_subdivision(n);
    for (const auto& c : fan.max_cones()) {
      const auto inv = tl::smith_invariants(c.rays());
      const bool ones = inv.size() == c.rank() && std::all_of(inv.begin(), inv.end(), [](const auto& d) { return d == 1; });
      if (!ones || !tl::is_smooth(c)) fail(o, "non-unimodular cone at n=" + std::to_string(n));
    }
    const auto partition = tl::check_partition(fan, tl::model_cone(n), 4);
    points += partition.points_checked;
    if (!partition.ok()) fail(o, "partition fails at n=" + std::to_string(n));
    const auto m = static_cast<std::size_t>(n) + 1;
    if (!tl::semistable_fiber_check(fan, LatticeVector::basis(m, m - 1)).snc) fail(o, "not snc at n=" + std::to_string(n));
  }
  if (o.pass) o.detail = std::to_string(points) + " lattice points swept";
  return o;
}

Outcome chart_match() {
  Outcome o;
  int charts_checked = 0;
  for (int n = 2; n <= 8; ++n) {
    const auto fan = tl::model_subdivision(n);
    const auto charts = tl::blowup_chart_sequence(n);
    if (charts.size() != static_cast<std::size_t>(n)) fail(o, "chart count at n=" + std::to_string(n));
    for (std::size_t k = 0; k < charts.size() && k < fan.max_cones().size(); ++k) {
      ++charts_checked;
      if (!charts[k].relation_holds() || !tl::chart_generates(charts[k], tl::dual_cone(fan.max_cones()[k]))) {
        fail(o, "n=" + std::to_string(n) + " k=" + std::to_string(k + 1));
      }
    }
  }
  if (o.pass) o.detail = std::to_string(charts_checked) + " charts";
  return o;
}

Outcome fiber_invariance() {
  Outcome o;
  for (int n = 1; n <= 8; ++n) {
    for (int k = 1; k <= n; ++k) {
      const auto report = dg::resolve_local_model({n, k});
      const auto scissor = oracle::poly_mul(oracle::lefschetz_power(n - k + 1), oracle::coordinate_cross_by_complement(k));
      std::vector<std::vector<oracle::IntVec>> cones;
      for (int j = 1; j <= k; ++j) cones.push_back(oracle::subdivision_cone_rays(k, j));
      oracle::IntVec direction(static_cast<std::size_t>(k) + 1, 0);
      direction.back() = 1;
      const auto orbits = oracle::poly_mul(oracle::lefschetz_power(n - k),
                                           oracle::orbit_class(cones, static_cast<std::size_t>(k) + 1, direction));
      const std::string tag = "n=" + std::to_string(n) + " k=" + std::to_string(k);
      if (oracle::coeffs_of(report.fiber_class_before) != scissor) fail(o, tag + " before differs from scissor oracle");
      if (oracle::coeffs_of(report.fiber_class_after) != orbits) fail(o, tag + " after differs from orbit oracle");
      if (gr::reduce_mod_L(report.fiber_class_before) != 0 || gr::reduce_mod_L(report.fiber_class_after) != 0 ||
          !report.mod_L_invariant) {
        fail(o, tag + " constant coefficient");
      }
    }
  }
  const auto two = dg::resolve_local_model({2, 2});
  if (two.fiber_class_before != GrothClass({0, -1, 2}) || two.fiber_class_after != GrothClass({0, 0, 2})) {
    fail(o, "n=k=2 values");
  }
  if (o.pass) o.detail = "n=k=2: " + two.fiber_class_before.to_string() + " -> " + two.fiber_class_after.to_string();
  return o;
}

Outcome degeneration_reports() {
  Outcome o;
  int reports = 0;
  for (int n = 2; n <= 8; ++n) {
    for (int d = 1; d <= n + 1; ++d) {
      ++reports;
      const auto report = dg::full_degeneration_report({n, d});
      bool subs = std::all_of(report.sub_reports.begin(), report.sub_reports.end(),
                              [](const dg::VerificationReport& r) { return r.mod_L_invariant; });
      if (!report.passed() || !subs) fail(o, "n=" + std::to_string(n) + " d=" + std::to_string(d));
    }
  }
  if (!dg::full_degeneration_report({3, 4}).passed()) fail(o, "n=3 d=4");
  if (o.pass) o.detail = std::to_string(reports) + " reports";
  return o;
}

Outcome greedy_decomposition() {
  Outcome o;
  std::uint64_t points = 0;
  for (int n = 1; n <= 4; ++n) {
    const auto gens = tl::model_dual_generators(n);
    const Cone dual = tl::dual_cone(tl::model_cone(n));
    const auto m = static_cast<std::size_t>(n) + 1;
    std::vector<std::int64_t> x(m, -5);
    for (;;) {
      const LatticeVector v(x);
      if (dual.contains(v)) {
        ++points;
        const auto coeffs = tl::greedy_decompose(v, gens);
        if (!coeffs) {
          fail(o, "no decomposition for " + v.to_string());
        } else {
          LatticeVector sum = LatticeVector::zero(m);
          for (std::size_t g = 0; g < gens.size(); ++g) {
            if ((*coeffs)[g] < 0) fail(o, "negative coefficient for " + v.to_string());
            sum = sum + (*coeffs)[g] * gens[g];
          }
          if (sum != v) fail(o, "expansion mismatch for " + v.to_string());
        }
      }
      std::size_t i = 0;
      while (i < m && x[i] == 5) x[i++] = -5;
      if (i == m) break;
      ++x[i];
    }
  }
  if (o.pass) o.detail = std::to_string(points) + " lattice points";
  return o;
}

Outcome duality_involution() {
  Outcome o;
  std::mt19937_64 rng(20240229);
  for (int i = 0; i < 200; ++i) {
    const std::size_t rank = 1 + static_cast<std::size_t>(i % 5);
    const Cone c = degenkit::cli::random_unimodular_cone(rank, rng);
    if (!c.is_full_dimensional() || !(tl::dual_cone(tl::dual_cone(c)) == c)) fail(o, "random cone " + std::to_string(i));
  }
  for (int n = 1; n <= 8; ++n) {
    const Cone sigma = tl::model_cone(n);
    if (!(tl::dual_cone(tl::dual_cone(sigma)) == sigma)) fail(o, "model cone n=" + std::to_string(n));
  }
  if (o.pass) o.detail = "200 random cones + 8 model cones";
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;  // <= 0: no time limit
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "arrangement-class triple agreement", 1.0, triple_agreement},
      {2, "mod-L congruence", 0.0, mod_L_congruence},
      {3, "dual-cone generators", 0.0, dual_generators},
      {4, "resolution certification", 5.0, resolution_certification},
      {5, "chart/dual-cone match", 0.0, chart_match},
      {6, "fiber-class invariance mod L", 0.0, fiber_invariance},
      {7, "degeneration reports", 10.0, degeneration_reports},
      {8, "greedy decomposition", 0.0, greedy_decomposition},
      {9, "duality involution", 0.0, duality_involution},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && seconds >= c.limit_seconds) {
      o.pass = false;
      o.detail += " (over the " + std::to_string(c.limit_seconds).substr(0, 4) + " s limit)";
    }
    if (!o.pass) ++failures;
    std::printf("[%s] %d. %s: %s (%.3f s)\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), seconds);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
