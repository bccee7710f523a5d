#include "verify_suites.hpp"

#include <algorithm>

#include "degenkit/arrangement.hpp"
#include "degenkit/degeneration.hpp"
#include "degenkit/toric_model.hpp"

namespace degenkit::cli {
namespace {

using grothring::GrothClass;
using toriclat::Cone;
using toriclat::LatticeVector;

std::string case_rn(int r, int n) { return "r=" + std::to_string(r) + " n=" + std::to_string(n); }

SuiteRow arrangement_row(int r, int n) {
  const auto closed = grothring::arrangement_class_closed(r, n);
  const auto recursive = grothring::arrangement_class_recursive(r, n);
  const auto oracle = grothring::arrangement_class_inclusion_exclusion(r, n);
  const BigInt residue = grothring::reduce_mod_L(closed);
  bool ok = closed == recursive && closed == oracle;
  std::string detail = closed.to_string() + " | residue " + residue.str();
  if (r <= n + 1) {
    ok = ok && residue == 1 && grothring::binomial_congruence_check(r, n) == 1;
  } else if (r == n + 2) {
    ok = ok && residue == (n % 2 == 0 ? 2 : 0);
  }
  return {"lemma-arrangement", case_rn(r, n), ok, detail};
}

// Every lattice point of the dual cone with |a_i| <= bound.
bool greedy_exhaustive(int n, int bound, std::uint64_t& points) {
  const auto gens = toriclat::model_dual_generators(n);
  const Cone dual(static_cast<std::size_t>(n) + 1, gens);
  const std::size_t m = static_cast<std::size_t>(n) + 1;
  std::vector<std::int64_t> x(m, -bound);
  for (;;) {
    LatticeVector v(x);
    if (dual.contains(v)) {
      ++points;
      if (!toriclat::greedy_decompose(v, gens)) return false;
    } else if (toriclat::greedy_decompose(v, gens)) {
      return false;
    }
    std::size_t i = 0;
    while (i < m && x[i] == bound) x[i++] = -bound;
    if (i == m) return true;
    ++x[i];
  }
}

}  // namespace

Cone random_unimodular_cone(std::size_t rank, std::mt19937_64& rng) {
  std::vector<std::vector<std::int64_t>> rows(rank, std::vector<std::int64_t>(rank, 0));
  for (std::size_t i = 0; i < rank; ++i) rows[i][i] = 1;
  std::uniform_int_distribution<std::size_t> pick(0, rank - 1);
  std::uniform_int_distribution<int> scale(-2, 2);
  std::uniform_int_distribution<int> op(0, 2);
  for (std::size_t step = 0; step < 3 * rank; ++step) {
    const auto i = pick(rng);
    const auto j = pick(rng);
    switch (op(rng)) {
      case 0:
        if (i != j) {
          const int c = scale(rng);
          for (std::size_t col = 0; col < rank; ++col) rows[i][col] += c * rows[j][col];
        }
        break;
      case 1:
        std::swap(rows[i], rows[j]);
        break;
      default:
        for (auto& x : rows[i]) x = -x;
        break;
    }
  }
  std::vector<LatticeVector> gens;
  for (auto& r : rows) gens.emplace_back(std::move(r));
  return Cone(rank, std::move(gens));
}

std::vector<SuiteRow> arrangement_suite(const SuiteLimits& limits) {
  std::vector<SuiteRow> rows;
  for (int r = 1; r <= limits.max_n + 1; ++r) {
    for (int n = 0; n <= limits.max_n; ++n) rows.push_back(arrangement_row(r, n));
  }
  // r = n + 2 cases not already covered by the square.
  for (int n = 0; n <= limits.max_n; ++n) {
    if (n + 2 > limits.max_n + 1) rows.push_back(arrangement_row(n + 2, n));
  }
  return rows;
}

std::vector<SuiteRow> toric_suite(const SuiteLimits& limits) {
  using namespace toriclat;
  std::vector<SuiteRow> rows;
  const std::string suite = "lemma-toric";
  for (int n = 1; n <= limits.max_n; ++n) {
    const std::string tag = "n=" + std::to_string(n);
    const std::size_t rank = static_cast<std::size_t>(n) + 1;
    const Cone sigma = model_cone(n);
    const Cone dual = dual_cone(sigma);

    if (n >= 2) {
      const Cone expected(rank, model_dual_generators(n));
      const bool ok = dual == expected && dual.rays().size() == static_cast<std::size_t>(n) + 2;
      rows.push_back({suite, tag + " dual generators", ok, std::to_string(dual.rays().size()) + " rays"});
    }
    rows.push_back({suite, tag + " duality involution", dual_cone(dual) == sigma, ""});

    const Fan fan = model_subdivision(n);
    const bool smooth = std::all_of(fan.max_cones().begin(), fan.max_cones().end(),
                                    [](const Cone& c) { return is_smooth(c); });
    rows.push_back({suite, tag + " cones unimodular", smooth, std::to_string(fan.max_cones().size()) + " cones"});

    const auto partition = check_partition(fan, sigma, limits.bound);
    rows.push_back({suite, tag + " partition", partition.ok(),
                    std::to_string(partition.points_checked) + " points, bound " + std::to_string(limits.bound)});

    const auto semistable = semistable_fiber_check(fan, LatticeVector::basis(rank, rank - 1));
    rows.push_back({suite, tag + " semistable fiber", semistable.snc,
                    std::string("reduced=") + (semistable.reduced ? "1" : "0") +
                        " smooth=" + (semistable.smooth ? "1" : "0")});

    if (n >= 2) {
      const auto charts = blowup_chart_sequence(n);
      bool ok = charts.size() == static_cast<std::size_t>(n);
      for (std::size_t k = 0; ok && k < charts.size(); ++k) {
        ok = charts[k].relation_holds() && chart_generates(charts[k], dual_cone(fan.max_cones()[k]));
      }
      rows.push_back({suite, tag + " blow-up charts", ok, std::to_string(charts.size()) + " charts"});
    }

    const auto cls = toric_class(fan);
    const bool class_ok = cls.degree() == n + 1 && cls.evaluate(1) == n;
    rows.push_back({suite, tag + " toric class", class_ok, cls.to_string()});

    if (n <= 4) {
      std::uint64_t points = 0;
      const bool ok = greedy_exhaustive(n, 5, points);
      rows.push_back({suite, tag + " greedy decomposition", ok, std::to_string(points) + " points"});
    }
  }

  std::mt19937_64 rng(limits.seed);
  int failures = 0;
  for (int i = 0; i < limits.random_cones; ++i) {
    const std::size_t rank = 1 + static_cast<std::size_t>(i % 5);
    const Cone c = random_unimodular_cone(rank, rng);
    if (!(dual_cone(dual_cone(c)) == c)) ++failures;
  }
  rows.push_back({suite, "random unimodular duality involution", failures == 0,
                  std::to_string(limits.random_cones) + " cones, seed " + std::to_string(limits.seed)});
  return rows;
}

std::vector<SuiteRow> degeneration_suite(const SuiteLimits& limits) {
  using namespace degeneration;
  std::vector<SuiteRow> rows;
  const std::string suite = "degeneration";
  for (int n = 2; n <= limits.max_n; ++n) {
    for (int d = 1; d <= n + 1; ++d) {
      const auto report = full_degeneration_report({n, d}, limits.bound);
      const bool subs_invariant = std::all_of(report.sub_reports.begin(), report.sub_reports.end(),
                                              [](const VerificationReport& r) { return r.mod_L_invariant; });
      rows.push_back({suite, "n=" + std::to_string(n) + " d=" + std::to_string(d) + " full report",
                      report.passed() && subs_invariant,
                      std::to_string(report.sub_reports.size()) + " strata"});
    }
  }
  for (int n = 1; n <= limits.max_n; ++n) {
    for (int k = 1; k <= n; ++k) {
      const auto report = resolve_local_model({n, k}, limits.bound);
      const auto difference = report.fiber_class_after - report.fiber_class_before;
      rows.push_back({suite, "n=" + std::to_string(n) + " k=" + std::to_string(k) + " local model",
                      report.passed() && grothring::reduce_mod_L(difference) == 0,
                      "difference " + difference.to_string()});
    }
  }
  const GrothClass torus = GrothClass::lefschetz() - GrothClass::one();
  for (int k = 0; k <= 10; ++k) {
    const auto expected = GrothClass::lefschetz_power(static_cast<std::size_t>(k)) - torus.pow(static_cast<unsigned>(k));
    rows.push_back({suite, "k=" + std::to_string(k) + " scissor oracle", coordinate_cross_class(k) == expected,
                    expected.to_string()});
  }
  return rows;
}

Json rows_to_json(const std::vector<SuiteRow>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) {
    out.push_back(Json{{"suite", r.suite}, {"case", r.name}, {"pass", r.pass}, {"detail", r.detail}});
  }
  return out;
}

}  // namespace degenkit::cli
