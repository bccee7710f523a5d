#include "degenkit/toric_model.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "degenkit/integer_matrix.hpp"

namespace degenkit::toriclat {
namespace {

using grothring::GrothClass;

void require_n(int n, int min, const char* who) {
  if (n < min) throw std::invalid_argument(std::string(who) + ": n must be >= " + std::to_string(min));
}

std::size_t rank_of(int n) { return static_cast<std::size_t>(n) + 1; }

LatticeVector e(int n, int i) { return LatticeVector::basis(rank_of(n), static_cast<std::size_t>(i - 1)); }
LatticeVector f(int n, int i) { return e(n, i) + e(n, n + 1); }

// sum_{i=from}^{to} e_i (empty sums allowed)
LatticeVector e_sum(int n, int from, int to) {
  LatticeVector acc = LatticeVector::zero(rank_of(n));
  for (int i = from; i <= to; ++i) acc = acc + e(n, i);
  return acc;
}

std::string primed(const std::string& base, int primes) { return base + std::string(static_cast<std::size_t>(primes), '\''); }

// Recursive sweep over the box |x_i| <= bound, pruned by the parent's
// constraints so only lattice points of the parent reach the callback.
class BoxSweep {
public:
  BoxSweep(const Cone& parent, int bound) : parent_(parent), bound_(bound), point_(parent.rank(), 0) {
    for (const auto& e : parent.equations()) rows_.push_back({e, true});
    for (const auto& a : parent.inequalities()) rows_.push_back({a, false});
    const std::size_t m = parent.rank();
    slack_.assign(rows_.size(), std::vector<std::int64_t>(m + 1, 0));
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      for (std::size_t i = m; i-- > 0;) {
        const auto coeff = rows_[r].normal[i];
        slack_[r][i] = checked_add(slack_[r][i + 1], checked_mul(coeff < 0 ? -coeff : coeff, bound_));
      }
    }
    partial_.assign(rows_.size(), 0);
  }

  template <typename Visit>
  bool run(Visit&& visit) { return descend(0, visit); }

private:
  struct Row {
    LatticeVector normal;
    bool equation;
  };

  template <typename Visit>
  bool descend(std::size_t i, Visit& visit) {
    const std::size_t m = parent_.rank();
    if (i == m) return visit(LatticeVector(point_));
    for (std::int64_t x = -bound_; x <= bound_; ++x) {
      point_[i] = x;
      bool feasible = true;
      for (std::size_t r = 0; r < rows_.size(); ++r) {
        const auto value = checked_add(partial_[r], checked_mul(rows_[r].normal[i], x));
        const auto rest = slack_[r][i + 1];
        if (rows_[r].equation ? (value > rest || value < -rest) : (value + rest < 0)) {
          feasible = false;
          break;
        }
      }
      if (!feasible) continue;
      for (std::size_t r = 0; r < rows_.size(); ++r) partial_[r] += rows_[r].normal[i] * x;
      const bool keep_going = descend(i + 1, visit);
      for (std::size_t r = 0; r < rows_.size(); ++r) partial_[r] -= rows_[r].normal[i] * x;
      if (!keep_going) return false;
    }
    point_[i] = 0;
    return true;
  }

  const Cone& parent_;
  std::int64_t bound_;
  std::vector<std::int64_t> point_;
  std::vector<Row> rows_;
  std::vector<std::vector<std::int64_t>> slack_;
  std::vector<std::int64_t> partial_;
};

GrothClass orbit_sum(const Fan& fan, const LatticeVector* direction) {
  for (const auto& c : fan.max_cones()) {
    if (!is_smooth(c)) throw std::invalid_argument("toric class: fan has a non-smooth maximal cone");
  }
  const GrothClass torus_factor = GrothClass::lefschetz() - GrothClass::one();
  GrothClass total;
  for (const auto& face : fan.all_face_ray_sets()) {
    if (direction != nullptr) {
      const bool in_fiber = std::any_of(face.begin(), face.end(),
                                        [&](const LatticeVector& v) { return dot(*direction, v) >= 1; });
      if (!in_fiber) continue;
    }
    const std::size_t dim = face.empty() ? 0 : matrix_rank(face);
    total += torus_factor.pow(static_cast<unsigned>(fan.rank() - dim));
  }
  return total;
}

}  // namespace

Cone model_cone(int n) {
  require_n(n, 1, "model_cone");
  std::vector<LatticeVector> rays;
  for (int i = 1; i <= n; ++i) {
    rays.push_back(e(n, i));
    rays.push_back(f(n, i));
  }
  std::vector<LatticeVector> ineqs;
  for (int i = 1; i <= n + 1; ++i) ineqs.push_back(e(n, i));
  ineqs.push_back(e_sum(n, 1, n) - e(n, n + 1));
  return Cone::with_inequalities(rank_of(n), std::move(rays), std::move(ineqs));
}

std::vector<LatticeVector> model_dual_generators(int n) {
  require_n(n, 1, "model_dual_generators");
  std::vector<LatticeVector> gens;
  for (int i = 1; i <= n + 1; ++i) gens.push_back(e(n, i));
  gens.push_back(e_sum(n, 1, n) - e(n, n + 1));
  return gens;
}

Cone model_subdivision_cone(int n, int k) {
  require_n(n, 1, "model_subdivision_cone");
  if (k < 1 || k > n) throw std::invalid_argument("model_subdivision_cone: k must lie in 1..n");
  std::vector<LatticeVector> rays;
  for (int i = 1; i <= k; ++i) rays.push_back(f(n, i));
  for (int i = k; i <= n; ++i) rays.push_back(e(n, i));
  std::vector<LatticeVector> ineqs;
  for (int i = 1; i <= n + 1; ++i) ineqs.push_back(e(n, i));
  ineqs.push_back(e(n, n + 1) - e_sum(n, 1, k - 1));
  ineqs.push_back(e_sum(n, 1, k) - e(n, n + 1));
  return Cone::with_inequalities(rank_of(n), std::move(rays), std::move(ineqs));
}

Fan model_subdivision(int n) {
  require_n(n, 1, "model_subdivision");
  std::vector<Cone> cones;
  for (int k = 1; k <= n; ++k) cones.push_back(model_subdivision_cone(n, k));
  return Fan(rank_of(n), std::move(cones));
}

std::optional<std::vector<std::int64_t>> greedy_decompose(const LatticeVector& v,
                                                          std::span<const LatticeVector> generators) {
  if (v.rank() < 2) throw std::invalid_argument("greedy_decompose: rank must be at least 2");
  const int n = static_cast<int>(v.rank()) - 1;
  const auto expected = model_dual_generators(n);
  if (!std::equal(generators.begin(), generators.end(), expected.begin(), expected.end())) {
    throw std::invalid_argument("greedy_decompose: generators must be the model's dual generators in order");
  }
  const std::size_t last = static_cast<std::size_t>(n);
  for (std::size_t i = 0; i < last; ++i) {
    if (v[i] < 0 || checked_add(v[i], v[last]) < 0) return std::nullopt;
  }

  std::vector<std::int64_t> coeffs(generators.size(), 0);
  const std::int64_t split = v[last] < 0 ? -v[last] : 0;
  for (std::size_t i = 0; i < last; ++i) coeffs[i] = v[i] - split;
  coeffs[last] = v[last] + split;
  coeffs[last + 1] = split;

  LatticeVector check = LatticeVector::zero(v.rank());
  for (std::size_t g = 0; g < generators.size(); ++g) {
    if (coeffs[g] < 0) throw std::logic_error("greedy_decompose: negative coefficient");
    check = check + coeffs[g] * generators[g];
  }
  if (check != v) throw std::logic_error("greedy_decompose: expansion does not reproduce the input");
  return coeffs;
}

PartitionReport check_partition(const Fan& fan, const Cone& parent, int bound) {
  if (bound < 0) throw std::invalid_argument("check_partition: bound must be nonnegative");
  if (fan.rank() != parent.rank()) throw std::invalid_argument("check_partition: rank mismatch");
  PartitionReport report;
  report.contained = std::all_of(fan.max_cones().begin(), fan.max_cones().end(), [&](const Cone& c) {
    return std::all_of(c.rays().begin(), c.rays().end(), [&](const LatticeVector& r) { return parent.contains(r); });
  });
  report.compatible = true;
  const auto& cones = fan.max_cones();
  for (std::size_t i = 0; i < cones.size() && report.compatible; ++i) {
    for (std::size_t j = i + 1; j < cones.size() && report.compatible; ++j) {
      report.compatible = meet_in_common_face(cones[i], cones[j]);
    }
  }
  report.covered = BoxSweep(parent, bound).run([&](const LatticeVector& x) {
    ++report.points_checked;
    const bool hit = std::any_of(cones.begin(), cones.end(), [&](const Cone& c) { return c.contains(x); });
    if (!hit) report.uncovered_point = x;
    return hit;
  });
  return report;
}

bool verify_partition(const Fan& fan, const Cone& parent, int bound) { return check_partition(fan, parent, bound).ok(); }

SemistableReport semistable_fiber_check(const Fan& fan, const LatticeVector& direction) {
  if (direction.rank() != fan.rank()) throw std::invalid_argument("semistable_fiber_check: rank mismatch");
  SemistableReport report;
  report.reduced = std::all_of(fan.rays().begin(), fan.rays().end(), [&](const LatticeVector& v) {
    const auto p = dot(direction, v);
    return p <= 0 || p == 1;
  });
  report.smooth = std::all_of(fan.max_cones().begin(), fan.max_cones().end(), [](const Cone& c) { return is_smooth(c); });
  report.snc = report.reduced && report.smooth;
  return report;
}

GrothClass toric_class(const Fan& fan) { return orbit_sum(fan, nullptr); }

GrothClass fiber_class(const Fan& fan, const LatticeVector& direction) {
  if (direction.rank() != fan.rank()) throw std::invalid_argument("fiber_class: rank mismatch");
  return orbit_sum(fan, &direction);
}

std::vector<ChartPresentation> blowup_chart_sequence(int n) {
  require_n(n, 2, "blowup_chart_sequence");
  const LatticeVector t = e(n, n + 1);
  const LatticeVector y = e_sum(n, 1, n) - t;
  auto z = [&](int i) { return ChartCoordinate{"z" + std::to_string(i), e(n, i)}; };

  std::vector<ChartPresentation> charts;
  // Before step k the residual chart has t_{k-1} = t - (e_1* + ... + e_{k-1}*)
  // and relation t_{k-1} * y = z_k * ... * z_n.
  for (int k = 1; k <= n - 1; ++k) {
    const LatticeVector t_prev = t - e_sum(n, 1, k - 1);
    std::vector<ChartCoordinate> coords;
    for (int i = 1; i < k; ++i) coords.push_back(z(i));
    // z_k = t_{k-1} * z_k'
    coords.push_back({primed("z" + std::to_string(k), 1), e(n, k) - t_prev});
    for (int i = k + 1; i <= n; ++i) coords.push_back(z(i));
    coords.push_back({primed("t", k - 1), t_prev});
    charts.emplace_back(std::move(coords));
  }

  const LatticeVector t_last = t - e_sum(n, 1, n - 1);
  std::vector<ChartCoordinate> coords{{primed("t", n - 1), t_last}};
  for (int i = 1; i <= n; ++i) coords.push_back(z(i));
  coords.push_back({"y", y});
  const auto y_index = coords.size() - 1;
  charts.emplace_back(std::move(coords), BinomialRelation{{0, y_index}, {static_cast<std::size_t>(n)}});
  return charts;
}

bool chart_generates(const ChartPresentation& chart, const Cone& cone) {
  if (chart.rank() != cone.rank()) return false;
  const auto monomials = chart.monomials();
  if (Cone(chart.rank(), monomials) != cone) return false;
  if (!is_smooth(cone)) return false;
  return std::all_of(cone.rays().begin(), cone.rays().end(), [&](const LatticeVector& r) {
    return std::find(monomials.begin(), monomials.end(), r) != monomials.end();
  });
}

}  // namespace degenkit::toriclat
