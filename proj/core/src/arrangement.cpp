#include "degenkit/arrangement.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "degenkit/errors.hpp"

namespace degenkit::grothring {
namespace {

void require_arrangement_args(int r, int n, const char* who) {
  if (r < 1) throw std::invalid_argument(std::string(who) + ": r must be >= 1");
  if (n < 0) throw std::invalid_argument(std::string(who) + ": n must be >= 0");
}

// Visits every subset of {first, ..., r-1} extending a chosen set of size
// `size`, stopping once the intersection becomes empty. tally[m] collects the
// signed number of subsets whose intersection is P^m.
void walk_subsets(int first, int r, int size, int ambient, std::vector<std::int64_t>& tally) {
  for (int h = first; h < r; ++h) {
    const int new_size = size + 1;
    const int dim = ambient - new_size;
    if (dim < 0) return;
    tally[static_cast<std::size_t>(dim)] += (new_size % 2 == 1) ? 1 : -1;
    walk_subsets(h + 1, r, new_size, ambient, tally);
  }
}

}  // namespace

BigInt binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (int i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

GrothClass arrangement_class_closed(int r, int n) {
  require_arrangement_args(r, n, "arrangement_class_closed");
  GrothClass sum;
  for (int j = 0; j <= n; ++j) {
    const BigInt weight = (j % 2 == 0 ? 1 : -1) * binomial(r, j + 1);
    if (weight == 0) continue;
    sum += weight * proj_space_class(n - j);
  }
  return sum;
}

GrothClass arrangement_class_recursive(int r, int n) {
  require_arrangement_args(r, n, "arrangement_class_recursive");
  // table[i][m] = P(i+1, m)
  std::vector<std::vector<GrothClass>> table(static_cast<std::size_t>(r),
                                             std::vector<GrothClass>(static_cast<std::size_t>(n) + 1));
  for (int m = 0; m <= n; ++m) table[0][m] = proj_space_class(m);
  for (int i = 2; i <= r; ++i) {
    auto& row = table[static_cast<std::size_t>(i - 1)];
    const auto& prev = table[static_cast<std::size_t>(i - 2)];
    row[0] = GrothClass::constant(i);
    for (int m = 1; m <= n; ++m) row[m] = prev[m] + proj_space_class(m) - prev[m - 1];
  }
  return table.back()[static_cast<std::size_t>(n)];
}

GrothClass arrangement_class_inclusion_exclusion(int r, int n) {
  require_arrangement_args(r, n, "arrangement_class_inclusion_exclusion");
  if (r > kMaxEnumeratedHyperplanes) {
    throw ResourceLimitError("arrangement_class_inclusion_exclusion: r = " + std::to_string(r) +
                             " exceeds the subset-enumeration limit of " +
                             std::to_string(kMaxEnumeratedHyperplanes));
  }
  const int ambient = n + 1;
  std::vector<std::int64_t> tally(static_cast<std::size_t>(ambient) + 1, 0);
  walk_subsets(0, r, 0, ambient, tally);

  // [P^m] contributes 1 to each of the coefficients of L^0 .. L^m.
  std::vector<BigInt> coeffs(tally.size());
  BigInt running = 0;
  for (std::size_t m = tally.size(); m-- > 0;) {
    running += tally[m];
    coeffs[m] = running;
  }
  return GrothClass(std::move(coeffs));
}

BigInt binomial_congruence_check(int r, int n) {
  if (r < 1 || n < 0 || r > n + 1) {
    throw std::invalid_argument("binomial_congruence_check: requires 1 <= r <= n+1");
  }
  BigInt sum = 0;
  for (int j = 0; j <= n; ++j) {
    const BigInt term = binomial(r, j + 1);
    sum += (j % 2 == 0) ? term : BigInt(-term);
  }
  return sum;
}

}  // namespace degenkit::grothring
