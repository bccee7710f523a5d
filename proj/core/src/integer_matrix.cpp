#include "degenkit/integer_matrix.hpp"

#include <stdexcept>
#include <utility>

namespace degenkit::toriclat {
namespace {

using Matrix = std::vector<std::vector<BigInt>>;

Matrix to_matrix(std::span<const LatticeVector> rows) {
  Matrix m;
  m.reserve(rows.size());
  const std::size_t cols = rows.empty() ? 0 : rows.front().rank();
  for (const auto& row : rows) {
    if (row.rank() != cols) throw std::invalid_argument("integer matrix: ragged rows");
    std::vector<BigInt> r;
    r.reserve(cols);
    for (auto x : row.entries()) r.emplace_back(x);
    m.push_back(std::move(r));
  }
  return m;
}

// Bareiss elimination in place; returns the rank and leaves the last pivot in
// `last_pivot` (the determinant, up to sign, for full-rank square input).
std::size_t bareiss(Matrix& a, BigInt& last_pivot, int& sign) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  BigInt prev = 1;
  std::size_t rank = 0;
  sign = 1;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      std::swap(a[pivot], a[rank]);
      sign = -sign;
    }
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        a[i][j] = (a[rank][col] * a[i][j] - a[i][col] * a[rank][j]) / prev;
      }
      a[i][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  last_pivot = prev;
  return rank;
}

}  // namespace

std::size_t matrix_rank(std::span<const LatticeVector> rows) {
  Matrix a = to_matrix(rows);
  BigInt pivot;
  int sign = 1;
  return bareiss(a, pivot, sign);
}

BigInt determinant(std::span<const LatticeVector> rows) {
  if (rows.empty()) return 1;
  if (rows.front().rank() != rows.size()) throw std::invalid_argument("determinant: matrix is not square");
  Matrix a = to_matrix(rows);
  BigInt pivot;
  int sign = 1;
  if (bareiss(a, pivot, sign) < rows.size()) return 0;
  return sign * pivot;
}

std::vector<BigInt> smith_invariants(std::span<const LatticeVector> rows) {
  Matrix a = to_matrix(rows);
  const std::size_t nrows = a.size();
  const std::size_t ncols = nrows == 0 ? 0 : a[0].size();
  std::vector<BigInt> factors;

  for (std::size_t t = 0; t < nrows && t < ncols; ++t) {
    // Bring an entry of least absolute value into position (t, t).
    auto place_min = [&]() -> bool {
      bool found = false;
      std::size_t bi = t, bj = t;
      BigInt best;
      for (std::size_t i = t; i < nrows; ++i) {
        for (std::size_t j = t; j < ncols; ++j) {
          if (a[i][j] == 0) continue;
          BigInt v = abs(a[i][j]);
          if (!found || v < best) {
            best = v;
            bi = i;
            bj = j;
            found = true;
          }
        }
      }
      if (!found) return false;
      std::swap(a[t], a[bi]);
      for (auto& row : a) std::swap(row[t], row[bj]);
      return true;
    };

    if (!place_min()) break;

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < nrows; ++i) {
        if (a[i][t] == 0) continue;
        const BigInt q = a[i][t] / a[t][t];
        for (std::size_t j = t; j < ncols; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < ncols; ++j) {
        if (a[t][j] == 0) continue;
        const BigInt q = a[t][j] / a[t][t];
        for (std::size_t i = t; i < nrows; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) {
        place_min();
        continue;
      }
      // Pivot must divide the whole trailing block.
      bool divides = true;
      for (std::size_t i = t + 1; i < nrows && divides; ++i) {
        for (std::size_t j = t + 1; j < ncols; ++j) {
          if (a[i][j] % a[t][t] != 0) {
            for (std::size_t c = t; c < ncols; ++c) a[t][c] += a[i][c];
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
    factors.push_back(abs(a[t][t]));
  }
  return factors;
}

}  // namespace degenkit::toriclat
