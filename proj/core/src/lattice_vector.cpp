#include "degenkit/lattice_vector.hpp"

#include <numeric>
#include <stdexcept>

namespace degenkit::toriclat {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("lattice arithmetic overflow (add)");
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("lattice arithmetic overflow (mul)");
  return out;
}

LatticeVector LatticeVector::basis(std::size_t rank, std::size_t i) {
  if (i >= rank) throw std::out_of_range("LatticeVector::basis: index out of range");
  std::vector<std::int64_t> e(rank, 0);
  e[i] = 1;
  return LatticeVector(std::move(e));
}

bool LatticeVector::is_zero() const noexcept {
  for (auto x : entries_) {
    if (x != 0) return false;
  }
  return true;
}

std::int64_t LatticeVector::content() const {
  std::int64_t g = 0;
  for (auto x : entries_) {
    if (x == INT64_MIN) throw std::overflow_error("lattice entry out of range");
    g = std::gcd(g, x);
  }
  return g;
}

LatticeVector LatticeVector::primitive() const {
  const auto g = content();
  if (g <= 1) return *this;
  std::vector<std::int64_t> out(entries_);
  for (auto& x : out) x /= g;
  return LatticeVector(std::move(out));
}

LatticeVector LatticeVector::operator+(const LatticeVector& other) const {
  if (rank() != other.rank()) throw std::invalid_argument("LatticeVector: rank mismatch");
  std::vector<std::int64_t> out(rank());
  for (std::size_t i = 0; i < rank(); ++i) out[i] = checked_add(entries_[i], other.entries_[i]);
  return LatticeVector(std::move(out));
}

LatticeVector LatticeVector::operator-(const LatticeVector& other) const { return *this + (-other); }

LatticeVector LatticeVector::operator-() const { return -1 * *this; }

LatticeVector operator*(std::int64_t c, const LatticeVector& v) {
  std::vector<std::int64_t> out(v.rank());
  for (std::size_t i = 0; i < v.rank(); ++i) out[i] = checked_mul(c, v.entries_[i]);
  return LatticeVector(std::move(out));
}

std::string LatticeVector::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(entries_[i]);
  }
  return out + ")";
}

std::int64_t dot(const LatticeVector& a, const LatticeVector& x) {
  if (a.rank() != x.rank()) {
    throw std::invalid_argument("dot: rank mismatch (" + std::to_string(a.rank()) + " vs " +
                                std::to_string(x.rank()) + ")");
  }
  std::int64_t acc = 0;
  for (std::size_t i = 0; i < a.rank(); ++i) acc = checked_add(acc, checked_mul(a[i], x[i]));
  return acc;
}

}  // namespace degenkit::toriclat
