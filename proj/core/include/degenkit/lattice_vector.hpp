#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace degenkit::toriclat {

/// Overflow-checked int64 arithmetic; throws std::overflow_error.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

/**
 * Integer vector in N = Z^m or its dual M. Entries are exact: every
 * arithmetic operation is overflow-checked.
 */
class LatticeVector {
public:
  LatticeVector() = default;
  explicit LatticeVector(std::vector<std::int64_t> entries) : entries_(std::move(entries)) {}
  LatticeVector(std::initializer_list<std::int64_t> entries) : entries_(entries) {}

  static LatticeVector zero(std::size_t rank) { return LatticeVector(std::vector<std::int64_t>(rank, 0)); }
  /// i-th standard basis vector (0-based).
  static LatticeVector basis(std::size_t rank, std::size_t i);

  std::size_t rank() const noexcept { return entries_.size(); }
  std::int64_t operator[](std::size_t i) const { return entries_[i]; }
  std::span<const std::int64_t> entries() const noexcept { return entries_; }

  bool is_zero() const noexcept;
  /// gcd of the absolute values of the entries (0 for the zero vector).
  std::int64_t content() const;
  bool is_primitive() const { return content() == 1; }
  /// Divides out the content. The zero vector is returned unchanged.
  LatticeVector primitive() const;

  LatticeVector operator+(const LatticeVector& other) const;
  LatticeVector operator-(const LatticeVector& other) const;
  LatticeVector operator-() const;
  friend LatticeVector operator*(std::int64_t c, const LatticeVector& v);

  auto operator<=>(const LatticeVector&) const = default;
  bool operator==(const LatticeVector&) const = default;

  std::string to_string() const;

private:
  std::vector<std::int64_t> entries_;
};

/// Pairing <a, x>; throws std::invalid_argument on rank mismatch.
std::int64_t dot(const LatticeVector& a, const LatticeVector& x);

}  // namespace degenkit::toriclat
