#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace degenkit {

using BigInt = boost::multiprecision::cpp_int;

namespace grothring {

/**
 * An element of Z[L], the subring of the Grothendieck ring of varieties
 * generated by the Lefschetz class L = [A^1].
 *
 * Stored as a dense coefficient list, coeffs()[i] being the coefficient of
 * L^i. Trailing zeros are trimmed on construction, so the zero class has an
 * empty coefficient list and equality is plain coefficient-wise equality.
 */
class GrothClass {
public:
  GrothClass() = default;
  explicit GrothClass(std::vector<BigInt> coeffs);
  GrothClass(std::initializer_list<long long> coeffs);

  static GrothClass zero() { return {}; }
  static GrothClass one() { return constant(1); }
  static GrothClass constant(const BigInt& c);
  /// L = [A^1].
  static GrothClass lefschetz() { return lefschetz_power(1); }
  /// c * L^k.
  static GrothClass lefschetz_power(std::size_t k, const BigInt& c = 1);

  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Degree in L; -1 for the zero class.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  BigInt coeff(std::size_t i) const;
  BigInt leading_coeff() const;

  /// Evaluation of the polynomial at L = x.
  BigInt evaluate(const BigInt& x) const;

  GrothClass& operator+=(const GrothClass& other);
  GrothClass& operator-=(const GrothClass& other);
  GrothClass& operator*=(const GrothClass& other);

  friend GrothClass operator+(GrothClass a, const GrothClass& b) { return a += b; }
  friend GrothClass operator-(GrothClass a, const GrothClass& b) { return a -= b; }
  friend GrothClass operator*(const GrothClass& a, const GrothClass& b);
  friend GrothClass operator*(const BigInt& c, const GrothClass& a);
  GrothClass operator-() const;

  GrothClass pow(unsigned exponent) const;

  bool operator==(const GrothClass& other) const = default;

  /// ASCII rendering "c0 + c1*L + c2*L^2", zero terms omitted, "0" for zero.
  std::string to_string() const;

private:
  void trim();
  std::vector<BigInt> coeffs_;
};

GrothClass add(const GrothClass& a, const GrothClass& b);
GrothClass mul(const GrothClass& a, const GrothClass& b);

/// Image in Z[L]/(L) = Z, i.e. the constant coefficient.
BigInt reduce_mod_L(const GrothClass& a);

/// [P^n] = 1 + L + ... + L^n via the standard cell decomposition.
GrothClass proj_space_class(int n);

}  // namespace grothring
}  // namespace degenkit
