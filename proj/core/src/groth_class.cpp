#include "degenkit/groth_class.hpp"

#include <algorithm>
#include <stdexcept>

namespace degenkit::grothring {

GrothClass::GrothClass(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

GrothClass::GrothClass(std::initializer_list<long long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

GrothClass GrothClass::constant(const BigInt& c) { return GrothClass(std::vector<BigInt>{c}); }

GrothClass GrothClass::lefschetz_power(std::size_t k, const BigInt& c) {
  std::vector<BigInt> coeffs(k + 1);
  coeffs[k] = c;
  return GrothClass(std::move(coeffs));
}

void GrothClass::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt GrothClass::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }

BigInt GrothClass::leading_coeff() const { return coeffs_.empty() ? BigInt(0) : coeffs_.back(); }

BigInt GrothClass::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

GrothClass& GrothClass::operator+=(const GrothClass& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

GrothClass& GrothClass::operator-=(const GrothClass& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

GrothClass& GrothClass::operator*=(const GrothClass& other) { return *this = *this * other; }

GrothClass operator*(const GrothClass& a, const GrothClass& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return GrothClass(std::move(out));
}

GrothClass operator*(const BigInt& c, const GrothClass& a) {
  std::vector<BigInt> out = a.coeffs_;
  for (auto& x : out) x *= c;
  return GrothClass(std::move(out));
}

GrothClass GrothClass::operator-() const { return BigInt(-1) * *this; }

GrothClass GrothClass::pow(unsigned exponent) const {
  GrothClass result = one();
  GrothClass base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

std::string GrothClass::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    std::string term = (c < 0 ? BigInt(-c) : c).str();
    if (i == 1) {
      term += "*L";
    } else if (i > 1) {
      term += "*L^" + std::to_string(i);
    }
    if (out.empty()) {
      out = (c < 0 ? "-" : "") + term;
    } else {
      out += (c < 0 ? " - " : " + ") + term;
    }
  }
  return out;
}

GrothClass add(const GrothClass& a, const GrothClass& b) { return a + b; }
GrothClass mul(const GrothClass& a, const GrothClass& b) { return a * b; }

BigInt reduce_mod_L(const GrothClass& a) { return a.coeff(0); }

GrothClass proj_space_class(int n) {
  if (n < 0) throw std::invalid_argument("proj_space_class: n must be nonnegative");
  return GrothClass(std::vector<BigInt>(static_cast<std::size_t>(n) + 1, BigInt(1)));
}

}  // namespace degenkit::grothring
