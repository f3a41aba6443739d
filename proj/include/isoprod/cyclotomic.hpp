#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace isoprod {

/// Exact element of Z[zeta_e], zeta_e = exp(2 pi i / e), stored in the power basis
/// 1, zeta, ..., zeta^(phi(e)-1). The representation is canonical, so equality is
/// coefficient equality.
class Cyclotomic {
 public:
  /// Zero of Z[zeta_1] = Z.
  Cyclotomic() : Cyclotomic(1) {}
  /// Zero of Z[zeta_e].
  explicit Cyclotomic(std::uint32_t exponent);

  static Cyclotomic integer(std::uint32_t exponent, std::int64_t value);
  static Cyclotomic root_of_unity(std::uint32_t exponent, std::int64_t k);
  /// sum_k coeffs[k] zeta_e^k for an arbitrary (redundant) coefficient vector of length e.
  static Cyclotomic from_powers(std::uint32_t exponent, std::span<const std::int64_t> coeffs);

  std::uint32_t exponent() const noexcept { return exponent_; }
  std::span<const std::int64_t> coefficients() const noexcept { return coeffs_; }

  bool is_zero() const noexcept;
  bool is_rational() const noexcept;
  /// Throws ConsistencyError when the value is not a rational integer.
  std::int64_t to_integer() const;

  Cyclotomic conj() const;
  /// Same value viewed in Z[zeta_m]; m must be a multiple of exponent().
  Cyclotomic embed(std::uint32_t multiple) const;
  /// this / d when every coordinate is divisible by d.
  bool divisible_by(std::int64_t d) const noexcept;
  Cyclotomic divided_by(std::int64_t d) const;

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(std::int64_t s);
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, std::int64_t s) { return a *= s; }
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator==(const Cyclotomic&, const Cyclotomic&) = default;

  /// Rational values print as integers, others as sums of E(n)^k terms.
  std::string to_string() const;

 private:
  std::uint32_t exponent_;
  std::vector<std::int64_t> coeffs_;
};

/// Euler phi.
std::uint32_t euler_phi(std::uint32_t n);
/// Coefficients of the n-th cyclotomic polynomial, constant term first.
const std::vector<std::int64_t>& cyclotomic_polynomial(std::uint32_t n);

}  // namespace isoprod
