#pragma once

// Elements of Z[v, v^-1]. The variable v stands for q^(1/2); a Tate twist (m)
// contributes v^(-2m) and a shift [s] contributes (-1)^s.

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace vinbun {

using Rational = boost::multiprecision::cpp_rational;

/// Half-integers, stored as twice their value.
class HalfInt {
 public:
  constexpr HalfInt() = default;
  static constexpr HalfInt fromTwice(int twice) { return HalfInt(twice); }
  static constexpr HalfInt fromInt(int n) { return HalfInt(2 * n); }

  constexpr int twice() const { return twice_; }
  constexpr bool isInteger() const { return twice_ % 2 == 0; }

  constexpr HalfInt operator+(HalfInt o) const { return HalfInt(twice_ + o.twice_); }
  constexpr HalfInt operator-(HalfInt o) const { return HalfInt(twice_ - o.twice_); }
  constexpr HalfInt operator-() const { return HalfInt(-twice_); }
  constexpr auto operator<=>(const HalfInt&) const = default;

  /// "1", "-1/2", ...
  std::string toString() const;

 private:
  constexpr explicit HalfInt(int twice) : twice_(twice) {}
  int twice_ = 0;
};

class LaurentValue {
 public:
  LaurentValue() = default;
  LaurentValue(std::int64_t constant);  // NOLINT(google-explicit-constructor): integers embed

  static LaurentValue monomial(std::int64_t coefficient, int exponent);
  /// v^exponent
  static LaurentValue v(int exponent = 1) { return monomial(1, exponent); }
  /// q^power = v^(2 power)
  static LaurentValue qPower(int power) { return monomial(1, 2 * power); }
  /// Frobenius trace of the Tate twist (t): v^(-2t).
  static LaurentValue tateTwist(HalfInt t) { return monomial(1, -t.twice()); }

  bool isZero() const { return coeffs_.empty(); }
  std::int64_t coefficient(int exponent) const;
  const std::map<int, std::int64_t>& terms() const { return coeffs_; }
  int minExponent() const;
  int maxExponent() const;
  bool isMonomial() const { return coeffs_.size() == 1; }

  LaurentValue operator-() const;
  LaurentValue& operator+=(const LaurentValue& o);
  LaurentValue& operator-=(const LaurentValue& o);
  LaurentValue& operator*=(const LaurentValue& o);
  friend LaurentValue operator+(LaurentValue a, const LaurentValue& b) { return a += b; }
  friend LaurentValue operator-(LaurentValue a, const LaurentValue& b) { return a -= b; }
  friend LaurentValue operator*(const LaurentValue& a, const LaurentValue& b);
  bool operator==(const LaurentValue& o) const = default;

  LaurentValue pow(unsigned k) const;
  /// Multiplies every exponent by `factor` (v -> v^factor).
  LaurentValue substitutePower(int factor) const;

  /// Exact quotient if `divisor` divides this value in Z[v, v^-1] (up to a
  /// unit monomial), otherwise nullopt. Throws std::domain_error on zero.
  std::optional<LaurentValue> divideExact(const LaurentValue& divisor) const;

  /// Value at v^2 = q. Throws std::domain_error when an odd power of v
  /// survives.
  Rational specializeAtQ(std::int64_t q) const;

  /// e.g. "v^-4 + 2v^-2 + 1"; exponents descending.
  std::string toString() const;

 private:
  void addTerm(int exponent, std::int64_t coefficient);
  std::map<int, std::int64_t> coeffs_;
};

}  // namespace vinbun
