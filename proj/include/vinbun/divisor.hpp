#pragma once

// Closed points and effective divisors on A^1 (and P^1) over F_q.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "vinbun/field.hpp"
#include "vinbun/poly.hpp"

namespace vinbun {

/// A closed point of P^1: a monic irreducible polynomial in t, or the point
/// at infinity (degree 1).
class ClosedPoint {
 public:
  /// Validates that `ident` is monic and irreducible (trial division).
  static ClosedPoint finite(const PrimePowerField& F, FqPoly ident);
  static ClosedPoint infinity() { return ClosedPoint({}, true); }
  /// Rational point t = c.
  static ClosedPoint rational(const PrimePowerField& F, Fq c);
  /// No validation; callers must pass a monic irreducible.
  static ClosedPoint fromIrreducible(FqPoly ident) { return ClosedPoint(std::move(ident), false); }

  int degree() const { return isInfinity_ ? 1 : poly::degree(ident_); }
  bool isInfinity() const { return isInfinity_; }
  const FqPoly& ident() const { return ident_; }

  std::string format(const PrimePowerField& F) const;

  /// Orders by degree, then by the polynomial read from the top coefficient;
  /// infinity sorts after every finite point.
  std::strong_ordering operator<=>(const ClosedPoint& o) const;
  bool operator==(const ClosedPoint& o) const = default;

 private:
  ClosedPoint(FqPoly ident, bool inf) : ident_(std::move(ident)), isInfinity_(inf) {}
  FqPoly ident_;
  bool isInfinity_ = false;
};

struct DivisorTerm {
  ClosedPoint point;
  int multiplicity = 1;

  auto operator<=>(const DivisorTerm&) const = default;
};

/// Residue degree and multiplicity of one point of a divisor. Every trace
/// function in this project depends on a divisor only through these.
struct LocalType {
  int degree = 1;
  int multiplicity = 1;

  auto operator<=>(const LocalType&) const = default;
};

class EffectiveDivisor {
 public:
  EffectiveDivisor() = default;
  /// Merges repeated points; throws std::invalid_argument on a
  /// non-positive multiplicity.
  static EffectiveDivisor fromTerms(std::vector<DivisorTerm> terms);

  std::span<const DivisorTerm> parts() const { return parts_; }
  int degree() const;
  bool empty() const { return parts_.empty(); }
  bool isMultiplicityFree() const;
  bool isRational() const;  // every point of degree 1
  bool disjointFrom(const EffectiveDivisor& o) const;
  int multiplicityOf(const ClosedPoint& x) const;

  /// Sorted (degree, multiplicity) pairs.
  std::vector<LocalType> localTypes() const;
  /// Residue degrees of the distinct points.
  std::vector<int> residueDegrees() const;
  std::vector<int> multiplicities() const;

  EffectiveDivisor operator+(const EffectiveDivisor& o) const;
  auto operator<=>(const EffectiveDivisor&) const = default;

  /// Comma-separated `poly:mult` terms; "0" for the empty divisor.
  std::string format(const PrimePowerField& F) const;

 private:
  std::vector<DivisorTerm> parts_;  // sorted by point, distinct
};

/// (1/d) * sum_{e | d} mu(d/e) q^e
std::uint64_t necklaceCount(std::uint64_t q, int d);

/// All closed points of A^1 of degree 1..maxDegree, sorted.
std::vector<ClosedPoint> enumerateClosedPoints(const PrimePowerField& F, int maxDegree);

/// All effective divisors of degree n on A^1; q^n of them.
std::vector<EffectiveDivisor> enumerateDivisors(const PrimePowerField& F, int n);
/// Same, restricted to points of degree <= maxPointDegree.
std::vector<EffectiveDivisor> enumerateDivisors(const PrimePowerField& F, int n, int maxPointDegree);

enum class SplitConstraint { None, SecondMultiplicityFree };

struct DegreeSplit {
  int first = 0;
  int second = 0;
};

/// All rational decompositions D = D1 + D2 with deg D1 = split.first and
/// deg D2 = split.second; D2 multiplicity-free under SecondMultiplicityFree.
std::vector<std::pair<EffectiveDivisor, EffectiveDivisor>> decompositions(const EffectiveDivisor& D,
                                                                           SplitConstraint constraint,
                                                                           DegreeSplit split);

/// Parses comma-separated `poly:mult` terms (`inf:m` for the point at
/// infinity). Validates irreducibility; throws std::invalid_argument.
EffectiveDivisor parseDivisor(const std::string& text, const PrimePowerField& F, bool allowInfinity = false);

}  // namespace vinbun
