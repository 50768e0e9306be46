#pragma once

// Trace functions on symmetric powers of the curve and their Grothendieck
// group shadows. Every trace is an element of Z[v, v^-1], v^2 = q, and
// depends on a divisor only through the residue degrees and multiplicities
// of its points.

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "vinbun/divisor.hpp"
#include "vinbun/laurent.hpp"
#include "vinbun/symrep.hpp"

namespace vinbun {

/// Frobenius sign on the stalk of an external exterior power at a point of
/// degree d with multiplicity m. `Calibrated` uses (-1)^((d+1) m); `PerPoint`
/// uses (-1)^(d+1) independently of m. They agree when m = 1 or d is odd.
enum class ExteriorSignConvention { Calibrated, PerPoint };

std::string toString(ExteriorSignConvention c);

/// e_m(x_1, ..., x_r)
LaurentValue elementarySymmetric(int m, std::span<const LaurentValue> xs);

LaurentValue extExteriorLocalFactor(LocalType local, std::span<const LaurentValue> eigenvalues,
                                    ExteriorSignConvention convention = ExteriorSignConvention::Calibrated);

/// Trace of Lambda^(n)(E)[shift](twist) at D, E of rank = eigenvalues.size().
/// Throws std::invalid_argument when deg D != n.
LaurentValue traceExtExterior(int n, std::span<const LaurentValue> eigenvalues, const EffectiveDivisor& D, int shift,
                              HalfInt twist,
                              ExteriorSignConvention convention = ExteriorSignConvention::Calibrated);

LaurentValue traceOmegaTilde(int n, const EffectiveDivisor& D);
/// Picard-Lefschetz oscillator Lambda^(k)(V)[k](k/2).
LaurentValue tracePLO(int k, const EffectiveDivisor& D,
                      ExteriorSignConvention convention = ExteriorSignConvention::Calibrated);
/// Associated graded of nearby cycles restricted along the section.
LaurentValue traceGrPsi(int n, const EffectiveDivisor& D,
                        ExteriorSignConvention convention = ExteriorSignConvention::Calibrated);
/// (1-q) * prod over distinct points x of (1 - q^deg x)
LaurentValue drinfeldStalk(const EffectiveDivisor& D);

// ---------------------------------------------------------------------------
// Trace specifications: a small expression language for sheaves built from
// constant sheaves and external exterior powers by add_*, scaling and sums.

struct TraceSpec;

namespace spec {

struct Constant {
  int degree = 0;
  int shift = 0;
  HalfInt twist;
};

struct ExtExterior {
  int degree = 0;
  std::vector<LaurentValue> eigenvalues;
  int shift = 0;
  HalfInt twist;
};

/// add_* of an external product; factor i lives on X^(deg_i).
struct PushforwardAdd {
  std::vector<TraceSpec> factors;
};

struct Scale {
  LaurentValue factor;
  std::vector<TraceSpec> inner;  // exactly one element
};

struct Sum {
  std::vector<TraceSpec> terms;
};

}  // namespace spec

struct TraceSpec {
  std::variant<spec::Constant, spec::ExtExterior, spec::PushforwardAdd, spec::Scale, spec::Sum> node;

  static TraceSpec constant(int degree, int shift, HalfInt twist);
  static TraceSpec extExterior(int degree, std::vector<LaurentValue> eigenvalues, int shift, HalfInt twist);
  static TraceSpec pushforwardAdd(std::vector<TraceSpec> factors);
  static TraceSpec scaled(LaurentValue factor, TraceSpec inner);
  static TraceSpec sum(std::vector<TraceSpec> terms);

  /// Degree n of the symmetric power the sheaf lives on. Throws
  /// std::invalid_argument for an inconsistent tree (sum of mixed degrees).
  int degree() const;
};

LaurentValue evaluate(const TraceSpec& s, const EffectiveDivisor& D,
                      ExteriorSignConvention convention = ExteriorSignConvention::Calibrated);

TraceSpec omegaTildeSpec(int n);
TraceSpec ploSpec(int k);
TraceSpec grPsiSpec(int n);

enum class TraceObject { PLO, OmegaTilde, GrPsi };

/// Sum of the trace over every degree-n divisor of A^1 over F. Workers split
/// the divisor list; the exact sum does not depend on `jobs`.
LaurentValue traceSweep(TraceObject object, int n, const PrimePowerField& F, int jobs = 1);

// ---------------------------------------------------------------------------
// Normalization ledger and the nearby-cycles versus boundary identity.

class CalibrationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct NormLedger {
  /// IC sheaf of a smooth dim-dimensional space is the constant sheaf
  /// [dim](dim/2): sign (-1)^dim and factor v^-dim.
  static std::pair<int, LaurentValue> icShiftTwist(int dim);
  /// The shift-and-twist [-1](-1/2) appearing in the nearby/vanishing triangle.
  static LaurentValue triangleFactor();

  /// c(1), fixed by the single-point anchor.
  LaurentValue anchor;

  /// Computes c(1) from a degree-1 point; throws CalibrationError if the
  /// ratio is not an exact unit monomial.
  static NormLedger calibrate(ExteriorSignConvention convention = ExteriorSignConvention::Calibrated);
  /// c(n) = c(1)^n
  LaurentValue calibration(int n) const { return anchor.pow(static_cast<unsigned>(n)); }
};

struct NearbyBoundaryCheck {
  LaurentValue lhs;  // (1-q) * grPsi(n, D)
  LaurentValue rhs;  // c(n) * (1-q) * prod (1 - q^deg x)
  bool pass = false;
};

NearbyBoundaryCheck nearbyVsBoundaryCheck(int n, const EffectiveDivisor& D, const NormLedger& ledger,
                                          ExteriorSignConvention convention = ExteriorSignConvention::Calibrated);

// ---------------------------------------------------------------------------
// Grothendieck group of weight-graded IC symbols on X^(k).

struct IcSymbol {
  Partition rep;  // irreducible S_k representation on the disjoint locus
  HalfInt twist;

  /// Weil weight -2 * twist.
  int weight() const { return -twist.twice(); }
  auto operator<=>(const IcSymbol&) const = default;
};

class KElement {
 public:
  explicit KElement(int k = 0) : k_(k) {}
  static KElement symbol(const Partition& rep, HalfInt twist, std::int64_t coefficient = 1);

  int k() const { return k_; }
  const std::map<IcSymbol, std::int64_t>& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }
  std::int64_t coefficient(const IcSymbol& s) const;

  void add(const IcSymbol& s, std::int64_t coefficient);
  KElement& operator+=(const KElement& o);
  KElement& operator-=(const KElement& o);
  friend KElement operator+(KElement a, const KElement& b) { return a += b; }
  friend KElement operator-(KElement a, const KElement& b) { return a -= b; }
  bool operator==(const KElement& o) const = default;

  /// G(m): every twist shifted by m, so G(-1) lowers every twist by one.
  KElement twisted(HalfInt by) const;

  /// e.g. "sign(1) + sign(0) + sign(-1) + Ql(0)"
  std::string toString() const;

 private:
  void adoptSize(int k);
  int k_ = 0;
  std::map<IcSymbol, std::int64_t> terms_;
};

/// G - G(-1)
KElement differenceWithTwist(const KElement& G);

class ReconstructionError : public std::runtime_error {
 public:
  ReconstructionError(const std::string& what, KElement residual)
      : std::runtime_error(what), residual_(std::move(residual)) {}
  const KElement& residual() const { return residual_; }

 private:
  KElement residual_;
};

/// The unique finitely supported G with G - G(-1) = delta. Throws
/// ReconstructionError carrying the offending remainder otherwise.
KElement reconstructFromDifference(const KElement& delta);

KElement ploKElement(int k);
KElement icKernelKElement(int k);

class StalkUndetermined : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Trace of a K-group element at D. Defined for multiplicity-free D, for
/// elements built only from the trivial representation, and on X^(2) where
/// the sign sheaf vanishes on the diagonal. Throws StalkUndetermined
/// otherwise.
LaurentValue traceKElement(const KElement& el, const EffectiveDivisor& D);

}  // namespace vinbun
