#pragma once

// Explicit local models: fibers of the degeneration over divisors with
// rational support. A point of multiplicity m contributes variables
// a[-m..-1], b[0..m-1] subject to the vanishing of the coefficients of
// t^s, -m < s < 0, in (sum a_i t^i)(sum b_j t^j); its d-value is
// a[-m]*b[0]. Several points are coupled by equating their d-values.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "vinbun/divisor.hpp"
#include "vinbun/field.hpp"
#include "vinbun/laurent.hpp"

namespace vinbun {

struct BilinearTerm {
  int aIndex = 0;  // in [-m, -1]
  int bIndex = 0;  // in [0, m-1]
};

struct FactorEquation {
  int factor = 0;
  int r = 0;  // 1 <= r <= m-1; collects the terms with aIndex + bIndex = r - m
  std::vector<BilinearTerm> terms;
};

class EquationSystem {
 public:
  /// Throws std::invalid_argument on an empty list or a non-positive entry.
  explicit EquationSystem(std::vector<int> multiplicities);

  const std::vector<int>& multiplicities() const { return multiplicities_; }
  int factorCount() const { return static_cast<int>(multiplicities_.size()); }
  int degree() const;
  int variableCount() const { return 2 * degree(); }
  const std::vector<FactorEquation>& equations() const { return equations_; }
  /// Number of d-equality couplings, one per factor after the first.
  int couplingCount() const { return factorCount() - 1; }

  /// Variable name in canonical text, primes marking later factors: a''[-1].
  static std::string variableName(char letter, int factor, int index);
  /// One line per equation, then `d = ...` and the couplings.
  std::string toString() const;

 private:
  std::vector<int> multiplicities_;
  std::vector<FactorEquation> equations_;
};

EquationSystem buildSystem(const std::vector<int>& multiplicities);

struct FactorPoint {
  std::vector<Fq> a;  // a[0] holds a_{-m}, a[m-1] holds a_{-1}
  std::vector<Fq> b;  // b[j] holds b_j
};

struct SolutionPoint {
  std::vector<FactorPoint> factors;
  Fq dValue;
};

/// Per-factor d-value a_{-m} b_0.
Fq factorD(const PrimePowerField& F, const FactorPoint& p);
/// True iff every bilinear equation holds in every factor and the d-values agree.
bool satisfies(const EquationSystem& sys, const PrimePowerField& F, const SolutionPoint& pt);

struct DConstraint {
  enum class Kind { Any, Zero, Nonzero, Equals };
  Kind kind = Kind::Any;
  Fq value;

  static DConstraint any() { return {Kind::Any, {}}; }
  static DConstraint zero() { return {Kind::Zero, {}}; }
  static DConstraint nonzero() { return {Kind::Nonzero, {}}; }
  static DConstraint equals(Fq c) { return {Kind::Equals, c}; }
  /// "any", "zero", "nonzero" or an element index.
  static DConstraint parse(const std::string& text, const PrimePowerField& F);

  bool admits(Fq d) const;
};

enum class EnumerationStrategy {
  Naive,       // every assignment of all 2n coordinates
  Propagated,  // per factor: a enumerated, b solved from the linear system
};

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::uint64_t candidates, std::uint64_t budget);
  std::uint64_t candidates() const { return candidates_; }
  std::uint64_t budget() const { return budget_; }

 private:
  std::uint64_t candidates_;
  std::uint64_t budget_;
};

/// 10^9 unless VINBUN_BUDGET holds a positive integer.
std::uint64_t defaultBudget();

struct EnumerationOptions {
  int jobs = 1;
  std::uint64_t budget = defaultBudget();
  EnumerationStrategy strategy = EnumerationStrategy::Propagated;
};

/// Size of the coordinate space the strategy walks (saturates at UINT64_MAX).
std::uint64_t candidateCount(const EquationSystem& sys, const PrimePowerField& F, EnumerationStrategy strategy);

/// Number of solutions with common d-value c, indexed by c.value.
std::vector<std::uint64_t> countByD(const EquationSystem& sys, const PrimePowerField& F,
                                    const EnumerationOptions& options = {});

std::uint64_t countPoints(const EquationSystem& sys, const PrimePowerField& F, DConstraint constraint,
                          const EnumerationOptions& options = {});

/// Streams every solution admitted by the constraint, in a fixed order.
void forEachPoint(const EquationSystem& sys, const PrimePowerField& F, DConstraint constraint,
                  const std::function<void(const SolutionPoint&)>& visit, const EnumerationOptions& options = {});

struct DefectProfile {
  std::vector<int> perFactor;

  int total() const;
  bool operator==(const DefectProfile&) const = default;
};

/// Defect of one factor: min(m, ord f, ord g t^m, ord of the t^(>=0) part of g f).
int factorDefect(const PrimePowerField& F, const FactorPoint& p);
/// Throws std::invalid_argument when the point lies in the G-locus (d != 0).
DefectProfile defectProfile(const PrimePowerField& F, const SolutionPoint& pt);

/// Defect k -> number of d = 0 points of the single factor [n].
std::map<int, std::uint64_t> strataCounts(int n, const PrimePowerField& F, const EnumerationOptions& options = {});
/// sum over n1 + n2 = n - k of c(n1) c(n2), c(0) = 1, c(m) = q^m - q^(m-1)
std::uint64_t predictedStratumCount(int n, int k, std::uint64_t q);

/// d = c counts of [n] for every nonzero c, keyed by c.value.
std::map<std::uint32_t, std::uint64_t> fiberCounts(int n, const PrimePowerField& F,
                                                   const EnumerationOptions& options = {});
bool perFiberUniformity(int n, const PrimePowerField& F, const EnumerationOptions& options = {});

/// The point with every coordinate multiplied by c^2 is a solution whose
/// d-value is c^4 d.
bool gmOrbitCheck(const EquationSystem& sys, const PrimePowerField& F, const SolutionPoint& pt, Fq c);

struct OmegaCountCheck {
  std::uint64_t count = 0;       // G-locus of the fiber over D
  Rational traceSide;            // q^n (q-1) traceOmegaTilde(n, D) at v^2 = q
  std::uint64_t closedForm = 0;  // (q-1)^(m+1) q^(n-m)
  bool pass = false;
};

/// Throws std::invalid_argument unless D is supported on rational points.
OmegaCountCheck omegaPointCountIdentity(int n, const EffectiveDivisor& D, const PrimePowerField& F,
                                        const EnumerationOptions& options = {});

}  // namespace vinbun
