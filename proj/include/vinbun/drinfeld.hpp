#pragma once

// Drinfeld's function on pairs of split SL2-bundles O(a) + O(-a) over P^1,
// evaluated by enumerating Hom(E1, E2)(F_q).
//
// An entry of degree e is a binary form in (s, t), stored through its
// dehomogenization: coefficient k multiplies t^k s^(e-k).

#include <array>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "vinbun/divisor.hpp"
#include "vinbun/field.hpp"
#include "vinbun/laurent.hpp"

namespace vinbun {

struct SplitBundle {
  int a = 0;  // O(a) + O(-a)

  /// Degrees of the two summands, (a, -a).
  std::array<int, 2> summandDegrees() const { return {a, -a}; }
};

struct HomMatrix {
  SplitBundle source;
  SplitBundle target;
  /// Row-major (0,0), (0,1), (1,0), (1,1); entry (i,j) maps summand j of the
  /// source to summand i of the target. Size = entry degree + 1, or 0.
  std::array<std::vector<Fq>, 4> entries;

  static HomMatrix zero(SplitBundle source, SplitBundle target);
  bool isZero() const;
  bool operator==(const HomMatrix&) const = default;
};

/// deg_i(E2) - deg_j(E1), row major.
std::array<int, 4> entryDegrees(int a1, int a2);
/// h^0 of each entry line bundle; throws std::invalid_argument on negative input.
std::array<int, 4> homSpaceDims(int a1, int a2);

/// Number of determinant-one automorphisms when a1 = a2, else 0.
std::uint64_t isomCount(int a1, int a2, const PrimePowerField& F);

/// det phi, a constant since both bundles have trivial determinant.
Fq determinant(const HomMatrix& phi, const PrimePowerField& F);
/// psi o phi.
HomMatrix compose(const HomMatrix& psi, const HomMatrix& phi, const PrimePowerField& F);

/// Divisor on P^1 of the first determinantal ideal: at a finite point, the
/// minimum valuation of the nonzero entries; at infinity, the minimum of
/// (entry degree - t-degree). Throws std::invalid_argument when phi = 0 or
/// det phi != 0.
EffectiveDivisor defectDivisorOfHom(const HomMatrix& phi, const PrimePowerField& F);

/// Random automorphism of O(a) + O(-a): [[alpha, beta], [0, delta]] with
/// beta of degree 2a for a > 0, an invertible constant matrix for a = 0.
HomMatrix randomAutomorphism(SplitBundle E, const PrimePowerField& F, std::mt19937_64& rng);

/// sum over subsets S of (-1)^|S| q^(sum_{k in S} d_k), as a polynomial in q.
LaurentValue subsetExpansion(const std::vector<int>& degrees);
/// prod_k (1 - q^(d_k))
LaurentValue boundaryProduct(const std::vector<int>& degrees);

/// VINBUN_BUDGET when set, else 10^8 Hom candidates.
std::uint64_t defaultDrinfeldBudget();

struct DrinfeldOptions {
  int jobs = 1;
  std::uint64_t budget = defaultDrinfeldBudget();
  /// Also compares every factor with the boundary stalk and with the factor
  /// of its scaling by a primitive element.
  bool crossCheck = false;
};

struct DrinfeldResult {
  std::int64_t isom = 0;          // det = 1
  std::int64_t boundarySum = 0;   // sum over det = 0, phi != 0 of prod (1 - q^deg x)
  std::int64_t value = 0;         // isom - boundarySum
  std::int64_t nonunitIsos = 0;   // det a constant outside {0, 1}
  std::int64_t valueWithNonunit = 0;  // isom - boundarySum - nonunitIsos
  /// Sorted residue degrees of the defect divisor's distinct points -> #phi.
  std::map<std::vector<int>, std::uint64_t> histogram;
  std::uint64_t boundaryMismatches = 0;
  std::uint64_t orbitMismatches = 0;
};

class DrinfeldBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

DrinfeldResult drinfeldValue(int a1, int a2, const PrimePowerField& F, const DrinfeldOptions& options = {});

/// "1,1" for a profile; "-" for the empty divisor.
std::string formatDegreeProfile(const std::vector<int>& profile);

}  // namespace vinbun
