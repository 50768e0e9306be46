#pragma once

// The tensor power V^(x)k of the standard representation V of the
// Lefschetz-sl2, with S_k permuting tensor factors (optionally times the
// sign character). Everything is built from exact integer matrices in the
// standard tensor basis.
//
// Conventions: the basis vector e1 of V has Cartan weight +1, e2 has -1.
// Weil weight equals Cartan weight, and the Tate twist (t) has weight -2t,
// so a line of Cartan weight w carries the twist -w/2. Frobenius acts on V
// with eigenvalues v (on e1) and v^-1 (on e2).

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "vinbun/laurent.hpp"
#include "vinbun/symrep.hpp"

namespace vinbun {

using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

enum class PermutationAction { SignTwisted, Plain };

struct Sl2Irrep {
  int highestWeight = 0;

  int dimension() const { return highestWeight + 1; }
  /// (Cartan weight, Tate twist) of each weight line, highest first.
  std::vector<std::pair<int, HalfInt>> weightLines() const;
};

inline HalfInt twistOfCartanWeight(int w) { return HalfInt::fromTwice(-w); }

/// The 2-dimensional V with its sl2 operators.
struct StandardRep {
  static IntMatrix raising();   // e
  static IntMatrix lowering();  // f
  static IntMatrix cartan();    // h
  /// Frobenius eigenvalues on (e1, e2).
  static std::vector<LaurentValue> frobeniusEigenvalues();
};

class TensorPowerModel {
 public:
  explicit TensorPowerModel(int k, PermutationAction action = PermutationAction::SignTwisted);

  int k() const { return k_; }
  int dimension() const { return 1 << k_; }
  PermutationAction action() const { return action_; }

  /// Basis index bit i set means slot i holds e2.
  int cartanWeight(int basisIndex) const;
  std::vector<int> weightBasis(int w) const;

  const IntMatrix& raising() const { return e_; }
  const IntMatrix& lowering() const { return f_; }
  const IntMatrix& cartan() const { return h_; }

  /// Matrix of the permutation sending slot i to slot perm[i].
  IntMatrix permutation(const std::vector<int>& perm) const;
  /// A permutation of the given cycle type built from consecutive cycles.
  static std::vector<int> representative(const CycleType& c);

  /// S_k character of the Cartan weight space W_w.
  std::int64_t weightSpaceCharacter(int w, const CycleType& c) const;

 private:
  int k_;
  PermutationAction action_;
  IntMatrix e_, f_, h_;
};

/// Multiplicities of U_m (x) rho in V^(x)k, keyed by (S_k irrep, m).
struct GradedBiRep {
  int k = 0;
  std::map<std::pair<Partition, int>, std::int64_t> multiplicity;

  std::int64_t totalDimension() const;
  std::string toString() const;
  bool operator==(const GradedBiRep&) const = default;
};

/// Throws std::invalid_argument unless 1 <= k <= 8.
GradedBiRep bruteForceSchurWeyl(int k, PermutationAction action = PermutationAction::SignTwisted);
GradedBiRep predictedSchurWeyl(int k);

/// True iff every adjacent transposition commutes with e, f and h.
bool actionsCommute(int k, PermutationAction action = PermutationAction::SignTwisted);

struct KernelSummand {
  TwoColumnDiagram diagram;
  HalfInt twist;

  auto operator<=>(const KernelSummand&) const = default;
};

/// Closed form: (rho(k-r,r), k/2 - r) for 0 <= r <= k/2.
std::vector<KernelSummand> kernelOfN(int k);

/// ker(f) intersected with one Cartan weight space, as an S_k representation.
struct KernelLayer {
  int cartanWeight = 0;
  HalfInt twist;
  int dimension = 0;
  VirtualSnRep rep;
};

/// Literal kernel of the lowering operator on V^(x)k through exact rational
/// elimination, one layer per weight with nonzero kernel. k <= 8.
std::vector<KernelLayer> kernelOfLoweringOperator(int k, PermutationAction action = PermutationAction::SignTwisted);

/// Translation of the literal kernel into summands; throws std::logic_error
/// if a layer is not a single two-column irreducible.
std::vector<KernelSummand> kernelSummands(const std::vector<KernelLayer>& layers);

/// For k = 2: the scalar by which the transposition acts on the lowest
/// weight line of U_0 and of U_2.
std::map<int, int> signOnLowestLines(PermutationAction action = PermutationAction::SignTwisted);

/// Trace of the transposition on V (x) V; restricted to the Cartan weight-0
/// subspace when `weightZeroOnly`.
std::int64_t transpositionTrace(PermutationAction action, bool weightZeroOnly);

}  // namespace vinbun
