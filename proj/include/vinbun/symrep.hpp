#pragma once

// Symmetric-group combinatorics over general partitions, with two-column
// Young diagrams as the public currency of the trace formulas.

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace vinbun {

/// A partition as weakly decreasing positive row lengths. Also used for cycle
/// types of permutations.
class Partition {
 public:
  Partition() = default;
  /// Sorts and drops zeros; throws std::invalid_argument on negative parts.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const;  // number of boxes
  int length() const { return static_cast<int>(parts_.size()); }
  Partition conjugate() const;
  std::string toString() const;  // "(2,1,1)"

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

using CycleType = Partition;

/// Two-column diagram on k boxes: first column k-r, second column r.
/// As a partition (row lengths) this is (2^r, 1^(k-2r)).
struct TwoColumnDiagram {
  int k = 0;
  int r = 0;

  /// Throws std::invalid_argument unless 0 <= r <= k/2.
  static TwoColumnDiagram make(int k, int r);
  Partition toPartition() const;
  /// True iff the partition has at most two columns.
  static bool isTwoColumn(const Partition& p);
  static TwoColumnDiagram fromPartition(const Partition& p);
  std::string toString() const;  // "rho(k-r,r)"

  auto operator<=>(const TwoColumnDiagram&) const = default;
};

std::vector<Partition> partitionsOf(int k);

std::uint64_t factorial(int k);
/// k! (k-2r+1) / (r! (k-r+1)!)
std::uint64_t dimension(const TwoColumnDiagram& d);
/// Hook-length formula.
std::uint64_t hookDimension(const Partition& lambda);

/// Size of the centralizer of a permutation of the given cycle type.
std::uint64_t centralizerOrder(const CycleType& c);
std::uint64_t classSize(const CycleType& c);

/// Irreducible character value via Murnaghan-Nakayama. Memoized; safe to
/// call concurrently. Throws std::invalid_argument on mismatched sizes.
std::int64_t character(const Partition& lambda, const CycleType& c);
std::int64_t character(const TwoColumnDiagram& d, const CycleType& c);
/// prod over cycles of (-1)^(len+1)
std::int64_t signCharacter(const CycleType& c);

/// Finitely supported integer combination of irreducibles of S_k.
struct VirtualSnRep {
  int k = 0;
  std::map<Partition, std::int64_t> multiplicity;

  std::int64_t character(const CycleType& c) const;
  std::int64_t dimension() const;
  bool operator==(const VirtualSnRep&) const = default;
};

using ClassFunction = std::map<CycleType, std::int64_t>;

ClassFunction characterTable(const VirtualSnRep& rep);

/// Multiplicities through the character inner product. Throws
/// std::invalid_argument when a cycle type of k is missing and
/// std::domain_error when a multiplicity is not an integer.
VirtualSnRep decomposeClassFunction(const ClassFunction& values, int k);

/// Rows indexed by partitions of k, columns by cycle types, both in
/// partitionsOf order; printed as CSV.
std::string characterTableCsv(int k);

}  // namespace vinbun
