#include "vinbun/lefschetz.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "exact_kernel.hpp"

namespace vinbun {

std::vector<std::pair<int, HalfInt>> Sl2Irrep::weightLines() const {
  std::vector<std::pair<int, HalfInt>> lines;
  for (int i = 0; i <= highestWeight; ++i) {
    const int w = highestWeight - 2 * i;
    lines.emplace_back(w, twistOfCartanWeight(w));
  }
  return lines;
}

IntMatrix StandardRep::raising() {
  IntMatrix m = IntMatrix::Zero(2, 2);
  m(0, 1) = 1;
  return m;
}

IntMatrix StandardRep::lowering() {
  IntMatrix m = IntMatrix::Zero(2, 2);
  m(1, 0) = 1;
  return m;
}

IntMatrix StandardRep::cartan() {
  IntMatrix m = IntMatrix::Zero(2, 2);
  m(0, 0) = 1;
  m(1, 1) = -1;
  return m;
}

std::vector<LaurentValue> StandardRep::frobeniusEigenvalues() {
  return {LaurentValue::tateTwist(twistOfCartanWeight(1)), LaurentValue::tateTwist(twistOfCartanWeight(-1))};
}

namespace {

int permutationSign(const std::vector<int>& perm) {
  std::vector<bool> seen(perm.size(), false);
  int sign = 1;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

}  // namespace

TensorPowerModel::TensorPowerModel(int k, PermutationAction action) : k_(k), action_(action) {
  if (k < 1 || k > 12) throw std::invalid_argument("tensor power must satisfy 1 <= k <= 12");
  const int n = dimension();
  e_ = IntMatrix::Zero(n, n);
  f_ = IntMatrix::Zero(n, n);
  h_ = IntMatrix::Zero(n, n);
  for (int b = 0; b < n; ++b) {
    h_(b, b) = cartanWeight(b);
    for (int i = 0; i < k; ++i) {
      const int bit = 1 << i;
      if (b & bit)
        e_(b & ~bit, b) += 1;
      else
        f_(b | bit, b) += 1;
    }
  }
}

int TensorPowerModel::cartanWeight(int basisIndex) const {
  const int ones = std::popcount(static_cast<unsigned>(basisIndex));
  return (k_ - ones) - ones;
}

std::vector<int> TensorPowerModel::weightBasis(int w) const {
  std::vector<int> out;
  for (int b = 0; b < dimension(); ++b)
    if (cartanWeight(b) == w) out.push_back(b);
  return out;
}

IntMatrix TensorPowerModel::permutation(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != k_) throw std::invalid_argument("permutation size mismatch");
  const int sign = action_ == PermutationAction::SignTwisted ? permutationSign(perm) : 1;
  const int n = dimension();
  IntMatrix m = IntMatrix::Zero(n, n);
  for (int b = 0; b < n; ++b) {
    int image = 0;
    for (int i = 0; i < k_; ++i)
      if (b & (1 << i)) image |= 1 << perm[i];
    m(image, b) = sign;
  }
  return m;
}

std::vector<int> TensorPowerModel::representative(const CycleType& c) {
  std::vector<int> perm(static_cast<std::size_t>(c.size()));
  int start = 0;
  for (int len : c.parts()) {
    for (int j = 0; j < len; ++j) perm[start + j] = start + (j + 1) % len;
    start += len;
  }
  return perm;
}

std::int64_t TensorPowerModel::weightSpaceCharacter(int w, const CycleType& c) const {
  const IntMatrix sigma = permutation(representative(c));
  std::int64_t tr = 0;
  for (int b : weightBasis(w)) tr += sigma(b, b);
  return tr;
}

std::int64_t GradedBiRep::totalDimension() const {
  std::int64_t total = 0;
  for (const auto& [key, mult] : multiplicity)
    total += mult * static_cast<std::int64_t>(hookDimension(key.first)) * (key.second + 1);
  return total;
}

std::string GradedBiRep::toString() const {
  std::string out;
  for (auto it = multiplicity.rbegin(); it != multiplicity.rend(); ++it) {
    const auto& [key, mult] = *it;
    if (!out.empty()) out += " + ";
    if (mult != 1) out += std::to_string(mult) + "*";
    out += "U" + std::to_string(key.second) + "(x)";
    out += TwoColumnDiagram::isTwoColumn(key.first) ? TwoColumnDiagram::fromPartition(key.first).toString()
                                                    : key.first.toString();
  }
  return out.empty() ? "0" : out;
}

GradedBiRep bruteForceSchurWeyl(int k, PermutationAction action) {
  if (k < 1 || k > 8) throw std::invalid_argument("bruteForceSchurWeyl needs 1 <= k <= 8");
  const TensorPowerModel model(k, action);
  const auto classes = partitionsOf(k);
  std::map<CycleType, IntMatrix> sigmas;
  for (const auto& c : classes) sigmas.emplace(c, model.permutation(TensorPowerModel::representative(c)));

  auto weightChar = [&](int w) {
    ClassFunction chi;
    const auto basis = model.weightBasis(w);
    for (const auto& c : classes) {
      std::int64_t tr = 0;
      for (int b : basis) tr += sigmas.at(c)(b, b);
      chi[c] = tr;
    }
    return chi;
  };

  GradedBiRep out;
  out.k = k;
  for (int m = k; m >= 0; m -= 2) {
    const auto top = static_cast<std::int64_t>(model.weightBasis(m).size());
    const auto above = static_cast<std::int64_t>(model.weightBasis(m + 2).size());
    const std::int64_t sl2Multiplicity = top - above;
    if (sl2Multiplicity == 0) continue;
    ClassFunction chi = weightChar(m);
    const ClassFunction chiAbove = weightChar(m + 2);
    for (auto& [c, v] : chi) v -= chiAbove.at(c);
    const VirtualSnRep rep = decomposeClassFunction(chi, k);
    if (rep.dimension() != sl2Multiplicity)
      throw std::logic_error("highest-weight space dimension disagrees with its S_k character");
    for (const auto& [lambda, mult] : rep.multiplicity) out.multiplicity[{lambda, m}] = mult;
  }
  return out;
}

GradedBiRep predictedSchurWeyl(int k) {
  if (k < 1) throw std::invalid_argument("predictedSchurWeyl needs k >= 1");
  GradedBiRep out;
  out.k = k;
  for (int r = 0; 2 * r <= k; ++r) out.multiplicity[{TwoColumnDiagram::make(k, r).toPartition(), k - 2 * r}] = 1;
  return out;
}

bool actionsCommute(int k, PermutationAction action) {
  const TensorPowerModel model(k, action);
  for (int i = 0; i + 1 < k; ++i) {
    std::vector<int> perm(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) perm[j] = j;
    std::swap(perm[i], perm[i + 1]);
    const IntMatrix s = model.permutation(perm);
    for (const IntMatrix* op : {&model.raising(), &model.lowering(), &model.cartan()}) {
      if (s * (*op) != (*op) * s) return false;
    }
  }
  return true;
}

std::vector<KernelSummand> kernelOfN(int k) {
  if (k < 1) throw std::invalid_argument("kernelOfN needs k >= 1");
  std::vector<KernelSummand> out;
  for (int r = 0; 2 * r <= k; ++r) out.push_back({TwoColumnDiagram::make(k, r), HalfInt::fromTwice(k - 2 * r)});
  return out;
}

std::vector<KernelLayer> kernelOfLoweringOperator(int k, PermutationAction action) {
  if (k < 1 || k > 8) throw std::invalid_argument("kernelOfLoweringOperator needs 1 <= k <= 8");
  const TensorPowerModel model(k, action);
  const auto classes = partitionsOf(k);
  std::vector<KernelLayer> layers;
  for (int w = -k; w <= k; w += 2) {
    const auto cols = model.weightBasis(w);
    const auto rows = model.weightBasis(w - 2);
    std::vector<std::vector<Rational>> block(rows.size(), std::vector<Rational>(cols.size(), 0));
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols.size(); ++j) block[i][j] = model.lowering()(rows[i], cols[j]);
    const detail::KernelBasis ker = detail::rationalKernel(block, static_cast<int>(cols.size()));
    if (ker.vectors.empty()) continue;

    std::map<int, std::size_t> position;
    for (std::size_t j = 0; j < cols.size(); ++j) position[cols[j]] = j;
    ClassFunction chi;
    for (const auto& c : classes) {
      const IntMatrix sigma = model.permutation(TensorPowerModel::representative(c));
      Rational tr = 0;
      for (std::size_t v = 0; v < ker.vectors.size(); ++v) {
        // coordinate of sigma(k_v) along k_v is its entry at the free column
        const int freeBasis = cols[static_cast<std::size_t>(ker.freeColumns[v])];
        Rational entry = 0;
        for (std::size_t j = 0; j < cols.size(); ++j) {
          if (ker.vectors[v][j] == 0) continue;
          entry += Rational(sigma(freeBasis, cols[j])) * ker.vectors[v][j];
        }
        tr += entry;
      }
      if (denominator(tr) != 1) throw std::logic_error("non-integral character on kernel of f");
      chi[c] = static_cast<std::int64_t>(numerator(tr));
    }
    KernelLayer layer;
    layer.cartanWeight = w;
    layer.twist = twistOfCartanWeight(w);
    layer.dimension = static_cast<int>(ker.vectors.size());
    layer.rep = decomposeClassFunction(chi, k);
    layers.push_back(std::move(layer));
  }
  return layers;
}

std::vector<KernelSummand> kernelSummands(const std::vector<KernelLayer>& layers) {
  std::vector<KernelSummand> out;
  for (const auto& layer : layers) {
    if (layer.rep.multiplicity.size() != 1 || layer.rep.multiplicity.begin()->second != 1)
      throw std::logic_error("kernel layer at weight " + std::to_string(layer.cartanWeight) +
                             " is not a single irreducible");
    out.push_back({TwoColumnDiagram::fromPartition(layer.rep.multiplicity.begin()->first), layer.twist});
  }
  std::sort(out.begin(), out.end(), [](const KernelSummand& a, const KernelSummand& b) { return a.diagram.r < b.diagram.r; });
  return out;
}

std::map<int, int> signOnLowestLines(PermutationAction action) {
  std::map<int, int> out;
  const CycleType transposition(std::vector<int>{2});
  for (const auto& layer : kernelOfLoweringOperator(2, action)) {
    if (layer.dimension != 1) throw std::logic_error("expected one-dimensional lowest weight lines for k = 2");
    out[-layer.cartanWeight] = static_cast<int>(layer.rep.character(transposition));
  }
  return out;
}

std::int64_t transpositionTrace(PermutationAction action, bool weightZeroOnly) {
  const TensorPowerModel model(2, action);
  const IntMatrix s = model.permutation({1, 0});
  if (!weightZeroOnly) return s.trace();
  std::int64_t tr = 0;
  for (int b : model.weightBasis(0)) tr += s(b, b);
  return tr;
}

}  // namespace vinbun
