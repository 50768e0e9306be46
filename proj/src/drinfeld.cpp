#include "vinbun/drinfeld.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <stdexcept>

#include "parallel.hpp"
#include "vinbun/kcalc.hpp"
#include "vinbun/poly.hpp"

namespace vinbun {

namespace {

std::vector<Fq> asTPolynomial(const std::vector<Fq>& entry) {
  FqPoly p = entry;
  poly::normalize(p);
  return p;
}

std::vector<Fq> sized(FqPoly p, int degree) {
  if (degree < 0) {
    if (poly::degree(p) >= 0) throw std::logic_error("nonzero entry in a negative-degree Hom space");
    return {};
  }
  if (poly::degree(p) > degree) throw std::logic_error("entry exceeds its form degree");
  p.resize(static_cast<std::size_t>(degree) + 1, PrimePowerField::zero());
  return p;
}

std::int64_t checkedMul(std::int64_t x, std::int64_t y) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(x, y, &out)) throw std::overflow_error("boundary factor exceeds 64 bits");
  return out;
}

std::int64_t checkedAdd(std::int64_t x, std::int64_t y) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(x, y, &out)) throw std::overflow_error("Drinfeld sum exceeds 64 bits");
  return out;
}

std::int64_t oneMinusQPower(std::int64_t q, int d) {
  std::int64_t p = 1;
  for (int i = 0; i < d; ++i) p = checkedMul(p, q);
  return 1 - p;
}

struct DefectData {
  std::vector<std::pair<FqPoly, int>> finite;
  int infinity = 0;

  std::vector<int> profile() const {
    std::vector<int> out;
    for (const auto& [p, m] : finite) out.push_back(poly::degree(p));
    if (infinity > 0) out.push_back(1);
    std::sort(out.begin(), out.end());
    return out;
  }
};

DefectData defectData(const HomMatrix& phi, const PrimePowerField& F) {
  const auto degs = entryDegrees(phi.source.a, phi.target.a);
  FqPoly g;
  int vInf = std::numeric_limits<int>::max();
  for (std::size_t i = 0; i < 4; ++i) {
    FqPoly p = asTPolynomial(phi.entries[i]);
    if (poly::degree(p) < 0) continue;
    vInf = std::min(vInf, degs[i] - poly::degree(p));
    g = g.empty() ? poly::makeMonic(F, p) : poly::monicGcd(F, g, p);
  }
  if (g.empty()) throw std::invalid_argument("defect divisor of the zero homomorphism");
  DefectData out;
  if (poly::degree(g) > 0) out.finite = poly::factorMonic(F, g);
  out.infinity = vInf;
  return out;
}

}  // namespace

HomMatrix HomMatrix::zero(SplitBundle source, SplitBundle target) {
  HomMatrix m{source, target, {}};
  const auto dims = homSpaceDims(source.a, target.a);
  for (std::size_t i = 0; i < 4; ++i) m.entries[i].assign(static_cast<std::size_t>(dims[i]), PrimePowerField::zero());
  return m;
}

bool HomMatrix::isZero() const {
  for (const auto& e : entries)
    for (Fq c : e)
      if (c != PrimePowerField::zero()) return false;
  return true;
}

std::array<int, 4> entryDegrees(int a1, int a2) {
  const std::array<int, 2> d1 = SplitBundle{a1}.summandDegrees();
  const std::array<int, 2> d2 = SplitBundle{a2}.summandDegrees();
  return {d2[0] - d1[0], d2[0] - d1[1], d2[1] - d1[0], d2[1] - d1[1]};
}

std::array<int, 4> homSpaceDims(int a1, int a2) {
  if (a1 < 0 || a2 < 0) throw std::invalid_argument("split bundles need a >= 0");
  std::array<int, 4> dims{};
  const auto degs = entryDegrees(a1, a2);
  for (std::size_t i = 0; i < 4; ++i) dims[i] = std::max(0, degs[i] + 1);
  return dims;
}

std::uint64_t isomCount(int a1, int a2, const PrimePowerField& F) {
  if (a1 < 0 || a2 < 0) throw std::invalid_argument("split bundles need a >= 0");
  if (a1 != a2) return 0;
  const std::uint64_t q = F.order();
  if (a1 == 0) return q * q * q - q;
  std::uint64_t out = q - 1;
  for (int i = 0; i < 2 * a1 + 1; ++i) out *= q;
  return out;
}

Fq determinant(const HomMatrix& phi, const PrimePowerField& F) {
  const FqPoly main = poly::mul(F, asTPolynomial(phi.entries[0]), asTPolynomial(phi.entries[3]));
  const FqPoly anti = poly::mul(F, asTPolynomial(phi.entries[1]), asTPolynomial(phi.entries[2]));
  const FqPoly det = poly::sub(F, main, anti);
  if (poly::degree(det) > 0) throw std::logic_error("determinant of a Hom between SL2-bundles is not constant");
  return det.empty() ? PrimePowerField::zero() : det.front();
}

HomMatrix compose(const HomMatrix& psi, const HomMatrix& phi, const PrimePowerField& F) {
  if (psi.source.a != phi.target.a) throw std::invalid_argument("compose: bundles do not match");
  HomMatrix out{phi.source, psi.target, {}};
  const auto degs = entryDegrees(phi.source.a, psi.target.a);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      FqPoly s;
      for (int k = 0; k < 2; ++k)
        s = poly::add(F, s,
                      poly::mul(F, asTPolynomial(psi.entries[static_cast<std::size_t>(2 * i + k)]),
                                asTPolynomial(phi.entries[static_cast<std::size_t>(2 * k + j)])));
      out.entries[static_cast<std::size_t>(2 * i + j)] = sized(s, degs[static_cast<std::size_t>(2 * i + j)]);
    }
  }
  return out;
}

EffectiveDivisor defectDivisorOfHom(const HomMatrix& phi, const PrimePowerField& F) {
  if (phi.isZero()) throw std::invalid_argument("defect divisor of the zero homomorphism");
  if (determinant(phi, F) != PrimePowerField::zero())
    throw std::invalid_argument("defect divisor requires det phi = 0");
  const DefectData data = defectData(phi, F);
  std::vector<DivisorTerm> terms;
  for (const auto& [p, m] : data.finite) terms.push_back({ClosedPoint::fromIrreducible(p), m});
  if (data.infinity > 0) terms.push_back({ClosedPoint::infinity(), data.infinity});
  return EffectiveDivisor::fromTerms(std::move(terms));
}

HomMatrix randomAutomorphism(SplitBundle E, const PrimePowerField& F, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> any(0, F.order() - 1);
  std::uniform_int_distribution<std::uint32_t> unit(1, F.order() - 1);
  HomMatrix m = HomMatrix::zero(E, E);
  if (E.a == 0) {
    do {
      for (auto& e : m.entries) e[0] = F.element(any(rng));
    } while (determinant(m, F) == PrimePowerField::zero());
    return m;
  }
  m.entries[0][0] = F.element(unit(rng));
  m.entries[3][0] = F.element(unit(rng));
  for (auto& c : m.entries[1]) c = F.element(any(rng));
  return m;
}

LaurentValue subsetExpansion(const std::vector<int>& degrees) {
  if (degrees.size() >= 63) throw std::invalid_argument("too many degrees for subset expansion");
  LaurentValue total;
  const std::uint64_t subsets = std::uint64_t{1} << degrees.size();
  for (std::uint64_t S = 0; S < subsets; ++S) {
    int exponent = 0;
    int size = 0;
    for (std::size_t k = 0; k < degrees.size(); ++k) {
      if (S >> k & 1) {
        exponent += degrees[k];
        ++size;
      }
    }
    total += LaurentValue(size % 2 == 0 ? 1 : -1) * LaurentValue::qPower(exponent);
  }
  return total;
}

LaurentValue boundaryProduct(const std::vector<int>& degrees) {
  LaurentValue out(1);
  for (int d : degrees) out *= LaurentValue(1) - LaurentValue::qPower(d);
  return out;
}

std::uint64_t defaultDrinfeldBudget() {
  if (const char* env = std::getenv("VINBUN_BUDGET"); env && *env) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (*end == '\0' && v > 0) return v;
  }
  return 100'000'000ULL;
}

DrinfeldResult drinfeldValue(int a1, int a2, const PrimePowerField& F, const DrinfeldOptions& options) {
  const auto dims = homSpaceDims(a1, a2);
  const auto q = static_cast<std::uint64_t>(F.order());
  int totalDim = 0;
  for (int d : dims) totalDim += d;
  std::uint64_t space = 1;
  for (int i = 0; i < totalDim; ++i) {
    if (space > options.budget / q + 1) throw DrinfeldBudgetExceeded("Hom space exceeds the enumeration budget");
    space *= q;
  }
  if (space > options.budget)
    throw DrinfeldBudgetExceeded("Hom space has " + std::to_string(space) + " points, budget is " +
                                 std::to_string(options.budget));

  const SplitBundle E1{a1};
  const SplitBundle E2{a2};
  const Fq generator = F.primitiveElement();
  const auto qi = static_cast<std::int64_t>(q);
  const int jobs = std::max(1, options.jobs);
  std::vector<DrinfeldResult> partial(static_cast<std::size_t>(jobs));

  detail::parallelRanges(jobs, space, [&](std::uint64_t begin, std::uint64_t end, int worker) {
    DrinfeldResult& acc = partial[static_cast<std::size_t>(worker)];
    HomMatrix phi = HomMatrix::zero(E1, E2);
    auto factorOf = [&](const DefectData& data) {
      std::int64_t f = 1;
      for (const auto& [p, m] : data.finite) f = checkedMul(f, oneMinusQPower(qi, poly::degree(p)));
      if (data.infinity > 0) f = checkedMul(f, 1 - qi);
      return f;
    };
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      // entry (0,0) takes the most significant digits
      std::uint64_t rest = idx;
      for (std::size_t e = 4; e-- > 0;)
        for (auto& c : phi.entries[e]) {
          c = F.element(static_cast<std::uint32_t>(rest % q));
          rest /= q;
        }
      if (idx == 0) continue;  // phi = 0
      const Fq det = determinant(phi, F);
      if (det == PrimePowerField::one()) {
        ++acc.isom;
        continue;
      }
      if (det != PrimePowerField::zero()) {
        ++acc.nonunitIsos;
        continue;
      }
      const DefectData data = defectData(phi, F);
      const std::int64_t factor = factorOf(data);
      acc.boundarySum = checkedAdd(acc.boundarySum, factor);
      ++acc.histogram[data.profile()];
      if (options.crossCheck) {
        const EffectiveDivisor D = defectDivisorOfHom(phi, F);
        const Rational stalk = drinfeldStalk(D).specializeAtQ(qi);
        if (stalk != Rational(factor) * Rational(1 - qi)) ++acc.boundaryMismatches;
        HomMatrix scaled = phi;
        for (auto& e : scaled.entries)
          for (auto& c : e) c = F.mul(generator, c);
        if (factorOf(defectData(scaled, F)) != factor) ++acc.orbitMismatches;
      }
    }
  });

  DrinfeldResult out;
  for (const auto& p : partial) {
    out.isom += p.isom;
    out.boundarySum = checkedAdd(out.boundarySum, p.boundarySum);
    out.nonunitIsos += p.nonunitIsos;
    out.boundaryMismatches += p.boundaryMismatches;
    out.orbitMismatches += p.orbitMismatches;
    for (const auto& [k, c] : p.histogram) out.histogram[k] += c;
  }
  out.value = out.isom - out.boundarySum;
  out.valueWithNonunit = out.value - out.nonunitIsos;
  return out;
}

std::string formatDegreeProfile(const std::vector<int>& profile) {
  if (profile.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < profile.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(profile[i]);
  }
  return out;
}

}  // namespace vinbun
