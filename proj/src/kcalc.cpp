#include "vinbun/kcalc.hpp"

#include <algorithm>
#include <functional>
#include <thread>

namespace vinbun {

std::string toString(ExteriorSignConvention c) {
  return c == ExteriorSignConvention::Calibrated ? "calibrated" : "per-point";
}

namespace {

LaurentValue signPower(long long exponent) { return LaurentValue(exponent % 2 == 0 ? 1 : -1); }

void requireDegree(int n, const EffectiveDivisor& D, const char* what) {
  if (D.degree() != n)
    throw std::invalid_argument(std::string(what) + ": divisor has degree " + std::to_string(D.degree()) +
                                ", expected " + std::to_string(n));
}

LaurentValue shiftTwistFactor(int shift, HalfInt twist) {
  return signPower(shift) * LaurentValue::tateTwist(twist);
}

const std::vector<LaurentValue>& standardEigenvalues() {
  static const std::vector<LaurentValue> eig{LaurentValue::v(1), LaurentValue::v(-1)};
  return eig;
}

}  // namespace

LaurentValue elementarySymmetric(int m, std::span<const LaurentValue> xs) {
  if (m < 0) return LaurentValue();
  // e_j of the first i variables, built up one variable at a time
  std::vector<LaurentValue> e(static_cast<std::size_t>(m) + 1);
  e[0] = LaurentValue(1);
  for (const auto& x : xs)
    for (int j = m; j >= 1; --j) e[j] += e[j - 1] * x;
  return e[m];
}

LaurentValue extExteriorLocalFactor(LocalType local, std::span<const LaurentValue> eigenvalues,
                                    ExteriorSignConvention convention) {
  if (local.multiplicity > static_cast<int>(eigenvalues.size())) return LaurentValue();
  std::vector<LaurentValue> powers;
  powers.reserve(eigenvalues.size());
  for (const auto& a : eigenvalues) powers.push_back(a.pow(static_cast<unsigned>(local.degree)));
  const long long signExp = convention == ExteriorSignConvention::Calibrated
                                ? static_cast<long long>(local.degree + 1) * local.multiplicity
                                : local.degree + 1;
  return signPower(signExp) * elementarySymmetric(local.multiplicity, powers);
}

LaurentValue traceExtExterior(int n, std::span<const LaurentValue> eigenvalues, const EffectiveDivisor& D, int shift,
                              HalfInt twist, ExteriorSignConvention convention) {
  requireDegree(n, D, "traceExtExterior");
  LaurentValue result = shiftTwistFactor(shift, twist);
  for (const auto& local : D.localTypes()) {
    result *= extExteriorLocalFactor(local, eigenvalues, convention);
    if (result.isZero()) break;
  }
  return result;
}

LaurentValue traceOmegaTilde(int n, const EffectiveDivisor& D) {
  requireDegree(n, D, "traceOmegaTilde");
  LaurentValue total;
  for (int j = 0; j <= n; ++j) {
    const LaurentValue outer = signPower(j) * LaurentValue::qPower(-j);
    for (const auto& [D1, D2] : decompositions(D, SplitConstraint::SecondMultiplicityFree, {n - j, j})) {
      LaurentValue term = outer;
      for (const auto& t : D2.parts()) term *= signPower(t.point.degree() + 1);
      total += term;
    }
  }
  return total;
}

LaurentValue tracePLO(int k, const EffectiveDivisor& D, ExteriorSignConvention convention) {
  requireDegree(k, D, "tracePLO");
  return traceExtExterior(k, standardEigenvalues(), D, k, HalfInt::fromTwice(k), convention);
}

LaurentValue traceGrPsi(int n, const EffectiveDivisor& D, ExteriorSignConvention convention) {
  requireDegree(n, D, "traceGrPsi");
  LaurentValue total;
  for (int k = 0; k <= n; ++k) {
    const LaurentValue outer = LaurentValue::qPower(-(n - k));
    for (const auto& [rest, middle] : decompositions(D, SplitConstraint::None, {n - k, k})) {
      const LaurentValue plo = tracePLO(k, middle, convention);
      if (plo.isZero()) continue;
      std::int64_t outerSplits = 0;
      for (int n1 = 0; n1 <= n - k; ++n1)
        outerSplits += static_cast<std::int64_t>(decompositions(rest, SplitConstraint::None, {n1, n - k - n1}).size());
      total += LaurentValue(outerSplits) * outer * plo;
    }
  }
  return total;
}

LaurentValue drinfeldStalk(const EffectiveDivisor& D) {
  LaurentValue result = LaurentValue(1) - LaurentValue::qPower(1);
  for (int d : D.residueDegrees()) result *= LaurentValue(1) - LaurentValue::qPower(d);
  return result;
}

// ---------------------------------------------------------------------------

TraceSpec TraceSpec::constant(int degree, int shift, HalfInt twist) {
  return TraceSpec{spec::Constant{degree, shift, twist}};
}

TraceSpec TraceSpec::extExterior(int degree, std::vector<LaurentValue> eigenvalues, int shift, HalfInt twist) {
  return TraceSpec{spec::ExtExterior{degree, std::move(eigenvalues), shift, twist}};
}

TraceSpec TraceSpec::pushforwardAdd(std::vector<TraceSpec> factors) {
  return TraceSpec{spec::PushforwardAdd{std::move(factors)}};
}

TraceSpec TraceSpec::scaled(LaurentValue factor, TraceSpec inner) {
  spec::Scale s{std::move(factor), {}};
  s.inner.push_back(std::move(inner));
  return TraceSpec{std::move(s)};
}

TraceSpec TraceSpec::sum(std::vector<TraceSpec> terms) { return TraceSpec{spec::Sum{std::move(terms)}}; }

int TraceSpec::degree() const {
  return std::visit(
      [](const auto& n) -> int {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, spec::Constant> || std::is_same_v<T, spec::ExtExterior>) {
          return n.degree;
        } else if constexpr (std::is_same_v<T, spec::PushforwardAdd>) {
          int d = 0;
          for (const auto& f : n.factors) d += f.degree();
          return d;
        } else if constexpr (std::is_same_v<T, spec::Scale>) {
          return n.inner.at(0).degree();
        } else {
          if (n.terms.empty()) throw std::invalid_argument("empty sum has no degree");
          const int d = n.terms.front().degree();
          for (const auto& t : n.terms)
            if (t.degree() != d) throw std::invalid_argument("sum of sheaves on different symmetric powers");
          return d;
        }
      },
      node);
}

namespace {

LaurentValue evaluatePushforward(std::span<const TraceSpec> factors, const EffectiveDivisor& D,
                                 ExteriorSignConvention convention) {
  if (factors.empty()) return D.empty() ? LaurentValue(1) : LaurentValue();
  const int d0 = factors.front().degree();
  if (d0 > D.degree()) return LaurentValue();
  LaurentValue total;
  for (const auto& [rest, first] : decompositions(D, SplitConstraint::None, {D.degree() - d0, d0})) {
    const LaurentValue head = evaluate(factors.front(), first, convention);
    if (head.isZero()) continue;
    total += head * evaluatePushforward(factors.subspan(1), rest, convention);
  }
  return total;
}

}  // namespace

LaurentValue evaluate(const TraceSpec& s, const EffectiveDivisor& D, ExteriorSignConvention convention) {
  return std::visit(
      [&](const auto& n) -> LaurentValue {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, spec::Constant>) {
          requireDegree(n.degree, D, "constant sheaf");
          return shiftTwistFactor(n.shift, n.twist);
        } else if constexpr (std::is_same_v<T, spec::ExtExterior>) {
          return traceExtExterior(n.degree, n.eigenvalues, D, n.shift, n.twist, convention);
        } else if constexpr (std::is_same_v<T, spec::PushforwardAdd>) {
          int total = 0;
          for (const auto& f : n.factors) total += f.degree();
          requireDegree(total, D, "add pushforward");
          return evaluatePushforward(n.factors, D, convention);
        } else if constexpr (std::is_same_v<T, spec::Scale>) {
          return n.factor * evaluate(n.inner.at(0), D, convention);
        } else {
          LaurentValue total;
          for (const auto& t : n.terms) total += evaluate(t, D, convention);
          return total;
        }
      },
      s.node);
}

TraceSpec omegaTildeSpec(int n) {
  std::vector<TraceSpec> terms;
  for (int j = 0; j <= n; ++j) {
    terms.push_back(TraceSpec::pushforwardAdd({TraceSpec::constant(n - j, 0, HalfInt()),
                                               TraceSpec::extExterior(j, {LaurentValue(1)}, j, HalfInt::fromInt(j))}));
  }
  return TraceSpec::sum(std::move(terms));
}

TraceSpec ploSpec(int k) { return TraceSpec::extExterior(k, standardEigenvalues(), k, HalfInt::fromTwice(k)); }

TraceSpec grPsiSpec(int n) {
  std::vector<TraceSpec> terms;
  for (int k = 0; k <= n; ++k) {
    for (int n1 = 0; n1 + k <= n; ++n1) {
      const int n2 = n - k - n1;
      // the outer [2n-2k](n-k) is spread over the two constant factors
      terms.push_back(TraceSpec::pushforwardAdd({TraceSpec::constant(n1, 2 * n1, HalfInt::fromInt(n1)), ploSpec(k),
                                                 TraceSpec::constant(n2, 2 * n2, HalfInt::fromInt(n2))}));
    }
  }
  return TraceSpec::sum(std::move(terms));
}

LaurentValue traceSweep(TraceObject object, int n, const PrimePowerField& F, int jobs) {
  const std::vector<EffectiveDivisor> divisors = enumerateDivisors(F, n);
  auto traceOf = [&](const EffectiveDivisor& D) {
    switch (object) {
      case TraceObject::PLO:
        return tracePLO(n, D);
      case TraceObject::OmegaTilde:
        return traceOmegaTilde(n, D);
      case TraceObject::GrPsi:
        return traceGrPsi(n, D);
    }
    return LaurentValue();
  };
  jobs = std::max(1, jobs);
  std::vector<LaurentValue> partial(static_cast<std::size_t>(jobs));
  {
    std::vector<std::jthread> workers;
    for (int w = 0; w < jobs; ++w) {
      workers.emplace_back([&, w] {
        for (std::size_t i = static_cast<std::size_t>(w); i < divisors.size(); i += static_cast<std::size_t>(jobs))
          partial[static_cast<std::size_t>(w)] += traceOf(divisors[i]);
      });
    }
  }
  LaurentValue total;
  for (const auto& p : partial) total += p;
  return total;
}

// ---------------------------------------------------------------------------

std::pair<int, LaurentValue> NormLedger::icShiftTwist(int dim) {
  return {dim % 2 == 0 ? 1 : -1, LaurentValue::v(-dim)};
}

LaurentValue NormLedger::triangleFactor() { return shiftTwistFactor(-1, HalfInt::fromTwice(-1)); }

NormLedger NormLedger::calibrate(ExteriorSignConvention convention) {
  const EffectiveDivisor x = EffectiveDivisor::fromTerms(
      {{ClosedPoint::fromIrreducible({PrimePowerField::zero(), PrimePowerField::one()}), 1}});
  const LaurentValue oneMinusQ = LaurentValue(1) - LaurentValue::qPower(1);
  const LaurentValue lhs = oneMinusQ * traceGrPsi(1, x, convention);
  const LaurentValue boundary = drinfeldStalk(x);
  const auto ratio = lhs.divideExact(boundary);
  if (!ratio || !ratio->isMonomial() || (ratio->coefficient(ratio->minExponent()) != 1))
    throw CalibrationError("nearby-cycles anchor at n = 1 is not a unit monomial multiple of the boundary stalk: " +
                           lhs.toString() + " vs " + boundary.toString());
  return NormLedger{*ratio};
}

NearbyBoundaryCheck nearbyVsBoundaryCheck(int n, const EffectiveDivisor& D, const NormLedger& ledger,
                                          ExteriorSignConvention convention) {
  requireDegree(n, D, "nearbyVsBoundaryCheck");
  NearbyBoundaryCheck out;
  out.lhs = (LaurentValue(1) - LaurentValue::qPower(1)) * traceGrPsi(n, D, convention);
  out.rhs = ledger.calibration(n) * drinfeldStalk(D);
  out.pass = out.lhs == out.rhs;
  return out;
}

// ---------------------------------------------------------------------------

KElement KElement::symbol(const Partition& rep, HalfInt twist, std::int64_t coefficient) {
  KElement el(rep.size());
  el.add({rep, twist}, coefficient);
  return el;
}

std::int64_t KElement::coefficient(const IcSymbol& s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? 0 : it->second;
}

void KElement::adoptSize(int k) {
  if (terms_.empty() && k_ == 0) k_ = k;
  if (k != k_) throw std::invalid_argument("K-group elements live on different symmetric powers");
}

void KElement::add(const IcSymbol& s, std::int64_t coefficient) {
  adoptSize(s.rep.size());
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(s, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

KElement& KElement::operator+=(const KElement& o) {
  if (!o.terms_.empty() || o.k_ != 0) adoptSize(o.k_);
  for (const auto& [s, c] : o.terms_) add(s, c);
  return *this;
}

KElement& KElement::operator-=(const KElement& o) {
  if (!o.terms_.empty() || o.k_ != 0) adoptSize(o.k_);
  for (const auto& [s, c] : o.terms_) add(s, -c);
  return *this;
}

KElement KElement::twisted(HalfInt by) const {
  KElement out(k_);
  for (const auto& [s, c] : terms_) out.add({s.rep, s.twist + by}, c);
  return out;
}

std::string KElement::toString() const {
  if (terms_.empty()) return "0";
  // highest twist (lowest weight) first, reps ordered sign-like first
  std::vector<std::pair<IcSymbol, std::int64_t>> items(terms_.begin(), terms_.end());
  std::stable_sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
    if (a.first.twist != b.first.twist) return a.first.twist > b.first.twist;
    return a.first.rep.length() > b.first.rep.length();
  });
  std::string out;
  for (const auto& [s, c] : items) {
    std::string name;
    const int k = s.rep.size();
    if (s.rep == Partition({k}))
      name = "Ql";
    else if (s.rep == Partition(std::vector<int>(static_cast<std::size_t>(k), 1)))
      name = "sign";
    else if (TwoColumnDiagram::isTwoColumn(s.rep))
      name = TwoColumnDiagram::fromPartition(s.rep).toString();
    else
      name = "rho" + s.rep.toString();
    const std::int64_t mag = c < 0 ? -c : c;
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    if (mag != 1) out += std::to_string(mag);
    out += name + "(" + s.twist.toString() + ")";
  }
  return out;
}

KElement differenceWithTwist(const KElement& G) { return G - G.twisted(HalfInt::fromInt(-1)); }

KElement reconstructFromDifference(const KElement& delta) {
  KElement G(delta.k());
  if (delta.isZero()) return G;
  HalfInt floor = delta.terms().begin()->first.twist;
  for (const auto& [s, c] : delta.terms()) floor = std::min(floor, s.twist);
  KElement remainder = delta;
  while (!remainder.isZero()) {
    // lowest weight = highest twist
    HalfInt top = remainder.terms().begin()->first.twist;
    for (const auto& [s, c] : remainder.terms()) top = std::max(top, s.twist);
    std::vector<std::pair<IcSymbol, std::int64_t>> layer;
    for (const auto& [s, c] : remainder.terms())
      if (s.twist == top) layer.emplace_back(s, c);
    for (const auto& [s, c] : layer) {
      G.add(s, c);
      remainder.add(s, -c);
      const IcSymbol lowered{s.rep, s.twist - HalfInt::fromInt(1)};
      if (lowered.twist < floor) {
        remainder.add(lowered, c);
        throw ReconstructionError("input is not of the form G - G(-1); residual " + remainder.toString(), remainder);
      }
      remainder.add(lowered, c);
    }
  }
  return G;
}

KElement ploKElement(int k) {
  if (k < 1) throw std::invalid_argument("ploKElement needs k >= 1");
  KElement el(k);
  for (int r = 0; 2 * r <= k; ++r) {
    const Partition rho = TwoColumnDiagram::make(k, r).toPartition();
    for (int i = 0; i <= k - 2 * r; ++i) el.add({rho, HalfInt::fromTwice(k - 2 * r - 2 * i)}, 1);
  }
  return el;
}

KElement icKernelKElement(int k) {
  if (k < 1) throw std::invalid_argument("icKernelKElement needs k >= 1");
  KElement el(k);
  for (int r = 0; 2 * r <= k; ++r) el.add({TwoColumnDiagram::make(k, r).toPartition(), HalfInt::fromTwice(k - 2 * r)}, 1);
  return el;
}

LaurentValue traceKElement(const KElement& el, const EffectiveDivisor& D) {
  const int k = el.k();
  if (el.isZero()) return LaurentValue();
  requireDegree(k, D, "traceKElement");
  const auto [icSign, icTwist] = NormLedger::icShiftTwist(k);
  const LaurentValue icFactor = LaurentValue(icSign) * icTwist;
  const Partition trivial({k});

  if (D.isMultiplicityFree()) {
    const CycleType frobenius(D.residueDegrees());
    LaurentValue total;
    for (const auto& [s, c] : el.terms())
      total += LaurentValue(c * character(s.rep, frobenius)) * icFactor * LaurentValue::tateTwist(s.twist);
    return total;
  }
  const bool allTrivial = std::all_of(el.terms().begin(), el.terms().end(),
                                      [&](const auto& term) { return term.first.rep == trivial; });
  if (!allTrivial && k != 2)
    throw StalkUndetermined("IC stalk of a non-constant local system at a non-multiplicity-free divisor on X^(" +
                            std::to_string(k) + ") is not determined");
  // constant sheaf everywhere; on X^(2) the sign sheaf has zero stalk on the diagonal
  LaurentValue total;
  for (const auto& [s, c] : el.terms()) {
    if (s.rep != trivial) continue;
    total += LaurentValue(c) * icFactor * LaurentValue::tateTwist(s.twist);
  }
  return total;
}

}  // namespace vinbun
