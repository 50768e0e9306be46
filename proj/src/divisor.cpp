#include "vinbun/divisor.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace vinbun {

ClosedPoint ClosedPoint::finite(const PrimePowerField& F, FqPoly ident) {
  poly::normalize(ident);
  if (!poly::isMonic(ident)) throw std::invalid_argument("closed point polynomial must be monic");
  if (!poly::isIrreducibleByTrialDivision(F, ident))
    throw std::invalid_argument("polynomial " + poly::format(F, ident) + " is reducible");
  return ClosedPoint(std::move(ident), false);
}

ClosedPoint ClosedPoint::rational(const PrimePowerField& F, Fq c) {
  return ClosedPoint(FqPoly{F.neg(c), PrimePowerField::one()}, false);
}

std::string ClosedPoint::format(const PrimePowerField& F) const {
  return isInfinity_ ? "inf" : poly::format(F, ident_);
}

std::strong_ordering ClosedPoint::operator<=>(const ClosedPoint& o) const {
  if (isInfinity_ != o.isInfinity_) return isInfinity_ ? std::strong_ordering::greater : std::strong_ordering::less;
  if (auto c = degree() <=> o.degree(); c != 0) return c;
  for (std::size_t i = ident_.size(); i-- > 0;) {
    if (auto c = ident_[i] <=> o.ident_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

EffectiveDivisor EffectiveDivisor::fromTerms(std::vector<DivisorTerm> terms) {
  for (const auto& t : terms)
    if (t.multiplicity < 1) throw std::invalid_argument("divisor multiplicities must be positive");
  std::sort(terms.begin(), terms.end(), [](const DivisorTerm& a, const DivisorTerm& b) { return a.point < b.point; });
  EffectiveDivisor D;
  for (auto& t : terms) {
    if (!D.parts_.empty() && D.parts_.back().point == t.point)
      D.parts_.back().multiplicity += t.multiplicity;
    else
      D.parts_.push_back(std::move(t));
  }
  return D;
}

int EffectiveDivisor::degree() const {
  int d = 0;
  for (const auto& t : parts_) d += t.multiplicity * t.point.degree();
  return d;
}

bool EffectiveDivisor::isMultiplicityFree() const {
  return std::all_of(parts_.begin(), parts_.end(), [](const DivisorTerm& t) { return t.multiplicity == 1; });
}

bool EffectiveDivisor::isRational() const {
  return std::all_of(parts_.begin(), parts_.end(), [](const DivisorTerm& t) { return t.point.degree() == 1; });
}

bool EffectiveDivisor::disjointFrom(const EffectiveDivisor& o) const {
  for (const auto& t : parts_)
    if (o.multiplicityOf(t.point) > 0) return false;
  return true;
}

int EffectiveDivisor::multiplicityOf(const ClosedPoint& x) const {
  auto it = std::lower_bound(parts_.begin(), parts_.end(), x,
                             [](const DivisorTerm& t, const ClosedPoint& p) { return t.point < p; });
  return (it != parts_.end() && it->point == x) ? it->multiplicity : 0;
}

std::vector<LocalType> EffectiveDivisor::localTypes() const {
  std::vector<LocalType> out;
  out.reserve(parts_.size());
  for (const auto& t : parts_) out.push_back({t.point.degree(), t.multiplicity});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> EffectiveDivisor::residueDegrees() const {
  std::vector<int> out;
  for (const auto& t : parts_) out.push_back(t.point.degree());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> EffectiveDivisor::multiplicities() const {
  std::vector<int> out;
  for (const auto& t : parts_) out.push_back(t.multiplicity);
  return out;
}

EffectiveDivisor EffectiveDivisor::operator+(const EffectiveDivisor& o) const {
  std::vector<DivisorTerm> all(parts_.begin(), parts_.end());
  all.insert(all.end(), o.parts_.begin(), o.parts_.end());
  return fromTerms(std::move(all));
}

std::string EffectiveDivisor::format(const PrimePowerField& F) const {
  if (parts_.empty()) return "0";
  std::string out;
  for (const auto& t : parts_) {
    if (!out.empty()) out += ",";
    out += t.point.format(F) + ":" + std::to_string(t.multiplicity);
  }
  return out;
}

namespace {

int mobius(int n) {
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      result = -result;
    }
  }
  if (n > 1) result = -result;
  return result;
}

}  // namespace

std::uint64_t necklaceCount(std::uint64_t q, int d) {
  long long total = 0;
  for (int e = 1; e <= d; ++e) {
    if (d % e != 0) continue;
    long long qe = 1;
    for (int i = 0; i < e; ++i) qe *= static_cast<long long>(q);
    total += mobius(d / e) * qe;
  }
  return static_cast<std::uint64_t>(total / d);
}

std::vector<ClosedPoint> enumerateClosedPoints(const PrimePowerField& F, int maxDegree) {
  if (maxDegree < 1) throw std::invalid_argument("maxDegree must be at least 1");
  std::vector<ClosedPoint> out;
  for (int d = 1; d <= maxDegree; ++d) {
    for (auto& f : poly::monicIrreducibles(F, d)) out.push_back(ClosedPoint::fromIrreducible(std::move(f)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<EffectiveDivisor> enumerateDivisors(const PrimePowerField& F, int n, int maxPointDegree) {
  if (n < 0) throw std::invalid_argument("divisor degree must be non-negative");
  if (n == 0) return {EffectiveDivisor()};
  const std::vector<ClosedPoint> points = enumerateClosedPoints(F, std::min(n, maxPointDegree));
  std::vector<EffectiveDivisor> out;
  std::vector<DivisorTerm> current;
  // choose multiplicities point by point, in order, to avoid duplicates
  std::function<void(std::size_t, int)> rec = [&](std::size_t start, int remaining) {
    if (remaining == 0) {
      out.push_back(EffectiveDivisor::fromTerms(current));
      return;
    }
    for (std::size_t i = start; i < points.size(); ++i) {
      const int d = points[i].degree();
      for (int m = 1; m * d <= remaining; ++m) {
        current.push_back({points[i], m});
        rec(i + 1, remaining - m * d);
        current.pop_back();
      }
    }
  };
  rec(0, n);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<EffectiveDivisor> enumerateDivisors(const PrimePowerField& F, int n) {
  return enumerateDivisors(F, n, n);
}

std::vector<std::pair<EffectiveDivisor, EffectiveDivisor>> decompositions(const EffectiveDivisor& D,
                                                                           SplitConstraint constraint,
                                                                           DegreeSplit split) {
  if (split.first + split.second != D.degree() || split.first < 0 || split.second < 0)
    throw std::invalid_argument("degree split must add up to the divisor degree");
  const auto parts = D.parts();
  std::vector<std::pair<EffectiveDivisor, EffectiveDivisor>> out;
  std::vector<int> second(parts.size(), 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int remaining) {
    if (i == parts.size()) {
      if (remaining != 0) return;
      std::vector<DivisorTerm> t1;
      std::vector<DivisorTerm> t2;
      for (std::size_t k = 0; k < parts.size(); ++k) {
        const int m2 = second[k];
        const int m1 = parts[k].multiplicity - m2;
        if (m1 > 0) t1.push_back({parts[k].point, m1});
        if (m2 > 0) t2.push_back({parts[k].point, m2});
      }
      out.emplace_back(EffectiveDivisor::fromTerms(std::move(t1)), EffectiveDivisor::fromTerms(std::move(t2)));
      return;
    }
    const int cap = constraint == SplitConstraint::SecondMultiplicityFree ? std::min(1, parts[i].multiplicity)
                                                                          : parts[i].multiplicity;
    const int d = parts[i].point.degree();
    for (int m2 = 0; m2 <= cap && m2 * d <= remaining; ++m2) {
      second[i] = m2;
      rec(i + 1, remaining - m2 * d);
    }
    second[i] = 0;
  };
  rec(0, split.second);
  return out;
}

EffectiveDivisor parseDivisor(const std::string& text, const PrimePowerField& F, bool allowInfinity) {
  std::vector<DivisorTerm> terms;
  std::string trimmed;
  for (char c : text)
    if (c != ' ') trimmed += c;
  if (trimmed.empty() || trimmed == "0") return EffectiveDivisor();
  std::size_t pos = 0;
  while (pos <= trimmed.size()) {
    const std::size_t comma = trimmed.find(',', pos);
    const std::string item = trimmed.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    const std::size_t colon = item.rfind(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 >= item.size())
      throw std::invalid_argument("malformed divisor term '" + item + "': expected poly:mult");
    const std::string polyText = item.substr(0, colon);
    const std::string multText = item.substr(colon + 1);
    if (!std::all_of(multText.begin(), multText.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw std::invalid_argument("malformed multiplicity in '" + item + "'");
    const int mult = std::stoi(multText);
    if (mult < 1) throw std::invalid_argument("multiplicity must be positive in '" + item + "'");
    if (polyText == "inf") {
      if (!allowInfinity) throw std::invalid_argument("the point at infinity is only allowed on P^1");
      terms.push_back({ClosedPoint::infinity(), mult});
    } else {
      terms.push_back({ClosedPoint::finite(F, poly::parse(F, polyText)), mult});
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return EffectiveDivisor::fromTerms(std::move(terms));
}

}  // namespace vinbun
