#include <doctest.h>

#include <stdexcept>
#include "vinbun/kcalc.hpp"
#include "vinbun/localmodel.hpp"

using namespace vinbun;

namespace {

FactorPoint factor(const PrimePowerField& F, std::vector<unsigned> a, std::vector<unsigned> b) {
  FactorPoint p;
  for (unsigned x : a) p.a.push_back(F.element(x));
  for (unsigned x : b) p.b.push_back(F.element(x));
  return p;
}

EnumerationOptions naive() {
  EnumerationOptions o;
  o.strategy = EnumerationStrategy::Naive;
  return o;
}

}  // namespace

TEST_CASE("buildSystem examples") {
  const auto s1 = buildSystem({1});
  CHECK(s1.equations().empty());
  CHECK(s1.variableCount() == 2);
  CHECK(s1.toString() == "d = a[-1]*b[0]\n");
  const auto s2 = buildSystem({2});
  REQUIRE(s2.equations().size() == 1);
  CHECK(s2.toString() == "a[-2]*b[1] + a[-1]*b[0] = 0\nd = a[-2]*b[0]\n");
  const auto s11 = buildSystem({1, 1});
  CHECK(s11.equations().empty());
  CHECK(s11.couplingCount() == 1);
  CHECK(s11.toString() == "d = a[-1]*b[0]\na[-1]*b[0] = a'[-1]*b'[0]\n");
  const auto s3 = buildSystem({3});
  CHECK(s3.equations().size() == 2);
  CHECK(s3.variableCount() == 6);
  for (int m = 1; m <= 6; ++m) CHECK(static_cast<int>(buildSystem({m}).equations().size()) == m - 1);
  CHECK_THROWS_AS(buildSystem({}), std::invalid_argument);
  CHECK_THROWS_AS(buildSystem({0}), std::invalid_argument);
}

TEST_CASE("countPoints examples") {
  for (unsigned q : {2u, 3u, 4u, 5u, 7u}) {
    const auto F = PrimePowerField::ofOrder(q);
    CAPTURE(q);
    CHECK(countPoints(buildSystem({1}), F, DConstraint::nonzero()) == (q - 1) * (q - 1));
    CHECK(countPoints(buildSystem({1}), F, DConstraint::zero()) == 2 * q - 1);
    CHECK(countPoints(buildSystem({2}), F, DConstraint::any()) == q * q * q + q * q - q);
    CHECK(countPoints(buildSystem({2}), F, DConstraint::zero()) == 3 * q * q - 2 * q);
  }
}

TEST_CASE("propagated enumeration is bit-identical to naive enumeration") {
  for (unsigned q : {2u, 3u, 4u}) {
    const auto F = PrimePowerField::ofOrder(q);
    for (const auto& ms : std::vector<std::vector<int>>{{1}, {2}, {3}, {1, 1}, {2, 1}, {1, 1, 1}, {2, 2}}) {
      if (candidateCount(EquationSystem(ms), F, EnumerationStrategy::Naive) > 5'000'000) continue;
      const EquationSystem sys(ms);
      CHECK(countByD(sys, F, naive()) == countByD(sys, F));
      EnumerationOptions many;
      many.jobs = 3;
      CHECK(countByD(sys, F, many) == countByD(sys, F));
    }
  }
}

TEST_CASE("forEachPoint streams exactly the counted solutions") {
  const auto F = PrimePowerField::ofOrder(3);
  for (const auto& ms : std::vector<std::vector<int>>{{2}, {1, 1}, {2, 1}}) {
    const EquationSystem sys(ms);
    for (auto c : {DConstraint::any(), DConstraint::zero(), DConstraint::equals(F.element(2))}) {
      std::uint64_t seen = 0;
      forEachPoint(sys, F, c, [&](const SolutionPoint& pt) {
        CHECK(satisfies(sys, F, pt));
        CHECK(c.admits(pt.dValue));
        ++seen;
      });
      CHECK(seen == countPoints(sys, F, c));
    }
  }
}

TEST_CASE("budget enforcement") {
  const auto F = PrimePowerField::ofOrder(5);
  EnumerationOptions tight;
  tight.budget = 10;
  CHECK_THROWS_AS(countPoints(buildSystem({2}), F, DConstraint::any(), tight), BudgetExceeded);
  tight.budget = 25;
  CHECK(countPoints(buildSystem({2}), F, DConstraint::any(), tight) == 145);
}

TEST_CASE("DConstraint parsing") {
  const auto F = PrimePowerField::ofOrder(5);
  CHECK(DConstraint::parse("any", F).kind == DConstraint::Kind::Any);
  CHECK(DConstraint::parse("3", F).admits(F.element(3)));
  CHECK_FALSE(DConstraint::parse("3", F).admits(F.element(2)));
  CHECK_THROWS(DConstraint::parse("7", F));
  CHECK_THROWS_AS(DConstraint::parse("many", F), std::invalid_argument);
}

TEST_CASE("defectProfile examples") {
  const auto F = PrimePowerField::ofOrder(3);
  SolutionPoint zero;
  zero.factors = {factor(F, {0, 0, 0}, {0, 0, 0})};
  CHECK(defectProfile(F, zero).perFactor == std::vector<int>{3});
  SolutionPoint axis;
  axis.factors = {factor(F, {1}, {0})};
  CHECK(defectProfile(F, axis).total() == 0);
  SolutionPoint quad;
  quad.factors = {factor(F, {0, 1}, {0, 1})};
  CHECK(satisfies(buildSystem({2}), F, quad));
  CHECK(defectProfile(F, quad).total() == 0);
  SolutionPoint open;
  open.factors = {factor(F, {1}, {1})};
  open.dValue = F.element(1);
  CHECK_THROWS_AS(defectProfile(F, open), std::invalid_argument);
}

TEST_CASE("defect zero is the complement of the closed condition") {
  for (unsigned q : {2u, 3u}) {
    const auto F = PrimePowerField::ofOrder(q);
    for (int n = 1; n <= 3; ++n) {
      forEachPoint(buildSystem({n}), F, DConstraint::zero(), [&](const SolutionPoint& pt) {
        const auto& p = pt.factors[0];
        Fq constant = PrimePowerField::zero();
        for (int j = 1; j < n; ++j)
          constant = F.add(constant, F.mul(p.a[static_cast<std::size_t>(n - j)], p.b[static_cast<std::size_t>(j)]));
        const bool closed = p.a[0] == PrimePowerField::zero() && p.b[0] == PrimePowerField::zero() &&
                            constant == PrimePowerField::zero();
        CHECK((defectProfile(F, pt).total() == 0) == !closed);
      });
    }
  }
}

TEST_CASE("strataCounts examples and prediction") {
  for (unsigned q : {2u, 3u, 4u, 5u}) {
    const auto F = PrimePowerField::ofOrder(q);
    CAPTURE(q);
    CHECK(strataCounts(1, F) == std::map<int, std::uint64_t>{{0, 2 * (q - 1)}, {1, 1}});
    CHECK(strataCounts(2, F) ==
          std::map<int, std::uint64_t>{{0, 2 * (q * q - q) + (q - 1) * (q - 1)}, {1, 2 * (q - 1)}, {2, 1}});
    for (int n = 1; n <= 3; ++n) {
      const auto counts = strataCounts(n, F);
      std::uint64_t total = 0;
      for (int k = 0; k <= n; ++k) {
        CHECK(counts.at(k) == predictedStratumCount(n, k, q));
        total += counts.at(k);
      }
      CHECK(total == countPoints(buildSystem({n}), F, DConstraint::zero()));
    }
  }
}

TEST_CASE("perFiberUniformity examples") {
  for (unsigned q : {2u, 3u, 4u, 5u}) {
    const auto F = PrimePowerField::ofOrder(q);
    for (const auto& [c, count] : fiberCounts(1, F)) CHECK(count == q - 1);
    for (const auto& [c, count] : fiberCounts(2, F)) CHECK(count == q * (q - 1));
    CHECK(perFiberUniformity(3, F));
  }
  const auto F3 = PrimePowerField::ofOrder(3);
  CHECK(fiberCounts(3, F3).size() == 2);
  const auto F9 = PrimePowerField::ofOrder(9);
  CHECK(fiberCounts(3, F9).size() == 8);
  CHECK(perFiberUniformity(3, F9));
}

TEST_CASE("gmOrbitCheck") {
  for (unsigned q : {2u, 3u, 4u}) {
    const auto F = PrimePowerField::ofOrder(q);
    for (int n = 1; n <= 2; ++n) {
      const auto sys = buildSystem({n});
      forEachPoint(sys, F, DConstraint::any(), [&](const SolutionPoint& pt) {
        CHECK(gmOrbitCheck(sys, F, pt, PrimePowerField::one()));
        for (Fq c : F.nonzeroElements()) CHECK(gmOrbitCheck(sys, F, pt, c));
      });
    }
  }
}

TEST_CASE("omegaPointCountIdentity examples") {
  const auto F3 = PrimePowerField::ofOrder(3);
  const auto x3 = ClosedPoint::rational(F3, F3.element(0));
  const auto y3 = ClosedPoint::rational(F3, F3.element(1));
  const auto c1 = omegaPointCountIdentity(1, EffectiveDivisor::fromTerms({{x3, 1}}), F3);
  CHECK(c1.count == 4);
  CHECK(c1.traceSide == 4);
  CHECK(c1.pass);
  const auto F2 = PrimePowerField::ofOrder(2);
  const auto c2 = omegaPointCountIdentity(2, EffectiveDivisor::fromTerms({{ClosedPoint::rational(F2, F2.element(0)), 2}}), F2);
  CHECK(c2.count == 2);
  CHECK(c2.pass);
  const auto c3 = omegaPointCountIdentity(2, EffectiveDivisor::fromTerms({{x3, 1}, {y3, 1}}), F3);
  CHECK(c3.count == 8);
  CHECK(c3.closedForm == 8);
  CHECK(c3.pass);
  CHECK_THROWS_AS(omegaPointCountIdentity(2, EffectiveDivisor::fromTerms({{ClosedPoint::finite(F3, poly::parse(F3, "t^2+1")), 1}}), F3),
                  std::invalid_argument);
}

TEST_CASE("factorization in families at count level") {
  for (unsigned q : {2u, 3u}) {
    const auto F = PrimePowerField::ofOrder(q);
    for (const auto& [m1, m2] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {1, 2}}) {
      const auto coupled = countByD(EquationSystem({m1, m2}), F, naive());
      const auto left = countByD(EquationSystem({m1}), F, naive());
      const auto right = countByD(EquationSystem({m2}), F, naive());
      for (std::size_t c = 0; c < q; ++c) CHECK(coupled[c] == left[c] * right[c]);
    }
  }
}
