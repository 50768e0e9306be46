#include <doctest.h>

#include <stdexcept>
#include <set>

#include "vinbun/divisor.hpp"
#include "vinbun/field.hpp"
#include "vinbun/laurent.hpp"
#include "vinbun/poly.hpp"

using namespace vinbun;

TEST_CASE("buildField examples") {
  const auto F2 = PrimePowerField::build(2, 1);
  CHECK(F2.order() == 2);
  CHECK(F2.elements().size() == 2);

  const auto F4 = PrimePowerField::build(2, 2);
  for (Fq a : F4.elements()) CHECK(F4.pow(a, 4) == a);

  const auto F9 = PrimePowerField::build(3, 2);
  CHECK(F9.multiplicativeOrder(F9.primitiveElement()) == 8);
  std::set<std::uint32_t> powers;
  for (std::uint64_t k = 0; k < 8; ++k) powers.insert(F9.pow(F9.primitiveElement(), k).value);
  CHECK(powers.size() == 8);
}

TEST_CASE("field axioms hold exhaustively for q <= 9 under every modulus") {
  for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
    unsigned p = 2;
    while (q % p) ++p;
    unsigned e = 0;
    for (unsigned r = q; r > 1; r /= p) ++e;
    const auto moduli = PrimePowerField::irreducibleModuli(p, e);
    for (std::size_t mi = 0; mi < moduli.size(); ++mi) {
      const auto F = PrimePowerField::build(p, e, mi);
      CAPTURE(q);
      CAPTURE(mi);
      const auto els = F.elements();
      for (Fq a : els) {
        CHECK(F.pow(a, q) == a);
        CHECK(F.add(a, F.neg(a)) == PrimePowerField::zero());
        if (a != PrimePowerField::zero()) CHECK(F.mul(a, F.inv(a)) == PrimePowerField::one());
        for (Fq b : els) {
          CHECK(F.add(a, b) == F.add(b, a));
          CHECK(F.mul(a, b) == F.mul(b, a));
          for (Fq c : els) {
            CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
            CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
            CHECK(F.add(F.add(a, b), c) == F.add(a, F.add(b, c)));
          }
        }
      }
    }
  }
}

TEST_CASE("field errors") {
  const auto F = PrimePowerField::ofOrder(5);
  CHECK_THROWS_AS(F.inv(PrimePowerField::zero()), std::domain_error);
  CHECK_THROWS_AS(F.element(5), std::out_of_range);
  CHECK_THROWS(PrimePowerField::ofOrder(6));
  CHECK(F.fromInt(-1) == F.element(4));
  CHECK(PrimePowerField::irreducibleModuli(2, 2).size() == 1);
  CHECK(PrimePowerField::irreducibleModuli(2, 3).size() == 2);
  CHECK(PrimePowerField::irreducibleModuli(3, 2).size() == 3);
}

TEST_CASE("polynomials: parse, format, division, factorization") {
  const auto F = PrimePowerField::ofOrder(2);
  const FqPoly f = poly::parse(F, "t^2+t+1");
  CHECK(poly::format(F, f) == "t^2+t+1");
  CHECK(poly::isIrreducibleByTrialDivision(F, f));
  CHECK_FALSE(poly::isIrreducibleByTrialDivision(F, poly::parse(F, "t^2+1")));
  const auto [quo, rem] = poly::divmod(F, poly::parse(F, "t^3+1"), poly::parse(F, "t+1"));
  CHECK(poly::format(F, quo) == "t^2+t+1");
  CHECK(rem.empty());
  const auto factors = poly::factorMonic(F, poly::parse(F, "t^3+t^2+t+1"));  // (t+1)^3
  REQUIRE(factors.size() == 1);
  CHECK(factors[0].second == 3);
  CHECK_THROWS_AS(poly::parse(F, "t^^2"), std::invalid_argument);
  const auto F3 = PrimePowerField::ofOrder(3);
  CHECK(poly::format(F3, poly::parse(F3, "t^2-1")) == "t^2+2");
  CHECK(poly::format(F3, poly::monicGcd(F3, poly::parse(F3, "t^2+2"), poly::parse(F3, "t+1"))) == "t+1");
}

TEST_CASE("enumerateClosedPoints examples and necklace formula") {
  const auto F2 = PrimePowerField::ofOrder(2);
  int deg2 = 0, deg3 = 0;
  for (const auto& x : enumerateClosedPoints(F2, 3)) {
    if (x.degree() == 2) {
      ++deg2;
      CHECK(x.format(F2) == "t^2+t+1");
    }
    if (x.degree() == 3) ++deg3;
  }
  CHECK(deg2 == 1);
  CHECK(deg3 == 2);
  CHECK(enumerateClosedPoints(PrimePowerField::ofOrder(3), 1).size() == 3);
  for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
    const auto F = PrimePowerField::ofOrder(q);
    const int maxD = q <= 3 ? 6 : (q <= 5 ? 4 : 3);
    std::vector<std::uint64_t> byDegree(static_cast<std::size_t>(maxD) + 1, 0);
    for (const auto& x : enumerateClosedPoints(F, maxD)) ++byDegree[static_cast<std::size_t>(x.degree())];
    for (int d = 1; d <= maxD; ++d) CHECK(byDegree[static_cast<std::size_t>(d)] == necklaceCount(q, d));
  }
}

TEST_CASE("enumerateDivisors examples: q^n divisors") {
  const auto F2 = PrimePowerField::ofOrder(2);
  const auto divs = enumerateDivisors(F2, 2);
  CHECK(divs.size() == 4);
  std::set<std::string> names;
  for (const auto& D : divs) names.insert(D.format(F2));
  CHECK(names == std::set<std::string>{"t:2", "t+1:2", "t:1,t+1:1", "t^2+t+1:1"});
  const auto empty = enumerateDivisors(F2, 0);
  REQUIRE(empty.size() == 1);
  CHECK(empty[0].empty());
  CHECK(enumerateDivisors(PrimePowerField::ofOrder(3), 1).size() == 3);
  for (unsigned q : {2u, 3u, 4u, 5u}) {
    const auto F = PrimePowerField::ofOrder(q);
    std::uint64_t expected = 1;
    for (int n = 0; n <= 3; ++n) {
      CHECK(enumerateDivisors(F, n).size() == expected);
      expected *= q;
    }
  }
}

TEST_CASE("decompositions examples") {
  const auto F = PrimePowerField::ofOrder(3);
  const auto x = ClosedPoint::rational(F, F.element(0));
  const auto y = ClosedPoint::rational(F, F.element(1));
  const auto twoX = EffectiveDivisor::fromTerms({{x, 2}});
  const auto pairs = decompositions(twoX, SplitConstraint::None, {1, 1});
  REQUIRE(pairs.size() == 1);
  CHECK(pairs[0].first == EffectiveDivisor::fromTerms({{x, 1}}));
  CHECK(decompositions(EffectiveDivisor::fromTerms({{x, 1}, {y, 1}}), SplitConstraint::None, {1, 1}).size() == 2);
  CHECK(decompositions(twoX, SplitConstraint::SecondMultiplicityFree, {0, 2}).empty());

  const auto D = EffectiveDivisor::fromTerms({{x, 2}, {y, 3}});
  std::size_t total = 0;
  for (int i = 0; i <= D.degree(); ++i) total += decompositions(D, SplitConstraint::None, {i, D.degree() - i}).size();
  CHECK(total == 3 * 4);
}

TEST_CASE("parseDivisor examples and errors") {
  const auto F = PrimePowerField::ofOrder(2);
  const auto D = parseDivisor("t:2", F);
  CHECK(D.degree() == 2);
  CHECK(D.localTypes() == std::vector<LocalType>{{1, 2}});
  const auto E = parseDivisor("t^2+t+1:1", F);
  CHECK(E.residueDegrees() == std::vector<int>{2});
  const auto G = parseDivisor("t:1,t+1:1", F);
  CHECK(G.isMultiplicityFree());
  CHECK(G.isRational());
  CHECK(parseDivisor("t:1,t:1", F) == D);
  CHECK_THROWS_AS(parseDivisor("t^2+1:1", F), std::invalid_argument);
  CHECK_THROWS_AS(parseDivisor("t:", F), std::invalid_argument);
  CHECK_THROWS_AS(parseDivisor("t:0", F), std::invalid_argument);
  CHECK_THROWS_AS(parseDivisor("inf:1", F), std::invalid_argument);
  CHECK(parseDivisor("inf:1", F, true).degree() == 1);
}

TEST_CASE("Laurent values: ring laws, specialization, exact division") {
  const LaurentValue v = LaurentValue::v();
  const LaurentValue vi = LaurentValue::v(-1);
  CHECK((v * vi) == LaurentValue(1));
  CHECK(((v + vi) * (v + vi)) == LaurentValue::v(2) + LaurentValue(2) + LaurentValue::v(-2));
  CHECK((v - v).isZero());
  CHECK(LaurentValue::tateTwist(HalfInt::fromInt(1)) == LaurentValue::v(-2));
  CHECK(LaurentValue::tateTwist(HalfInt::fromTwice(1)) == vi);
  CHECK((LaurentValue(1) - LaurentValue::qPower(-1)).specializeAtQ(3) == Rational(2, 3));
  CHECK(LaurentValue::qPower(2).specializeAtQ(5) == 25);
  CHECK_THROWS_AS(v.specializeAtQ(4), std::domain_error);
  const LaurentValue a = LaurentValue(1) - LaurentValue::qPower(1);
  const auto quotient = (a * a * LaurentValue::v(-3)).divideExact(a);
  REQUIRE(quotient.has_value());
  CHECK(*quotient == a * LaurentValue::v(-3));
  CHECK_FALSE((a + LaurentValue(3)).divideExact(a).has_value());
  CHECK((v + vi).toString() == "v + v^-1");
  CHECK(HalfInt::fromTwice(-1).toString() == "-1/2");
  CHECK(HalfInt::fromInt(2).toString() == "2");
}
