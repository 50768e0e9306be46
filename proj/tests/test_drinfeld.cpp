#include <doctest.h>

#include <stdexcept>
#include "vinbun/drinfeld.hpp"
#include "vinbun/kcalc.hpp"

using namespace vinbun;

namespace {

// enumerate every phi in Hom(O(a1)+O(-a1), O(a2)+O(-a2))
template <class Visit>
void forEachHom(int a1, int a2, const PrimePowerField& F, Visit&& visit) {
  HomMatrix phi = HomMatrix::zero({a1}, {a2});
  std::vector<Fq*> slots;
  for (auto& e : phi.entries)
    for (auto& c : e) slots.push_back(&c);
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < slots.size(); ++i) total *= F.order();
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t r = idx;
    for (Fq* s : slots) {
      *s = F.element(static_cast<std::uint32_t>(r % F.order()));
      r /= F.order();
    }
    visit(phi);
  }
}

}  // namespace

TEST_CASE("homSpaceDims examples") {
  CHECK(homSpaceDims(0, 0) == std::array<int, 4>{1, 1, 1, 1});
  CHECK(homSpaceDims(1, 1) == std::array<int, 4>{1, 3, 0, 1});
  CHECK(homSpaceDims(1, 0) == std::array<int, 4>{0, 2, 0, 2});
  CHECK_THROWS_AS(homSpaceDims(-1, 0), std::invalid_argument);
}

TEST_CASE("isomCount matches exhaustive determinant-one counts") {
  for (unsigned q : {2u, 3u, 4u}) {
    const auto F = PrimePowerField::ofOrder(q);
    CHECK(isomCount(0, 0, F) == q * q * q - q);
    CHECK(isomCount(1, 0, F) == 0);
    for (int a = 0; a <= (q <= 3 ? 1 : 0); ++a) {
      std::uint64_t n = 0;
      forEachHom(a, a, F, [&](const HomMatrix& phi) { n += determinant(phi, F) == PrimePowerField::one(); });
      CHECK(n == isomCount(a, a, F));
    }
  }
  CHECK(isomCount(1, 1, PrimePowerField::ofOrder(3)) == 2 * 27);
}

TEST_CASE("defectDivisorOfHom examples") {
  const auto F = PrimePowerField::ofOrder(3);
  HomMatrix rank1 = HomMatrix::zero({0}, {0});
  rank1.entries[0][0] = F.element(1);
  rank1.entries[1][0] = F.element(2);
  rank1.entries[2][0] = F.element(1);
  rank1.entries[3][0] = F.element(2);
  CHECK(determinant(rank1, F) == PrimePowerField::zero());
  CHECK(defectDivisorOfHom(rank1, F).empty());

  // columns: second summand of O(1)+O(-1) into O(0)+O(0) through multiples of t
  HomMatrix shared = HomMatrix::zero({1}, {0});
  shared.entries[1] = {F.element(0), F.element(1)};  // t
  shared.entries[3] = {F.element(0), F.element(2)};
  const auto D = defectDivisorOfHom(shared, F);
  CHECK(D.degree() == 1);
  REQUIRE(D.parts().size() == 1);
  CHECK(D.parts()[0].point.ident() == poly::parse(F, "t"));

  HomMatrix coprime = HomMatrix::zero({1}, {0});
  coprime.entries[1] = {F.element(1), F.element(0)};  // s
  coprime.entries[3] = {F.element(0), F.element(1)};  // t
  CHECK(defectDivisorOfHom(coprime, F).empty());

  HomMatrix atInfinity = HomMatrix::zero({1}, {0});
  atInfinity.entries[1] = {F.element(1), F.element(0)};
  atInfinity.entries[3] = {F.element(2), F.element(0)};
  const auto Dinf = defectDivisorOfHom(atInfinity, F);
  REQUIRE(Dinf.parts().size() == 1);
  CHECK(Dinf.parts()[0].point.isInfinity());

  CHECK_THROWS_AS(defectDivisorOfHom(HomMatrix::zero({0}, {0}), F), std::invalid_argument);
  HomMatrix iso = HomMatrix::zero({0}, {0});
  iso.entries[0][0] = iso.entries[3][0] = F.element(1);
  CHECK_THROWS_AS(defectDivisorOfHom(iso, F), std::invalid_argument);
}

TEST_CASE("defect divisor is invariant under automorphism twists") {
  std::mt19937_64 rng(7);
  for (unsigned q : {2u, 3u}) {
    const auto F = PrimePowerField::ofOrder(q);
    for (const auto& [a1, a2] : std::vector<std::pair<int, int>>{{0, 0}, {1, 0}, {0, 1}, {1, 1}}) {
      forEachHom(a1, a2, F, [&](const HomMatrix& phi) {
        if (phi.isZero() || determinant(phi, F) != PrimePowerField::zero()) return;
        const auto D = defectDivisorOfHom(phi, F);
        for (int trial = 0; trial < 3; ++trial) {
          const HomMatrix left = randomAutomorphism({a2}, F, rng);
          const HomMatrix right = randomAutomorphism({a1}, F, rng);
          const HomMatrix twisted = compose(left, compose(phi, right, F), F);
          CHECK(determinant(twisted, F) == PrimePowerField::zero());
          CHECK(defectDivisorOfHom(twisted, F) == D);
        }
      });
    }
  }
}

TEST_CASE("drinfeldValue examples") {
  const auto F2 = PrimePowerField::ofOrder(2);
  const auto r00 = drinfeldValue(0, 0, F2);
  CHECK(r00.isom == 6);
  CHECK(r00.boundarySum == 9);
  CHECK(r00.value == -3);
  const auto F3 = PrimePowerField::ofOrder(3);
  const auto r3 = drinfeldValue(0, 0, F3);
  CHECK(r3.isom == 24);
  CHECK(r3.value == -8);
  CHECK(r3.nonunitIsos == 24);
  CHECK(r3.valueWithNonunit == -32);
  const auto r10 = drinfeldValue(1, 0, F2);
  CHECK(r10.value == 3);
  CHECK(r10.histogram == std::map<std::vector<int>, std::uint64_t>{{{}, 6}, {{1}, 9}});
  CHECK(drinfeldValue(0, 1, F2).value == 3);
}

TEST_CASE("drinfeldValue is independent of the worker count and passes its cross-checks") {
  DrinfeldOptions one, many;
  one.crossCheck = many.crossCheck = true;
  many.jobs = 4;
  for (unsigned q : {2u, 3u}) {
    const auto F = PrimePowerField::ofOrder(q);
    for (const auto& [a1, a2] : std::vector<std::pair<int, int>>{{0, 0}, {1, 0}, {1, 1}, {2, 0}}) {
      const auto a = drinfeldValue(a1, a2, F, one);
      const auto b = drinfeldValue(a1, a2, F, many);
      CHECK(a.value == b.value);
      CHECK(a.histogram == b.histogram);
      CHECK(a.boundaryMismatches == 0);
      CHECK(a.orbitMismatches == 0);
    }
  }
}

TEST_CASE("drinfeld budget") {
  DrinfeldOptions tight;
  tight.budget = 100;
  CHECK_THROWS_AS(drinfeldValue(0, 0, PrimePowerField::ofOrder(4), tight), DrinfeldBudgetExceeded);
}

TEST_CASE("subset expansion equals the boundary product") {
  CHECK(subsetExpansion({}) == LaurentValue(1));
  CHECK(subsetExpansion({1, 2}) == boundaryProduct({1, 2}));
  CHECK(boundaryProduct({1}) == LaurentValue(1) - LaurentValue::qPower(1));
  CHECK(formatDegreeProfile({}) == "-");
  CHECK(formatDegreeProfile({1, 2}) == "1,2");
}
