#include <doctest.h>

#include <stdexcept>
#include "vinbun/lefschetz.hpp"

using namespace vinbun;

namespace {
Partition col(int k, int r) { return TwoColumnDiagram::make(k, r).toPartition(); }
}  // namespace

TEST_CASE("bruteForceSchurWeyl examples") {
  const auto k1 = bruteForceSchurWeyl(1);
  CHECK(k1.multiplicity == std::map<std::pair<Partition, int>, std::int64_t>{{{col(1, 0), 1}, 1}});
  const auto k2 = bruteForceSchurWeyl(2);
  CHECK(k2.multiplicity ==
        std::map<std::pair<Partition, int>, std::int64_t>{{{col(2, 1), 0}, 1}, {{col(2, 0), 2}, 1}});
  CHECK(bruteForceSchurWeyl(4).totalDimension() == 16);
  CHECK_THROWS_AS(bruteForceSchurWeyl(9), std::invalid_argument);
}

TEST_CASE("predictedSchurWeyl matches brute force and has dimension 2^k") {
  CHECK(predictedSchurWeyl(3).multiplicity ==
        std::map<std::pair<Partition, int>, std::int64_t>{{{col(3, 0), 3}, 1}, {{col(3, 1), 1}, 1}});
  for (int k = 1; k <= 8; ++k) {
    CHECK(predictedSchurWeyl(k).totalDimension() == (std::int64_t{1} << k));
    if (k <= 7) CHECK(bruteForceSchurWeyl(k) == predictedSchurWeyl(k));
  }
}

TEST_CASE("the untwisted action decomposes with conjugate labels") {
  for (int k = 1; k <= 5; ++k) {
    const auto plain = bruteForceSchurWeyl(k, PermutationAction::Plain);
    for (const auto& [key, mult] : predictedSchurWeyl(k).multiplicity)
      CHECK(plain.multiplicity.at({key.first.conjugate(), key.second}) == mult);
  }
}

TEST_CASE("sl2 and S_k actions commute") {
  for (int k = 1; k <= 6; ++k) {
    CHECK(actionsCommute(k, PermutationAction::SignTwisted));
    CHECK(actionsCommute(k, PermutationAction::Plain));
  }
  const TensorPowerModel m(3);
  CHECK(m.raising() * m.lowering() - m.lowering() * m.raising() == m.cartan());
}

TEST_CASE("kernelOfN examples and the literal kernel of f") {
  const auto k2 = kernelOfN(2);
  REQUIRE(k2.size() == 2);
  CHECK(k2[0].diagram == TwoColumnDiagram::make(2, 0));
  CHECK(k2[0].twist == HalfInt::fromInt(1));
  CHECK(k2[1].diagram == TwoColumnDiagram::make(2, 1));
  CHECK(k2[1].twist == HalfInt::fromInt(0));
  const auto k1 = kernelOfN(1);
  REQUIRE(k1.size() == 1);
  CHECK(k1[0].twist == HalfInt::fromTwice(1));
  std::vector<int> twists;
  for (const auto& s : kernelOfN(4)) twists.push_back(s.twist.twice());
  CHECK(twists == std::vector<int>{4, 2, 0});
  for (int k = 1; k <= 6; ++k) {
    const auto layers = kernelOfLoweringOperator(k);
    for (const auto& layer : layers) {
      CHECK(layer.cartanWeight <= 0);
      CHECK(layer.rep.multiplicity.size() == 1);
    }
    CHECK(kernelSummands(layers) == kernelOfN(k));
  }
}

TEST_CASE("signOnLowestLines and transposition traces") {
  CHECK(signOnLowestLines() == std::map<int, int>{{0, 1}, {2, -1}});
  CHECK(signOnLowestLines(PermutationAction::Plain) == std::map<int, int>{{0, -1}, {2, 1}});
  CHECK(transpositionTrace(PermutationAction::SignTwisted, true) == 0);
  CHECK(transpositionTrace(PermutationAction::SignTwisted, false) == -2);
  CHECK(transpositionTrace(PermutationAction::Plain, false) == 2);
}

TEST_CASE("Sl2Irrep weight lines carry twist -w/2") {
  const auto lines = Sl2Irrep{2}.weightLines();
  REQUIRE(lines.size() == 3);
  CHECK(lines[0] == std::pair<int, HalfInt>{2, HalfInt::fromInt(-1)});
  CHECK(lines[2] == std::pair<int, HalfInt>{-2, HalfInt::fromInt(1)});
  CHECK(StandardRep::frobeniusEigenvalues() == std::vector<LaurentValue>{LaurentValue::v(1), LaurentValue::v(-1)});
}
