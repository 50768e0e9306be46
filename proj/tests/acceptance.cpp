// One line per acceptance criterion; exit status is the number of failures.

#include <stdexcept>
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "vinbun/divisor.hpp"
#include "vinbun/drinfeld.hpp"
#include "vinbun/field.hpp"
#include "vinbun/kcalc.hpp"
#include "vinbun/lefschetz.hpp"
#include "vinbun/localmodel.hpp"
#include "vinbun/symrep.hpp"

using namespace vinbun;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

std::string str(std::uint64_t x) { return std::to_string(x); }

Outcome a1() {
  Outcome o;
  for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
    const auto F = PrimePowerField::ofOrder(q);
    const auto byD = countByD(buildSystem({1}), F);
    o.require(byD[0] == 2 * q - 1, "ab=0 at q=" + str(q));
    for (std::uint32_t c = 1; c < q; ++c) o.require(byD[c] == q - 1, "ab=c at q=" + str(q));
  }
  return o;
}

Outcome a2() {
  Outcome o;
  std::size_t checked = 0;
  for (unsigned q : {2u, 3u, 4u, 5u}) {
    const auto F = PrimePowerField::ofOrder(q);
    for (int n = 1; n <= 4; ++n) {
      for (const auto& D : enumerateDivisors(F, n, 1)) {
        const auto c = omegaPointCountIdentity(n, D, F);
        o.require(c.pass, "n=" + std::to_string(n) + " q=" + str(q) + " D=" + D.format(F) + ": " + str(c.count) +
                              " vs " + c.traceSide.str() + " vs " + str(c.closedForm));
        ++checked;
      }
    }
  }
  // the fastest path must agree with the naive walk at the largest sizes too
  const auto F5 = PrimePowerField::ofOrder(5);
  EnumerationOptions naive;
  naive.strategy = EnumerationStrategy::Naive;
  for (const auto& ms : std::vector<std::vector<int>>{{4}, {2, 2}, {3, 1}, {2, 1, 1}, {1, 1, 1, 1}})
    o.require(countPoints(EquationSystem(ms), F5, DConstraint::nonzero(), naive) ==
                  countPoints(EquationSystem(ms), F5, DConstraint::nonzero()),
              "naive vs propagated at q=5");
  if (o.pass) o.detail = str(checked) + " divisors";
  return o;
}

Outcome a3() {
  Outcome o;
  for (unsigned q : {2u, 3u, 4u, 5u}) {
    const auto F = PrimePowerField::ofOrder(q);
    for (int n = 1; n <= 3; ++n) {
      const auto counts = strataCounts(n, F);
      std::uint64_t total = 0;
      for (int k = 0; k <= n; ++k) {
        const std::uint64_t got = counts.count(k) ? counts.at(k) : 0;
        total += got;
        o.require(got == predictedStratumCount(n, k, q),
                  "n=" + std::to_string(n) + " k=" + std::to_string(k) + " q=" + str(q));
      }
      o.require(total == countPoints(buildSystem({n}), F, DConstraint::zero()), "strata total");
    }
    o.require(countPoints(buildSystem({2}), F, DConstraint::zero()) == 3 * q * q - 2 * q, "zero-d count n=2");
  }
  return o;
}

Outcome a4() {
  Outcome o;
  for (int k = 1; k <= 6; ++k) {
    const auto brute = bruteForceSchurWeyl(k);
    o.require(brute == predictedSchurWeyl(k), "k=" + std::to_string(k) + ": " + brute.toString());
    o.require(brute.totalDimension() == (std::int64_t{1} << k), "dimension at k=" + std::to_string(k));
  }
  return o;
}

Outcome a5() {
  Outcome o;
  for (int k = 1; k <= 6; ++k)
    o.require(kernelSummands(kernelOfLoweringOperator(k)) == kernelOfN(k), "k=" + std::to_string(k));
  KElement expected(2);
  expected.add({Partition({1, 1}), HalfInt::fromInt(1)}, 1);
  expected.add({Partition({2}), HalfInt::fromInt(0)}, 1);
  o.require(icKernelKElement(2) == expected, "icKernelKElement(2) = " + icKernelKElement(2).toString());
  return o;
}

Outcome a6() {
  Outcome o;
  const Partition triv({2});
  const Partition sign({1, 1});
  KElement delta(2);
  delta.add({triv, HalfInt::fromInt(0)}, 1);
  delta.add({triv, HalfInt::fromInt(-1)}, -1);
  delta.add({sign, HalfInt::fromInt(1)}, 1);
  delta.add({sign, HalfInt::fromInt(-2)}, -1);
  KElement expected(2);
  for (int t : {1, 0, -1}) expected.add({sign, HalfInt::fromInt(t)}, 1);
  expected.add({triv, HalfInt::fromInt(0)}, 1);
  const KElement got = reconstructFromDifference(delta);
  o.require(got == expected, "golden case gave " + got.toString());

  std::mt19937_64 rng(0x5eed);
  int passed = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int k = std::uniform_int_distribution<int>(1, 5)(rng);
    const auto reps = partitionsOf(k);
    KElement G(k);
    const int terms = std::uniform_int_distribution<int>(0, 10)(rng);
    for (int t = 0; t < terms; ++t) {
      const auto& rho = reps[std::uniform_int_distribution<std::size_t>(0, reps.size() - 1)(rng)];
      G.add({rho, HalfInt::fromTwice(std::uniform_int_distribution<int>(-8, 8)(rng))},
            std::uniform_int_distribution<int>(-4, 4)(rng));
    }
    const bool ok = reconstructFromDifference(differenceWithTwist(G)) == G;
    passed += ok;
    o.require(ok, "round trip failed for " + G.toString());
  }
  if (o.pass) o.detail = std::to_string(passed) + "/1000 round trips";
  return o;
}

Outcome a7() {
  Outcome o;
  std::size_t multisets = 0;
  std::vector<int> degrees;
  std::function<void(int, int)> walk = [&](int minDegree, int remaining) {
    o.require(subsetExpansion(degrees) == boundaryProduct(degrees), "subset identity");
    ++multisets;
    if (remaining == 0) return;
    for (int d = minDegree; d <= 5; ++d) {
      degrees.push_back(d);
      walk(d, remaining - 1);
      degrees.pop_back();
    }
  };
  walk(1, 8);
  if (o.pass) o.detail = str(multisets) + " degree multisets";
  return o;
}

Outcome a8() {
  Outcome o;
  DrinfeldOptions options;
  options.crossCheck = true;
  std::uint64_t phis = 0;
  for (unsigned q : {2u, 3u, 4u, 5u}) {
    const auto F = PrimePowerField::ofOrder(q);
    const auto r = drinfeldValue(0, 0, F, options);
    const auto qi = static_cast<std::int64_t>(q);
    o.require(r.value == 1 - qi * qi, "(0,0," + str(q) + ") = " + std::to_string(r.value));
    o.require(r.isom == static_cast<std::int64_t>(isomCount(0, 0, F)), "isom count");
    o.require(r.boundaryMismatches == 0 && r.orbitMismatches == 0, "boundary factor at (0,0," + str(q) + ")");
    for (const auto& [profile, c] : r.histogram) phis += c;
  }
  for (const auto& [a1, a2, q] : std::vector<std::tuple<int, int, unsigned>>{{1, 0, 2}, {0, 1, 3}, {1, 1, 2}, {1, 1, 3}, {2, 0, 2}}) {
    const auto F = PrimePowerField::ofOrder(q);
    const auto r = drinfeldValue(a1, a2, F, options);
    if (a1 == 1 && a2 == 0 && q == 2) o.require(r.value == 3, "(1,0,2) = " + std::to_string(r.value));
    o.require(r.boundaryMismatches == 0 && r.orbitMismatches == 0, "boundary factor mismatch");
    for (const auto& [profile, c] : r.histogram) phis += c;
  }
  if (o.pass) o.detail = str(phis) + " boundary homomorphisms cross-checked";
  return o;
}

Outcome a9() {
  Outcome o;
  o.require(buildSystem({2}).equations().size() == 1, "equation count");
  for (unsigned q : {2u, 3u, 4u, 5u, 7u}) {
    const auto F = PrimePowerField::ofOrder(q);
    const std::uint64_t expected = q * q * q + q * q - q;
    o.require(countPoints(buildSystem({2}), F, DConstraint::any()) == expected, "[2] at q=" + str(q));
    EnumerationOptions naive;
    naive.strategy = EnumerationStrategy::Naive;
    o.require(countPoints(buildSystem({1, 1}), F, DConstraint::any(), naive) == expected, "[1,1] at q=" + str(q));
  }
  return o;
}

Outcome a10() {
  Outcome o;
  const NormLedger ledger = NormLedger::calibrate();
  std::size_t checked = 0;
  for (unsigned q : {2u, 3u, 4u}) {
    const auto F = PrimePowerField::ofOrder(q);
    for (int n = 1; n <= 3; ++n) {
      for (const auto& D : enumerateDivisors(F, n, 2)) {
        const auto c = nearbyVsBoundaryCheck(n, D, ledger);
        o.require(c.pass, "n=" + std::to_string(n) + " q=" + str(q) + " D=" + D.format(F) + ": " + c.lhs.toString() +
                              " vs " + c.rhs.toString());
        ++checked;
      }
    }
  }
  if (o.pass) o.detail = str(checked) + " divisors, c(1) = " + ledger.anchor.toString();
  return o;
}

// Everything A11 compares for one field and one worker count.
std::string fingerprint(const PrimePowerField& F, int jobs) {
  std::ostringstream out;
  EnumerationOptions options;
  options.jobs = jobs;
  for (const auto& ms : std::vector<std::vector<int>>{{1}, {2}, {3}, {1, 1}, {2, 1}}) {
    const EquationSystem sys(ms);
    for (auto c : {DConstraint::any(), DConstraint::zero(), DConstraint::nonzero()})
      out << countPoints(sys, F, c, options) << ' ';
    auto byD = countByD(sys, F, options);
    std::sort(byD.begin() + 1, byD.end());
    for (auto x : byD) out << x << ',';
    out << '\n';
  }
  for (int n = 1; n <= 3; ++n)
    for (const auto& [k, c] : strataCounts(n, F, options)) out << k << ':' << c << ' ';
  out << '\n';
  for (auto obj : {TraceObject::PLO, TraceObject::OmegaTilde, TraceObject::GrPsi})
    for (int n = 1; n <= 3; ++n) out << traceSweep(obj, n, F, jobs).toString() << '\n';
  DrinfeldOptions d;
  d.jobs = jobs;
  for (const auto& [a1, a2] : std::vector<std::pair<int, int>>{{0, 0}, {1, 0}}) {
    const auto r = drinfeldValue(a1, a2, F, d);
    out << r.isom << ' ' << r.boundarySum << ' ' << r.value << ' ' << r.nonunitIsos;
    for (const auto& [p, c] : r.histogram) out << ' ' << formatDegreeProfile(p) << '=' << c;
    out << '\n';
  }
  return out.str();
}

Outcome a11() {
  Outcome o;
  std::string detail;
  for (const auto& [p, e] : std::vector<std::pair<unsigned, unsigned>>{{2, 2}, {2, 3}, {3, 2}}) {
    const std::size_t moduli = PrimePowerField::irreducibleModuli(p, e).size();
    const auto F0 = PrimePowerField::build(p, e, 0);
    const std::string reference = fingerprint(F0, 1);
    for (int jobs : {4, 16}) o.require(fingerprint(F0, jobs) == reference, "jobs at q=" + str(F0.order()));
    if (moduli >= 2) {
      const auto F1 = PrimePowerField::build(p, e, 1);
      o.require(!(F0 == F1), "moduli should give different tables");
      for (int jobs : {1, 4, 16})
        o.require(fingerprint(F1, jobs) == reference, "modulus change at q=" + str(F0.order()));
    }
    detail += (detail.empty() ? "" : ", ") + std::string("q=") + str(F0.order()) + ": " + str(std::min<std::size_t>(moduli, 2)) +
              (moduli >= 2 ? " moduli" : " modulus (unique)");
  }
  if (o.pass) o.detail = detail;
  return o;
}

Outcome a12() {
  Outcome o;
  std::mt19937_64 rng(12);
  const std::vector<unsigned> orders{2, 3, 4, 5};
  std::size_t pairs = 0;
  for (int n = 1; n <= 4; ++n) {
    for (int trial = 0; trial < 200; ++trial) {
      const unsigned q = orders[std::uniform_int_distribution<std::size_t>(0, orders.size() - 1)(rng)];
      const auto F = PrimePowerField::ofOrder(q);
      const int n1 = std::uniform_int_distribution<int>(0, n)(rng);
      const auto first = enumerateDivisors(F, n1);
      const auto second = enumerateDivisors(F, n - n1);
      EffectiveDivisor D1, D2;
      do {
        D1 = first[std::uniform_int_distribution<std::size_t>(0, first.size() - 1)(rng)];
        D2 = second[std::uniform_int_distribution<std::size_t>(0, second.size() - 1)(rng)];
      } while (!D1.disjointFrom(D2));
      const auto D = D1 + D2;
      const int n2 = n - n1;
      o.require(tracePLO(n, D) == tracePLO(n1, D1) * tracePLO(n2, D2), "PLO at " + D.format(F));
      o.require(traceOmegaTilde(n, D) == traceOmegaTilde(n1, D1) * traceOmegaTilde(n2, D2), "Omega at " + D.format(F));
      o.require(traceGrPsi(n, D) == traceGrPsi(n1, D1) * traceGrPsi(n2, D2), "grPsi at " + D.format(F));
      ++pairs;
    }
  }
  if (o.pass) o.detail = str(pairs) + " disjoint pairs";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* id;
    const char* title;
    Outcome (*run)();
  };
  const std::vector<Criterion> criteria{
      {"A1", "Picard-Lefschetz counts #{ab=c}", a1},
      {"A2", "Omega-tilde point-count identity, n <= 4", a2},
      {"A3", "strata counts of the B-locus", a3},
      {"A4", "sign-twisted Schur-Weyl decomposition, k <= 6", a4},
      {"A5", "kernel of the monodromy operator", a5},
      {"A6", "weight-graded reconstruction", a6},
      {"A7", "subset expansion of the boundary product", a7},
      {"A8", "Drinfeld's function by enumeration", a8},
      {"A9", "quadric cone and its fiber product", a9},
      {"A10", "nearby cycles versus boundary, calibrated at n = 1", a10},
      {"A11", "determinism across jobs and field moduli", a11},
      {"A12", "factorization on disjoint divisors", a12},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    failures += !o.pass;
    char seconds[32];
    std::snprintf(seconds, sizeof seconds, "%.2fs", elapsed.count());
    const std::string note = o.detail.empty() ? seconds : o.detail + "; " + seconds;
    std::printf("%-4s %s  %s  (%s)\n", c.id, o.pass ? "PASS" : "FAIL", c.title, note.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures;
}
