#include "vinbun/suite.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "vinbun/divisor.hpp"
#include "vinbun/drinfeld.hpp"
#include "vinbun/field.hpp"
#include "vinbun/kcalc.hpp"
#include "vinbun/lefschetz.hpp"
#include "vinbun/localmodel.hpp"
#include "vinbun/symrep.hpp"

namespace vinbun {

const std::vector<std::string>& RunConfig::knownSuites() {
  static const std::vector<std::string> names{"nearby",      "omega",       "strata",  "schurweyl",
                                              "reconstruct", "drinfeld",    "quadric", "uniformity"};
  return names;
}

void RunConfig::validate() const {
  if (suites.empty()) throw std::invalid_argument("no suites selected");
  for (const auto& s : suites)
    if (std::find(knownSuites().begin(), knownSuites().end(), s) == knownSuites().end())
      throw std::invalid_argument("unknown suite '" + s + "'");
  if (jobs < 1) throw std::invalid_argument("jobs must be positive");
  if (maxN < 0 || maxQ < 0 || maxDegree < 0) throw std::invalid_argument("grid bounds must be nonnegative");
}

std::string toString(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass:
      return "pass";
    case CheckStatus::Fail:
      return "fail";
    case CheckStatus::Skipped:
      return "skipped";
    case CheckStatus::Info:
      return "info";
  }
  return "info";
}

std::size_t Report::count(CheckStatus s) const {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(), [s](const CheckEntry& e) { return e.status == s; }));
}

std::string Report::toJson() const {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["schema"] = 1;
  doc["summary"] = {{"pass", count(CheckStatus::Pass)},
                    {"fail", count(CheckStatus::Fail)},
                    {"skipped", count(CheckStatus::Skipped)},
                    {"info", count(CheckStatus::Info)}};
  ordered_json list = ordered_json::array();
  for (const auto& e : entries) {
    ordered_json params = ordered_json::object();
    for (const auto& [k, v] : e.parameters) params[k] = v;
    list.push_back({{"suite", e.suite},
                    {"identity", e.identity},
                    {"parameters", params},
                    {"lhs", e.lhs},
                    {"rhs", e.rhs},
                    {"status", toString(e.status)}});
  }
  doc["entries"] = std::move(list);
  return doc.dump(2) + "\n";
}

namespace {

std::string csvField(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string Report::toCsv() const {
  std::string out = "schema,suite,identity,parameters,lhs,rhs,status\n";
  for (const auto& e : entries) {
    std::string params;
    for (const auto& [k, v] : e.parameters) {
      if (!params.empty()) params += ";";
      params += k + "=" + v;
    }
    out += "1," + csvField(e.suite) + "," + csvField(e.identity) + "," + csvField(params) + "," + csvField(e.lhs) +
           "," + csvField(e.rhs) + "," + toString(e.status) + "\n";
  }
  return out;
}

std::vector<unsigned> fieldOrdersUpTo(int maxQ) {
  std::vector<unsigned> out;
  for (unsigned q = 2; q <= static_cast<unsigned>(std::max(maxQ, 0)); ++q) {
    for (unsigned p = 2; p <= q; ++p) {
      if (!isPrime(p) || q % p != 0) continue;
      unsigned e = 0;
      unsigned r = q;
      while (r % p == 0) {
        r /= p;
        ++e;
      }
      if (r == 1 && e <= 3) out.push_back(q);
      break;
    }
  }
  return out;
}

namespace {

using Params = std::vector<std::pair<std::string, std::string>>;

class SuiteRunner {
 public:
  explicit SuiteRunner(const RunConfig& c) : config_(c), fields_(fieldOrdersUpTo(c.maxQ)) {}

  Report run() {
    // fixed suite order, independent of the order of the config set
    for (const auto& name : RunConfig::knownSuites()) {
      if (!config_.suites.count(name)) continue;
      suite_ = name;
      if (name == "nearby") nearby();
      if (name == "omega") omega();
      if (name == "strata") strata();
      if (name == "schurweyl") schurWeyl();
      if (name == "reconstruct") reconstruct();
      if (name == "drinfeld") drinfeld();
      if (name == "quadric") quadric();
      if (name == "uniformity") uniformity();
    }
    return std::move(report_);
  }

 private:
  EnumerationOptions enumeration() const {
    EnumerationOptions o;
    o.jobs = config_.jobs;
    if (config_.budget) o.budget = config_.budget;
    return o;
  }

  void add(std::string identity, Params params, std::string lhs, std::string rhs, CheckStatus status) {
    report_.entries.push_back({suite_, std::move(identity), std::move(params), std::move(lhs), std::move(rhs), status});
  }

  template <class T>
  void compare(std::string identity, Params params, const T& lhs, const T& rhs) {
    std::ostringstream l, r;
    l << lhs;
    r << rhs;
    add(std::move(identity), std::move(params), l.str(), r.str(), lhs == rhs ? CheckStatus::Pass : CheckStatus::Fail);
  }

  void skipped(std::string identity, Params params, const std::string& why) {
    add(std::move(identity), std::move(params), why, "", CheckStatus::Skipped);
  }

  static std::string str(std::uint64_t x) { return std::to_string(x); }

  void nearby() {
    if (config_.maxN < 1) return;
    const NormLedger ledger = NormLedger::calibrate(ExteriorSignConvention::Calibrated);
    add("calibration.c1", {}, ledger.anchor.toString(), "", CheckStatus::Info);
    const NormLedger perPointLedger = NormLedger::calibrate(ExteriorSignConvention::PerPoint);
    for (unsigned q : fields_) {
      const auto F = PrimePowerField::ofOrder(q);
      for (int n = 1; n <= config_.maxN; ++n) {
        std::size_t perPointFailures = 0;
        std::size_t total = 0;
        for (const auto& D : enumerateDivisors(F, n, std::max(config_.maxDegree, 1))) {
          const auto check = nearbyVsBoundaryCheck(n, D, ledger);
          add("nearby-vs-boundary", {{"n", str(n)}, {"q", str(q)}, {"divisor", D.format(F)}}, check.lhs.toString(),
              check.rhs.toString(), check.pass ? CheckStatus::Pass : CheckStatus::Fail);
          ++total;
          if (!nearbyVsBoundaryCheck(n, D, perPointLedger, ExteriorSignConvention::PerPoint).pass) ++perPointFailures;
        }
        add("convention-survey." + toString(ExteriorSignConvention::PerPoint), {{"n", str(n)}, {"q", str(q)}},
            str(perPointFailures) + " failures", str(total) + " divisors", CheckStatus::Info);
      }
    }
  }

  void omega() {
    for (unsigned q : fields_) {
      const auto F = PrimePowerField::ofOrder(q);
      for (int n = 1; n <= config_.maxN; ++n) {
        for (const auto& D : enumerateDivisors(F, n, 1)) {
          const Params p{{"n", str(n)}, {"q", str(q)}, {"divisor", D.format(F)}};
          try {
            const auto c = omegaPointCountIdentity(n, D, F, enumeration());
            add("omega-point-count", p, str(c.count),
                c.traceSide.str() + " (closed form " + str(c.closedForm) + ")",
                c.pass ? CheckStatus::Pass : CheckStatus::Fail);
          } catch (const BudgetExceeded& e) {
            skipped("omega-point-count", p, e.what());
          }
        }
      }
    }
  }

  void strata() {
    for (unsigned q : fields_) {
      const auto F = PrimePowerField::ofOrder(q);
      for (int n = 1; n <= config_.maxN; ++n) {
        const Params p{{"n", str(n)}, {"q", str(q)}};
        try {
          const auto counts = strataCounts(n, F, enumeration());
          std::uint64_t total = 0;
          for (int k = 0; k <= n; ++k) {
            const std::uint64_t got = counts.count(k) ? counts.at(k) : 0;
            total += got;
            Params pk = p;
            pk.emplace_back("defect", str(k));
            compare("stratum-count", pk, got, predictedStratumCount(n, k, q));
          }
          compare("strata-total", p, total, countPoints(EquationSystem({n}), F, DConstraint::zero(), enumeration()));
        } catch (const BudgetExceeded& e) {
          skipped("stratum-count", p, e.what());
        }
      }
    }
  }

  void schurWeyl() {
    for (int k = 1; k <= config_.maxN; ++k) {
      const Params p{{"k", str(k)}};
      if (k > 8) {
        skipped("schur-weyl", p, "brute force limited to k <= 8");
        continue;
      }
      const GradedBiRep brute = bruteForceSchurWeyl(k);
      const GradedBiRep predicted = predictedSchurWeyl(k);
      const bool ok = brute == predicted && brute.totalDimension() == (std::int64_t{1} << k);
      add("schur-weyl", p, brute.toString(), predicted.toString(), ok ? CheckStatus::Pass : CheckStatus::Fail);
    }
  }

  void reconstruct() {
    if (config_.maxN >= 2) {
      const Partition trivial({2});
      const Partition sign({1, 1});
      KElement delta(2);
      delta.add({trivial, HalfInt::fromInt(0)}, 1);
      delta.add({trivial, HalfInt::fromInt(-1)}, -1);
      delta.add({sign, HalfInt::fromInt(1)}, 1);
      delta.add({sign, HalfInt::fromInt(-2)}, -1);
      KElement expected(2);
      for (int t : {1, 0, -1}) expected.add({sign, HalfInt::fromInt(t)}, 1);
      expected.add({trivial, HalfInt::fromInt(0)}, 1);
      const KElement got = reconstructFromDifference(delta);
      add("reconstruct.golden", {{"k", "2"}}, got.toString(), expected.toString(),
          got == expected ? CheckStatus::Pass : CheckStatus::Fail);
    }
    std::mt19937_64 rng(20240611);
    for (int k = 1; k <= config_.maxN; ++k) {
      const auto reps = partitionsOf(k);
      std::size_t failures = 0;
      constexpr int trials = 50;
      for (int trial = 0; trial < trials; ++trial) {
        KElement G(k);
        std::uniform_int_distribution<int> nTerms(1, 5), rep(0, static_cast<int>(reps.size()) - 1), twist(-6, 6),
            coeff(-3, 3);
        const int terms = nTerms(rng);
        for (int t = 0; t < terms; ++t)
          G.add({reps[static_cast<std::size_t>(rep(rng))], HalfInt::fromTwice(twist(rng))}, coeff(rng));
        if (!(reconstructFromDifference(differenceWithTwist(G)) == G)) ++failures;
      }
      compare("reconstruct.round-trip", {{"k", str(k)}, {"trials", str(trials)}}, failures, std::size_t{0});
      const KElement plo = ploKElement(k);
      compare("reconstruct.plo", {{"k", str(k)}}, reconstructFromDifference(differenceWithTwist(plo)).toString(),
              plo.toString());
    }
  }

  void drinfeld() {
    DrinfeldOptions options;
    options.jobs = config_.jobs;
    options.crossCheck = true;
    if (config_.budget) options.budget = config_.budget;
    for (unsigned q : fields_) {
      const auto F = PrimePowerField::ofOrder(q);
      for (int a1 = 0; a1 < config_.maxN; ++a1) {
        for (int a2 = 0; a1 + a2 < config_.maxN; ++a2) {
          const Params p{{"a1", str(a1)}, {"a2", str(a2)}, {"q", str(q)}};
          try {
            const DrinfeldResult r = drinfeldValue(a1, a2, F, options);
            compare("drinfeld.isom", p, static_cast<std::uint64_t>(r.isom), isomCount(a1, a2, F));
            compare("drinfeld.boundary-stalk", p, r.boundaryMismatches, std::uint64_t{0});
            compare("drinfeld.gm-orbit", p, r.orbitMismatches, std::uint64_t{0});
            const auto qi = static_cast<std::int64_t>(q);
            if (a1 == 0 && a2 == 0)
              compare("drinfeld.value", p, r.value, 1 - qi * qi);
            else if (a1 == 1 && a2 == 0 && q == 2)
              compare("drinfeld.value", p, r.value, std::int64_t{3});
            else
              add("drinfeld.value", p, std::to_string(r.value), "", CheckStatus::Info);
          } catch (const DrinfeldBudgetExceeded& e) {
            skipped("drinfeld.value", p, e.what());
          }
        }
      }
    }
  }

  void quadric() {
    if (config_.maxN < 2) return;
    compare("quadric.equations", {}, buildSystem({2}).equations().size(), std::size_t{1});
    for (unsigned q : fields_) {
      if (q > 7) continue;
      const auto F = PrimePowerField::ofOrder(q);
      const std::uint64_t expected = q * q * q + q * q - q;
      const Params p{{"q", str(q)}};
      try {
        compare("quadric.count", p, countPoints(buildSystem({2}), F, DConstraint::any(), enumeration()), expected);
        compare("quadric.fiber-product", p, countPoints(buildSystem({1, 1}), F, DConstraint::any(), enumeration()),
                expected);
      } catch (const BudgetExceeded& e) {
        skipped("quadric.count", p, e.what());
      }
    }
  }

  void uniformity() {
    for (unsigned q : fields_) {
      const auto F = PrimePowerField::ofOrder(q);
      for (int n = 1; n <= config_.maxN; ++n) {
        const Params p{{"n", str(n)}, {"q", str(q)}};
        try {
          const auto counts = fiberCounts(n, F, enumeration());
          std::string values;
          for (const auto& [c, v] : counts) values += (values.empty() ? "" : ",") + str(v);
          const std::uint64_t expected = (q - 1) * [&] {
            std::uint64_t x = 1;
            for (int i = 1; i < n; ++i) x *= q;
            return x;
          }();
          const bool uniform = perFiberUniformity(n, F, enumeration());
          add("fiber-uniformity", p, values, str(expected) + " each",
              uniform && counts.begin()->second == expected ? CheckStatus::Pass : CheckStatus::Fail);
          EnumerationOptions naive = enumeration();
          naive.strategy = EnumerationStrategy::Naive;
          if (candidateCount(EquationSystem({n}), F, EnumerationStrategy::Naive) <= naive.budget && n <= 3)
            compare("naive-vs-propagated", p, countPoints(EquationSystem({n}), F, DConstraint::any(), naive),
                    countPoints(EquationSystem({n}), F, DConstraint::any(), enumeration()));
          if (n <= 2 && q <= 4) {
            std::uint64_t bad = 0;
            const EquationSystem sys({n});
            forEachPoint(sys, F, DConstraint::any(), [&](const SolutionPoint& pt) {
              for (Fq c : F.nonzeroElements())
                if (!gmOrbitCheck(sys, F, pt, c)) ++bad;
            }, enumeration());
            compare("gm-orbit", p, bad, std::uint64_t{0});
          }
        } catch (const BudgetExceeded& e) {
          skipped("fiber-uniformity", p, e.what());
        }
      }
    }
  }

  const RunConfig& config_;
  std::vector<unsigned> fields_;
  std::string suite_;
  Report report_;
};

}  // namespace

Report runSuite(const RunConfig& config) {
  config.validate();
  return SuiteRunner(config).run();
}

}  // namespace vinbun
