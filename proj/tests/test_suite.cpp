#include <doctest.h>

#include <stdexcept>
#include "vinbun/suite.hpp"

using namespace vinbun;

TEST_CASE("schurweyl suite with k up to 4 gives four passing checks") {
  RunConfig c;
  c.suites = {"schurweyl"};
  c.maxN = 4;
  const Report r = runSuite(c);
  CHECK(r.entries.size() == 4);
  CHECK(r.count(CheckStatus::Pass) == 4);
}

TEST_CASE("reconstruct suite contains the passing golden case") {
  RunConfig c;
  c.suites = {"reconstruct"};
  const Report r = runSuite(c);
  bool found = false;
  for (const auto& e : r.entries)
    if (e.identity == "reconstruct.golden") {
      found = true;
      CHECK(toString(e.status) == "pass");
    }
  CHECK(found);
  CHECK_FALSE(r.anyFailure());
}

TEST_CASE("empty grid gives an empty report") {
  RunConfig c;
  c.suites = {"nearby", "omega", "strata", "schurweyl", "reconstruct", "drinfeld", "quadric", "uniformity"};
  c.maxN = 0;
  const Report r = runSuite(c);
  CHECK(r.entries.empty());
  CHECK_FALSE(r.anyFailure());
}

TEST_CASE("reports are byte-identical across runs and job counts") {
  RunConfig c;
  c.suites = {"nearby", "omega", "strata", "drinfeld", "quadric", "uniformity"};
  c.maxN = 2;
  c.maxQ = 3;
  const std::string a = runSuite(c).toJson();
  c.jobs = 4;
  const std::string b = runSuite(c).toJson();
  CHECK(a == b);
  CHECK(runSuite(c).toCsv() == runSuite(c).toCsv());
  CHECK(a.find("\"schema\": 1") != std::string::npos);
}

TEST_CASE("budget overruns become skipped entries") {
  RunConfig c;
  c.suites = {"quadric", "drinfeld"};
  c.maxN = 2;
  c.maxQ = 3;
  c.budget = 2;
  const Report r = runSuite(c);
  CHECK(r.count(CheckStatus::Skipped) > 0);
  CHECK_FALSE(r.anyFailure());
}

TEST_CASE("config validation") {
  RunConfig c;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c.suites = {"bogus"};
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c.suites = {"omega"};
  c.jobs = 0;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  CHECK(fieldOrdersUpTo(9) == std::vector<unsigned>{2, 3, 4, 5, 7, 8, 9});
}

TEST_CASE("CSV quoting of divisors") {
  Report r;
  r.entries.push_back({"nearby", "x", {{"divisor", "t:1,t+1:1"}}, "a", "b", CheckStatus::Pass});
  CHECK(r.toCsv() == "schema,suite,identity,parameters,lhs,rhs,status\n1,nearby,x,\"divisor=t:1,t+1:1\",a,b,pass\n");
}
