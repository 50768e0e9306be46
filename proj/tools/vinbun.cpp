#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "vinbun/divisor.hpp"
#include "vinbun/drinfeld.hpp"
#include "vinbun/field.hpp"
#include "vinbun/kcalc.hpp"
#include "vinbun/lefschetz.hpp"
#include "vinbun/localmodel.hpp"
#include "vinbun/suite.hpp"
#include "vinbun/symrep.hpp"

using namespace vinbun;
using nlohmann::ordered_json;

namespace {

std::vector<int> parseIntList(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    const int v = std::stoi(item, &used);
    if (used != item.size()) throw std::invalid_argument("bad integer '" + item + "' in list");
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty list");
  return out;
}

ordered_json laurentJson(const LaurentValue& v) {
  ordered_json out = ordered_json::object();
  for (auto it = v.terms().rbegin(); it != v.terms().rend(); ++it) out[std::to_string(it->first)] = it->second;
  return out;
}

std::string renderDecomposition(const GradedBiRep& r) { return r.toString(); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"vinbun: point counts, traces and representation data for the SL2 local models"};
  app.require_subcommand(1);

  // verify
  auto* verify = app.add_subcommand("verify", "Run verification suites and emit a report");
  std::string suites = "all";
  RunConfig config;
  std::string format = "json";
  std::uint64_t verifyBudget = 0;
  verify->add_option("--suites", suites, "Comma-separated suites or 'all'");
  verify->add_option("--max-n", config.maxN, "Largest degree n (also k and a1+a2 bound)");
  verify->add_option("--max-q", config.maxQ, "Largest field order");
  verify->add_option("--max-degree", config.maxDegree, "Largest residue degree in nearby sweeps");
  verify->add_option("--jobs", config.jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--budget", verifyBudget, "Enumeration budget (overrides VINBUN_BUDGET)");
  verify->add_option("--output", config.outputPath, "Write the report here instead of stdout");
  verify->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  // count
  auto* count = app.add_subcommand("count", "Count F_q-points of a local model");
  std::string countN;
  unsigned countQ = 2;
  std::string countD = "any";
  int countJobs = 1;
  std::string strategy = "propagated";
  std::size_t modulus = 0;
  std::uint64_t countBudget = 0;
  count->add_option("--n", countN, "Multiplicities, e.g. 2 or 1,1")->required();
  count->add_option("--q", countQ, "Field order")->required();
  count->add_option("--d", countD, "any, zero, nonzero or an element index");
  count->add_option("--jobs", countJobs, "Worker threads")->check(CLI::PositiveNumber);
  count->add_option("--strategy", strategy, "naive or propagated")->check(CLI::IsMember({"naive", "propagated"}));
  count->add_option("--modulus", modulus, "Index of the defining modulus of F_q");
  count->add_option("--budget", countBudget, "Enumeration budget (overrides VINBUN_BUDGET)");

  // trace
  auto* trace = app.add_subcommand("trace", "Trace function of a sheaf at a divisor");
  std::string object;
  int traceN = 1;
  std::string divisorText;
  unsigned traceQ = 2;
  std::string element = "plo";
  std::string convention = "calibrated";
  trace->add_option("--object", object, "plo, omega, grpsi or kelement")
      ->required()
      ->check(CLI::IsMember({"plo", "omega", "grpsi", "kelement"}));
  trace->add_option("--n", traceN, "Degree n")->required();
  trace->add_option("--divisor", divisorText, "Divisor as poly:mult terms")->required();
  trace->add_option("--q", traceQ, "Field order used to read the divisor");
  trace->add_option("--element", element, "K-group element for --object kelement: plo or ic")
      ->check(CLI::IsMember({"plo", "ic"}));
  trace->add_option("--convention", convention, "calibrated or per-point")
      ->check(CLI::IsMember({"calibrated", "per-point"}));

  // equations
  auto* equations = app.add_subcommand("equations", "Print the equations of a local model");
  std::string eqN;
  equations->add_option("--n", eqN, "Multiplicities, e.g. 3 or 2,1")->required();

  // schur-weyl
  auto* schur = app.add_subcommand("schur-weyl", "Compare brute-force and predicted decompositions of V^(x)k");
  int schurK = 2;
  std::string action = "sign";
  schur->add_option("--k", schurK, "Tensor power")->required();
  schur->add_option("--action", action, "sign or plain")->check(CLI::IsMember({"sign", "plain"}));

  // drinfeld
  auto* drin = app.add_subcommand("drinfeld", "Evaluate Drinfeld's function on split bundles");
  int a1 = 0, a2 = 0;
  unsigned drinQ = 2;
  bool histogram = false, includeNonunit = false, crossCheck = false;
  int drinJobs = 1;
  std::uint64_t drinBudget = 0;
  drin->add_option("--a1", a1, "E1 = O(a1) + O(-a1)")->required()->check(CLI::NonNegativeNumber);
  drin->add_option("--a2", a2, "E2 = O(a2) + O(-a2)")->required()->check(CLI::NonNegativeNumber);
  drin->add_option("--q", drinQ, "Field order")->required();
  drin->add_flag("--histogram", histogram, "Counts of phi per defect degree profile");
  drin->add_flag("--include-nonunit-isos", includeNonunit, "Also report the value counting det not in {0,1}");
  drin->add_flag("--cross-check", crossCheck, "Compare every factor with the boundary stalk");
  drin->add_option("--jobs", drinJobs, "Worker threads")->check(CLI::PositiveNumber);
  drin->add_option("--budget", drinBudget, "Hom enumeration budget (overrides VINBUN_BUDGET)");

  // characters
  auto* chars = app.add_subcommand("characters", "Character table of S_k as CSV");
  int charK = 3;
  chars->add_option("--k", charK, "Symmetric group degree")->required()->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*verify) {
      if (suites == "all") {
        config.suites.insert(RunConfig::knownSuites().begin(), RunConfig::knownSuites().end());
      } else {
        std::stringstream ss(suites);
        std::string s;
        while (std::getline(ss, s, ',')) config.suites.insert(s);
      }
      config.budget = verifyBudget;
      config.format = format == "csv" ? ReportFormat::Csv : ReportFormat::Json;
      const Report report = runSuite(config);
      const std::string text = report.render(config.format);
      if (config.outputPath.empty()) {
        std::cout << text;
      } else {
        std::ofstream out(config.outputPath, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + config.outputPath);
        out << text;
      }
      return report.anyFailure() ? 1 : 0;
    }

    if (*count) {
      const auto F = PrimePowerField::ofOrder(countQ, modulus);
      const EquationSystem sys(parseIntList(countN));
      EnumerationOptions options;
      options.jobs = countJobs;
      if (countBudget) options.budget = countBudget;
      options.strategy = strategy == "naive" ? EnumerationStrategy::Naive : EnumerationStrategy::Propagated;
      const auto start = std::chrono::steady_clock::now();
      const std::uint64_t n = countPoints(sys, F, DConstraint::parse(countD, F), options);
      const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
      std::cout << ordered_json{{"count", n}, {"elapsed", elapsed.count()}}.dump() << "\n";
      return 0;
    }

    if (*trace) {
      const auto F = PrimePowerField::ofOrder(traceQ);
      const EffectiveDivisor D = parseDivisor(divisorText, F);
      const auto conv =
          convention == "per-point" ? ExteriorSignConvention::PerPoint : ExteriorSignConvention::Calibrated;
      LaurentValue value;
      if (object == "plo")
        value = tracePLO(traceN, D, conv);
      else if (object == "omega")
        value = traceOmegaTilde(traceN, D);
      else if (object == "grpsi")
        value = traceGrPsi(traceN, D, conv);
      else
        value = traceKElement(element == "ic" ? icKernelKElement(traceN) : ploKElement(traceN), D);
      std::cout << laurentJson(value).dump() << "\n";
      return 0;
    }

    if (*equations) {
      std::cout << buildSystem(parseIntList(eqN)).toString();
      return 0;
    }

    if (*schur) {
      const auto act = action == "plain" ? PermutationAction::Plain : PermutationAction::SignTwisted;
      const GradedBiRep brute = bruteForceSchurWeyl(schurK, act);
      const GradedBiRep predicted = predictedSchurWeyl(schurK);
      std::cout << "brute-force: " << renderDecomposition(brute) << "\n";
      std::cout << "predicted:   " << renderDecomposition(predicted) << "\n";
      std::cout << "dimension:   " << brute.totalDimension() << "\n";
      std::cout << "verdict:     " << (brute == predicted ? "match" : "mismatch") << "\n";
      return brute == predicted ? 0 : 1;
    }

    if (*drin) {
      const auto F = PrimePowerField::ofOrder(drinQ);
      DrinfeldOptions options;
      options.jobs = drinJobs;
      options.crossCheck = crossCheck;
      if (drinBudget) options.budget = drinBudget;
      const DrinfeldResult r = drinfeldValue(a1, a2, F, options);
      ordered_json out{{"isom", r.isom}, {"boundary_sum", r.boundarySum}, {"value", r.value}};
      if (includeNonunit) {
        out["nonunit_isos"] = r.nonunitIsos;
        out["value_with_nonunit_isos"] = r.valueWithNonunit;
      }
      if (crossCheck) {
        out["boundary_mismatches"] = r.boundaryMismatches;
        out["orbit_mismatches"] = r.orbitMismatches;
      }
      if (histogram) {
        ordered_json h = ordered_json::object();
        for (const auto& [profile, c] : r.histogram) h[formatDegreeProfile(profile)] = c;
        out["histogram"] = h;
      }
      std::cout << out.dump() << "\n";
      return 0;
    }

    if (*chars) {
      std::cout << characterTableCsv(charK);
      return 0;
    }
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const DrinfeldBudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
