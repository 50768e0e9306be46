#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "vinbun/divisor.hpp"
#include "vinbun/drinfeld.hpp"
#include "vinbun/field.hpp"
#include "vinbun/kcalc.hpp"
#include "vinbun/lefschetz.hpp"
#include "vinbun/localmodel.hpp"
#include "vinbun/suite.hpp"
#include "vinbun/symrep.hpp"

namespace py = pybind11;
using namespace pybind11::literals;
using namespace vinbun;

namespace {

std::map<int, std::int64_t> laurentDict(const LaurentValue& v) { return v.terms(); }

EnumerationOptions enumeration(int jobs, const std::string& strategy, std::uint64_t budget) {
  EnumerationOptions o;
  o.jobs = jobs;
  if (budget) o.budget = budget;
  if (strategy == "naive")
    o.strategy = EnumerationStrategy::Naive;
  else if (strategy != "propagated")
    throw std::invalid_argument("strategy must be 'naive' or 'propagated'");
  return o;
}

LaurentValue traceByName(const std::string& object, int n, const std::string& divisor, unsigned q) {
  const auto F = PrimePowerField::ofOrder(q);
  const auto D = parseDivisor(divisor, F);
  if (object == "plo") return tracePLO(n, D);
  if (object == "omega") return traceOmegaTilde(n, D);
  if (object == "grpsi") return traceGrPsi(n, D);
  if (object == "kelement") return traceKElement(ploKElement(n), D);
  throw std::invalid_argument("object must be plo, omega, grpsi or kelement");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Point counts, trace functions and representation data for the SL2 local models";

  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);
  py::register_exception<DrinfeldBudgetExceeded>(m, "DrinfeldBudgetExceeded", PyExc_RuntimeError);
  py::register_exception<StalkUndetermined>(m, "StalkUndetermined", PyExc_ValueError);

  py::class_<LaurentValue>(m, "LaurentValue")
      .def_property_readonly("terms", &laurentDict, "exponent of v -> coefficient")
      .def("specialize", [](const LaurentValue& v, std::int64_t q) {
        const Rational r = v.specializeAtQ(q);
        return py::make_tuple(numerator(r).str(), denominator(r).str());
      }, py::arg("q"), "value at v^2 = q as (numerator, denominator) strings")
      .def("__eq__", [](const LaurentValue& a, const LaurentValue& b) { return a == b; })
      .def("__str__", &LaurentValue::toString)
      .def("__repr__", [](const LaurentValue& v) { return "LaurentValue(" + v.toString() + ")"; });

  m.def("equations", [](const std::vector<int>& ms) { return buildSystem(ms).toString(); }, py::arg("multiplicities"));
  m.def("count_points",
        [](const std::vector<int>& ms, unsigned q, const std::string& d, int jobs, const std::string& strategy,
           std::uint64_t budget) {
          const auto F = PrimePowerField::ofOrder(q);
          return countPoints(EquationSystem(ms), F, DConstraint::parse(d, F), enumeration(jobs, strategy, budget));
        },
        py::arg("multiplicities"), py::arg("q"), py::arg("d") = "any", py::arg("jobs") = 1,
        py::arg("strategy") = "propagated", py::arg("budget") = 0);
  m.def("strata_counts", [](int n, unsigned q, int jobs) {
    return strataCounts(n, PrimePowerField::ofOrder(q), enumeration(jobs, "propagated", 0));
  }, py::arg("n"), py::arg("q"), py::arg("jobs") = 1);
  m.def("predicted_stratum_count", &predictedStratumCount, py::arg("n"), py::arg("k"), py::arg("q"));
  m.def("per_fiber_uniformity", [](int n, unsigned q) { return perFiberUniformity(n, PrimePowerField::ofOrder(q)); },
        py::arg("n"), py::arg("q"));
  m.def("omega_point_count", [](int n, const std::string& divisor, unsigned q) {
    const auto F = PrimePowerField::ofOrder(q);
    const auto c = omegaPointCountIdentity(n, parseDivisor(divisor, F), F);
    return py::dict("count"_a = c.count, "trace_side"_a = c.traceSide.str(), "closed_form"_a = c.closedForm,
                    "pass"_a = c.pass);
  }, py::arg("n"), py::arg("divisor"), py::arg("q"));

  m.def("trace", &traceByName, py::arg("object"), py::arg("n"), py::arg("divisor"), py::arg("q") = 2);
  m.def("nearby_vs_boundary", [](int n, const std::string& divisor, unsigned q) {
    const auto F = PrimePowerField::ofOrder(q);
    const auto c = nearbyVsBoundaryCheck(n, parseDivisor(divisor, F), NormLedger::calibrate());
    return py::make_tuple(c.lhs, c.rhs, c.pass);
  }, py::arg("n"), py::arg("divisor"), py::arg("q") = 2);
  m.def("reconstruct_plo", [](int k) {
    const KElement G = ploKElement(k);
    const KElement back = reconstructFromDifference(differenceWithTwist(G));
    return py::make_tuple(G.toString(), back.toString(), back == G);
  }, py::arg("k"));
  m.def("ic_kernel", [](int k) { return icKernelKElement(k).toString(); }, py::arg("k"));

  m.def("schur_weyl", [](int k) {
    const auto brute = bruteForceSchurWeyl(k);
    const auto predicted = predictedSchurWeyl(k);
    return py::dict("brute_force"_a = brute.toString(), "predicted"_a = predicted.toString(),
                    "dimension"_a = brute.totalDimension(), "match"_a = brute == predicted);
  }, py::arg("k"));
  m.def("kernel_of_n", [](int k) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& s : kernelOfN(k)) out.emplace_back(s.diagram.toString(), s.twist.toString());
    return out;
  }, py::arg("k"));
  m.def("character_table_csv", &characterTableCsv, py::arg("k"));
  m.def("character", [](const std::vector<int>& lambda, const std::vector<int>& cycleType) {
    return character(Partition(lambda), CycleType(cycleType));
  }, py::arg("partition"), py::arg("cycle_type"));

  m.def("drinfeld_value", [](int a1, int a2, unsigned q, int jobs, bool crossCheck) {
    DrinfeldOptions o;
    o.jobs = jobs;
    o.crossCheck = crossCheck;
    const auto r = drinfeldValue(a1, a2, PrimePowerField::ofOrder(q), o);
    std::map<std::string, std::uint64_t> histogram;
    for (const auto& [p, c] : r.histogram) histogram[formatDegreeProfile(p)] = c;
    return py::dict("isom"_a = r.isom, "boundary_sum"_a = r.boundarySum, "value"_a = r.value,
                    "nonunit_isos"_a = r.nonunitIsos, "value_with_nonunit_isos"_a = r.valueWithNonunit,
                    "histogram"_a = histogram, "boundary_mismatches"_a = r.boundaryMismatches,
                    "orbit_mismatches"_a = r.orbitMismatches);
  }, py::arg("a1"), py::arg("a2"), py::arg("q"), py::arg("jobs") = 1, py::arg("cross_check") = false);

  m.def("run_suite", [](const std::vector<std::string>& suites, int maxN, int maxQ, int maxDegree, int jobs,
                        const std::string& format) {
    RunConfig c;
    c.suites.insert(suites.begin(), suites.end());
    c.maxN = maxN;
    c.maxQ = maxQ;
    c.maxDegree = maxDegree;
    c.jobs = jobs;
    const Report r = runSuite(c);
    return py::make_tuple(r.render(format == "csv" ? ReportFormat::Csv : ReportFormat::Json), !r.anyFailure());
  }, py::arg("suites"), py::arg("max_n") = 3, py::arg("max_q") = 5, py::arg("max_degree") = 2, py::arg("jobs") = 1,
     py::arg("format") = "json");
}
