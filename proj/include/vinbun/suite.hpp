#pragma once

// Batch verification: named suites swept over (n, q, divisor) grids, with a
// machine-readable report.

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace vinbun {

enum class ReportFormat { Json, Csv };

struct RunConfig {
  std::set<std::string> suites;
  int maxN = 3;
  int maxQ = 5;
  int maxDegree = 2;
  int jobs = 1;
  std::uint64_t budget = 0;  // 0 selects the module defaults
  std::string outputPath;
  ReportFormat format = ReportFormat::Json;

  static const std::vector<std::string>& knownSuites();
  /// Throws std::invalid_argument on an unknown or empty suite list or a
  /// non-positive job count.
  void validate() const;
};

enum class CheckStatus { Pass, Fail, Skipped, Info };

std::string toString(CheckStatus s);

struct CheckEntry {
  std::string suite;
  std::string identity;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::string lhs;
  std::string rhs;
  CheckStatus status = CheckStatus::Info;
};

struct Report {
  std::vector<CheckEntry> entries;

  std::size_t count(CheckStatus s) const;
  bool anyFailure() const { return count(CheckStatus::Fail) > 0; }
  std::string toJson() const;
  std::string toCsv() const;
  std::string render(ReportFormat f) const { return f == ReportFormat::Json ? toJson() : toCsv(); }
};

/// Field orders q <= maxQ supported by the arithmetic layer, ascending.
std::vector<unsigned> fieldOrdersUpTo(int maxQ);

Report runSuite(const RunConfig& config);

}  // namespace vinbun
