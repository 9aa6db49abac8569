// Machine-readable verification reports.  Each check records the two sides
// being compared (as strings), the residual, the tolerance it was held to,
// and a short stable digest of the compared content, so reruns with the same
// seed are byte-identical apart from timing.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qma {

struct CheckResult {
  std::string name;    // kebab-case identifier of the property checked
  std::string anchor;  // kebab-case identifier of the statement family
  std::string lhs;     // rendered left side (or a summary of it)
  std::string rhs;     // rendered right side (or a summary of it)
  double residual = 0.0;
  double tol = 0.0;
  bool pass = false;
  std::uint64_t digest = 0;  // FNV-1a of lhs and rhs
};

struct SuiteReport {
  std::string suite;
  int n = 1;
  std::string mode = "float";  // "rational" or "float"
  std::uint64_t seed = 0;
  long long elapsed_ms = 0;
  std::vector<CheckResult> checks;

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  int failures() const {
    int k = 0;
    for (const auto& c : checks)
      if (!c.pass) ++k;
    return k;
  }
};

std::uint64_t fnv1a(const std::string& data);

// Build a check with its digest filled in from lhs/rhs.
CheckResult make_check(std::string name, std::string anchor, std::string lhs,
                       std::string rhs, double residual, double tol);

std::string to_json(const SuiteReport& report, int indent = 2);
std::string to_json(const std::vector<SuiteReport>& reports, int indent = 2);
void write_report_file(const std::string& path, const std::vector<SuiteReport>& reports);

}  // namespace qma
