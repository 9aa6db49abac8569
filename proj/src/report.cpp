#include "qma/report.hpp"

#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace qma {

std::uint64_t fnv1a(const std::string& data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

CheckResult make_check(std::string name, std::string anchor, std::string lhs,
                       std::string rhs, double residual, double tol) {
  CheckResult c;
  c.name = std::move(name);
  c.anchor = std::move(anchor);
  c.lhs = std::move(lhs);
  c.rhs = std::move(rhs);
  c.residual = residual;
  c.tol = tol;
  c.pass = residual <= tol;
  c.digest = fnv1a(c.lhs + "|" + c.rhs);
  return c;
}

namespace {

nlohmann::json check_json(const CheckResult& c) {
  return nlohmann::json{{"name", c.name},         {"anchor", c.anchor},
                        {"lhs", c.lhs},           {"rhs", c.rhs},
                        {"residual", c.residual}, {"tol", c.tol},
                        {"pass", c.pass},         {"digest", c.digest}};
}

nlohmann::json report_json(const SuiteReport& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks) checks.push_back(check_json(c));
  return nlohmann::json{{"suite", r.suite}, {"n", r.n},
                        {"mode", r.mode},   {"seed", r.seed},
                        {"elapsed_ms", r.elapsed_ms}, {"checks", checks}};
}

}  // namespace

std::string to_json(const SuiteReport& report, int indent) {
  return report_json(report).dump(indent);
}

std::string to_json(const std::vector<SuiteReport>& reports, int indent) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : reports) arr.push_back(report_json(r));
  return arr.dump(indent);
}

void write_report_file(const std::string& path, const std::vector<SuiteReport>& reports) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open report file: " + path);
  out << to_json(reports) << "\n";
}

}  // namespace qma
