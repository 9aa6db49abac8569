// Verification suites: each runs a family of property checks at a given
// block count n, in exact (rational) or floating-point mode, from a seeded
// generator, and returns a machine-readable report.  The same entry points
// back the command-line tool and the acceptance harness.
#pragma once

#include "qma/polynomial.hpp"
#include "qma/report.hpp"
#include "qma/rng.hpp"

namespace qma {

struct RunConfig {
  int n = 1;
  std::string mode = "rational";  // "rational" | "float"
  std::uint64_t seed = 20260819;
  double tol = 1e-9;  // base tolerance for float residuals
  int samples = 0;    // 0 = per-check defaults
};

SuiteReport run_identities_suite(const RunConfig& cfg);
SuiteReport run_brackets_suite(const RunConfig& cfg);
SuiteReport run_hessian_suite(const RunConfig& cfg);
SuiteReport run_positivity_suite(const RunConfig& cfg);
SuiteReport run_lines_suite(const RunConfig& cfg);
SuiteReport run_measures_suite(const RunConfig& cfg);

// Names accepted by run_suites, in canonical order.
const std::vector<std::string>& suite_names();

// which = one suite name or "all".
std::vector<SuiteReport> run_suites(const std::string& which, const RunConfig& cfg);

// ---- shared random families --------------------------------------------------

// Random real polynomial in the 4n+1 group coordinates with rational
// coefficients (exact, and convertible to double without loss).
Polynomial<Rational> random_real_poly(Rng& rng, int n, int max_degree, int terms);

// A quadratic with nonnegative horizontal Hessian by construction:
//   sum_i c_i (v_i . x)^2 + mu |x|^2 + linear + alpha t,  c_i, mu >= 0.
Polynomial<double> random_psh_quadratic(Rng& rng, int n);

// Exact-coefficient variant of the same construction.
Polynomial<Rational> random_psh_quadratic_exact(Rng& rng, int n);

double relative_residual(double lhs, double rhs);

}  // namespace qma
