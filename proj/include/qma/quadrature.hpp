// Numeric integration utilities: exact sphere moments (rational), the
// sin/cos Beta integrals behind polar reductions, and plain refinement
// tables for midpoint-rule families with optional second-order Richardson
// extrapolation.
#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <vector>

#include "qma/scalars.hpp"

namespace qma {

// E[w_1^{a_1} ... w_d^{a_d}] on the round unit sphere S^{d-1}: zero if any
// exponent is odd, else  prod_i (a_i - 1)!! / (d (d+2) ... (d + 2B - 2))
// with B = sum a_i / 2.  Exact rational.
inline Rational sphere_moment(int d, const std::vector<int>& exps) {
  if (static_cast<int>(exps.size()) > d)
    throw std::invalid_argument("more exponents than coordinates");
  long long big_b = 0;
  Rational num = 1;
  for (int a : exps) {
    if (a < 0) throw std::invalid_argument("negative exponent");
    if (a % 2 == 1) return Rational(0);
    big_b += a / 2;
    for (int f = a - 1; f >= 1; f -= 2) num *= f;  // (a-1)!!
  }
  Rational den = 1;
  for (long long s = 0; s < big_b; ++s) den *= Rational(d + 2 * s);
  return num / den;
}

// Surface measure of S^{d-1}: 2 pi^{d/2} / Gamma(d/2).
inline double sphere_area(int d) {
  return 2.0 * std::pow(M_PI, d / 2.0) / std::tgamma(d / 2.0);
}

// int_0^pi sin^p cos^q dtheta: zero for odd q, else
// Gamma((p+1)/2) Gamma((q+1)/2) / Gamma((p+q)/2 + 1).
inline double sin_cos_integral(int p, int q) {
  if (p < 0 || q < 0) throw std::invalid_argument("negative power");
  if (q % 2 == 1) return 0.0;
  return std::tgamma((p + 1) / 2.0) * std::tgamma((q + 1) / 2.0) /
         std::tgamma((p + q) / 2.0 + 1.0);
}

// Values of one quadrature functional on a doubling family of grids.
struct RefinementTable {
  std::vector<int> levels;
  std::vector<double> values;

  double value() const {
    if (values.empty()) throw std::runtime_error("empty refinement table");
    return values.back();
  }
  double last_diff() const {
    if (values.size() < 2) return std::numeric_limits<double>::infinity();
    return std::abs(values.back() - values[values.size() - 2]);
  }
  // Second-order Richardson extrapolation of the last two grids.
  double richardson() const {
    if (values.size() < 2) return value();
    const double a = values[values.size() - 2], b = values.back();
    return b + (b - a) / 3.0;
  }
};

// Evaluate `functional(cells)` on a doubling sequence of grid parameters.
inline RefinementTable refine(const std::function<double(int)>& functional,
                              int base_cells, int levels) {
  if (levels < 1) throw std::invalid_argument("need at least one level");
  RefinementTable t;
  int cells = base_cells;
  for (int l = 0; l < levels; ++l, cells *= 2) {
    t.levels.push_back(cells);
    t.values.push_back(functional(cells));
  }
  return t;
}

}  // namespace qma
