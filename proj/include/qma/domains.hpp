// Integration domains: axis-aligned boxes with exact monomial integrals and
// gauge balls with closed-form polynomial integrals.  A gauge ball integral
// reduces, after composing with the left translation by the center, to
// radial, angular, and round-sphere factors:
//   x = rho sqrt(sin th) w,  t = rho^2 cos th,
//   dV = rho^{4n+1} sin^{2n-1} th  drho dth dS(w),
// so every monomial x^A t^k integrates to an explicit product of a rational
// sphere moment, a sin/cos Beta integral, and a power of the radius.
#pragma once

#include <functional>

#include "qma/heisenberg.hpp"
#include "qma/quadrature.hpp"
#include "qma/rng.hpp"

namespace qma {

struct Box {
  std::vector<double> lo, hi;

  Box(std::vector<double> l, std::vector<double> h) : lo(std::move(l)), hi(std::move(h)) {
    if (lo.size() != hi.size() || lo.empty())
      throw std::invalid_argument("box bounds mismatch");
    for (std::size_t i = 0; i < lo.size(); ++i)
      if (!(lo[i] < hi[i])) throw std::invalid_argument("empty box side");
  }
  int dim() const { return static_cast<int>(lo.size()); }
  double volume() const {
    double v = 1.0;
    for (std::size_t i = 0; i < lo.size(); ++i) v *= hi[i] - lo[i];
    return v;
  }
};

inline Box centered_box(int dim, double half_side) {
  return Box(std::vector<double>(dim, -half_side), std::vector<double>(dim, half_side));
}

// Exact integral of a polynomial over a box: each monomial factors through
// (hi^{e+1} - lo^{e+1}) / (e+1) per coordinate.
inline double integrate_poly_box(const Polynomial<double>& p, const Box& box) {
  if (p.nvars() != box.dim()) throw std::invalid_argument("dimension mismatch");
  double total = 0.0;
  for (const auto& [e, c] : p.terms()) {
    if (std::fabs(c.im) > 0.0)
      throw std::invalid_argument("box integral requires real coefficients");
    double term = c.re;
    for (int i = 0; i < box.dim(); ++i) {
      const int k = e[i] + 1;
      term *= (std::pow(box.hi[i], k) - std::pow(box.lo[i], k)) / k;
    }
    total += term;
  }
  return total;
}

// Midpoint sum of an arbitrary integrand over a box (generic fallback).
inline double box_midpoint_sum(const Box& box,
                               const std::function<double(const std::vector<double>&)>& f,
                               int cells_per_dim) {
  if (cells_per_dim < 1) throw std::invalid_argument("grid too coarse");
  const int d = box.dim();
  std::vector<double> h(d);
  for (int i = 0; i < d; ++i) h[i] = (box.hi[i] - box.lo[i]) / cells_per_dim;
  std::vector<int> idx(d, 0);
  std::vector<double> z(d);
  double acc = 0.0;
  while (true) {
    for (int i = 0; i < d; ++i) z[i] = box.lo[i] + (idx[i] + 0.5) * h[i];
    acc += f(z);
    int i = 0;
    for (; i < d; ++i) {
      if (++idx[i] < cells_per_dim) break;
      idx[i] = 0;
    }
    if (i == d) break;
  }
  double cell = 1.0;
  for (int i = 0; i < d; ++i) cell *= h[i];
  return acc * cell;
}

struct GaugeBall {
  GroupPoint<double> center;
  double radius = 1.0;

  GaugeBall(GroupPoint<double> c, double r) : center(std::move(c)), radius(r) {
    if (!(r > 0.0)) throw std::invalid_argument("radius must be positive");
  }
};

inline GaugeBall unit_gauge_ball(int n) {
  GroupPoint<double> origin;
  origin.x.assign(4 * n, 0.0);
  origin.t = 0.0;
  return GaugeBall(origin, 1.0);
}

inline bool contains(const GaugeBall& ball, const GroupPoint<double>& p) {
  const GroupPoint<double> rel = group_mul(group_inverse(ball.center), p);
  return gauge4(rel) <= std::pow(ball.radius, 4);
}

// Closed-form integral of a polynomial over a gauge ball.
inline double integrate_poly_gauge_ball(const Polynomial<double>& u, const GaugeBall& ball) {
  const int nv = u.nvars();
  if (nv < 5 || nv % 4 != 1) throw std::invalid_argument("not a group polynomial");
  const int n = (nv - 1) / 4;
  if (static_cast<int>(ball.center.x.size()) != 4 * n)
    throw std::invalid_argument("ball lives in a different group");
  // Shift so the ball is centered: integrate u(center * z) dz.
  const Polynomial<double> shifted = left_translate(u, ball.center);
  const double area = sphere_area(4 * n);
  double total = 0.0;
  for (const auto& [e, c] : shifted.terms()) {
    if (std::fabs(c.im) > 1e-12 * (1.0 + shifted.coeff_sup()))
      throw std::invalid_argument("gauge ball integral requires real coefficients");
    if (c.re == 0.0) continue;
    std::vector<int> alpha(e.begin(), e.end() - 1);
    const int k = e.back();
    int abs_alpha = 0;
    bool odd = false;
    for (int a : alpha) {
      abs_alpha += a;
      if (a % 2 == 1) odd = true;
    }
    if (odd) continue;  // odd in some x coordinate: sphere moment vanishes
    const double mom = ScalarTraits<Rational>::to_double(sphere_moment(4 * n, alpha));
    const double ang = sin_cos_integral(2 * n - 1 + abs_alpha / 2, k);
    if (ang == 0.0) continue;  // odd in t
    const int rpow = 4 * n + 2 + abs_alpha + 2 * k;
    const double rad = std::pow(ball.radius, rpow) / rpow;
    total += c.re * mom * area * ang * rad;
  }
  return total;
}

// A point of the boundary sphere { gauge(z) = radius } translated by the
// center: z = (r sqrt(sin th) w, r^2 cos th) for w on the round sphere.
inline GroupPoint<double> gauge_sphere_point(const GaugeBall& ball, int n, double theta,
                                             const std::vector<double>& w) {
  if (static_cast<int>(w.size()) != 4 * n)
    throw std::invalid_argument("direction dimension mismatch");
  GroupPoint<double> z;
  z.x.resize(4 * n);
  const double r = ball.radius;
  const double s = std::sqrt(std::max(0.0, std::sin(theta)));
  for (int i = 0; i < 4 * n; ++i) z.x[i] = r * s * w[i];
  z.t = r * r * std::cos(theta);
  return group_mul(ball.center, z);
}

inline GroupPoint<double> random_boundary_point(Rng& rng, const GaugeBall& ball, int n) {
  std::vector<double> w(4 * n);
  double norm = 0.0;
  while (norm < 1e-6) {
    norm = 0.0;
    for (auto& wi : w) {
      wi = 2.0 * rng.unit() - 1.0;
      norm += wi * wi;
    }
    norm = std::sqrt(norm);
  }
  for (auto& wi : w) wi /= norm;
  return gauge_sphere_point(ball, n, rng.unit() * M_PI, w);
}

inline GroupPoint<double> random_interior_point(Rng& rng, const GaugeBall& ball, int n) {
  // Star-shaped under dilations around the center: pull a boundary point in.
  const GroupPoint<double> bd = random_boundary_point(rng, ball, n);
  const GroupPoint<double> rel = group_mul(group_inverse(ball.center), bd);
  const double rho = 0.05 + 0.9 * rng.unit();
  return group_mul(ball.center, dilate(rho, rel));
}

}  // namespace qma
