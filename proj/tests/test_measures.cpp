// Integration domains, density masses, comparison and minimum principles,
// superadditivity, the Stokes-type residual, mass/sup bounds, and density
// convergence along quadratic regularizations.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "qma/measures.hpp"

using namespace qma;

namespace {

// A certified plurisubharmonic quadratic: the standard one plus a linear tilt.
Polynomial<double> psh_quadratic(Rng& rng, int n, double scale = 1.0) {
  Polynomial<double> u = squared_horizontal_norm<double>(n).scaled(Complex<double>(scale));
  const int nv = 4 * n + 1;
  for (int v = 0; v < nv; ++v)
    u += Polynomial<double>::variable(nv, v).scaled(Complex<double>(rng.unit() - 0.5));
  return u;
}

}  // namespace

TEST_CASE("box integrals are exact for monomials") {
  const auto box = centered_box(5, 1.0);
  Polynomial<double> u(5);
  Expo e(5, 0);
  e[0] = 2;
  u.add_term(e, Complex<double>(1.0));
  CHECK(integrate_poly_box(u, box) == doctest::Approx(2.0 / 3.0 * 16.0).epsilon(1e-14));
  // odd powers integrate to zero on a symmetric box
  Expo o(5, 0);
  o[1] = 3;
  Polynomial<double> v(5);
  v.add_term(o, Complex<double>(4.0));
  CHECK(std::fabs(integrate_poly_box(v, box)) <= 1e-14);
}

TEST_CASE("gauge ball integrals against a midpoint indicator sum") {
  const int n = 1;
  const auto ball = unit_gauge_ball(n);
  Polynomial<double> u(5);
  Expo e(5, 0);
  e[0] = 2;
  u.add_term(e, Complex<double>(1.0));
  Expo c(5, 0);
  Polynomial<double> one(5);
  one.add_term(c, Complex<double>(1.0));
  const CompiledRealPoly cu(u, 1e-12);
  for (const auto* p : {&one, &u}) {
    const double closed = integrate_poly_gauge_ball(*p, ball);
    const CompiledRealPoly cp(*p, 1e-12);
    const double grid = box_midpoint_sum(
        centered_box(5, 1.0),
        [&](const std::vector<double>& z) {
          GroupPoint<double> g;
          g.x.assign(z.begin(), z.end() - 1);
          g.t = z.back();
          return gauge4(g) <= 1.0 ? cp.eval(z) : 0.0;
        },
        14);
    CHECK(std::fabs(grid - closed) <= 0.05 * std::fabs(closed));
  }
}

TEST_CASE("boundary sphere points and membership") {
  const int n = 1;
  Rng rng(73);
  const GaugeBall ball(rng.group_point<double>(n), 1.5);
  for (int s = 0; s < 20; ++s) {
    const auto bd = random_boundary_point(rng, ball, n);
    const auto rel = group_mul(group_inverse(ball.center), bd);
    CHECK(std::fabs(gauge4(rel) - std::pow(ball.radius, 4)) <= 1e-10);
    CHECK(contains(ball, random_interior_point(rng, ball, n)));
  }
  GroupPoint<double> far;
  far.x.assign(4 * n, 10.0);
  far.t = 0.0;
  CHECK(!contains(ball, far));
}

TEST_CASE("density masses of model potentials") {
  const int n = 1;
  // density of |x|^2 is the constant 8 (n = 1), so the box mass is 8 * 2^5
  const auto u = squared_horizontal_norm<double>(n);
  CHECK(density_integral_box(u, centered_box(5, 1.0)) == doctest::Approx(256.0).epsilon(1e-12));
  // affine potentials carry no density
  Polynomial<double> lin(5);
  for (int v = 0; v < 5; ++v)
    lin += Polynomial<double>::variable(5, v).scaled(Complex<double>(0.3 * (v + 1)));
  CHECK(std::fabs(density_integral_ball(lin, unit_gauge_ball(n))) <= 1e-14);
}

TEST_CASE("pointwise and integral superadditivity") {
  Rng rng(79);
  const int n = 2;
  for (int trial = 0; trial < 10; ++trial) {
    // psd inputs via congruence squares
    const auto c1 = rng.hyperhermitian<double>(n);
    const auto c2 = rng.hyperhermitian<double>(n);
    const auto a = c1 * c1.adjoint();
    const auto b = c2 * c2.adjoint();
    const double scale = 1.0 + std::pow(max_abs(a) + max_abs(b), n);
    CHECK(superadditivity_defect(a, b) >= -1e-9 * scale);
  }
  const auto ball = unit_gauge_ball(1);
  for (int trial = 0; trial < 3; ++trial) {
    const auto u = psh_quadratic(rng, 1);
    const auto v = psh_quadratic(rng, 1, 2.0);
    const double defect = integral_superadditivity_defect(u, v, ball);
    CHECK(defect >= -1e-8 * (1.0 + std::fabs(defect)));
  }
}

TEST_CASE("comparison of density masses under the ordering hypothesis") {
  const int n = 1;
  const auto ball = unit_gauge_ball(n);
  const auto v = gauge_potential(ball, n);  // zero on the sphere, negative inside
  Rng rng(83);
  for (double eps : {0.1, 0.4}) {
    const auto u = v.scaled(Complex<double>(1.0 - eps));
    const auto rep = comparison_check(u, v, ball, rng);
    CHECK(rep.pass);
    CHECK(rep.mass_u == doctest::Approx((1.0 - eps) * rep.mass_v).epsilon(1e-10));
    CHECK(rep.mass_v > 0.0);
  }
  // swapped roles violate the interior ordering and must be rejected
  const auto u = v.scaled(Complex<double>(0.5));
  CHECK_THROWS_AS(comparison_check(v, u, ball, rng), std::runtime_error);
  // scaling up instead keeps the hypothesis (v <= 0 inside)
  const auto rep = comparison_check(v, v.scaled(Complex<double>(1.25)), ball, rng);
  CHECK(rep.pass);
}

TEST_CASE("minimum principle for ordered densities") {
  const int n = 1;
  const auto ball = unit_gauge_ball(n);
  const auto v = gauge_potential(ball, n);
  Rng rng(89);
  // equal densities: u = v + constant
  const auto u1 = v + Polynomial<double>::constant(5, Complex<double>(1.0));
  CHECK(min_principle_check(u1, v, ball, rng).pass);
  // strictly smaller density: u = a v with a in (0, 1)
  const auto u2 = v.scaled(Complex<double>(0.5));
  const auto rep = min_principle_check(u2, v, ball, rng);
  CHECK(rep.pass);
  CHECK(rep.boundary_min <= rep.closure_min + 1e-7);
}

TEST_CASE("integration by parts against boundary cutoffs") {
  const int n = 1;
  const auto ball = unit_gauge_ball(n);
  Rng rng(97);
  const auto g = psh_quadratic(rng, n);
  const auto h = boundary_cutoff(ball, n, g);
  PolyForm<double> t(n, 2 * n - 1);
  t.add_term(MultiIndex{0}, psh_quadratic(rng, n, 0.5));
  t.add_term(MultiIndex{1}, Polynomial<double>::variable(5, 2));
  for (int alpha = 0; alpha < 2; ++alpha)
    CHECK(std::fabs(stokes_residual(h, t, alpha, ball)) <= 1e-9);
}

TEST_CASE("mass to sup-norm ratios are scale invariant") {
  const int n = 1;
  Rng rng(101);
  const auto u = psh_quadratic(rng, n);
  const auto inner = unit_gauge_ball(n);
  const GaugeBall outer(inner.center, 2.0);
  const auto rep = cln_check({u}, inner, outer, rng);
  CHECK(rep.mass > 0.0);
  CHECK(rep.bound > 0.0);
  CHECK(rep.family_spread <= 1e-10);
  // misuse gates
  CHECK_THROWS_AS(cln_check({}, inner, outer, rng), std::invalid_argument);
  CHECK_THROWS_AS(cln_check({u, u}, inner, outer, rng), std::invalid_argument);
  CHECK_THROWS_AS(cln_check({u}, outer, inner, rng), std::invalid_argument);
}

TEST_CASE("polynomial extrapolation is exact on polynomial data") {
  std::vector<double> xs{1.0, 2.0, 3.0, 4.0};
  std::vector<double> ys;
  for (double x : xs) ys.push_back(x * x * x - 2.0 * x + 1.0);
  CHECK(neville_at(xs, ys, 0.0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS_AS(neville_at({}, {}, 0.0), std::invalid_argument);
}

TEST_CASE("density convergence along quadratic regularizations") {
  const int n = 1;
  const auto ball = unit_gauge_ball(n);
  Rng rng(103);
  const auto u = psh_quadratic(rng, n);
  const auto rep = ma_convergence_check(u, ball);
  CHECK(rep.cauchy);
  const double scale = 1.0 + std::fabs(rep.direct);
  CHECK(rep.limit_gap <= 1e-6 * scale);
  CHECK(std::fabs(rep.limit1 - rep.direct) <= 1e-6 * scale);

  // closed form for the standard quadratic: mass(1/j) = (8 + 8/j) * wmass
  const auto quad = squared_horizontal_norm<double>(n);
  const auto rep2 = ma_convergence_check(quad, ball);
  const double wmass =
      integrate_poly_gauge_ball(-gauge_potential(ball, n), ball);
  for (std::size_t i = 0; i < rep2.seq1.size(); ++i) {
    const double expect = (8.0 + 8.0 / static_cast<double>(i + 1)) * wmass;
    CHECK(rep2.seq1[i] == doctest::Approx(expect).epsilon(1e-10));
  }
  CHECK(rep2.direct == doctest::Approx(8.0 * wmass).epsilon(1e-10));
}

TEST_CASE("refinement tables contract on smooth integrands") {
  const auto table = refine(
      [](int cells) {
        double acc = 0.0;
        const double h = 1.0 / cells;
        for (int i = 0; i < cells; ++i) acc += std::sin((i + 0.5) * h);
        return acc * h;
      },
      8, 3);
  const double d1 = std::fabs(table.values[1] - table.values[0]);
  const double d2 = std::fabs(table.values[2] - table.values[1]);
  CHECK(d2 <= d1 / 2.0);
  CHECK(std::fabs(table.richardson() - (1.0 - std::cos(1.0))) <= 1e-8);
}
