// Quaternionic lines: frames, the induced group law, embeddings and
// pullbacks, the intrinsic sub-Laplacian, its fundamental solution, kernel
// means, and the sampled/mollified regularization helpers.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "qma/fundamental.hpp"
#include "qma/hessian.hpp"
#include "qma/mean_value.hpp"
#include "qma/mollify.hpp"
#include "qma/rng.hpp"

using namespace qma;

namespace {

using QR = Quaternion<Rational>;

LineFrame<Rational> exact_frame() {
  return make_line_frame(std::vector<QR>{QR(Rational(1), Rational(1, 2), Rational(-1, 3), Rational(2)),
                                         QR(Rational(0), Rational(1), Rational(1), Rational(-1, 2))});
}

GroupPoint<Rational> zero_eta(int n) {
  GroupPoint<Rational> e;
  e.x.assign(4 * n, Rational(0));
  e.t = Rational(0);
  return e;
}

LinePoint<Rational> lp(Rational a, Rational b, Rational c, Rational d, Rational t) {
  LinePoint<Rational> p;
  p.lam = {a, b, c, d};
  p.t = t;
  return p;
}

}  // namespace

TEST_CASE("frame invariants are exact") {
  const auto f = exact_frame();
  CHECK(f.n == 2);
  CHECK(!f.is_degenerate());
  CHECK(f.mu.re == Rational(0));
  CHECK(frame_invariant_defect(f) == 0.0);
  // Lambda^2 equals |mu|^2 by definition and is positive
  CHECK(f.lambda_sq == f.mu.norm_sq());
  CHECK(f.lambda_sq > Rational(0));
  CHECK_THROWS_AS(make_line_frame(std::vector<QR>{}), std::invalid_argument);
}

TEST_CASE("opposite blocks produce a degenerate line") {
  // conj(1) I 1 + conj(J) I J = I - I = 0
  const auto f = make_line_frame(std::vector<QR>{
      QR(Rational(1), Rational(0), Rational(0), Rational(0)),
      QR(Rational(0), Rational(0), Rational(1), Rational(0))});
  CHECK(f.is_degenerate());
  CHECK(frame_invariant_defect(f) == 0.0);
}

TEST_CASE("the induced line group law") {
  const auto f = exact_frame();
  const auto p = lp(Rational(1), Rational(-1, 2), Rational(2), Rational(0), Rational(1, 3));
  const auto q = lp(Rational(0), Rational(1), Rational(-1), Rational(1, 2), Rational(-2));
  const auto r = lp(Rational(1, 2), Rational(1, 3), Rational(0), Rational(-1), Rational(1));
  // associativity
  const auto a1 = line_mul(f, line_mul(f, p, q), r);
  const auto a2 = line_mul(f, p, line_mul(f, q, r));
  for (int i = 0; i < 4; ++i) CHECK(a1.lam[i] == a2.lam[i]);
  CHECK(a1.t == a2.t);
  // inverses
  const auto e = line_mul(f, p, line_inverse(p));
  for (int i = 0; i < 4; ++i) CHECK(e.lam[i] == Rational(0));
  CHECK(e.t == Rational(0));
  // gauge homogeneity under line dilations
  const Rational s(3, 2);
  CHECK(line_gauge4(f, line_dilate(s, p)) == s * s * s * s * line_gauge4(f, p));
}

TEST_CASE("the embedding is a homomorphism onto a subgroup") {
  const auto f = exact_frame();
  const int n = f.n;
  const auto p = lp(Rational(1), Rational(0), Rational(-1, 2), Rational(1), Rational(2));
  const auto q = lp(Rational(-1), Rational(1, 3), Rational(1), Rational(0), Rational(-1, 2));
  GroupPoint<Rational> eta;
  eta.x = {Rational(1), Rational(-1), Rational(1, 2), Rational(0),
           Rational(2), Rational(1), Rational(0),     Rational(-1, 3)};
  eta.t = Rational(1);
  const auto lhs = line_embed(f, eta, line_mul(f, p, q));
  const auto rhs = group_mul(line_embed(f, eta, p), line_embed(f, zero_eta(n), q));
  for (int i = 0; i < 4 * n; ++i) CHECK(lhs.x[i] == rhs.x[i]);
  CHECK(lhs.t == rhs.t);
}

TEST_CASE("pullbacks evaluate through the embedding") {
  const auto f = exact_frame();
  const int n = f.n;
  Rng rng(53);
  const auto u = rng.poly<Rational>(n, 3, 5, false);
  const auto eta = rng.group_point<Rational>(n);
  const auto pulled = pullback_to_line(u, f, eta);
  const auto p = lp(Rational(1, 2), Rational(-1), Rational(1, 3), Rational(1), Rational(-1, 2));
  const std::vector<Rational> line_coords{p.lam[0], p.lam[1], p.lam[2], p.lam[3], p.t};
  const auto ambient = line_embed(f, eta, p);
  std::vector<Rational> amb_coords = ambient.x;
  amb_coords.push_back(ambient.t);
  CHECK(pulled.eval(line_coords) == u.eval(amb_coords));
}

TEST_CASE("the sandwich identity for the standard quadratic") {
  const auto f = exact_frame();
  const int n = f.n;
  Rng rng(59);
  const auto eta = rng.group_point<Rational>(n);
  // SubLap~(u o iota) = iota^*(sum qbar_l H_lm q_m); for |x|^2 the Hessian is
  // 8 Id, so the result is the constant 8 sum |q_l|^2.
  const auto pulled = pullback_to_line(squared_horizontal_norm<Rational>(n), f, eta);
  Rational expect(0);
  for (const auto& ql : f.q) expect += ql.norm_sq();
  expect *= 8;
  CHECK(line_sublaplacian(f, pulled) ==
        Polynomial<Rational>::constant(5, Complex<Rational>(expect)));
  // the vertical coordinate has zero Hessian, so its pullback is harmonic
  const auto tpull = pullback_to_line(PolyQ::variable(4 * n + 1, 4 * n), f, eta);
  CHECK(line_sublaplacian(f, tpull).is_zero());
}

TEST_CASE("fundamental solution certificates are exact per frame") {
  const auto f = exact_frame();
  CHECK(fundamental_residual_numerator(f).is_zero());
  const auto [lhs, rhs] = regularized_identity_sides(f);
  CHECK(same_function(lhs, rhs));
}

TEST_CASE("normalizing constant against the closed form") {
  for (double lambda : {0.5, 1.0, 3.0}) {
    const auto table = fs_constant_table(lambda);
    const double c = table.richardson();
    const double closed = fs_constant_closed_form(lambda);
    CHECK(std::fabs(c - closed) <= 1e-3 * closed);
    CHECK(table.last_diff() <= 1e-3 * std::fabs(table.value()));
  }
  // scaling: C is linear in Lambda
  CHECK(std::fabs(fs_constant(2.0) - 2.0 * fs_constant(1.0)) <= 1e-3 * fs_constant(2.0));
}

TEST_CASE("fundamental solution values and residuals") {
  const auto f = make_line_frame(std::vector<QuatD>{QuatD(1, 0, 0, 0), QuatD(0, 1, 0.5, 0)});
  const auto lap = fundamental_shape_laplacian(f);
  Rng rng(61);
  for (int s = 0; s < 10; ++s) {
    LinePoint<double> p;
    double norm = 0.0;
    for (auto& a : p.lam) {
      a = 2.0 * rng.unit() - 1.0;
      norm += a * a;
    }
    p.t = 2.0 * rng.unit() - 1.0;
    if (norm + p.t * p.t < 0.1) p.t += 1.0;
    CHECK(fs_residual_at(lap, p) <= 1e-9);
    const double g4 = line_gauge4(f, p);
    CHECK(std::fabs(fundamental_solution_at(f, p) + fs_constant(f) / g4) <= 1e-12);
    // the comparison kernel density is dilation invariant
    CHECK(std::fabs(line_kernel_density(f, line_dilate(2.0, p)) -
                    line_kernel_density(f, p)) <= 1e-12);
  }
}

TEST_CASE("sphere averages of line polynomials") {
  // lambda_1^2 -> y / 4, odd monomials drop, lambda_1^2 lambda_2^2 -> y^2 / 24
  Polynomial<Rational> u(5);
  Expo e(5, 0);
  e[0] = 2;
  u.add_term(e, Complex<Rational>(Rational(1)));
  Expo odd(5, 0);
  odd[1] = 1;
  odd[4] = 2;
  u.add_term(odd, Complex<Rational>(Rational(7)));
  Expo mixed(5, 0);
  mixed[0] = 2;
  mixed[1] = 2;
  u.add_term(mixed, Complex<Rational>(Rational(24)));
  const auto avg = sphere_average_line_poly(u);
  Polynomial<Rational> expect(2);
  Expo y1(2, 0);
  y1[0] = 1;
  expect.add_term(y1, Complex<Rational>(Rational(1, 4)));
  Expo y2(2, 0);
  y2[0] = 2;
  expect.add_term(y2, Complex<Rational>(Rational(1)));
  CHECK(avg == expect);
}

TEST_CASE("line dilation of functions is exact") {
  const auto f = exact_frame();
  const Rational r(2, 3);
  const auto g4 = line_gauge4_poly(f, 5);
  CHECK(line_dilate_function(g4, r) == g4.scaled(Complex<Rational>(r * r * r * r)));
}

TEST_CASE("kernel means normalize constants and respect sub-mean values") {
  const auto f = make_line_frame(std::vector<QuatD>{QuatD(1, 0, 0, 0)});
  const int n = 1;
  GroupPoint<double> eta;
  eta.x.assign(4, 0.0);
  eta.t = 0.0;
  const auto one = Polynomial<double>::constant(5, Complex<double>(1.0));
  const auto m1 = mean_value(one, f, eta, 0.5);
  CHECK(std::fabs(m1.value - 1.0) <= 1e-12);
  CHECK(std::fabs(m1.kernel_mass - line_ball_kernel_mass_closed_form(f.lambda())) <=
        1e-3 * m1.kernel_mass);

  const auto u = squared_horizontal_norm<double>(n);
  for (double r : {0.1, 0.5}) {
    const auto mv = mean_value(u, f, eta, r);
    CHECK(mv.base_value == 0.0);
    CHECK(mv.value >= -1e-12);     // sub-mean value at a psh point
    CHECK(mv.value <= r * r);      // the ball has gauge radius r
  }
}

TEST_CASE("mollification reproduces affine functions and commutes") {
  const int n = 1;
  const auto m = make_mollifier(n, 0.5, 5);
  CHECK(m.total > 0.0);
  Rng rng(67);
  // constants are exact by self-normalization
  const auto one = as_real_fn(Polynomial<double>::constant(5, Complex<double>(1.0)));
  GroupPoint<double> xi = rng.group_point<double>(n);
  CHECK(std::fabs(mollify_value(m, one, xi) - 1.0) <= 1e-12);
  // affine functions are reproduced exactly: the grid is symmetric
  Polynomial<double> aff(5);
  for (int v = 0; v < 5; ++v)
    aff += Polynomial<double>::variable(5, v).scaled(Complex<double>(rng.unit() - 0.5));
  const auto affn = as_real_fn(aff);
  std::vector<double> coords = xi.x;
  coords.push_back(xi.t);
  CHECK(std::fabs(mollify_value(m, affn, xi) - aff.eval(coords).re) <= 1e-10);
  // the kernel acts on the left, so right translations commute with it
  const GroupPoint<double> g = rng.group_point<double>(n);
  const auto u = rng.poly<double>(n, 3, 4, true);
  const auto un = as_real_fn(u);
  const auto moved = [&](const GroupPoint<double>& z) { return un(group_mul(z, g)); };
  CHECK(std::fabs(mollify_value(m, moved, xi) - mollify_value(m, un, group_mul(xi, g))) <=
        1e-10 * (1.0 + std::fabs(mollify_value(m, un, group_mul(xi, g)))));
}

TEST_CASE("sampled stencils recover the Hessian of quadratics") {
  const int n = 1;
  Rng rng(71);
  const auto u = squared_horizontal_norm<double>(n);
  const auto un = as_real_fn(u);
  const GroupPoint<double> p = rng.group_point<double>(n);
  const auto h = sampled_hessian(un, n, p);
  CHECK(std::fabs(h(0, 0).re - 8.0) <= 1e-5);
  CHECK(std::fabs(h(0, 0).i) + std::fabs(h(0, 0).j) + std::fabs(h(0, 0).k) <= 1e-5);
  // mollification shifts a quadratic by a constant, so the Hessian survives
  const auto m = make_mollifier(n, 0.25, 5);
  const auto smoothed = mollify(m, un);
  const auto hs = sampled_hessian(smoothed, n, p);
  CHECK(std::fabs(hs(0, 0).re - 8.0) <= 1e-4);
}
