// The left-invariant fields, their bracket table, the two exterior
// differentials, and the identities that make the operator calculus work.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "qma/calculus.hpp"
#include "qma/hessian.hpp"
#include "qma/real_forms.hpp"
#include "qma/rng.hpp"

using namespace qma;

namespace {

Complex<Rational> cq(long long v) { return Complex<Rational>(Rational(v)); }

PolyQ coord(int nv, int i) { return PolyQ::variable(nv, i); }

}  // namespace

TEST_CASE("horizontal fields and their brackets") {
  const int n = 1, nv = 5;
  const PolyQ u = coord(nv, 0) * coord(nv, 1) + coord(nv, 4);  // x1 x2 + t
  // X1 = d/dx1 - 2 x2 d/dt, X2 = d/dx2 + 2 x1 d/dt
  CHECK((apply_x_field(u, 1) - (coord(nv, 1) - coord(nv, 1).scaled(cq(2)))).is_zero());
  CHECK((apply_x_field(u, 2) - (coord(nv, 0) + coord(nv, 0).scaled(cq(2)))).is_zero());
  // [X1, X2] = 4 d/dt on every quadratic
  Rng rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const PolyQ f = rng.poly<Rational>(n, 3, 4, false);
    const PolyQ lhs = apply_x_field(apply_x_field(f, 2), 1) -
                      apply_x_field(apply_x_field(f, 1), 2);
    CHECK((lhs - apply_t_field(f).scaled(cq(4))).is_zero());
    // non-partner pairs commute
    const PolyQ mixed = apply_x_field(apply_x_field(f, 3), 1) -
                        apply_x_field(apply_x_field(f, 1), 3);
    CHECK(mixed.is_zero());
  }
}

TEST_CASE("complexified fields satisfy the doubled bracket table") {
  const int n = 2;
  Rng rng(5);
  const Complex<Rational> i8 = Complex<Rational>::i() * cq(8);
  for (int trial = 0; trial < 5; ++trial) {
    const PolyQ f = rng.poly<Rational>(n, 3, 4, false);
    // [W_j, Wbar_j] = 8 i dt
    for (int j = 1; j <= 2 * n; ++j) {
      const PolyQ lhs = apply_w_field(apply_wbar_field(f, j), j) -
                        apply_wbar_field(apply_w_field(f, j), j);
      CHECK((lhs - apply_t_field(f).scaled(i8)).is_zero());
    }
    // [Z_{0,0}, Z_{n,1}] = -8 i dt; same-column fields commute
    const PolyQ cross = apply_z_field(apply_z_field(f, n, 1), 0, 0) -
                        apply_z_field(apply_z_field(f, 0, 0), n, 1);
    CHECK((cross + apply_t_field(f).scaled(i8)).is_zero());
    const PolyQ same = apply_z_field(apply_z_field(f, 1, 0), 0, 0) -
                       apply_z_field(apply_z_field(f, 0, 0), 1, 0);
    CHECK(same.is_zero());
  }
}

TEST_CASE("fields are left invariant") {
  const int n = 2;
  Rng rng(7);
  const auto g = rng.group_point<Rational>(n);
  const PolyQ u = rng.poly<Rational>(n, 3, 4, false);
  for (int a = 1; a <= 4 * n; ++a) {
    const PolyQ lhs = left_translate(apply_x_field(u, a), g);
    const PolyQ rhs = apply_x_field(left_translate(u, g), a);
    CHECK((lhs - rhs).is_zero());
  }
}

TEST_CASE("group law sanity") {
  const int n = 1;
  Rng rng(9);
  const auto a = rng.group_point<Rational>(n);
  const auto b = rng.group_point<Rational>(n);
  const auto c = rng.group_point<Rational>(n);
  const auto ab_c = group_mul(group_mul(a, b), c);
  const auto a_bc = group_mul(a, group_mul(b, c));
  CHECK(ab_c.x == a_bc.x);
  CHECK(ab_c.t == a_bc.t);
  const auto e = group_mul(a, group_inverse(a));
  for (const auto& xi : e.x) CHECK(xi == Rational(0));
  CHECK(e.t == Rational(0));
  // gauge is homogeneous of degree 4 under dilations
  const Rational r(3, 2);
  CHECK(gauge4(dilate(r, a)) == r * r * r * r * gauge4(a));
  // translations compose contravariantly: (u o L_b) o L_a = u o L_{ba}
  const PolyQ u = rng.poly<Rational>(n, 3, 3, false);
  CHECK((left_translate(left_translate(u, b), a) - left_translate(u, group_mul(b, a)))
            .is_zero());
}

TEST_CASE("differentials square to zero and anticommute") {
  Rng rng(11);
  for (int n = 1; n <= 2; ++n) {
    for (int trial = 0; trial < 10; ++trial) {
      const PolyQ u = rng.poly<Rational>(n, 3, 4, false);
      CHECK(d_alpha(d_alpha(u, 0), 0).is_zero());
      CHECK(d_alpha(d_alpha(u, 1), 1).is_zero());
      CHECK((d_alpha(d_alpha(u, 1), 0) + d_alpha(d_alpha(u, 0), 1)).is_zero());
    }
  }
}

TEST_CASE("graded Leibniz rule") {
  const int n = 2;
  Rng rng(13);
  PolyForm<Rational> a(n, 1), b(n, 2);
  a.add_term(MultiIndex{1}, rng.poly<Rational>(n, 2, 2, false));
  a.add_term(MultiIndex{2}, rng.poly<Rational>(n, 2, 2, false));
  b.add_term(MultiIndex{0, 3}, rng.poly<Rational>(n, 2, 2, false));
  for (int alpha = 0; alpha < 2; ++alpha) {
    const auto lhs = d_alpha(wedge(a, b), alpha);
    const auto rhs = wedge(d_alpha(a, alpha), b) - wedge(a, d_alpha(b, alpha));
    CHECK((lhs - rhs).is_zero());
  }
}

TEST_CASE("chain rule for products of second differentials") {
  const int n = 2;
  Rng rng(17);
  const PolyQ u1 = rng.poly<Rational>(n, 2, 3, false);
  const PolyQ u2 = rng.poly<Rational>(n, 2, 3, false);
  const auto lap2 = second_differential(u2);
  const auto direct = wedge(second_differential(u1), lap2);
  CHECK((direct - d_alpha(wedge(d_alpha(u1, 1), lap2), 0)).is_zero());
  CHECK((direct + d_alpha(wedge(d_alpha(u1, 0), lap2), 1)).is_zero());
  const auto scaled =
      lap2.map_coeffs([&](const PolyQ& c) { return u1 * c; });
  CHECK((direct - d_alpha(d_alpha(scaled, 1), 0)).is_zero());
  // products of second differentials are closed
  CHECK(d_alpha(direct, 0).is_zero());
  CHECK(d_alpha(direct, 1).is_zero());
}

TEST_CASE("second differential of the standard quadratic") {
  for (int n = 1; n <= 2; ++n) {
    const auto q = squared_horizontal_norm<Rational>(n);
    const auto lap = second_differential(q);
    // coefficient 8 on each interleaved pair (l, n+l), nothing else
    int found = 0;
    for (const auto& [idx, coeff] : lap.terms()) {
      REQUIRE(idx.size() == 2);
      CHECK(idx[1] == idx[0] + n);
      const auto c = coeff.terms().begin()->second;
      CHECK(coeff.total_degree() == 0);
      CHECK(c == Complex<Rational>(Rational(8)));
      ++found;
    }
    CHECK(found == n);
    // (Lap |x|^2)^n = 8^n n! (volume normalization)
    const auto vc = wedge_pow(lap, n).volume_coefficient();
    REQUIRE(vc.has_value());
    Rational expect = 1;
    for (int k = 2; k <= n; ++k) expect *= k;
    for (int k = 0; k < n; ++k) expect *= 8;
    CHECK(*vc == PolyQ::constant(vc->nvars(), Complex<Rational>(expect)));
  }
}

TEST_CASE("the entry operator matches the block sub-Laplacian") {
  const int n = 2;
  Rng rng(19);
  for (int trial = 0; trial < 5; ++trial) {
    const PolyQ f = rng.poly<Rational>(n, 3, 4, false);
    for (int l = 0; l < n; ++l) {
      PolyQ rhs(f.nvars());
      for (int j = 1; j <= 4; ++j)
        rhs += apply_x_field(apply_x_field(f, 4 * l + j), 4 * l + j);
      const PolyQ lhs = second_differential_entry(f, l, n + l).scaled(cq(2));
      CHECK((lhs - rhs).is_zero());
    }
  }
}

TEST_CASE("a regular pair has pluriharmonic components") {
  const int nv = 5;  // n = 1
  // f0 = x1 + i x2, f1 = 2 x3: d_1 f0 = d_0 f1 = 2 w^1
  const PolyQ f0 = coord(nv, 0) + coord(nv, 1).scaled(Complex<Rational>::i());
  const PolyQ f1 = coord(nv, 2).scaled(cq(2));
  CHECK(is_regular_pair(f0, f1));
  CHECK(is_pluriharmonic(f0));
  CHECK(is_pluriharmonic(f1));
  CHECK(!is_regular_pair(f0, coord(nv, 3)));
  // t itself is not pluriharmonic-paired: Lap(x1^2) != 0
  CHECK(!is_pluriharmonic(coord(nv, 0) * coord(nv, 0)));
}

TEST_CASE("telescoping decomposition of density differences") {
  const int n = 2;
  Rng rng(23);
  const PolyQ u = rng.poly<Rational>(n, 2, 3, true);
  const PolyQ v = rng.poly<Rational>(n, 2, 3, true);
  CHECK(telescoping_residual(u, v).is_zero());
}

TEST_CASE("evaluating the standard quadratic's second differential") {
  const int n = 2;
  const auto q = squared_horizontal_norm<double>(n);
  GroupPoint<double> p;
  p.x.assign(4 * n, 0.25);
  p.t = -0.5;
  const auto at = eval_form(second_differential(q), p);
  const auto sp = strong_positivity_test(at);
  CHECK(sp.nonneg);
  // the recovered eigenvalues sit at 4 (pairing-normalized halves of 8)
  CHECK(std::fabs(sp.min_eigenvalue - 4.0) <= 1e-9);
}

TEST_CASE("operator guards reject oversized inputs") {
  const PolyQ big = PolyQ::variable(21, 0);  // n = 5
  CHECK_THROWS_AS(d_alpha(big, 0), std::invalid_argument);
  const PolyQ deep = PolyQ::variable(5, 0).pow(17);
  CHECK_THROWS_AS(second_differential(deep), std::invalid_argument);
}
