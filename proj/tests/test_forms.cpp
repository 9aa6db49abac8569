// Exterior algebra over the doubled index alphabet: multi-index signs,
// wedges, the structure involution, strong positivity, elementary strongly
// positive forms, and linear pullbacks.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "qma/real_forms.hpp"
#include "qma/rng.hpp"

using namespace qma;

using FormQ = Form<Complex<Rational>>;
using FormD = Form<Complex<double>>;

namespace {

Complex<Rational> cq(long long a, long long b = 0) {
  return Complex<Rational>(Rational(a), Rational(b));
}

}  // namespace

TEST_CASE("letter sorting tracks the permutation sign") {
  const auto [m, ms] = sort_letters(MultiIndex{2, 0, 1});
  CHECK(ms == 1);  // a 3-cycle: two transpositions
  CHECK(m == MultiIndex{0, 1, 2});
  CHECK(sort_letters(MultiIndex{1, 0}).second == -1);
  CHECK(sort_letters(MultiIndex{1, 1}).second == 0);
}

TEST_CASE("one-forms anticommute") {
  const int n = 2;
  FormQ a(n, 1), b(n, 1);
  a.add_term(MultiIndex{0}, cq(2));
  a.add_term(MultiIndex{3}, cq(0, 1));
  b.add_term(MultiIndex{1}, cq(5));
  b.add_term(MultiIndex{2}, cq(-3, 2));
  const FormQ ab = wedge(a, b);
  const FormQ ba = wedge(b, a);
  CHECK((ab + ba).is_zero());
  CHECK(wedge(a, a).is_zero());
}

TEST_CASE("wedge powers of the standard form count interleaved pairs") {
  for (int n = 1; n <= 3; ++n) {
    const auto beta = standard_positive_two_form<Complex<Rational>>(n);
    const auto top = wedge_pow(beta, n);
    const auto vc = top.volume_coefficient();
    REQUIRE(vc.has_value());
    Rational fact = 1;
    for (int k = 2; k <= n; ++k) fact *= k;
    CHECK(vc->re == fact);
    CHECK(vc->im == Rational(0));
  }
  CHECK_THROWS_AS(wedge_pow(standard_positive_two_form<Complex<Rational>>(2), 0),
                  std::invalid_argument);
}

TEST_CASE("the structure involution fixes real forms") {
  const int n = 2;
  const auto beta = standard_positive_two_form<Complex<Rational>>(n);
  CHECK(is_real_form_exact(beta));
  CHECK(rho_involution(rho_involution(beta)) == beta);
  // a non-real form is moved
  FormQ f(n, 2);
  f.add_term(MultiIndex{0, 1}, cq(0, 1));
  CHECK(!is_real_form_exact(f));
}

TEST_CASE("matrix representation round-trips two-forms") {
  Rng rng(7);
  const int n = 3;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
  for (int r = 0; r < 2 * n; ++r)
    for (int c = r + 1; c < 2 * n; ++c) {
      m(r, c) = std::complex<double>(rng.in(-2, 2), rng.in(-2, 2));
      m(c, r) = -m(r, c);
    }
  const FormD f = two_form_from_matrix(m);
  const Eigen::MatrixXcd back = matrix_of_two_form(f);
  CHECK((back - m).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("strong positivity accepts the standard form and rejects its negative") {
  for (int n = 1; n <= 3; ++n) {
    const auto beta = standard_positive_two_form<Complex<double>>(n);
    const auto pos = strong_positivity_test(beta);
    CHECK(pos.nonneg);
    CHECK(pos.min_eigenvalue >= -1e-12);
    const auto neg = strong_positivity_test(-beta);
    CHECK(!neg.nonneg);
  }
}

TEST_CASE("elementary strongly positive forms pass the positivity test") {
  Rng rng(11);
  const int n = 2;
  for (int trial = 0; trial < 10; ++trial) {
    QuatMatrix<double> row(1, n);
    for (int c = 0; c < n; ++c) row(0, c) = rng.quaternion<double>();
    const FormD f = elementary_strongly_positive(row);
    const auto sp = strong_positivity_test(f);
    CHECK(sp.nonneg);
  }
  // rank-deficient input is rejected
  QuatMatrix<double> zero(1, n);
  CHECK_THROWS_AS(elementary_strongly_positive(zero), std::invalid_argument);
}

TEST_CASE("pullback is functorial and respects wedges") {
  Rng rng(13);
  const int n = 2;
  QuatMatrix<Rational> g(n, n), h(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      g(r, c) = rng.quaternion<Rational>(2, 2);
      h(r, c) = rng.quaternion<Rational>(2, 2);
    }
  FormQ a(n, 1), b(n, 1);
  for (int s = 0; s < 2 * n; ++s) {
    a.add_term(MultiIndex{static_cast<std::uint8_t>(s)}, rng.complex_scalar<Rational>());
    b.add_term(MultiIndex{static_cast<std::uint8_t>(s)}, rng.complex_scalar<Rational>());
  }
  const FormQ ab = wedge(a, b);
  CHECK(pullback(g * h, ab) == pullback(h, pullback(g, ab)));
  CHECK(pullback(g, ab) == wedge(pullback(g, a), pullback(g, b)));
  // identity pullback fixes everything
  QuatMatrix<Rational> id(n, n);
  for (int r = 0; r < n; ++r) id(r, r) = Quaternion<Rational>::one();
  CHECK(pullback(id, ab) == ab);
}

TEST_CASE("volume ordering constants") {
  // the interleaved top form has the recorded sign relative to sorted order
  CHECK(volume_sign(1) == 1);
  CHECK(volume_sign(2) == -1);
  CHECK(volume_sign(3) == -1);
  CHECK(volume_sign(4) == 1);
}
