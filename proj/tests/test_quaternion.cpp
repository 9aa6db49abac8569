// Quaternion arithmetic, the real representation, hyperhermitian matrices,
// Moore determinants (spectral and exact expansion routes), and mixed
// discriminants.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "qma/moore.hpp"
#include "qma/rng.hpp"

using namespace qma;

using QR = Quaternion<Rational>;

TEST_CASE("Hamilton multiplication table") {
  const QR i = QR::unit_i(), j = QR::unit_j(), k = QR::unit_k(), one = QR::one();
  CHECK(i * j == k);
  CHECK(j * k == i);
  CHECK(k * i == j);
  CHECK(j * i == -k);
  CHECK(i * i == -one);
  CHECK(j * j == -one);
  CHECK(k * k == -one);
}

TEST_CASE("conjugation and norm") {
  Rng rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const QR p = rng.quaternion<Rational>();
    const QR q = rng.quaternion<Rational>();
    CHECK(conj(p * q) == conj(q) * conj(p));
    CHECK((p * q).norm_sq() == p.norm_sq() * q.norm_sq());
    CHECK(p * p.conj() == QR::real(p.norm_sq()));
  }
}

TEST_CASE("complex split a + b j round-trips") {
  const QR q(Rational(1), Rational(2), Rational(3), Rational(4));
  CHECK(QR::from_ab(q.a(), q.b()) == q);
  CHECK(q.a() == Complex<Rational>(Rational(1), Rational(2)));
  CHECK(q.b() == Complex<Rational>(Rational(3), Rational(4)));
}

TEST_CASE("real representation is a homomorphism") {
  Rng rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const QR p = rng.quaternion<Rational>();
    const QR q = rng.quaternion<Rational>();
    const auto rp = p.real_rep(), rq = q.real_rep(), rpq = (p * q).real_rep();
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) {
        Rational acc = 0;
        for (int s = 0; s < 4; ++s) acc += rp[r][s] * rq[s][c];
        CHECK(acc == rpq[r][c]);
        CHECK(p.conj().real_rep()[r][c] == rp[c][r]);  // conjugate = transpose
      }
  }
}

TEST_CASE("matrix adjoint rules") {
  Rng rng(9);
  QuatMatrix<Rational> a(2, 3), b(3, 2);
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 3; ++c) {
      a(r, c) = rng.quaternion<Rational>();
      b(c, r) = rng.quaternion<Rational>();
    }
  const auto ab = a * b;
  const auto ba = b.adjoint() * a.adjoint();
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) CHECK(ab.adjoint()(c, r) == ba(c, r));
  CHECK(is_hyperhermitian_exact(a * a.adjoint()));
}

TEST_CASE("complex adjoint embedding is multiplicative") {
  Rng rng(13);
  QuatMatrix<double> a(3, 3), b(3, 3);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) {
      a(r, c) = rng.quaternion<double>();
      b(r, c) = rng.quaternion<double>();
    }
  const Eigen::MatrixXcd lhs = complex_adjoint(a * b);
  const Eigen::MatrixXcd rhs = complex_adjoint(a) * complex_adjoint(b);
  CHECK((lhs - rhs).cwiseAbs().maxCoeff() <= 1e-12);
  // hermitian iff hyperhermitian
  const auto h = rng.hyperhermitian<double>(3);
  const Eigen::MatrixXcd ch = complex_adjoint(h);
  CHECK((ch - ch.adjoint()).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("Moore determinant closed forms") {
  // 2x2 self-adjoint: det = a d - |q|^2
  Rng rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const auto m = rng.hyperhermitian<Rational>(2);
    const auto det = moore_det_expansion(m);
    CHECK(det.i == Rational(0));
    CHECK(det.j == Rational(0));
    CHECK(det.k == Rational(0));
    CHECK(det.re == m(0, 0).re * m(1, 1).re - m(0, 1).norm_sq());
  }
  // the classical singular example
  QuatMatrix<Rational> s(2, 2);
  s(0, 0) = QR::one();
  s(1, 1) = QR::one();
  s(0, 1) = QR::unit_j();
  s(1, 0) = -QR::unit_j();
  CHECK(moore_det_expansion(s).re == Rational(0));
}

TEST_CASE("Moore equals the classical determinant on complex matrices") {
  Rng rng(19);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + static_cast<int>(rng.int_in(0, 1));
    QuatMatrix<double> m(n, n);
    for (int r = 0; r < n; ++r) {
      m(r, r) = Quaternion<double>::real(rng.in(-2, 2));
      for (int c = r + 1; c < n; ++c) {
        m(r, c) = Quaternion<double>(rng.in(-2, 2), rng.in(-2, 2), 0.0, 0.0);
        m(c, r) = m(r, c).conj();
      }
    }
    Eigen::MatrixXcd cm(n, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) cm(r, c) = std::complex<double>(m(r, c).re, m(r, c).i);
    const double lhs = moore_det(m);
    const double rhs = cm.determinant().real();
    CHECK(std::fabs(lhs - rhs) <= 1e-10 * (1.0 + std::fabs(rhs)));
  }
}

TEST_CASE("spectral and expansion routes agree") {
  Rng rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const auto m = rng.hyperhermitian<Rational>(3);
    const double exact = ScalarTraits<Rational>::to_double(moore_det_expansion(m).re);
    const double spectral = moore_det(to_double_matrix(m));
    CHECK(std::fabs(exact - spectral) <= 1e-9 * (1.0 + std::fabs(exact)));
  }
}

TEST_CASE("eigendecomposition reconstructs the matrix") {
  Rng rng(29);
  const auto m = rng.hyperhermitian<double>(4);
  const auto he = eigen_hyperhermitian(m);
  CHECK(he.recon_defect <= 1e-9 * (1.0 + max_abs(m)));
  for (int p = 0; p + 1 < he.nu.size(); ++p) CHECK(he.nu[p] <= he.nu[p + 1] + 1e-12);
}

TEST_CASE("congruence product rule") {
  Rng rng(31);
  for (int trial = 0; trial < 25; ++trial) {
    const auto m = rng.hyperhermitian<double>(3);
    QuatMatrix<double> c(3, 3);
    for (int r = 0; r < 3; ++r)
      for (int col = 0; col < 3; ++col) c(r, col) = rng.quaternion<double>(2, 2);
    const double lhs = moore_det(c.adjoint() * m * c);
    const double rhs = moore_det(m) * moore_det(c.adjoint() * c);
    CHECK(std::fabs(lhs - rhs) <= 1e-8 * (1.0 + std::fabs(rhs)));
  }
}

TEST_CASE("determinants of nonnegative matrices are nonnegative") {
  Rng rng(37);
  for (int trial = 0; trial < 25; ++trial) {
    const auto a = rng.psd<double>(3);
    CHECK(moore_det(a) >= -1e-9 * (1.0 + max_abs(a)));
  }
}

TEST_CASE("mixed discriminant closed forms") {
  // diag(2,5), diag(3,4) -> (2*4 + 5*3)/2 = 23/2
  std::vector<QuatMatrix<Rational>> ds;
  QuatMatrix<Rational> d1(2, 2), d2(2, 2);
  d1(0, 0) = QR::real(Rational(2));
  d1(1, 1) = QR::real(Rational(5));
  d2(0, 0) = QR::real(Rational(3));
  d2(1, 1) = QR::real(Rational(4));
  ds = {d1, d2};
  const auto mixed = mixed_discriminant_symbolic(ds);
  CHECK(mixed.re == Rational(23) / 2);
  CHECK(mixed.im == Rational(0));

  // equal arguments reduce to the determinant
  Rng rng(41);
  const auto m = rng.hyperhermitian<Rational>(3);
  std::vector<QuatMatrix<Rational>> same(3, m);
  CHECK(mixed_discriminant_symbolic(same).re == moore_det_expansion(m).re);
}

TEST_CASE("polarization route matches the symbolic one") {
  Rng rng(43);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<QuatMatrix<Rational>> ms;
    std::vector<QuatMatrix<double>> md;
    for (int i = 0; i < 3; ++i) {
      ms.push_back(rng.hyperhermitian<Rational>(3));
      md.push_back(to_double_matrix(ms.back()));
    }
    const double exact = ScalarTraits<Rational>::to_double(mixed_discriminant_symbolic(ms).re);
    const double fl = mixed_discriminant(md);
    CHECK(std::fabs(fl - exact) <= 1e-8 * (1.0 + std::fabs(exact)));
  }
}

TEST_CASE("hyperhermitian gates reject bad input") {
  QuatMatrix<double> m(2, 2);
  m(0, 0) = Quaternion<double>::real(1.0);
  m(1, 1) = Quaternion<double>::real(1.0);
  m(0, 1) = Quaternion<double>::unit_i();
  m(1, 0) = Quaternion<double>::unit_i();  // should be -i
  CHECK_THROWS_AS(moore_det(m), std::invalid_argument);
  QuatMatrix<double> r(2, 3);
  CHECK_THROWS_AS(moore_det_expansion(r), std::invalid_argument);
}
