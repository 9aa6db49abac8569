// Reality and positivity for exterior forms over the 2n-letter alphabet.
//
// The antilinear involution rho acts on a p-form by conjugating coefficients
// and mapping letters l -> n+l, n+l -> -l; rho-fixed forms are the "real"
// ones.  A real 2-form is encoded by a skew complex (2n x 2n) matrix (its
// doubled coefficient matrix), which in block form reads [[B, A], [-conj A,
// conj B]] and determines a self-adjoint quaternionic matrix A + B*J; strong
// positivity of the form is nonnegativity of that matrix.  Elementary
// strongly positive 2k-forms are wedges of the row 1-forms of the complex
// adjoint of a rank-k quaternionic k x n matrix, taken in interleaved order.
#pragma once

#include <Eigen/Dense>

#include "qma/form.hpp"
#include "qma/moore.hpp"

namespace qma {

// Image of a single letter under the complex structure on the alphabet:
// l -> n+l with sign +1, and n+l -> l with sign -1.
inline std::pair<std::uint8_t, int> structure_image(std::uint8_t letter, int n) {
  if (letter < n) return {static_cast<std::uint8_t>(letter + n), 1};
  return {static_cast<std::uint8_t>(letter - n), -1};
}

// The antilinear involution on forms (conjugate coefficients, map letters).
// Applied twice it gives (-1)^degree, so it is an involution in even degree.
template <class C>
Form<C> rho_involution(const Form<C>& f) {
  const int n = f.n();
  Form<C> r(n, f.degree());
  MultiIndex mapped;
  for (const auto& [idx, c] : f.terms()) {
    mapped.clear();
    int sign = 1;
    for (std::uint8_t letter : idx) {
      auto [img, s] = structure_image(letter, n);
      mapped.push_back(img);
      sign *= s;
    }
    C cc = coeff_conj(c);
    r.add_term_letters(mapped, sign < 0 ? static_cast<C>(-cc) : cc);
  }
  return r;
}

template <class C>
bool is_real_form_exact(const Form<C>& f) {
  return rho_involution(f) == f;
}

template <class C>
double reality_defect(const Form<C>& f) {
  return (rho_involution(f) - f).max_coeff_abs();
}

// Doubled-coefficient encoding of a 2-form: F = sum_{A<B} 2 M_{AB} w^A ^ w^B
// with M skew.  These two maps are mutually inverse.
inline Form<Complex<double>> two_form_from_matrix(const Eigen::MatrixXcd& m,
                                                  double tol = 1e-10) {
  if (m.rows() != m.cols() || m.rows() % 2 != 0)
    throw std::invalid_argument("even-dimensional square matrix required");
  const int n = static_cast<int>(m.rows()) / 2;
  const double scale = 1.0 + m.cwiseAbs().maxCoeff();
  if ((m + m.transpose()).cwiseAbs().maxCoeff() > tol * scale)
    throw std::invalid_argument("coefficient matrix of a 2-form must be skew");
  Form<Complex<double>> f(n, 2);
  for (int a = 0; a < 2 * n; ++a)
    for (int b = a + 1; b < 2 * n; ++b) {
      const std::complex<double> c = 2.0 * m(a, b);
      f.add_term({static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b)},
                 Complex<double>(c.real(), c.imag()));
    }
  return f;
}

inline Eigen::MatrixXcd matrix_of_two_form(const Form<Complex<double>>& f) {
  if (f.degree() != 2) throw std::invalid_argument("2-form required");
  const int n = f.n();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
  for (const auto& [idx, c] : f.terms()) {
    const std::complex<double> half(c.re / 2.0, c.im / 2.0);
    m(idx[0], idx[1]) = half;
    m(idx[1], idx[0]) = -half;
  }
  return m;
}

// The standard strongly positive 2-form: sum_l w^l ^ w^{n+l}.
template <class C>
Form<C> standard_positive_two_form(int n) {
  Form<C> f(n, 2);
  for (int l = 0; l < n; ++l)
    f.add_term({static_cast<std::uint8_t>(l), static_cast<std::uint8_t>(l + n)},
               C::one());
  return f;
}

struct StrongPositivity {
  bool nonneg = false;          // all recovered eigenvalues >= -tol * scale
  double min_eigenvalue = 0.0;  // smallest recovered eigenvalue
  Eigen::VectorXd eigenvalues;  // all of them, ascending
  QuatMatrix<double> matrix;    // the recovered self-adjoint matrix
  double structure_defect = 0.0;  // distance from the real-form block shape
};

// Decides strong positivity of a real 2-form by recovering its self-adjoint
// quaternionic coefficient matrix and checking the spectrum.  Forms that are
// not real (block structure violated beyond tol) are rejected.
inline StrongPositivity strong_positivity_test(const Form<Complex<double>>& f,
                                               double tol = 1e-9) {
  const int n = f.n();
  const Eigen::MatrixXcd m = matrix_of_two_form(f);
  const Eigen::MatrixXcd b = m.topLeftCorner(n, n);
  const Eigen::MatrixXcd a = m.topRightCorner(n, n);

  StrongPositivity out;
  const double scale = 1.0 + m.cwiseAbs().maxCoeff();
  double defect = (m.bottomLeftCorner(n, n) + a.conjugate()).cwiseAbs().maxCoeff();
  defect = std::max(defect,
                    (m.bottomRightCorner(n, n) - b.conjugate()).cwiseAbs().maxCoeff());
  defect = std::max(defect, (a - a.adjoint()).cwiseAbs().maxCoeff());
  defect = std::max(defect, (b + b.transpose()).cwiseAbs().maxCoeff());
  out.structure_defect = defect;
  if (defect > tol * scale)
    throw std::invalid_argument("2-form is not real: block structure violated");

  QuatMatrix<double> q(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      q(r, c) = Quaternion<double>::from_ab(Complex<double>(a(r, c).real(), a(r, c).imag()),
                                            Complex<double>(b(r, c).real(), b(r, c).imag()));
  out.matrix = q;
  HyperEigen he = eigen_hyperhermitian(q, tol);
  out.eigenvalues = he.nu;
  out.min_eigenvalue = he.nu.size() ? he.nu[0] : 0.0;
  out.nonneg = out.min_eigenvalue >= -tol * scale;
  return out;
}

// Complex adjoint of a rectangular quaternionic matrix (2k x 2n blocks
// [[A, -B], [conj B, conj A]]), entries kept in the generic field.
template <class T>
std::vector<std::vector<Complex<T>>> complex_adjoint_entries(const QuatMatrix<T>& m) {
  const int k = m.rows(), n = m.cols();
  std::vector<std::vector<Complex<T>>> t(2 * k, std::vector<Complex<T>>(2 * n));
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < n; ++c) {
      const Complex<T> a = m(r, c).a();
      const Complex<T> b = m(r, c).b();
      t[r][c] = a;
      t[r][c + n] = -b;
      t[r + k][c] = b.conj();
      t[r + k][c + n] = a.conj();
    }
  return t;
}

// Elementary strongly positive 2k-form of a rank-k quaternionic k x n matrix:
// wedge the 2k row 1-forms of its complex adjoint in interleaved order
// (row 0, row k, row 1, row k+1, ...).
template <class T>
Form<Complex<T>> elementary_strongly_positive(const QuatMatrix<T>& m) {
  const int k = m.rows(), n = m.cols();
  if (k < 1 || k > n) throw std::invalid_argument("need a k x n matrix with 1 <= k <= n");
  // Rank check in floating point (exact inputs are converted; a rank-
  // deficient input yields the zero form mathematically, but the definition
  // wants full rank, so reject).
  Eigen::MatrixXcd td(2 * k, 2 * n);
  const auto t = complex_adjoint_entries(m);
  for (int r = 0; r < 2 * k; ++r)
    for (int c = 0; c < 2 * n; ++c) td(r, c) = to_std_complex(t[r][c]);
  Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(td);
  qr.setThreshold(1e-10);
  if (qr.rank() < 2 * k)
    throw std::invalid_argument("matrix does not have full rank k");

  auto row_form = [&](int r) {
    Form<Complex<T>> f(n, 1);
    for (int c = 0; c < 2 * n; ++c)
      f.add_term({static_cast<std::uint8_t>(c)}, t[r][c]);
    return f;
  };
  Form<Complex<T>> acc = row_form(0);
  acc = wedge(acc, row_form(k));
  for (int l = 1; l < k; ++l) {
    acc = wedge(acc, row_form(l));
    acc = wedge(acc, row_form(k + l));
  }
  return acc;
}

// Linear pullback: a quaternionic matrix g (rows x cols) maps H^{cols} to
// H^{rows}; its pullback sends forms over the 2*rows alphabet to forms over
// the 2*cols alphabet, letter p -> sum_j tau(g)_{p j} w^j.
template <class T>
Form<Complex<T>> pullback(const QuatMatrix<T>& g, const Form<Complex<T>>& f) {
  const int nt = g.rows(), ns = g.cols();
  if (f.n() != nt) throw std::invalid_argument("form alphabet does not match map target");
  const auto t = complex_adjoint_entries(g);
  std::vector<Form<Complex<T>>> letter_image;
  letter_image.reserve(2 * nt);
  for (int p = 0; p < 2 * nt; ++p) {
    Form<Complex<T>> lf(ns, 1);
    for (int c = 0; c < 2 * ns; ++c)
      lf.add_term({static_cast<std::uint8_t>(c)}, t[p][c]);
    letter_image.push_back(std::move(lf));
  }
  Form<Complex<T>> out(ns, f.degree());
  for (const auto& [idx, c] : f.terms()) {
    if (idx.empty()) {
      out.add_term(idx, c);
      continue;
    }
    Form<Complex<T>> acc = letter_image[idx[0]];
    for (std::size_t p = 1; p < idx.size(); ++p)
      acc = wedge(acc, letter_image[idx[p]]);
    out += acc.scaled(c);
  }
  return out;
}

}  // namespace qma
