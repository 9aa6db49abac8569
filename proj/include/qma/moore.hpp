// Determinants of self-adjoint quaternionic matrices.
//
// Float route: the complex adjoint of an n x n quaternionic matrix is a
// 2n x 2n complex hermitian matrix whose spectrum consists of n doubled real
// eigenvalues; the determinant is the product of one eigenvalue per pair, and
// a quaternionically unitary eigenbasis is recovered by pairing eigenvectors
// under the antilinear structure map.
//
// Exact route: the classical cycle expansion (permutations written as
// disjoint cycles led by their smallest element, cycles ordered by decreasing
// leaders, factors multiplied left-to-right), valid over any commutative
// coefficient ring — including polynomial rings, which powers the symbolic
// mixed-determinant oracle.
#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "qma/polynomial.hpp"
#include "qma/quat_matrix.hpp"

namespace qma {

// Complex adjoint: M = A + B*J  ->  [[A, -B], [conj(B), conj(A)]].
inline Eigen::MatrixXcd complex_adjoint(const QuatMatrix<double>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("square matrix required");
  const int n = m.rows();
  Eigen::MatrixXcd t(2 * n, 2 * n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      const std::complex<double> a = to_std_complex(m(r, c).a());
      const std::complex<double> b = to_std_complex(m(r, c).b());
      t(r, c) = a;
      t(r, c + n) = -b;
      t(r + n, c) = std::conj(b);
      t(r + n, c + n) = std::conj(a);
    }
  return t;
}

// The standard symplectic form on C^{2n}: [[0, I], [-I, 0]].
inline Eigen::MatrixXcd symplectic_form(int n) {
  Eigen::MatrixXcd j = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
  for (int d = 0; d < n; ++d) {
    j(d, d + n) = 1.0;
    j(d + n, d) = -1.0;
  }
  return j;
}

// Antilinear map commuting with complex adjoints of quaternionic matrices:
// v = [p; q]  ->  [-conj(q); conj(p)].  Eigenvectors come in (v, psi v)
// pairs, which is what doubles every eigenvalue.
inline Eigen::VectorXcd quaternionic_pairing(const Eigen::VectorXcd& v) {
  const int n = static_cast<int>(v.size()) / 2;
  Eigen::VectorXcd w(2 * n);
  w.head(n) = -v.tail(n).conjugate();
  w.tail(n) = v.head(n).conjugate();
  return w;
}

struct HyperEigen {
  Eigen::VectorXd nu;    // quaternionic eigenvalues, ascending
  QuatMatrix<double> u;  // unitary eigenbasis, one quaternionic column each
  double pairing_defect = 0.0;  // worst gap inside a doubled pair
  double recon_defect = 0.0;    // max-abs of M - U diag(nu) U*
};

inline HyperEigen eigen_hyperhermitian(const QuatMatrix<double>& m, double tol = 1e-10) {
  require_hyperhermitian(m, tol);
  const int n = m.rows();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(complex_adjoint(m));
  if (es.info() != Eigen::Success)
    throw std::runtime_error("hermitian eigensolver failed to converge");
  const Eigen::VectorXd w = es.eigenvalues();  // ascending, 2n entries
  const Eigen::MatrixXcd v = es.eigenvectors();

  HyperEigen out;
  out.nu.resize(n);
  out.u = QuatMatrix<double>(n, n);
  for (int p = 0; p < n; ++p) {
    out.nu[p] = w[2 * p];
    out.pairing_defect = std::max(out.pairing_defect, std::abs(w[2 * p + 1] - w[2 * p]));
  }

  // Cluster nearly equal eigenvalues, then pick one representative per pair
  // inside each cluster, closing the selection under the antilinear pairing
  // so the quaternionic columns are orthonormal even across degeneracies.
  const double scale = 1.0 + std::max(std::abs(w[0]), std::abs(w[2 * n - 1]));
  const double cluster_tol = 1e-8 * scale;
  int col = 0;
  int i = 0;
  while (i < 2 * n) {
    int jend = i + 1;
    while (jend < 2 * n && w[jend] - w[jend - 1] <= cluster_tol) ++jend;
    const int size = jend - i;
    if (size % 2 != 0)
      throw std::runtime_error("spectrum of complex adjoint failed to pair up");
    std::vector<Eigen::VectorXcd> chosen;  // selected vectors and their pairings
    for (int c = i; c < jend && static_cast<int>(chosen.size()) < size; ++c) {
      Eigen::VectorXcd cand = v.col(c);
      for (const auto& b : chosen) cand -= b.dot(cand) * b;
      const double norm = cand.norm();
      if (norm < 1e-6) continue;
      cand /= norm;
      chosen.push_back(cand);
      Eigen::VectorXcd mate = quaternionic_pairing(cand);
      for (const auto& b : chosen) mate -= b.dot(mate) * b;
      mate.normalize();
      chosen.push_back(mate);
    }
    if (static_cast<int>(chosen.size()) != size)
      throw std::runtime_error("failed to extract a paired eigenbasis");
    for (int p = 0; p < size / 2; ++p) {
      const Eigen::VectorXcd& vec = chosen[2 * p];
      for (int r = 0; r < n; ++r) {
        const Complex<double> a{vec[r].real(), vec[r].imag()};
        const Complex<double> bbar{vec[r + n].real(), vec[r + n].imag()};
        out.u(r, col) = Quaternion<double>::from_ab(a, bbar.conj());
      }
      ++col;
    }
    i = jend;
  }

  // Reconstruction defect (also certifies the recovered basis).
  QuatMatrix<double> rec(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      Quaternion<double> acc = Quaternion<double>::zero();
      for (int p = 0; p < n; ++p)
        acc += out.u(r, p) * Quaternion<double>::real(out.nu[p]) * out.u(c, p).conj();
      rec(r, c) = acc;
    }
  out.recon_defect = max_abs(m - rec);
  return out;
}

// Determinant of a self-adjoint quaternionic matrix: product of one
// eigenvalue per doubled pair of the complex adjoint (alternating entries of
// the ascending spectrum).
inline double moore_det(const QuatMatrix<double>& m, double tol = 1e-10) {
  require_hyperhermitian(m, tol);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(complex_adjoint(m));
  if (es.info() != Eigen::Success)
    throw std::runtime_error("hermitian eigensolver failed to converge");
  const Eigen::VectorXd w = es.eigenvalues();
  double det = 1.0;
  for (int p = 0; p < m.rows(); ++p) det *= w[2 * p];
  return det;
}

namespace detail {

// Canonical cycle form: each cycle led by its smallest element, cycles in
// decreasing order of leaders.  Returns the cycles and the permutation sign.
inline std::pair<std::vector<std::vector<int>>, int> canonical_cycles(
    const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  std::vector<bool> seen(n, false);
  std::vector<std::vector<int>> cycles;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<int> cyc;
    int c = s;
    while (!seen[c]) {
      seen[c] = true;
      cyc.push_back(c);
      c = perm[c];
    }
    cycles.push_back(std::move(cyc));  // s is the smallest: indices scanned ascending
  }
  std::sort(cycles.begin(), cycles.end(),
            [](const auto& a, const auto& b) { return a[0] > b[0]; });
  const int sign = ((n - static_cast<int>(cycles.size())) % 2 == 0) ? 1 : -1;
  return {std::move(cycles), sign};
}

}  // namespace detail

// Exact cycle expansion of the determinant over any commutative coefficient
// ring.  For self-adjoint input the result is a real quaternion; the sum is
// computed without assuming that, so tests can assert it.
template <class C>
Quaternion<C> moore_det_expansion(const QuatMatrix<C>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("square matrix required");
  const int n = m.rows();
  if (n < 1) throw std::invalid_argument("empty matrix");
  if (n > 8) throw std::invalid_argument("cycle expansion limited to n <= 8");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::optional<Quaternion<C>> total;
  do {
    auto [cycles, sign] = detail::canonical_cycles(perm);
    std::optional<Quaternion<C>> prod;
    for (const auto& cyc : cycles) {
      for (std::size_t p = 0; p < cyc.size(); ++p) {
        const Quaternion<C>& f = m(cyc[p], cyc[(p + 1) % cyc.size()]);
        prod = prod ? (*prod) * f : f;
      }
    }
    Quaternion<C> term = sign < 0 ? -*prod : *prod;
    total = total ? (*total) + term : term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return *total;
}

// Lift a quaternionic matrix to polynomial entries scaled by variable i of a
// polynomial ring in nlam variables (used for symbolic polarization).
template <class T>
QuatMatrix<Polynomial<T>> scaled_by_variable(const QuatMatrix<T>& m, int nlam, int i) {
  using P = Polynomial<T>;
  const Quaternion<P> zero{P(nlam), P(nlam), P(nlam), P(nlam)};
  QuatMatrix<Polynomial<T>> out(m.rows(), m.cols(), zero);
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) {
      const auto q = m(r, c).to_array();
      std::array<P, 4> comps;
      for (int s = 0; s < 4; ++s) {
        P p(nlam);
        if (!ScalarTraits<T>::is_zero(q[s])) {
          Expo e(nlam, 0);
          e[i] = 1;
          p.add_term(e, Complex<T>(q[s]));
        }
        comps[s] = std::move(p);
      }
      out(r, c) = Quaternion<P>(comps[0], comps[1], comps[2], comps[3]);
    }
  return out;
}

// Mixed determinant, exact symbolic route: the coefficient of
// lambda_1 * ... * lambda_n in det(sum lambda_i M_i), divided by n!.
// Works over any scalar field; with rationals it is exact.
template <class T>
Complex<T> mixed_discriminant_symbolic(const std::vector<QuatMatrix<T>>& ms) {
  const int n = static_cast<int>(ms.size());
  if (n < 1) throw std::invalid_argument("at least one matrix required");
  if (n > 8) throw std::invalid_argument("symbolic polarization limited to n <= 8");
  for (const auto& m : ms)
    if (m.rows() != n || m.cols() != n)
      throw std::invalid_argument("need n matrices of size n x n");
  using P = Polynomial<T>;
  const Quaternion<P> zero{P(n), P(n), P(n), P(n)};
  QuatMatrix<P> combo(n, n, zero);
  for (int i = 0; i < n; ++i) combo += scaled_by_variable(ms[i], n, i);
  const Quaternion<P> det = moore_det_expansion(combo);
  Expo e(n, 1);  // lambda_1 * ... * lambda_n
  Complex<T> c = det.re.coeff(e);
  T fact = ScalarTraits<T>::one();
  for (int i = 2; i <= n; ++i) fact = fact * ScalarTraits<T>::from_int(i);
  return Complex<T>(c.re / fact, c.im / fact);
}

// Mixed determinant, float route per the fixed design: inclusion-exclusion
// polarization over the 2^n - 1 nonempty subsets.
inline double mixed_discriminant(const std::vector<QuatMatrix<double>>& ms,
                                 double tol = 1e-10) {
  const int n = static_cast<int>(ms.size());
  if (n < 1) throw std::invalid_argument("at least one matrix required");
  if (n > 8) throw std::invalid_argument("polarization limited to n <= 8");
  for (const auto& m : ms) {
    if (m.rows() != n || m.cols() != n)
      throw std::invalid_argument("need n matrices of size n x n");
    require_hyperhermitian(m, tol);
  }
  double acc = 0.0;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    QuatMatrix<double> sum(n, n);
    int bits = 0;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) {
        sum += ms[i];
        ++bits;
      }
    const double sgn = ((n - bits) % 2 == 0) ? 1.0 : -1.0;
    acc += sgn * moore_det(sum, tol);
  }
  double fact = 1.0;
  for (int i = 2; i <= n; ++i) fact *= i;
  return acc / fact;
}

inline QuatMatrix<double> to_double_matrix(const QuatMatrix<Rational>& m) {
  QuatMatrix<double> out(m.rows(), m.cols());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) {
      const auto q = m(r, c).to_array();
      out(r, c) = Quaternion<double>(
          ScalarTraits<Rational>::to_double(q[0]), ScalarTraits<Rational>::to_double(q[1]),
          ScalarTraits<Rational>::to_double(q[2]), ScalarTraits<Rational>::to_double(q[3]));
    }
  return out;
}

}  // namespace qma
