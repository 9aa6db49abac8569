// The horizontal quaternionic Hessian of a real function u, its determinant
// density, and the verifiers built on them (plurisubharmonicity, the bridge
// between the wedge-power density and the determinant, one-sided regularity
// pairs, the telescoping decomposition of density differences).
//
// Entry (l, m) of the Hessian is
//   H_lm(u) = Qbar_l Q_m u + 8 delta_lm I dt(u)
// and, expressed through the second-differential entries D_AB u,
//   H_lm(u) = 2 D_{l, n+m} u + 2 D_{l, m} u * J,
// which is manifestly self-adjoint (the diagonal is real since D_ll = 0).
#pragma once

#include "qma/calculus.hpp"
#include "qma/moore.hpp"
#include "qma/quat_poly.hpp"

namespace qma {

template <class T>
class QuatPolyMatrix {
 public:
  QuatPolyMatrix(int n, int nvars)
      : n_(n), e_(static_cast<std::size_t>(n) * n, QuatPoly<T>::zero(nvars)) {}

  int size() const { return n_; }
  QuatPoly<T>& operator()(int r, int c) { return e_[idx(r, c)]; }
  const QuatPoly<T>& operator()(int r, int c) const { return e_[idx(r, c)]; }

  QuatMatrix<T> eval(const std::vector<T>& coords) const {
    QuatMatrix<T> m(n_, n_);
    for (int r = 0; r < n_; ++r)
      for (int c = 0; c < n_; ++c) m(r, c) = (*this)(r, c).eval(coords);
    return m;
  }

 private:
  std::size_t idx(int r, int c) const {
    if (r < 0 || r >= n_ || c < 0 || c >= n_)
      throw std::out_of_range("matrix index out of range");
    return static_cast<std::size_t>(r) * n_ + c;
  }
  int n_;
  std::vector<QuatPoly<T>> e_;
};

// Hessian through the second-differential entries (the production route).
template <class T>
QuatPolyMatrix<T> horizontal_hessian(const Polynomial<T>& u) {
  if (!u.is_real()) throw std::invalid_argument("Hessian requires a real function");
  const int n = detail::blocks_from_vars(u.nvars());
  detail::check_operator_guards(n, u.total_degree());
  const Complex<T> two(ScalarTraits<T>::from_int(2));
  QuatPolyMatrix<T> h(n, u.nvars());
  for (int l = 0; l < n; ++l)
    for (int m = 0; m < n; ++m) {
      Polynomial<T> a = second_differential_entry(u, l, n + m).scaled(two);
      Polynomial<T> b = second_differential_entry(u, l, m).scaled(two);
      h(l, m) = QuatPoly<T>(std::move(a), std::move(b));
    }
  return h;
}

// Hessian through genuine operator composition (independent route, used to
// cross-check the entry formula).
template <class T>
QuatPolyMatrix<T> horizontal_hessian_by_operators(const Polynomial<T>& u) {
  if (!u.is_real()) throw std::invalid_argument("Hessian requires a real function");
  const int n = detail::blocks_from_vars(u.nvars());
  detail::check_operator_guards(n, u.total_degree());
  const QuatPoly<T> uq = QuatPoly<T>::from_real(u);
  const Complex<T> eight(ScalarTraits<T>::from_int(8));
  QuatPolyMatrix<T> h(n, u.nvars());
  for (int l = 0; l < n; ++l)
    for (int m = 0; m < n; ++m) {
      QuatPoly<T> e = apply_qbar_field(apply_q_field(uq, m), l);
      if (l == m) {
        // + 8 I dt(u): left multiplication by I of the (real) t-derivative.
        Polynomial<T> ut = apply_t_field(u).scaled(eight * Complex<T>::i());
        e += QuatPoly<T>(std::move(ut), Polynomial<T>::zero(u.nvars()));
      }
      h(l, m) = e;
    }
  return h;
}

template <class T>
QuatMatrix<T> hessian_at(const Polynomial<T>& u, const GroupPoint<T>& p) {
  std::vector<T> coords = p.x;
  coords.push_back(p.t);
  return horizontal_hessian(u).eval(coords);
}

// Determinant density at a point, float route (spectral determinant).
inline double density_at(const Polynomial<double>& u, const GroupPoint<double>& p,
                         double tol = 1e-10) {
  return moore_det(hessian_at(u, p), tol);
}

// Determinant density at a point, exact route (cycle expansion).
inline Rational density_at_exact(const Polynomial<Rational>& u,
                                 const GroupPoint<Rational>& p) {
  const Quaternion<Rational> det = moore_det_expansion(hessian_at(u, p));
  if (det.i != 0 || det.j != 0 || det.k != 0)
    throw std::runtime_error("determinant of a self-adjoint matrix must be real");
  return det.re;
}

// The n-th wedge power of the second differential (a top-degree form).
template <class T>
PolyForm<T> density_form(const Polynomial<T>& u) {
  const int n = detail::blocks_from_vars(u.nvars());
  return wedge_pow(second_differential(u), n);
}

// Volume coefficient of density_form at a point; the bridge identity says
// this equals n! * det(Hessian) pointwise.
template <class T>
Complex<T> density_form_coeff_at(const PolyForm<T>& top, const GroupPoint<T>& p) {
  Form<Complex<T>> v = eval_form(top, p);
  auto c = v.volume_coefficient();
  return c ? *c : Complex<T>::zero();
}

// Pointwise residual of the wedge-power/determinant bridge at p, computed in
// the exact field: (Lap u)^n - n! det(H(u)) (volume coefficients).
inline Rational density_bridge_residual_exact(const Polynomial<Rational>& u,
                                              const GroupPoint<Rational>& p) {
  const int n = detail::blocks_from_vars(u.nvars());
  const Complex<Rational> lhs = density_form_coeff_at(density_form(u), p);
  if (lhs.im != 0) throw std::runtime_error("top coefficient of a real density must be real");
  Rational fact = 1;
  for (int i = 2; i <= n; ++i) fact *= i;
  return lhs.re - fact * density_at_exact(u, p);
}

inline double density_bridge_residual(const Polynomial<double>& u,
                                      const GroupPoint<double>& p, double tol = 1e-10) {
  const int n = detail::blocks_from_vars(u.nvars());
  const Complex<double> lhs = density_form_coeff_at(density_form(u), p);
  double fact = 1.0;
  for (int i = 2; i <= n; ++i) fact *= i;
  return std::abs(lhs.re - fact * density_at(u, p, tol)) + std::abs(lhs.im);
}

// Sample-based plurisubharmonicity check: the Hessian must be nonnegative at
// every sample point (smallest recovered eigenvalue >= -tol * scale).
struct PshReport {
  bool psh = true;
  double worst_eigenvalue = 0.0;
  std::size_t worst_sample = 0;
};

inline PshReport is_psh_on_samples(const Polynomial<double>& u,
                                   const std::vector<GroupPoint<double>>& samples,
                                   double tol = 1e-9) {
  PshReport rep;
  bool first = true;
  for (std::size_t s = 0; s < samples.size(); ++s) {
    QuatMatrix<double> h = hessian_at(u, samples[s]);
    HyperEigen he = eigen_hyperhermitian(h, 1e-8);
    const double scale = 1.0 + std::max(std::abs(he.nu[0]), std::abs(he.nu[he.nu.size() - 1]));
    const double mn = he.nu[0];
    if (first || mn < rep.worst_eigenvalue) {
      rep.worst_eigenvalue = mn;
      rep.worst_sample = s;
      first = false;
    }
    if (mn < -tol * scale) rep.psh = false;
  }
  return rep;
}

// Exact zero test of the second differential.
template <class T>
bool is_pluriharmonic(const Polynomial<T>& u) {
  return second_differential(u).is_zero();
}

// One-sided regular pair (f_0, f_1) of complex functions: the defining
// residual is d_1 f_0 - d_0 f_1 (a 1-form; the pair is regular when it
// vanishes).  Components of a regular pair are pluriharmonic.
template <class T>
PolyForm<T> regular_pair_residual(const Polynomial<T>& f0, const Polynomial<T>& f1) {
  return d_alpha(f0, 1) - d_alpha(f1, 0);
}

template <class T>
bool is_regular_pair(const Polynomial<T>& f0, const Polynomial<T>& f1) {
  return regular_pair_residual(f0, f1).is_zero();
}

// Telescoping decomposition of a density difference:
//   (Lap v)^n - (Lap u)^n
//     = sum_{p=1}^{n} (Lap v)^{p-1} ^ Lap(v - u) ^ (Lap u)^{n-p}.
// Returns the exact difference of the two sides (zero when the identity
// holds, which it does identically; kept as a residual for the test suites).
template <class T>
PolyForm<T> telescoping_residual(const Polynomial<T>& u, const Polynomial<T>& v) {
  if (u.nvars() != v.nvars()) throw std::invalid_argument("functions on different spaces");
  const int n = detail::blocks_from_vars(u.nvars());
  const PolyForm<T> lu = second_differential(u);
  const PolyForm<T> lv = second_differential(v);
  const PolyForm<T> mid = lv - lu;  // Lap(v - u) by linearity
  PolyForm<T> rhs(n, 2 * n);
  for (int p = 1; p <= n; ++p) {
    PolyForm<T> term = mid;
    if (p > 1) term = wedge(wedge_pow(lv, p - 1), term);
    if (n - p > 0) term = wedge(term, wedge_pow(lu, n - p));
    rhs += term;
  }
  return wedge_pow(lv, n) - wedge_pow(lu, n) - rhs;
}

}  // namespace qma
