// The (4n+1)-dimensional group R^{4n} x R with product
//   (x, t) (y, s) = (x + y, t + s + 2 <x, y>),
//   <x, y> = sum_l (x_{2l-1} y_{2l} - x_{2l} y_{2l-1})   (1-based pairs),
// its parabolic dilations, gauge norm, and the left-invariant horizontal
// frame X_1, ..., X_{4n} together with the complexified combinations used by
// the operator calculus.  Functions live in the polynomial ring with
// variables (x_1, ..., x_{4n}, t); variable 4n is t.
#pragma once

#include <vector>

#include "qma/polynomial.hpp"

namespace qma {

template <class T>
struct GroupPoint {
  std::vector<T> x;  // 4n horizontal coordinates
  T t{};
};

inline int space_vars(int n) { return 4 * n + 1; }
inline int homogeneous_dimension(int n) { return 4 * n + 2; }

template <class T>
int block_count(const GroupPoint<T>& p) {
  if (p.x.size() % 4 != 0) throw std::invalid_argument("horizontal dimension not 4n");
  return static_cast<int>(p.x.size()) / 4;
}

// <x, y> = sum over consecutive coordinate pairs of the 2x2 determinants.
template <class T>
T symplectic_pairing(const std::vector<T>& x, const std::vector<T>& y) {
  if (x.size() != y.size() || x.size() % 2 != 0)
    throw std::invalid_argument("pairing needs two even-length vectors of equal size");
  T acc = ScalarTraits<T>::zero();
  for (std::size_t l = 0; l + 1 < x.size(); l += 2)
    acc += x[l] * y[l + 1] - x[l + 1] * y[l];
  return acc;
}

template <class T>
GroupPoint<T> group_mul(const GroupPoint<T>& p, const GroupPoint<T>& q) {
  if (p.x.size() != q.x.size()) throw std::invalid_argument("group dimension mismatch");
  GroupPoint<T> r;
  r.x.resize(p.x.size());
  for (std::size_t i = 0; i < p.x.size(); ++i) r.x[i] = p.x[i] + q.x[i];
  r.t = p.t + q.t + ScalarTraits<T>::from_int(2) * symplectic_pairing(p.x, q.x);
  return r;
}

template <class T>
GroupPoint<T> group_inverse(const GroupPoint<T>& p) {
  GroupPoint<T> r;
  r.x.resize(p.x.size());
  for (std::size_t i = 0; i < p.x.size(); ++i) r.x[i] = -p.x[i];
  r.t = -p.t;
  return r;
}

template <class T>
GroupPoint<T> dilate(const T& r, const GroupPoint<T>& p) {
  GroupPoint<T> q;
  q.x.resize(p.x.size());
  for (std::size_t i = 0; i < p.x.size(); ++i) q.x[i] = r * p.x[i];
  q.t = r * r * p.t;
  return q;
}

// Fourth power of the gauge norm: |x|^4 + t^2 (exact in any field).
template <class T>
T gauge4(const GroupPoint<T>& p) {
  T xx = ScalarTraits<T>::zero();
  for (const T& v : p.x) xx += v * v;
  return xx * xx + p.t * p.t;
}

inline double gauge_norm(const GroupPoint<double>& p) {
  return std::pow(gauge4(p), 0.25);
}

// Coordinate polynomials of the left translation z -> g z (degree <= 1 in x,
// and t' = g_t + t + 2<g_x, x> of degree 1); composing u with these gives
// u(g z) as a polynomial in z.
template <class T>
std::vector<Polynomial<T>> left_translation_images(const GroupPoint<T>& g) {
  const int n = block_count(GroupPoint<T>{g.x, g.t});
  const int nv = space_vars(n);
  std::vector<Polynomial<T>> images;
  images.reserve(nv);
  for (int i = 0; i < 4 * n; ++i) {
    Polynomial<T> p = Polynomial<T>::variable(nv, i);
    p += Polynomial<T>::constant(nv, Complex<T>(g.x[i]));
    images.push_back(std::move(p));
  }
  Polynomial<T> tp = Polynomial<T>::variable(nv, 4 * n);
  tp += Polynomial<T>::constant(nv, Complex<T>(g.t));
  const Complex<T> two(ScalarTraits<T>::from_int(2));
  for (int l = 0; l < 2 * n; ++l) {
    // 2 * (g_{2l+1} x_{2l+2} - g_{2l+2} x_{2l+1})   (1-based labels)
    tp += (Polynomial<T>::variable(nv, 2 * l + 1) * two).scaled(Complex<T>(g.x[2 * l]));
    tp -= (Polynomial<T>::variable(nv, 2 * l) * two).scaled(Complex<T>(g.x[2 * l + 1]));
  }
  images.push_back(std::move(tp));
  return images;
}

// u(g z) as a polynomial in z.
template <class T>
Polynomial<T> left_translate(const Polynomial<T>& u, const GroupPoint<T>& g) {
  return u.compose(left_translation_images(g));
}

// u(delta_r z) as a polynomial in z; r stays in the scalar field.
template <class T>
Polynomial<T> dilate_function(const Polynomial<T>& u, const T& r) {
  const int nv = u.nvars();
  std::vector<Polynomial<T>> images;
  images.reserve(nv);
  for (int i = 0; i + 1 < nv; ++i)
    images.push_back(Polynomial<T>::variable(nv, i).scaled(Complex<T>(r)));
  images.push_back(Polynomial<T>::variable(nv, nv - 1).scaled(Complex<T>(r * r)));
  return u.compose(images);
}

namespace detail {
// Number of blocks from the variable count 4n+1.
inline int blocks_from_vars(int nvars) {
  if (nvars < 5 || (nvars - 1) % 4 != 0)
    throw std::invalid_argument("function does not live on a 4n+1 coordinate space");
  return (nvars - 1) / 4;
}
}  // namespace detail

// Horizontal left-invariant fields, 1-based index a in {1, ..., 4n}:
//   X_a = d/dx_a - 2 x_{a+1} d/dt   (a odd),
//   X_a = d/dx_a + 2 x_{a-1} d/dt   (a even).
// Consecutive odd/even pairs satisfy [X_{2l-1}, X_{2l}] = 4 d/dt and all
// other horizontal brackets vanish.
template <class T>
Polynomial<T> apply_x_field(const Polynomial<T>& u, int a) {
  const int n = detail::blocks_from_vars(u.nvars());
  if (a < 1 || a > 4 * n) throw std::invalid_argument("field index out of range");
  const int tvar = 4 * n;
  Polynomial<T> r = u.derivative(a - 1);
  Polynomial<T> ut = u.derivative(tvar);
  const Complex<T> two(ScalarTraits<T>::from_int(2));
  if (a % 2 == 1)
    r -= ut.times_var(a).scaled(two);  // partner x_{a+1} is variable a (0-based)
  else
    r += ut.times_var(a - 2).scaled(two);  // partner x_{a-1} is variable a-2
  return r;
}

template <class T>
Polynomial<T> apply_t_field(const Polynomial<T>& u) {
  return u.derivative(u.nvars() - 1);
}

// First-order complex combinations, 1-based j in {1, ..., 2n}:
//   Wbar_j = X_{2j-1} + I X_{2j},   W_j = X_{2j-1} - I X_{2j}.
template <class T>
Polynomial<T> apply_wbar_field(const Polynomial<T>& u, int j) {
  return apply_x_field(u, 2 * j - 1) + apply_x_field(u, 2 * j).scaled(Complex<T>::i());
}
template <class T>
Polynomial<T> apply_w_field(const Polynomial<T>& u, int j) {
  return apply_x_field(u, 2 * j - 1) - apply_x_field(u, 2 * j).scaled(Complex<T>::i());
}

// The 2n x 2 family of complex first-order operators behind the two exterior
// differentials.  Row index A in {0, ..., 2n-1} (0-based), column 0 or 1;
// for l in {0, ..., n-1} (blocks, X labels 1-based):
//   row l:     col 0:  X_{4l+1} + I X_{4l+2},   col 1: -X_{4l+3} - I X_{4l+4}
//   row n+l:   col 0:  X_{4l+3} - I X_{4l+4},   col 1:  X_{4l+1} - I X_{4l+2}
template <class T>
Polynomial<T> apply_z_field(const Polynomial<T>& u, int row, int col) {
  const int n = detail::blocks_from_vars(u.nvars());
  if (row < 0 || row >= 2 * n) throw std::invalid_argument("row index out of range");
  if (col != 0 && col != 1) throw std::invalid_argument("column must be 0 or 1");
  const Complex<T> im = Complex<T>::i();
  const int l = row % n;
  const bool upper = row < n;
  if (upper && col == 0)
    return apply_x_field(u, 4 * l + 1) + apply_x_field(u, 4 * l + 2).scaled(im);
  if (upper && col == 1)
    return -(apply_x_field(u, 4 * l + 3) + apply_x_field(u, 4 * l + 4).scaled(im));
  if (col == 0)
    return apply_x_field(u, 4 * l + 3) - apply_x_field(u, 4 * l + 4).scaled(im);
  return apply_x_field(u, 4 * l + 1) - apply_x_field(u, 4 * l + 2).scaled(im);
}

// |x|^2 as a polynomial (the fundamental strictly plurisubharmonic example).
template <class T>
Polynomial<T> squared_horizontal_norm(int n) {
  const int nv = space_vars(n);
  Polynomial<T> p(nv);
  for (int i = 0; i < 4 * n; ++i) {
    Expo e(nv, 0);
    e[i] = 2;
    p.add_term(e, Complex<T>::one());
  }
  return p;
}

// |x|^4 + t^2 as a polynomial (fourth power of the gauge norm).
template <class T>
Polynomial<T> gauge4_poly(int n) {
  const int nv = space_vars(n);
  Polynomial<T> sq = squared_horizontal_norm<T>(n);
  Polynomial<T> p = sq * sq;
  Expo e(nv, 0);
  e[4 * n] = 2;
  p.add_term(e, Complex<T>::one());
  return p;
}

}  // namespace qma
