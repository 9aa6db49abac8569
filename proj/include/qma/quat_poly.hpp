// Quaternion-valued polynomial functions on the group, stored as a pair of
// complex-valued polynomials u = a + b*J (so a is the 1/I part and b the
// J/K part).  Left multiplication by constants and the first-order
// quaternionic operators act through the usual rules J z = conj(z) J.
#pragma once

#include "qma/heisenberg.hpp"
#include "qma/quaternion.hpp"

namespace qma {

template <class T>
struct QuatPoly {
  Polynomial<T> a, b;

  QuatPoly() = default;
  QuatPoly(Polynomial<T> a_, Polynomial<T> b_) : a(std::move(a_)), b(std::move(b_)) {
    if (a.nvars() != b.nvars())
      throw std::invalid_argument("components live in different variable spaces");
  }
  static QuatPoly from_real(const Polynomial<T>& u) {
    return QuatPoly(u, Polynomial<T>::zero(u.nvars()));
  }
  static QuatPoly zero(int nvars) {
    return QuatPoly(Polynomial<T>::zero(nvars), Polynomial<T>::zero(nvars));
  }
  static QuatPoly constant(int nvars, const Quaternion<T>& q) {
    return QuatPoly(Polynomial<T>::constant(nvars, q.a()),
                    Polynomial<T>::constant(nvars, q.b()));
  }

  int nvars() const { return a.nvars(); }
  bool is_zero() const { return a.is_zero() && b.is_zero(); }

  QuatPoly operator-() const { return QuatPoly(-a, -b); }
  QuatPoly& operator+=(const QuatPoly& o) {
    a += o.a;
    b += o.b;
    return *this;
  }
  QuatPoly& operator-=(const QuatPoly& o) {
    a -= o.a;
    b -= o.b;
    return *this;
  }
  friend QuatPoly operator+(QuatPoly x, const QuatPoly& y) { return x += y; }
  friend QuatPoly operator-(QuatPoly x, const QuatPoly& y) { return x -= y; }

  // (a1 + b1 J)(a2 + b2 J) = (a1 a2 - b1 conj(b2)) + (a1 b2 + b1 conj(a2)) J.
  friend QuatPoly operator*(const QuatPoly& x, const QuatPoly& y) {
    return QuatPoly(x.a * y.a - x.b * y.b.conj(), x.a * y.b + x.b * y.a.conj());
  }

  QuatPoly conj() const { return QuatPoly(a.conj(), -b); }

  friend QuatPoly operator*(const Quaternion<T>& q, const QuatPoly& u) {
    return QuatPoly::constant_times(q, u);
  }
  static QuatPoly constant_times(const Quaternion<T>& q, const QuatPoly& u) {
    const int nv = u.nvars();
    return QuatPoly::constant(nv, q) * u;
  }

  Quaternion<T> eval(const std::vector<T>& coords) const {
    return Quaternion<T>::from_ab(a.eval(coords), b.eval(coords));
  }

  double coeff_sup() const { return std::max(a.coeff_sup(), b.coeff_sup()); }

  friend bool operator==(const QuatPoly& x, const QuatPoly& y) {
    return x.a == y.a && x.b == y.b;
  }
  friend bool operator!=(const QuatPoly& x, const QuatPoly& y) { return !(x == y); }
};

// Real first-order fields act componentwise.
template <class T>
QuatPoly<T> apply_x_field(const QuatPoly<T>& u, int a) {
  return QuatPoly<T>(apply_x_field(u.a, a), apply_x_field(u.b, a));
}
template <class T>
QuatPoly<T> apply_t_field(const QuatPoly<T>& u) {
  return QuatPoly<T>(apply_t_field(u.a), apply_t_field(u.b));
}

// The conjugate quaternionic operator of block l (0-based):
//   X_{4l+1} + I X_{4l+2} + J X_{4l+3} + K X_{4l+4},
// with I, J, K acting by left multiplication on values.
template <class T>
QuatPoly<T> apply_qbar_field(const QuatPoly<T>& u, int l) {
  QuatPoly<T> r = apply_x_field(u, 4 * l + 1);
  r += Quaternion<T>::unit_i() * apply_x_field(u, 4 * l + 2);
  r += Quaternion<T>::unit_j() * apply_x_field(u, 4 * l + 3);
  r += Quaternion<T>::unit_k() * apply_x_field(u, 4 * l + 4);
  return r;
}

// The quaternionic operator of block l:
//   X_{4l+1} - I X_{4l+2} - J X_{4l+3} - K X_{4l+4}.
template <class T>
QuatPoly<T> apply_q_field(const QuatPoly<T>& u, int l) {
  QuatPoly<T> r = apply_x_field(u, 4 * l + 1);
  r -= Quaternion<T>::unit_i() * apply_x_field(u, 4 * l + 2);
  r -= Quaternion<T>::unit_j() * apply_x_field(u, 4 * l + 3);
  r -= Quaternion<T>::unit_k() * apply_x_field(u, 4 * l + 4);
  return r;
}

}  // namespace qma
