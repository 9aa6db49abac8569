// Quaternions over an arbitrary commutative coefficient ring.  The component
// type is usually a scalar field (double, exact rationals), but the symbolic
// determinant expansions also instantiate it with polynomial components.
#pragma once

#include <array>
#include <string>

#include "qma/scalars.hpp"

namespace qma {

template <class C>
struct Quaternion {
  C re{}, i{}, j{}, k{};  // re + i*I + j*J + k*K

  Quaternion() = default;
  Quaternion(C r, C a, C b, C c)
      : re(std::move(r)), i(std::move(a)), j(std::move(b)), k(std::move(c)) {}

  // Complex split q = a() + b()*J with a = re + i*I, b = j + k*I.  Only
  // meaningful when C is a scalar field (lazy instantiation keeps the
  // polynomial case compiling as long as these are not used there).
  Complex<C> a() const { return Complex<C>(re, i); }
  Complex<C> b() const { return Complex<C>(j, k); }
  static Quaternion from_ab(const Complex<C>& a, const Complex<C>& b) {
    return Quaternion(a.re, a.im, b.re, b.im);
  }
  static Quaternion real(C r) {
    return Quaternion(std::move(r), C{}, C{}, C{});
  }
  static Quaternion zero() { return Quaternion(); }
  static Quaternion one() { return real(ScalarTraits<C>::one()); }
  static Quaternion unit_i() {
    return Quaternion(C{}, ScalarTraits<C>::one(), C{}, C{});
  }
  static Quaternion unit_j() {
    return Quaternion(C{}, C{}, ScalarTraits<C>::one(), C{});
  }
  static Quaternion unit_k() {
    return Quaternion(C{}, C{}, C{}, ScalarTraits<C>::one());
  }

  Quaternion conj() const { return Quaternion(re, -i, -j, -k); }
  C norm_sq() const { return re * re + i * i + j * j + k * k; }

  Quaternion operator-() const { return Quaternion(-re, -i, -j, -k); }
  Quaternion& operator+=(const Quaternion& o) {
    re += o.re;
    i += o.i;
    j += o.j;
    k += o.k;
    return *this;
  }
  Quaternion& operator-=(const Quaternion& o) {
    re -= o.re;
    i -= o.i;
    j -= o.j;
    k -= o.k;
    return *this;
  }
  friend Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
  friend Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }

  // Hamilton product (I*J = K, J*K = I, K*I = J).
  friend Quaternion operator*(const Quaternion& p, const Quaternion& q) {
    return Quaternion(
        p.re * q.re - p.i * q.i - p.j * q.j - p.k * q.k,
        p.re * q.i + p.i * q.re + p.j * q.k - p.k * q.j,
        p.re * q.j - p.i * q.k + p.j * q.re + p.k * q.i,
        p.re * q.k + p.i * q.j - p.j * q.i + p.k * q.re);
  }
  Quaternion& operator*=(const Quaternion& o) { return *this = *this * o; }

  friend Quaternion operator*(const C& s, const Quaternion& q) {
    return Quaternion(s * q.re, s * q.i, s * q.j, s * q.k);
  }
  friend Quaternion operator*(const Quaternion& q, const C& s) {
    return Quaternion(q.re * s, q.i * s, q.j * s, q.k * s);
  }

  friend bool operator==(const Quaternion& a, const Quaternion& b) {
    return a.re == b.re && a.i == b.i && a.j == b.j && a.k == b.k;
  }
  friend bool operator!=(const Quaternion& a, const Quaternion& b) {
    return !(a == b);
  }

  // The real 4x4 matrix of left multiplication by this quaternion in the
  // basis (1, I, J, K): (q*p) as a column vector equals real_rep(q) * p-hat.
  std::array<std::array<C, 4>, 4> real_rep() const {
    return {{{re, -i, -j, -k},
             {i, re, -k, j},
             {j, k, re, -i},
             {k, -j, i, re}}};
  }

  std::array<C, 4> to_array() const { return {re, i, j, k}; }
  static Quaternion from_array(const std::array<C, 4>& v) {
    return Quaternion(v[0], v[1], v[2], v[3]);
  }

  std::string str() const {
    return "(" + ScalarTraits<C>::to_string(re) + ", " +
           ScalarTraits<C>::to_string(i) + ", " + ScalarTraits<C>::to_string(j) +
           ", " + ScalarTraits<C>::to_string(k) + ")";
  }
};

template <class C>
Quaternion<C> conj(const Quaternion<C>& q) {
  return q.conj();
}

inline double abs_double(const Quaternion<double>& q) {
  return std::sqrt(q.norm_sq());
}
inline double abs_double(const Quaternion<Rational>& q) {
  return std::sqrt(ScalarTraits<Rational>::to_double(q.norm_sq()));
}

using QuatD = Quaternion<double>;
using QuatQ = Quaternion<Rational>;

}  // namespace qma
