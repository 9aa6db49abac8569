// Rational functions num/den on a line (variables l1..l4, t, plus optional
// inert parameters), with the line fields acting by the quotient rule.  This
// is what certifies the fundamental-solution identities exactly: applying
// the sub-Laplacian to -1/(gauge^4 + eps) and comparing numerators as
// polynomials.
#pragma once

#include "qma/lines.hpp"

namespace qma {

template <class T>
struct RatFn {
  Polynomial<T> num, den;

  RatFn(Polynomial<T> n, Polynomial<T> d) : num(std::move(n)), den(std::move(d)) {
    if (num.nvars() != den.nvars())
      throw std::invalid_argument("numerator and denominator variable spaces differ");
    if (den.is_zero()) throw std::invalid_argument("zero denominator");
  }

  int nvars() const { return num.nvars(); }

  Complex<T> eval(const std::vector<T>& coords) const {
    return num.eval(coords) / den.eval(coords);
  }

  RatFn operator-() const { return RatFn(-num, den); }
  // Equal denominators add without being multiplied; the sub-Laplacian sums
  // four quotient-rule terms over one shared power of the gauge, and blind
  // cross-multiplication would raise its degree fourfold per addition.
  friend RatFn operator+(const RatFn& a, const RatFn& b) {
    if (a.den == b.den) return RatFn(a.num + b.num, a.den);
    return RatFn(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend RatFn operator-(const RatFn& a, const RatFn& b) {
    if (a.den == b.den) return RatFn(a.num - b.num, a.den);
    return RatFn(a.num * b.den - b.num * a.den, a.den * b.den);
  }
  friend RatFn operator*(const RatFn& a, const RatFn& b) {
    return RatFn(a.num * b.num, a.den * b.den);
  }

  // Exact equality as rational functions: num_a * den_b == num_b * den_a.
  friend bool same_function(const RatFn& a, const RatFn& b) {
    return a.num * b.den == b.num * a.den;
  }

  bool is_zero_function() const { return num.is_zero(); }
};

// Quotient rule for a line field: X(n/d) = (X(n) d - n X(d)) / d^2.
template <class T>
RatFn<T> line_apply_x(const LineFrame<T>& f, const RatFn<T>& r, int j) {
  Polynomial<T> xn = line_apply_x(f, r.num, j);
  Polynomial<T> xd = line_apply_x(f, r.den, j);
  return RatFn<T>(xn * r.den - r.num * xd, r.den * r.den);
}

template <class T>
RatFn<T> line_sublaplacian(const LineFrame<T>& f, const RatFn<T>& r) {
  RatFn<T> acc = line_apply_x(f, line_apply_x(f, r, 0), 0);
  for (int j = 1; j < 4; ++j) acc = acc + line_apply_x(f, line_apply_x(f, r, j), j);
  return acc;
}

// gauge^4 = Lambda^2 |lambda|^4 + t^2 as a polynomial in >= 5 variables
// (extra variables inert).
template <class T>
Polynomial<T> line_gauge4_poly(const LineFrame<T>& f, int nvars = 5) {
  if (nvars < 5) throw std::invalid_argument("need at least the 5 line variables");
  Polynomial<T> s(nvars);
  for (int a = 0; a < 4; ++a) {
    Expo e(nvars, 0);
    e[a] = 2;
    s.add_term(e, Complex<T>::one());
  }
  Polynomial<T> p = (s * s).scaled(Complex<T>(f.lambda_sq));
  Expo et(nvars, 0);
  et[4] = 2;
  p.add_term(et, Complex<T>::one());
  return p;
}

// |lambda|^2 as a polynomial.
template <class T>
Polynomial<T> line_lambda_sq_poly(int nvars = 5) {
  Polynomial<T> s(nvars);
  for (int a = 0; a < 4; ++a) {
    Expo e(nvars, 0);
    e[a] = 2;
    s.add_term(e, Complex<T>::one());
  }
  return s;
}

// The shape of the fundamental solution (without its constant): -1/gauge^4.
template <class T>
RatFn<T> fundamental_shape(const LineFrame<T>& f) {
  return RatFn<T>(-Polynomial<T>::one(5), line_gauge4_poly(f, 5));
}

// Numerator of the sub-Laplacian of -1/gauge^4 after clearing denominators;
// identically zero away from the pole (the certificate of harmonicity).
template <class T>
Polynomial<T> fundamental_residual_numerator(const LineFrame<T>& f) {
  const RatFn<T> lap = line_sublaplacian(f, fundamental_shape(f));
  return lap.num;
}

// The regularized identity, stated with eps as a 6th polynomial variable:
//   SubLap(-1/(gauge^4 + eps)) = 32 Lambda^2 |lambda|^2 eps / (gauge^4+eps)^3.
// Returns the two sides as rational functions in (l1..l4, t, eps).
template <class T>
std::pair<RatFn<T>, RatFn<T>> regularized_identity_sides(const LineFrame<T>& f) {
  const int nv = 6;
  Polynomial<T> den = line_gauge4_poly(f, nv);
  Expo ee(nv, 0);
  ee[5] = 1;
  den.add_term(ee, Complex<T>::one());  // gauge^4 + eps
  RatFn<T> lhs = line_sublaplacian(f, RatFn<T>(-Polynomial<T>::one(nv), den));

  Polynomial<T> num = line_lambda_sq_poly<T>(nv).scaled(
      Complex<T>(ScalarTraits<T>::from_int(32) * f.lambda_sq));
  Polynomial<T> eps_var(nv);
  eps_var.add_term(ee, Complex<T>::one());
  num *= eps_var;
  RatFn<T> rhs(num, den * den * den);
  return {lhs, rhs};
}

}  // namespace qma
