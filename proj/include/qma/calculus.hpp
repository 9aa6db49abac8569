// The two exterior differentials and the second-order operator they compose
// to.  Forms here carry polynomial coefficients; d_alpha sends a p-form
// sum f_I w^I to sum_A sum_I (Z_{A,alpha} f_I) w^A ^ w^I.  Both differentials
// square to zero and anticommute, and their composition
//   Lap(u) = d_0 d_1 u = sum_{A<B} (Z_{A0} Z_{B1} - Z_{B0} Z_{A1}) u  w^{AB}
// is the fundamental 2-form-valued second-order operator of the calculus.
#pragma once

#include "qma/form.hpp"
#include "qma/heisenberg.hpp"

namespace qma {

template <class T>
using PolyForm = Form<Polynomial<T>>;

namespace detail {

inline void check_operator_guards(int n, int degree) {
  if (n > 4)
    throw std::invalid_argument("operator pipelines are limited to n <= 4 blocks");
  if (degree > 16)
    throw std::invalid_argument("operator pipelines are limited to degree <= 16 inputs");
}

}  // namespace detail

// A function is a 0-form.
template <class T>
PolyForm<T> as_zero_form(const Polynomial<T>& u) {
  const int n = detail::blocks_from_vars(u.nvars());
  PolyForm<T> f(n, 0);
  f.add_term(MultiIndex{}, u);
  return f;
}

// d_alpha on forms.  No degree guard here: compound operands (wedges of
// second-differentials) legitimately exceed the entry-point degree limit.
template <class T>
PolyForm<T> d_alpha(const PolyForm<T>& f, int alpha) {
  if (alpha != 0 && alpha != 1) throw std::invalid_argument("alpha must be 0 or 1");
  const int n = f.n();
  PolyForm<T> r(n, f.degree() + 1);
  MultiIndex letters;
  for (const auto& [idx, coeff] : f.terms()) {
    for (int a = 0; a < 2 * n; ++a) {
      Polynomial<T> g = apply_z_field(coeff, a, alpha);
      if (g.is_zero()) continue;
      letters.clear();
      letters.push_back(static_cast<std::uint8_t>(a));
      letters.insert(letters.end(), idx.begin(), idx.end());
      r.add_term_letters(letters, g);
    }
  }
  return r;
}

// d_alpha on functions: the entry point of the operator pipelines, with the
// documented guards on block count and input degree.
template <class T>
PolyForm<T> d_alpha(const Polynomial<T>& u, int alpha) {
  const int n = detail::blocks_from_vars(u.nvars());
  detail::check_operator_guards(n, u.total_degree());
  return d_alpha(as_zero_form(u), alpha);
}

template <class T>
PolyForm<T> d0(const Polynomial<T>& u) {
  return d_alpha(u, 0);
}
template <class T>
PolyForm<T> d1(const Polynomial<T>& u) {
  return d_alpha(u, 1);
}

// One matrix entry of the second-order operator:
//   (1/2) (Z_{A0} Z_{B1} - Z_{B0} Z_{A1}) u.
template <class T>
Polynomial<T> second_differential_entry(const Polynomial<T>& u, int a, int b) {
  Polynomial<T> p =
      apply_z_field(apply_z_field(u, b, 1), a, 0) -
      apply_z_field(apply_z_field(u, a, 1), b, 0);
  return p.scaled(Complex<T>(ScalarTraits<T>::from_ratio(1, 2)));
}

// Lap(u) = d_0 d_1 u as a 2-form; computed through the differentials so the
// composite identities hold by construction, and cross-checked in tests
// against the entrywise formula.
template <class T>
PolyForm<T> second_differential(const Polynomial<T>& u) {
  const int n = detail::blocks_from_vars(u.nvars());
  detail::check_operator_guards(n, u.total_degree());
  return d_alpha(d_alpha(as_zero_form(u), 1), 0);
}

// Evaluate a polynomial-coefficient form at a point.
template <class T>
Form<Complex<T>> eval_form(const PolyForm<T>& f, const GroupPoint<T>& p) {
  std::vector<T> coords = p.x;
  coords.push_back(p.t);
  return f.map_coeffs([&](const Polynomial<T>& poly) { return poly.eval(coords); });
}

// Double-precision shadow of an exact form (for reporting and float checks).
template <class T>
Form<Complex<double>> to_double_form(const Form<Complex<T>>& f) {
  return f.map_coeffs([](const Complex<T>& c) {
    return Complex<double>(ScalarTraits<T>::to_double(c.re), ScalarTraits<T>::to_double(c.im));
  });
}

// The wedge of a list of forms (used for products of second-differentials).
template <class C>
Form<C> wedge_all(const std::vector<Form<C>>& fs) {
  if (fs.empty()) throw std::invalid_argument("empty wedge product");
  Form<C> acc = fs[0];
  for (std::size_t i = 1; i < fs.size(); ++i) acc = wedge(acc, fs[i]);
  return acc;
}

}  // namespace qma
