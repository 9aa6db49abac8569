// Exterior algebra over the 2n-letter alphabet {0, ..., 2n-1} with generic
// coefficients: complex scalars for pointwise work, polynomials for the
// operator calculus.  Terms are stored on sorted multi-indices with
// sign-canonicalized insertion, in a std::map for deterministic iteration.
#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <type_traits>
#include <utility>

#include "qma/multi_index.hpp"
#include "qma/polynomial.hpp"
#include "qma/scalars.hpp"

namespace qma {

template <class C>
bool coeff_is_zero(const C& c) {
  return c.is_zero();
}
template <class C>
C coeff_conj(const C& c) {
  return c.conj();
}
template <class T>
double coeff_abs_double(const Complex<T>& z) {
  return abs_double(z);
}
template <class T>
double coeff_abs_double(const Polynomial<T>& p) {
  return p.coeff_sup();
}

template <class C>
class Form {
 public:
  using TermMap = std::map<MultiIndex, C>;

  Form() : n_(0), degree_(0) {}
  Form(int n, int degree) : n_(n), degree_(degree) {
    if (n < 1) throw std::invalid_argument("alphabet parameter must be >= 1");
    if (degree < 0) throw std::invalid_argument("negative form degree");
  }
  static Form zero(int n, int degree) { return Form(n, degree); }

  int n() const { return n_; }
  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }

  // Insert on an already sorted, strictly increasing index.
  void add_term(const MultiIndex& idx, const C& c) {
    validate_index(idx);
    if (coeff_is_zero(c)) return;
    auto [it, inserted] = terms_.emplace(idx, c);
    if (!inserted) {
      it->second += c;
      if (coeff_is_zero(it->second)) terms_.erase(it);
    }
  }

  // Insert on an arbitrary letter sequence, canonicalizing the sign.
  void add_term_letters(const MultiIndex& letters, const C& c) {
    auto [sorted, sign] = sort_letters(letters);
    if (sign == 0) return;
    add_term(sorted, sign < 0 ? static_cast<C>(-c) : c);
  }

  const C* find(const MultiIndex& idx) const {
    auto it = terms_.find(idx);
    return it == terms_.end() ? nullptr : &it->second;
  }

  Form operator-() const {
    Form r(n_, degree_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }
  Form& operator+=(const Form& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Form& operator-=(const Form& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, static_cast<C>(-c));
    return *this;
  }
  friend Form operator+(Form a, const Form& b) { return a += b; }
  friend Form operator-(Form a, const Form& b) { return a -= b; }

  Form scaled(const C& s) const {
    Form r(n_, degree_);
    if (coeff_is_zero(s)) return r;
    for (const auto& [e, c] : terms_) {
      C sc = c * s;
      if (!coeff_is_zero(sc)) r.terms_.emplace(e, std::move(sc));
    }
    return r;
  }

  friend Form wedge(const Form& f, const Form& g) {
    if (f.n_ != g.n_) throw std::invalid_argument("forms over different alphabets");
    Form r(f.n_, f.degree_ + g.degree_);
    MultiIndex merged;
    for (const auto& [ef, cf] : f.terms_)
      for (const auto& [eg, cg] : g.terms_) {
        const int sign = merge_sign(ef, eg, merged);
        if (sign == 0) continue;
        C prod = cf * cg;
        r.add_term(merged, sign < 0 ? static_cast<C>(-prod) : prod);
      }
    return r;
  }

  friend Form wedge_pow(const Form& f, int k) {
    if (k < 0) throw std::invalid_argument("negative wedge power");
    if (k == 0) throw std::invalid_argument("wedge power zero has no degree-0 identity here");
    Form r = f;
    for (int p = 1; p < k; ++p) r = wedge(r, f);
    return r;
  }

  // Coefficient of the volume form (interleaved top-index normalization).
  std::optional<C> volume_coefficient() const {
    if (degree_ != 2 * n_) throw std::invalid_argument("not a top-degree form");
    MultiIndex full;
    for (int v = 0; v < 2 * n_; ++v) full.push_back(static_cast<std::uint8_t>(v));
    auto it = terms_.find(full);
    if (it == terms_.end()) return std::nullopt;
    const C& c = it->second;
    return volume_sign(n_) < 0 ? static_cast<C>(-c) : c;
  }

  Form conj_coeffs() const {
    Form r(n_, degree_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, coeff_conj(c));
    return r;
  }

  template <class Fn>
  auto map_coeffs(Fn&& fn) const -> Form<std::decay_t<decltype(fn(std::declval<const C&>()))>> {
    using D = std::decay_t<decltype(fn(std::declval<const C&>()))>;
    Form<D> r(n_, degree_);
    for (const auto& [e, c] : terms_) {
      D v = fn(c);
      if (!coeff_is_zero(v)) r.add_term(e, v);
    }
    return r;
  }

  double max_coeff_abs() const {
    double m = 0.0;
    for (const auto& [e, c] : terms_) m = std::max(m, coeff_abs_double(c));
    return m;
  }

  friend bool operator==(const Form& a, const Form& b) {
    return a.n_ == b.n_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Form& a, const Form& b) { return !(a == b); }

 private:
  void validate_index(const MultiIndex& idx) const {
    if (static_cast<int>(idx.size()) != degree_)
      throw std::invalid_argument("index length does not match form degree");
    for (std::size_t p = 0; p < idx.size(); ++p) {
      if (idx[p] >= 2 * n_) throw std::invalid_argument("letter out of range");
      if (p > 0 && idx[p] <= idx[p - 1])
        throw std::invalid_argument("index letters must strictly increase");
    }
  }
  void check_compatible(const Form& o) const {
    if (n_ != o.n_ || degree_ != o.degree_)
      throw std::invalid_argument("form spaces differ");
  }

  int n_, degree_;
  TermMap terms_;
};

template <class C, class Fn>
Form<C> make_form(int n, int degree, Fn&& fill) {
  Form<C> f(n, degree);
  fill(f);
  return f;
}

}  // namespace qma
