// Sparse multivariate polynomials with complex coefficients over an exact or
// floating-point scalar field.  Terms live in a std::map keyed by the
// exponent vector, so iteration order (and therefore printing and every
// reduction over terms) is deterministic.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qma/scalars.hpp"

namespace qma {

using Expo = std::vector<std::uint16_t>;  // one exponent per variable

// Coordinate names for functions on the group: x1..x{m-1}, t.
inline std::vector<std::string> group_var_names(int nvars) {
  std::vector<std::string> names;
  names.reserve(nvars);
  for (int i = 0; i + 1 < nvars; ++i) names.push_back("x" + std::to_string(i + 1));
  if (nvars >= 1) names.push_back("t");
  return names;
}

template <class T>
class Polynomial {
 public:
  using Coeff = Complex<T>;
  using TermMap = std::map<Expo, Coeff>;

  Polynomial() : nvars_(0) {}
  explicit Polynomial(int nvars) : nvars_(nvars) {
    if (nvars < 0) throw std::invalid_argument("negative variable count");
  }

  static Polynomial zero(int nvars) { return Polynomial(nvars); }
  static Polynomial constant(int nvars, Coeff c) {
    Polynomial p(nvars);
    if (!c.is_zero()) p.terms_.emplace(Expo(nvars, 0), std::move(c));
    return p;
  }
  static Polynomial one(int nvars) { return constant(nvars, Coeff::one()); }
  static Polynomial variable(int nvars, int i) {
    if (i < 0 || i >= nvars) throw std::invalid_argument("variable index out of range");
    Polynomial p(nvars);
    Expo e(nvars, 0);
    e[i] = 1;
    p.terms_.emplace(std::move(e), Coeff::one());
    return p;
  }

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  int total_degree() const {
    int d = 0;
    for (const auto& [e, c] : terms_) {
      int s = 0;
      for (auto k : e) s += k;
      d = std::max(d, s);
    }
    return d;
  }

  Coeff coeff(const Expo& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Coeff::zero() : it->second;
  }

  void add_term(const Expo& e, const Coeff& c) {
    if (static_cast<int>(e.size()) != nvars_)
      throw std::invalid_argument("exponent vector length mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Polynomial operator-() const {
    Polynomial r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) {
    check_same_space(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    check_same_space(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_same_space(b);
    Polynomial r(a.nvars_);
    Expo e(a.nvars_, 0);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        for (int i = 0; i < a.nvars_; ++i) e[i] = static_cast<std::uint16_t>(ea[i] + eb[i]);
        r.add_term(e, ca * cb);
      }
    }
    return r;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial scaled(const Coeff& s) const {
    Polynomial r(nvars_);
    if (s.is_zero()) return r;
    for (const auto& [e, c] : terms_) {
      Coeff sc = c * s;
      if (!sc.is_zero()) r.terms_.emplace(e, std::move(sc));
    }
    return r;
  }
  friend Polynomial operator*(const Coeff& s, const Polynomial& p) { return p.scaled(s); }
  friend Polynomial operator*(const Polynomial& p, const Coeff& s) { return p.scaled(s); }

  Polynomial pow(int k) const {
    if (k < 0) throw std::invalid_argument("negative polynomial power");
    Polynomial r = one(nvars_);
    for (int i = 0; i < k; ++i) r *= *this;
    return r;
  }

  // d/dx_i
  Polynomial derivative(int i) const {
    if (i < 0 || i >= nvars_) throw std::invalid_argument("derivative index out of range");
    Polynomial r(nvars_);
    for (const auto& [e, c] : terms_) {
      if (e[i] == 0) continue;
      Expo d = e;
      d[i] -= 1;
      r.add_term(d, c * Coeff(ScalarTraits<T>::from_int(e[i])));
    }
    return r;
  }

  // Multiplication by the coordinate x_i (exponent shift; cheaper than a
  // general product and used constantly by the vector fields).
  Polynomial times_var(int i) const {
    if (i < 0 || i >= nvars_) throw std::invalid_argument("variable index out of range");
    Polynomial r(nvars_);
    for (const auto& [e, c] : terms_) {
      Expo d = e;
      d[i] += 1;
      r.terms_.emplace(std::move(d), c);
    }
    return r;
  }

  // Complex conjugation of coefficients; on real points this conjugates the
  // value, since all variables are real coordinates.
  Polynomial conj() const {
    Polynomial r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, c.conj());
    return r;
  }

  Polynomial real_part() const {
    Polynomial r(nvars_);
    for (const auto& [e, c] : terms_)
      if (!ScalarTraits<T>::is_zero(c.re)) r.terms_.emplace(e, Coeff(c.re));
    return r;
  }
  Polynomial imag_part() const {
    Polynomial r(nvars_);
    for (const auto& [e, c] : terms_)
      if (!ScalarTraits<T>::is_zero(c.im)) r.terms_.emplace(e, Coeff(c.im));
    return r;
  }
  bool is_real() const {
    for (const auto& [e, c] : terms_)
      if (!ScalarTraits<T>::is_zero(c.im)) return false;
    return true;
  }

  Coeff eval(const std::vector<T>& point) const {
    if (static_cast<int>(point.size()) != nvars_)
      throw std::invalid_argument("evaluation point dimension mismatch");
    // Memoized powers per variable.
    std::vector<std::vector<T>> pows(nvars_);
    for (int i = 0; i < nvars_; ++i) pows[i].push_back(ScalarTraits<T>::one());
    Coeff acc = Coeff::zero();
    for (const auto& [e, c] : terms_) {
      T m = ScalarTraits<T>::one();
      for (int i = 0; i < nvars_; ++i) {
        auto& pi = pows[i];
        while (pi.size() <= e[i]) pi.push_back(pi.back() * point[i]);
        if (e[i]) m = m * pi[e[i]];
      }
      acc += c * m;
    }
    return acc;
  }

  // Substitution x_i -> images[i]; all images share a common variable space.
  Polynomial compose(const std::vector<Polynomial>& images) const {
    if (static_cast<int>(images.size()) != nvars_)
      throw std::invalid_argument("compose: one image per variable required");
    int m = images.empty() ? 0 : images[0].nvars();
    for (const auto& g : images)
      if (g.nvars() != m) throw std::invalid_argument("compose: image spaces differ");
    // Memoized image powers.
    std::vector<std::vector<Polynomial>> pows(nvars_);
    for (int i = 0; i < nvars_; ++i) pows[i].push_back(one(m));
    Polynomial r(m);
    for (const auto& [e, c] : terms_) {
      Polynomial term = constant(m, c);
      for (int i = 0; i < nvars_; ++i) {
        if (e[i] == 0) continue;
        auto& pi = pows[i];
        while (pi.size() <= e[i]) pi.push_back(pi.back() * images[i]);
        term *= pi[e[i]];
      }
      r += term;
    }
    return r;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  // Largest coefficient magnitude (as double); the float pipeline's "is this
  // the zero polynomial" test is coeff_sup() <= tol.
  double coeff_sup() const {
    double m = 0.0;
    for (const auto& [e, c] : terms_) m = std::max(m, abs_double(c));
    return m;
  }

  std::string str(const std::vector<std::string>& names) const {
    if (static_cast<int>(names.size()) != nvars_)
      throw std::invalid_argument("variable name count mismatch");
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      std::string mono;
      for (int i = 0; i < nvars_; ++i) {
        if (e[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += names[i];
        if (e[i] > 1) mono += "^" + std::to_string(e[i]);
      }
      // Pure-real coefficients participate in sign-aware joining; anything
      // with an imaginary part is parenthesized.
      std::string cs;
      bool negative = false;
      if (ScalarTraits<T>::is_zero(c.im)) {
        T a = ScalarTraits<T>::abs(c.re);
        negative = c.re < ScalarTraits<T>::zero();
        if (a == ScalarTraits<T>::one() && !mono.empty())
          cs = "";
        else
          cs = ScalarTraits<T>::to_string(a);
      } else {
        cs = "(" + c.str() + ")";
      }
      std::string term = cs;
      if (!mono.empty()) {
        if (!term.empty()) term += "*";
        term += mono;
      }
      if (term.empty()) term = "1";
      if (first) {
        out = negative ? "-" + term : term;
        first = false;
      } else {
        out += negative ? " - " : " + ";
        out += term;
      }
    }
    return out;
  }
  std::string str() const { return str(group_var_names(nvars_)); }

 private:
  void check_same_space(const Polynomial& o) const {
    if (nvars_ != o.nvars_)
      throw std::invalid_argument("polynomials live in different variable spaces");
  }

  int nvars_;
  TermMap terms_;
};

using PolyQ = Polynomial<Rational>;
using PolyD = Polynomial<double>;

// Rounded copy with double coefficients (exact pipelines feed float ones).
template <class T>
Polynomial<double> to_double_poly(const Polynomial<T>& p) {
  Polynomial<double> out(p.nvars());
  for (const auto& [e, c] : p.terms())
    out.add_term(e, Complex<double>(ScalarTraits<T>::to_double(c.re),
                                    ScalarTraits<T>::to_double(c.im)));
  return out;
}

// Flattened real-coefficient copy for tight evaluation loops (quadrature).
// Rejects polynomials with residual imaginary coefficients above tol.
struct CompiledRealPoly {
  int nvars = 0;
  std::vector<std::uint16_t> expos;  // term-major, nvars entries per term
  std::vector<double> coeffs;

  CompiledRealPoly() = default;
  explicit CompiledRealPoly(const Polynomial<double>& p, double imag_tol = 0.0) {
    nvars = p.nvars();
    for (const auto& [e, c] : p.terms()) {
      if (std::fabs(c.im) > imag_tol)
        throw std::invalid_argument("compiled polynomial requires real coefficients");
      if (c.re == 0.0) continue;
      expos.insert(expos.end(), e.begin(), e.end());
      coeffs.push_back(c.re);
    }
  }

  double eval(const double* x) const {
    double acc = 0.0;
    const std::uint16_t* e = expos.data();
    for (double c : coeffs) {
      double m = c;
      for (int i = 0; i < nvars; ++i, ++e) {
        std::uint16_t k = *e;
        double b = x[i];
        while (k--) m *= b;
      }
      acc += m;
    }
    return acc;
  }
  double eval(const std::vector<double>& x) const { return eval(x.data()); }
};

}  // namespace qma
