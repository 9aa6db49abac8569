// Scalar fields for the library: exact rationals (arbitrary precision) and
// IEEE doubles, behind one small trait, plus a complex type that works over
// either field.  std::complex is only defined for floating-point scalars, so
// the exact pipeline needs its own.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <charconv>
#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace qma {

using Rational = boost::multiprecision::cpp_rational;

// Uniform access to the two coefficient fields.  `exact` distinguishes the
// pipelines: exact scalars compare with ==, floats with tolerances.
template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<double> {
  static constexpr bool exact = false;
  static double zero() { return 0.0; }
  static double one() { return 1.0; }
  static double from_int(long long v) { return static_cast<double>(v); }
  static double from_ratio(long long p, long long q) {
    return static_cast<double>(p) / static_cast<double>(q);
  }
  static double to_double(double v) { return v; }
  static bool is_zero(double v) { return v == 0.0; }
  static double abs(double v) { return std::fabs(v); }
  // Shortest round-trip decimal (to_chars); no locale surprises.
  static std::string to_string(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
  }
};

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static Rational from_int(long long v) { return Rational(v); }
  static Rational from_ratio(long long p, long long q) {
    if (q == 0) throw std::invalid_argument("rational with zero denominator");
    return Rational(p) / Rational(q);
  }
  static double to_double(const Rational& v) { return v.convert_to<double>(); }
  static bool is_zero(const Rational& v) { return v == 0; }
  static Rational abs(const Rational& v) { return v < 0 ? Rational(-v) : v; }
  static std::string to_string(const Rational& v) {
    if (boost::multiprecision::denominator(v) == 1)
      return boost::multiprecision::numerator(v).str();
    return boost::multiprecision::numerator(v).str() + "/" +
           boost::multiprecision::denominator(v).str();
  }
};

// Complex numbers over either scalar field.
template <class T>
struct Complex {
  T re{ScalarTraits<T>::zero()};
  T im{ScalarTraits<T>::zero()};

  Complex() = default;
  Complex(T r) : re(std::move(r)) {}
  Complex(T r, T i) : re(std::move(r)), im(std::move(i)) {}

  static Complex zero() { return Complex(); }
  static Complex one() { return Complex(ScalarTraits<T>::one()); }
  static Complex i() {
    return Complex(ScalarTraits<T>::zero(), ScalarTraits<T>::one());
  }

  bool is_zero() const {
    return ScalarTraits<T>::is_zero(re) && ScalarTraits<T>::is_zero(im);
  }
  Complex conj() const { return Complex(re, -im); }
  T norm_sq() const { return re * re + im * im; }

  Complex operator-() const { return Complex(-re, -im); }
  Complex& operator+=(const Complex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Complex& operator-=(const Complex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return Complex(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
  }
  Complex& operator*=(const Complex& o) { return *this = *this * o; }
  friend Complex operator*(const T& s, const Complex& a) {
    return Complex(s * a.re, s * a.im);
  }
  friend Complex operator*(const Complex& a, const T& s) {
    return Complex(a.re * s, a.im * s);
  }
  friend Complex operator/(const Complex& a, const Complex& b) {
    T d = b.norm_sq();
    if (ScalarTraits<T>::is_zero(d)) throw std::domain_error("complex division by zero");
    return Complex((a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d);
  }
  friend bool operator==(const Complex& a, const Complex& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const Complex& a, const Complex& b) {
    return !(a == b);
  }

  std::string str() const {
    const bool has_re = !ScalarTraits<T>::is_zero(re);
    const bool has_im = !ScalarTraits<T>::is_zero(im);
    if (!has_im) return ScalarTraits<T>::to_string(re);
    std::string s;
    if (has_re) s = ScalarTraits<T>::to_string(re) + (im < 0 ? "-" : "+");
    else if (im < 0) s = "-";
    T a = ScalarTraits<T>::abs(im);
    if (!(a == ScalarTraits<T>::one())) s += ScalarTraits<T>::to_string(a) + "*";
    s += "I";
    return s;
  }
};

template <class T>
Complex<T> conj(const Complex<T>& z) {
  return z.conj();
}

inline std::complex<double> to_std_complex(const Complex<double>& z) {
  return {z.re, z.im};
}
inline std::complex<double> to_std_complex(const Complex<Rational>& z) {
  return {ScalarTraits<Rational>::to_double(z.re),
          ScalarTraits<Rational>::to_double(z.im)};
}

template <class T>
double abs_double(const Complex<T>& z) {
  return std::abs(to_std_complex(z));
}

using Cd = Complex<double>;
using Cr = Complex<Rational>;

}  // namespace qma
